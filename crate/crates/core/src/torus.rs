//! Curve classes on the boundary torus of a knot.
//!
//! [`TorusClass`] uses the `(longitude, meridian)` basis: `l = (1, 0)`,
//! `m = (0, 1)`. [`PeripheralClass`] writes a class as `m'[eta] + k[gamma]`
//! with `eta` the meridian, oriented so that `lk(K, eta) = +1`, and `gamma`
//! the preferred longitude, parallel to `K` with `lk(gamma, K) = 0`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorusError {
    #[error("class has {0} copies of the longitude, expected exactly 1")]
    NotALongitude(i64),
}

impl TorusError {
    pub fn code(&self) -> &'static str {
        match self {
            TorusError::NotALongitude(_) => "NotALongitude",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TorusClass {
    /// Longitude coefficient.
    pub a: i64,
    /// Meridian coefficient.
    pub b: i64,
}

impl TorusClass {
    pub fn new(a: i64, b: i64) -> Self {
        TorusClass { a, b }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PeripheralClass {
    pub meridian_coeff: i64,
    pub longitude_coeff: i64,
}

impl From<PeripheralClass> for TorusClass {
    fn from(p: PeripheralClass) -> Self {
        TorusClass {
            a: p.longitude_coeff,
            b: p.meridian_coeff,
        }
    }
}

impl From<TorusClass> for PeripheralClass {
    fn from(t: TorusClass) -> Self {
        PeripheralClass {
            meridian_coeff: t.b,
            longitude_coeff: t.a,
        }
    }
}

/// A class holds a simple closed curve iff its coefficients are coprime
/// (with `gcd(x, 0) = |x|`) or it is zero.
pub fn is_embeddable(t: TorusClass) -> bool {
    (t.a == 0 && t.b == 0) || t.a.gcd(&t.b) == 1
}

/// Representative of `±(a, b)` with `a > 0`, or `a = 0` and `b >= 0`.
pub fn normalize(t: TorusClass) -> TorusClass {
    if t.a < 0 || (t.a == 0 && t.b < 0) {
        TorusClass { a: -t.a, b: -t.b }
    } else {
        t
    }
}

/// The longitude of framing `n`: `n[eta] + [gamma]`.
pub fn framing_to_longitude(n: i64) -> PeripheralClass {
    PeripheralClass {
        meridian_coeff: n,
        longitude_coeff: 1,
    }
}

pub fn longitude_to_framing(p: PeripheralClass) -> Result<i64, TorusError> {
    if p.longitude_coeff != 1 {
        return Err(TorusError::NotALongitude(p.longitude_coeff));
    }
    Ok(p.meridian_coeff)
}
