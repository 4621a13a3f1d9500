//! Winding of one normal field relative to another along a closed curve.
//!
//! At each vertex the reference field `V` and the tangent `K` give the
//! right-handed frame `(K, V, N)` with `N = K × V`. The candidate `W` has
//! angle `θ` from `V` measured toward `-N`; unwinding `θ` while walking the
//! curve backwards gives `2πm`, and `m` is the relative twist. With this
//! convention `m` equals the linking number of the curve with its pushoff
//! along `W` when `V` is the zero framing.

use std::f64::consts::PI;

use super::curve::Vec3;
use super::{GeometryError, SpaceCurve};

/// Largest accepted angle change between neighbouring vertices.
pub const MAX_STEP: f64 = 0.9 * PI;

#[derive(Debug, Clone, PartialEq)]
pub struct FramePair {
    pub reference: Vec<Vec3>,
    pub candidate: Vec<Vec3>,
}

fn wrap(x: f64) -> f64 {
    let y = x.rem_euclid(2.0 * PI);
    if y > PI {
        y - 2.0 * PI
    } else {
        y
    }
}

pub fn relative_twist(curve: &SpaceCurve, fp: &FramePair) -> Result<i64, GeometryError> {
    curve.check_field(&fp.reference)?;
    curve.check_field(&fp.candidate)?;
    let n = curve.len();
    let mut theta = Vec::with_capacity(n);
    for i in 0..n {
        let v = curve.normal_part(&fp.reference, i)?;
        let w = curve.normal_part(&fp.candidate, i)?;
        let nn = curve.tangent(i).cross(&v);
        theta.push((-w.dot(&nn)).atan2(w.dot(&v)));
    }
    let mut total = 0.0;
    for step in 0..n {
        // backwards: i -> i - 1
        let i = (n - step) % n;
        let j = (i + n - 1) % n;
        let d = wrap(theta[j] - theta[i]);
        if d.abs() > MAX_STEP {
            return Err(GeometryError::UndersampledField { index: j, step: d.abs() });
        }
        total += d;
    }
    Ok((total / (2.0 * PI)).round() as i64)
}
