//! Gauss linking integral for closed polygons, summed exactly per segment
//! pair as a signed solid angle over 4π.

use std::f64::consts::PI;

use rayon::prelude::*;

use super::curve::{curve_distance, Vec3};
use super::{GeometryError, SpaceCurve};

/// Signed solid angle swept by segment `a0a1` as seen from segment `b0b1`.
fn segment_pair(a0: Vec3, a1: Vec3, b0: Vec3, b1: Vec3) -> f64 {
    let r13 = b0 - a0;
    let r14 = b1 - a0;
    let r23 = b0 - a1;
    let r24 = b1 - a1;
    let unit = |v: Vec3| {
        let n = v.norm();
        if n > 0.0 {
            Some(v / n)
        } else {
            None
        }
    };
    let (Some(n1), Some(n2), Some(n3), Some(n4)) = (
        unit(r13.cross(&r14)),
        unit(r14.cross(&r24)),
        unit(r24.cross(&r23)),
        unit(r23.cross(&r13)),
    ) else {
        return 0.0;
    };
    let asin = |x: f64| x.clamp(-1.0, 1.0).asin();
    let omega = asin(n1.dot(&n2)) + asin(n2.dot(&n3)) + asin(n3.dot(&n4)) + asin(n4.dot(&n1));
    let orient = (b1 - b0).cross(&(a1 - a0)).dot(&r13);
    if orient > 0.0 {
        omega
    } else if orient < 0.0 {
        -omega
    } else {
        0.0
    }
}

/// The raw double sum. Rows are evaluated in parallel and added in order.
pub fn gauss_linking_value(c1: &SpaceCurve, c2: &SpaceCurve) -> f64 {
    let segs2: Vec<(Vec3, Vec3)> = c2.segments().collect();
    let rows: Vec<f64> = c1
        .segments()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&(a0, a1)| segs2.iter().map(|&(b0, b1)| segment_pair(a0, a1, b0, b1)).sum())
        .collect();
    rows.iter().sum::<f64>() / (4.0 * PI)
}

/// Linking number of two disjoint closed curves.
pub fn gauss_linking(c1: &SpaceCurve, c2: &SpaceCurve) -> Result<i64, GeometryError> {
    let tol = 1e-9 * c1.extent().max(c2.extent());
    let dist = curve_distance(c1, c2);
    if !(dist > tol) {
        return Err(GeometryError::CurvesTooClose(dist));
    }
    let v = gauss_linking_value(c1, c2);
    let r = v.round();
    if (v - r).abs() > 0.1 || !v.is_finite() {
        return Err(GeometryError::NonIntegerResult(v));
    }
    Ok(r as i64)
}
