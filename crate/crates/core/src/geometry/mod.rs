//! Polygonal space curves: projection to diagrams, the Gauss linking
//! integral, twisting of normal fields and framing pushoffs.

mod csv;
mod curve;
mod linking;
mod projection;
mod twist;

use thiserror::Error;

pub use csv::{parse_curves, write_curves};
pub use curve::{curve_distance, SpaceCurve, Vec3};
pub use linking::{gauss_linking, gauss_linking_value};
pub use projection::{project_to_diagram, Projection, MAX_ATTEMPTS};
pub use twist::{relative_twist, FramePair, MAX_STEP};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("a closed curve needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {0} repeats the next vertex")]
    RepeatedVertex(usize),
    #[error("{normals} normals for {vertices} vertices")]
    NormalCount { vertices: usize, normals: usize },
    #[error("normal at vertex {0} is tangent to the curve")]
    TangentField(usize),
    #[error("curve has no normal field")]
    MissingNormals,
    #[error("no generic projection direction after {0} attempts")]
    DegenerateAfterRetries(usize),
    #[error("curves come within {0:e} of each other")]
    CurvesTooClose(f64),
    #[error("linking integral {0} is not close to an integer")]
    NonIntegerResult(f64),
    #[error("field turns by {step:.3} rad before vertex {index}; sample more densely")]
    UndersampledField { index: usize, step: f64 },
    #[error("offset {offset} brings the pushoff within {distance:e} of the curve")]
    OffsetTooLarge { offset: f64, distance: f64 },
    #[error("curve file line {line}: {message}")]
    Csv { line: usize, message: String },
}

impl GeometryError {
    pub fn code(&self) -> &'static str {
        match self {
            GeometryError::TooFewVertices(_) => "TooFewVertices",
            GeometryError::RepeatedVertex(_) => "RepeatedVertex",
            GeometryError::NormalCount { .. } => "NormalCount",
            GeometryError::TangentField(_) => "TangentField",
            GeometryError::MissingNormals => "MissingNormals",
            GeometryError::DegenerateAfterRetries(_) => "DegenerateAfterRetries",
            GeometryError::CurvesTooClose(_) => "CurvesTooClose",
            GeometryError::NonIntegerResult(_) => "NonIntegerResult",
            GeometryError::UndersampledField { .. } => "UndersampledField",
            GeometryError::OffsetTooLarge { .. } => "OffsetTooLarge",
            GeometryError::Csv { .. } => "CsvError",
        }
    }
}

/// Moves every vertex `offset` along its normal (tangential part removed).
/// Fails when the result comes within half the offset of the curve.
pub fn pushoff_curve(c: &SpaceCurve, offset: f64) -> Result<SpaceCurve, GeometryError> {
    let normals = c.normals().ok_or(GeometryError::MissingNormals)?;
    let mut verts = Vec::with_capacity(c.len());
    for (i, v) in c.vertices().iter().enumerate() {
        verts.push(v + c.normal_part(normals, i)? * offset);
    }
    let p = SpaceCurve::new(verts, Some(normals.to_vec()))?;
    let distance = curve_distance(c, &p);
    if !(distance > 0.5 * offset) {
        return Err(GeometryError::OffsetTooLarge { offset, distance });
    }
    Ok(p)
}

/// Sample curves used in tests, examples and the CLI.
pub mod shapes {
    use std::f64::consts::PI;

    use super::{SpaceCurve, Vec3};

    /// Circle of radius `r` in the plane spanned by `a` and `b` around `center`.
    pub fn circle(center: Vec3, a: Vec3, b: Vec3, r: f64, samples: usize) -> SpaceCurve {
        let verts = (0..samples)
            .map(|i| {
                let t = 2.0 * PI * i as f64 / samples as f64;
                center + (a * t.cos() + b * t.sin()) * r
            })
            .collect();
        SpaceCurve::new(verts, None).expect("circle samples are distinct")
    }

    /// Two unit circles in orthogonal planes, each through the other's center.
    pub fn hopf(samples: usize) -> (SpaceCurve, SpaceCurve) {
        (
            circle(Vec3::zeros(), Vec3::x(), Vec3::y(), 1.0, samples),
            circle(Vec3::x(), Vec3::x(), Vec3::z(), 1.0, samples),
        )
    }

    /// `(p, q)` torus curve on the torus with radii `big` and `small`,
    /// winding `p` times around the core direction.
    pub fn torus_curve(p: i64, q: i64, big: f64, small: f64, samples: usize) -> SpaceCurve {
        let verts = (0..samples)
            .map(|i| {
                let t = 2.0 * PI * i as f64 / samples as f64;
                let (u, v) = (p as f64 * t, q as f64 * t);
                let rr = big + small * v.cos();
                Vec3::new(rr * u.cos(), rr * u.sin(), small * v.sin())
            })
            .collect();
        SpaceCurve::new(verts, None).expect("torus samples are distinct")
    }

    /// Planar unit circle carrying a normal field that turns `k` times from
    /// the outward radial direction toward the binormal going forward.
    pub fn twisted_circle(k: i64, samples: usize) -> (SpaceCurve, Vec<Vec3>, Vec<Vec3>) {
        let c = circle(Vec3::zeros(), Vec3::x(), Vec3::y(), 1.0, samples);
        let mut reference = Vec::new();
        let mut candidate = Vec::new();
        for i in 0..samples {
            let t = 2.0 * PI * i as f64 / samples as f64;
            let radial = Vec3::new(t.cos(), t.sin(), 0.0);
            let tangent = Vec3::new(-t.sin(), t.cos(), 0.0);
            let binormal = tangent.cross(&radial);
            let a = k as f64 * t;
            reference.push(radial);
            candidate.push(radial * a.cos() + binormal * a.sin());
        }
        (c, reference, candidate)
    }
}
