use nalgebra::Vector3;

use super::GeometryError;

pub type Vec3 = Vector3<f64>;

/// A closed polygon in space, with an optional normal vector per vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct SpaceCurve {
    vertices: Vec<Vec3>,
    normals: Option<Vec<Vec3>>,
}

impl SpaceCurve {
    pub fn new(vertices: Vec<Vec3>, normals: Option<Vec<Vec3>>) -> Result<Self, GeometryError> {
        let n = vertices.len();
        if n < 3 {
            return Err(GeometryError::TooFewVertices(n));
        }
        for i in 0..n {
            if vertices[i] == vertices[(i + 1) % n] {
                return Err(GeometryError::RepeatedVertex(i));
            }
        }
        let c = SpaceCurve { vertices, normals: None };
        if let Some(ns) = &normals {
            c.check_field(ns)?;
        }
        Ok(SpaceCurve { normals, ..c })
    }

    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }

    pub fn normals(&self) -> Option<&[Vec3]> {
        self.normals.as_deref()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn with_normals(&self, normals: Vec<Vec3>) -> Result<Self, GeometryError> {
        SpaceCurve::new(self.vertices.clone(), Some(normals))
    }

    /// Same polygon traversed the other way (normals follow their vertices).
    pub fn reversed(&self) -> Self {
        let mut v = self.vertices.clone();
        v.reverse();
        let normals = self.normals.clone().map(|mut n| {
            n.reverse();
            n
        });
        SpaceCurve { vertices: v, normals }
    }

    pub fn translated(&self, by: Vec3) -> Self {
        SpaceCurve {
            vertices: self.vertices.iter().map(|v| v + by).collect(),
            normals: self.normals.clone(),
        }
    }

    /// Unit tangent at vertex `i` from the central difference.
    pub fn tangent(&self, i: usize) -> Vec3 {
        let n = self.vertices.len();
        (self.vertices[(i + 1) % n] - self.vertices[(i + n - 1) % n]).normalize()
    }

    /// `field[i]` with its tangential part removed, normalized.
    pub(crate) fn normal_part(&self, field: &[Vec3], i: usize) -> Result<Vec3, GeometryError> {
        let t = self.tangent(i);
        let v = field[i] - t * field[i].dot(&t);
        let norm = v.norm();
        if !(norm > 1e-9 * field[i].norm()) || !norm.is_finite() {
            return Err(GeometryError::TangentField(i));
        }
        Ok(v / norm)
    }

    pub(crate) fn check_field(&self, field: &[Vec3]) -> Result<(), GeometryError> {
        if field.len() != self.vertices.len() {
            return Err(GeometryError::NormalCount {
                vertices: self.vertices.len(),
                normals: field.len(),
            });
        }
        for i in 0..field.len() {
            self.normal_part(field, i)?;
        }
        Ok(())
    }

    pub(crate) fn segments(&self) -> impl Iterator<Item = (Vec3, Vec3)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Largest coordinate extent, used to scale tolerances.
    pub(crate) fn extent(&self) -> f64 {
        let mut lo = self.vertices[0];
        let mut hi = self.vertices[0];
        for v in &self.vertices {
            lo = lo.inf(v);
            hi = hi.sup(v);
        }
        (hi - lo).max()
    }
}

/// Closest distance between segments `p0p1` and `q0q1`.
pub(crate) fn segment_distance(p0: Vec3, p1: Vec3, q0: Vec3, q1: Vec3) -> f64 {
    let d1 = p1 - p0;
    let d2 = q1 - q0;
    let r = p0 - q0;
    let a = d1.dot(&d1);
    let e = d2.dot(&d2);
    let f = d2.dot(&r);
    let c = d1.dot(&r);
    let b = d1.dot(&d2);
    let denom = a * e - b * b;
    let mut s = if denom > 1e-15 * a * e { ((b * f - c * e) / denom).clamp(0.0, 1.0) } else { 0.0 };
    let mut t = (b * s + f) / e;
    if t < 0.0 {
        t = 0.0;
        s = (-c / a).clamp(0.0, 1.0);
    } else if t > 1.0 {
        t = 1.0;
        s = ((b - c) / a).clamp(0.0, 1.0);
    }
    ((p0 + d1 * s) - (q0 + d2 * t)).norm()
}

/// Smallest distance between two curves.
pub fn curve_distance(a: &SpaceCurve, b: &SpaceCurve) -> f64 {
    let mut best = f64::INFINITY;
    for (p0, p1) in a.segments() {
        for (q0, q1) in b.segments() {
            best = best.min(segment_distance(p0, p1, q0, q1));
        }
    }
    best
}
