//! Generic projection of space curves to a link diagram.
//!
//! The viewer sits far along the projection direction `u`; the plane basis
//! `(e1, e2)` satisfies `e1 × e2 = u`, and the strand with the larger `u`
//! coordinate passes over.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::curve::Vec3;
use super::{GeometryError, SpaceCurve};
use crate::codecs::{gauss_to_diagram, GaussCode, Visit};
use crate::diagram::{ComponentId, LinkDiagram, Sign};

pub const MAX_ATTEMPTS: usize = 64;
const REL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct Projection {
    pub diagram: LinkDiagram,
    /// Component of each input curve. Curves without crossings become the
    /// trailing crossing-free loops.
    pub components: Vec<ComponentId>,
    pub direction: Vec3,
    pub attempts: usize,
}

type P2 = (f64, f64);

fn cross2(a: P2, b: P2) -> f64 {
    a.0 * b.1 - a.1 * b.0
}

fn sub2(a: P2, b: P2) -> P2 {
    (a.0 - b.0, a.1 - b.1)
}

fn norm2(a: P2) -> f64 {
    a.0.hypot(a.1)
}

struct Seg {
    curve: usize,
    index: usize,
    p: P2,
    d: P2,
    h0: f64,
    dh: f64,
}

/// Projects along `direction` (default `+z`); on a degenerate view, retries
/// with directions drawn from a ChaCha stream seeded by `seed`.
pub fn project_to_diagram(curves: &[SpaceCurve], direction: Option<Vec3>, seed: u64) -> Result<Projection, GeometryError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut u = direction.unwrap_or_else(|| Vec3::new(0.0, 0.0, 1.0));
    for attempt in 1..=MAX_ATTEMPTS {
        if u.norm() > 0.0 {
            let u = u.normalize();
            if let Some((code, components)) = try_direction(curves, u) {
                let diagram = gauss_to_diagram(&code).expect("projected code pairs every crossing");
                return Ok(Projection {
                    diagram,
                    components,
                    direction: u,
                    attempts: attempt,
                });
            }
        }
        u = loop {
            let v = Vec3::new(
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
            );
            if (0.1..=1.0).contains(&v.norm()) {
                break v;
            }
        };
    }
    Err(GeometryError::DegenerateAfterRetries(MAX_ATTEMPTS))
}

fn try_direction(curves: &[SpaceCurve], u: Vec3) -> Option<(GaussCode, Vec<ComponentId>)> {
    let a = if u.x.abs() < 0.9 { Vec3::x() } else { Vec3::y() };
    let e1 = (a - u * a.dot(&u)).normalize();
    let e2 = u.cross(&e1);
    let flat = |v: &Vec3| (v.dot(&e1), v.dot(&e2));

    let mut segs = Vec::new();
    let mut lo = (f64::INFINITY, f64::INFINITY);
    let mut hi = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for (ci, c) in curves.iter().enumerate() {
        for (j, (a0, a1)) in c.segments().enumerate() {
            let p = flat(&a0);
            let q = flat(&a1);
            lo = (lo.0.min(p.0), lo.1.min(p.1));
            hi = (hi.0.max(p.0), hi.1.max(p.1));
            segs.push(Seg {
                curve: ci,
                index: j,
                p,
                d: sub2(q, p),
                h0: a0.dot(&u),
                dh: (a1 - a0).dot(&u),
            });
        }
    }
    let scale = (hi.0 - lo.0).max(hi.1 - lo.1).max(f64::MIN_POSITIVE);
    let eps = REL_TOL * scale;
    if segs.iter().any(|s| norm2(s.d) < eps) {
        return None;
    }

    // (segment, t, crossing, over)
    let mut events: Vec<(usize, f64, usize, bool)> = Vec::new();
    let mut points: Vec<P2> = Vec::new();
    let mut signs: Vec<Sign> = Vec::new();
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            let (s, r) = (&segs[i], &segs[j]);
            let n = curves[s.curve].len();
            let adjacent = s.curve == r.curve && (r.index == (s.index + 1) % n || s.index == (r.index + 1) % n);
            let denom = cross2(s.d, r.d);
            let ls = norm2(s.d);
            let lr = norm2(r.d);
            if denom.abs() < REL_TOL * ls * lr {
                // parallel: degenerate only if the projections overlap on a line
                let off = cross2(sub2(r.p, s.p), s.d).abs() / ls;
                if off < eps {
                    let t0 = dot2(sub2(r.p, s.p), s.d) / (ls * ls);
                    let t1 = dot2(sub2((r.p.0 + r.d.0, r.p.1 + r.d.1), s.p), s.d) / (ls * ls);
                    let (a, b) = (t0.min(t1), t0.max(t1));
                    if b > 0.0 && a < 1.0 && (b - a) * ls > eps || adjacent && dot2(s.d, r.d) < 0.0 {
                        return None;
                    }
                }
                continue;
            }
            if adjacent {
                continue;
            }
            let w = sub2(r.p, s.p);
            let t = cross2(w, r.d) / denom;
            let v = cross2(w, s.d) / denom;
            let (ts, tr) = (eps / ls, eps / lr);
            let inside = |x: f64, tol: f64| x > tol && x < 1.0 - tol;
            let near = |x: f64, tol: f64| x >= -tol && x <= 1.0 + tol;
            if inside(t, ts) && inside(v, tr) {
                let hs = s.h0 + t * s.dh;
                let hr = r.h0 + v * r.dh;
                if (hs - hr).abs() < eps {
                    return None;
                }
                let pt = (s.p.0 + t * s.d.0, s.p.1 + t * s.d.1);
                if points.iter().any(|q| norm2(sub2(*q, pt)) < eps) {
                    return None;
                }
                let k = points.len();
                points.push(pt);
                let s_over = hs > hr;
                let (o, un) = if s_over { (s.d, r.d) } else { (r.d, s.d) };
                signs.push(if cross2(o, un) > 0.0 { Sign::Positive } else { Sign::Negative });
                events.push((i, t, k, s_over));
                events.push((j, v, k, !s_over));
            } else if near(t, ts) && near(v, tr) {
                return None;
            }
        }
    }

    events.sort_by(|a, b| (a.0, a.1).partial_cmp(&(b.0, b.1)).expect("finite parameters"));
    let mut words: Vec<Vec<Visit>> = vec![Vec::new(); curves.len()];
    for &(si, _, k, over) in &events {
        words[segs[si].curve].push(Visit {
            crossing: k as u32 + 1,
            over,
            sign: signs[k],
        });
    }
    let traced = words.iter().filter(|w| !w.is_empty()).count();
    let mut next_traced = 0;
    let mut next_loop = traced;
    let components = words
        .iter()
        .map(|w| {
            let slot = if w.is_empty() { &mut next_loop } else { &mut next_traced };
            *slot += 1;
            ComponentId(*slot - 1)
        })
        .collect();
    Some((GaussCode { components: words }, components))
}

fn dot2(a: P2, b: P2) -> f64 {
    a.0 * b.0 + a.1 * b.1
}
