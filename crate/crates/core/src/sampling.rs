//! Random planar diagrams and space curves for property checks.
//!
//! Diagrams are grown from an unlink by random R1/R2/R3 moves and crossing
//! changes, so every sample is planar and the crossing changes make the
//! link type vary.

use std::f64::consts::PI;

use rand::{Rng, RngExt};

use crate::diagram::LinkDiagram;
use crate::geometry::{curve_distance, SpaceCurve, Vec3};
use crate::moves::{apply_move, enumerate_moves, MoveKind};

fn pick<T: Clone, R: Rng + ?Sized>(rng: &mut R, items: &[T]) -> Option<T> {
    if items.is_empty() {
        None
    } else {
        Some(items[rng.random_range(0..items.len())].clone())
    }
}

/// A planar diagram with exactly `components` components and at most
/// `max_crossings` crossings.
pub fn random_diagram<R: Rng + ?Sized>(rng: &mut R, components: usize, max_crossings: usize) -> LinkDiagram {
    let mut d = LinkDiagram::unlink(components);
    let steps = 2 + rng.random_range(0..=2 * max_crossings);
    for _ in 0..steps {
        let n = d.crossing_count();
        let roll = rng.random_range(0..10);
        let kind = match roll {
            0..=3 if n + 2 <= max_crossings => MoveKind::R2Add,
            4 | 5 if n < max_crossings => MoveKind::R1Add,
            6 => MoveKind::R3,
            7 | 8 if n > 0 => {
                let k = rng.random_range(0..n);
                d = d.crossing_change(k).expect("index in range");
                continue;
            }
            9 => MoveKind::R2Remove,
            _ => continue,
        };
        if let Some(site) = pick(rng, &enumerate_moves(&d, &[kind])) {
            d = apply_move(&d, &site).expect("enumerated site applies");
        }
    }
    d
}

/// Closed curve from a few random Fourier modes around `center`.
pub fn random_curve<R: Rng + ?Sized>(rng: &mut R, center: Vec3, size: f64, samples: usize) -> SpaceCurve {
    let mut coeffs = Vec::new();
    for k in 1..=3 {
        let scale = size / k as f64;
        let mut v = || Vec3::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)) * scale;
        coeffs.push((k as f64, v(), v()));
    }
    let verts = (0..samples)
        .map(|i| {
            let t = 2.0 * PI * i as f64 / samples as f64;
            coeffs
                .iter()
                .fold(center, |acc, (k, a, b)| acc + a * (k * t).cos() + b * (k * t).sin())
        })
        .collect();
    SpaceCurve::new(verts, None).expect("distinct samples")
}

/// Two random curves, possibly linked, at least `clearance` apart.
pub fn random_curve_pair<R: Rng + ?Sized>(rng: &mut R, samples: usize, clearance: f64) -> (SpaceCurve, SpaceCurve) {
    loop {
        let a = random_curve(rng, Vec3::zeros(), 1.0, samples);
        let shift = Vec3::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        let b = random_curve(rng, shift, 1.0, samples);
        if curve_distance(&a, &b) > clearance {
            return (a, b);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn diagrams_stay_in_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut crossings = 0;
        for _ in 0..40 {
            let d = random_diagram(&mut rng, 2, 8);
            assert_eq!(d.component_count(), 2);
            assert!(d.crossing_count() <= 8);
            assert!(d.is_planar());
            crossings += d.crossing_count();
        }
        assert!(crossings > 40);
    }

    #[test]
    fn curve_pairs_are_separated() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let (a, b) = random_curve_pair(&mut rng, 40, 0.05);
        assert!(curve_distance(&a, &b) > 0.05);
    }
}
