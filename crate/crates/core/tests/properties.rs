mod common;

use common::{band_arcs, component_map, equal_up_to_order, permuted, sample};
use framelink::codecs::{diagram_to_gauss, gauss_to_diagram, parse_pd, serialize_pd, write_framed_link, FramedLinkDoc};
use framelink::diagram::{ComponentId, LinkDiagram};
use framelink::invariants::{
    blackboard_framing, component_writhes, linking_matrix, linking_number, pushoff, self_crossings, total_writhe,
    writhe, FramedLink,
};
use framelink::moves::{apply_move, enumerate_moves, realize_framing, MoveKind};
use framelink::surgery::{first_homology, normalize_coefficient, SurgeryDescription};
use framelink::torus::{framing_to_longitude, is_embeddable, longitude_to_framing, normalize, TorusClass};
use num_integer::Integer;
use proptest::prelude::*;

fn off_diagonal(d: &LinkDiagram) -> Vec<Vec<i64>> {
    linking_matrix(&blackboard_framing(d)).unwrap().off_diagonal()
}

fn lk(d: &LinkDiagram, i: usize, j: usize) -> i64 {
    linking_number(d, ComponentId(i), ComponentId(j)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn linking_matrix_is_symmetric(seed in any::<u64>(), n in 1usize..=3) {
        let m = linking_matrix(&blackboard_framing(&sample(seed, n, 10))).unwrap();
        prop_assert!(m.is_symmetric());
    }

    #[test]
    fn inter_component_crossings_come_in_pairs(seed in any::<u64>()) {
        let d = sample(seed, 3, 10);
        let pairs = d.crossing_components();
        for i in 0..3 {
            for j in i + 1..3 {
                let n = pairs.iter().filter(|(a, b)| {
                    (a.0, b.0) == (i, j) || (a.0, b.0) == (j, i)
                }).count();
                prop_assert!(n.is_even());
            }
        }
    }

    #[test]
    fn moves_preserve_linking(seed in any::<u64>(), n in 1usize..=3) {
        let d = sample(seed, n, 8);
        let before = off_diagonal(&d);
        let w = total_writhe(&d);
        for site in enumerate_moves(&d, &MoveKind::ALL) {
            let e = apply_move(&d, &site).unwrap();
            prop_assert!(e.is_planar());
            let map = component_map(&d, &e);
            prop_assert_eq!(off_diagonal(&e), permuted(&before, &map), "{:?}", site);
            let dw = total_writhe(&e) - w;
            match site.kind {
                MoveKind::R1Add | MoveKind::R1Remove => prop_assert_eq!(dw.abs(), 1),
                _ => prop_assert_eq!(dw, 0),
            }
        }
    }

    #[test]
    fn framed_moves_preserve_framings(seed in any::<u64>()) {
        let d = sample(seed, 2, 8);
        let mut f = component_writhes(&d);
        f.sort_unstable();
        for site in enumerate_moves(&d, &MoveKind::FRAMED) {
            let mut g = component_writhes(&apply_move(&d, &site).unwrap());
            g.sort_unstable();
            prop_assert_eq!(&g, &f);
        }
    }

    #[test]
    fn pushoff_links_by_writhe(seed in any::<u64>()) {
        let d = sample(seed, 1, 12);
        let p = pushoff(&d, ComponentId(0)).unwrap();
        prop_assert!(p.diagram.is_planar());
        let l = linking_number(&p.diagram, p.original, p.copy).unwrap();
        prop_assert_eq!(l, writhe(&d, ComponentId(0)).unwrap());
    }

    #[test]
    fn self_crossing_change_keeps_linking(seed in any::<u64>()) {
        let d = sample(seed, 3, 10);
        let before = off_diagonal(&d);
        for c in 0..3 {
            for k in self_crossings(&d, ComponentId(c)) {
                prop_assert_eq!(off_diagonal(&d.crossing_change(k).unwrap()), before.clone());
            }
        }
    }

    #[test]
    fn mixed_crossing_change_moves_linking_by_one(seed in any::<u64>()) {
        let d = sample(seed, 2, 10);
        let pairs = d.crossing_components();
        for (k, (a, b)) in pairs.iter().enumerate() {
            if a != b {
                let e = d.crossing_change(k).unwrap();
                prop_assert_eq!((lk(&e, 0, 1) - lk(&d, 0, 1)).abs(), 1);
            }
        }
    }

    #[test]
    fn reversal_negates_linking(seed in any::<u64>(), c in 0usize..3) {
        let d = sample(seed, 3, 10);
        let r = d.reverse_component(ComponentId(c)).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    let s = if i == c || j == c { -1 } else { 1 };
                    prop_assert_eq!(lk(&r, i, j), s * lk(&d, i, j));
                }
            }
        }
        prop_assert_eq!(component_writhes(&r), component_writhes(&d));
    }

    #[test]
    fn band_sum_adds_linking(seed in any::<u64>()) {
        let d = sample(seed, 3, 10);
        if let Some((x, y)) = band_arcs(&d, ComponentId(0), ComponentId(2)) {
            let s = d.band_sum(x, y).unwrap();
            prop_assert_eq!(s.component_count(), 2);
            let joined = s.component_of(framelink::diagram::ArcRef::Label(x)).unwrap();
            let other = ComponentId(1 - joined.0);
            let got = linking_number(&s, joined, other).unwrap();
            prop_assert_eq!(got, lk(&d, 0, 1) + lk(&d, 2, 1));
        }
    }

    #[test]
    fn mirror_negates_everything(seed in any::<u64>(), n in 1usize..=3) {
        let d = sample(seed, n, 10);
        let m = linking_matrix(&blackboard_framing(&d)).unwrap();
        let mm = linking_matrix(&blackboard_framing(&d.mirror())).unwrap();
        for (r, s) in m.rows().iter().zip(mm.rows()) {
            prop_assert_eq!(r.iter().map(|v| -v).collect::<Vec<_>>(), s.clone());
        }
    }

    #[test]
    fn pd_and_gauss_round_trip(seed in any::<u64>(), n in 1usize..=3) {
        let d = sample(seed, n, 10);
        let text = serialize_pd(&d);
        let back = parse_pd(&text).unwrap();
        prop_assert_eq!(serialize_pd(&back), text.clone());
        let g = diagram_to_gauss(&d);
        let from_g = gauss_to_diagram(&g.to_string().parse().unwrap()).unwrap();
        prop_assert_eq!(serialize_pd(&from_g), text);
    }

    #[test]
    fn json_round_trip(seed in any::<u64>(), n in 1usize..=3, f in prop::collection::vec(-9i64..=9, 3)) {
        let d = sample(seed, n, 8);
        let fl = FramedLink::new(d, f[..n].to_vec()).unwrap();
        let back = FramedLinkDoc::from_json(&write_framed_link(&fl)).unwrap().to_framed_link().unwrap();
        let (_, map) = fl.diagram().canonical_with_components();
        let m = linking_matrix(&fl).unwrap();
        prop_assert_eq!(linking_matrix(&back).unwrap().rows().to_vec(), permuted(m.rows(), &map));
        prop_assert_eq!(write_framed_link(&back), write_framed_link(&fl));
    }

    #[test]
    fn realized_framings_match(seed in any::<u64>(), n in 1usize..=3, f in prop::collection::vec(-4i64..=4, 3)) {
        let d = sample(seed, n, 6);
        let fl = FramedLink::new(d, f[..n].to_vec()).unwrap();
        let r = realize_framing(&fl);
        prop_assert!(r.is_planar());
        let got = linking_matrix(&blackboard_framing(&r)).unwrap();
        // crossing-free loops are interchangeable and may move
        prop_assert!(equal_up_to_order(linking_matrix(&fl).unwrap().rows(), got.rows()));
    }

    #[test]
    fn embeddable_iff_coprime(a in -60i64..=60, b in -60i64..=60) {
        prop_assert_eq!(is_embeddable(TorusClass::new(a, b)), a.gcd(&b) == 1 || (a, b) == (0, 0));
        let t = normalize(TorusClass::new(a, b));
        prop_assert_eq!(normalize(t), t);
        prop_assert_eq!(is_embeddable(t), is_embeddable(TorusClass::new(a, b)));
    }

    #[test]
    fn longitudes_round_trip(n in -1000i64..=1000) {
        prop_assert_eq!(longitude_to_framing(framing_to_longitude(n)).unwrap(), n);
    }

    #[test]
    fn coefficient_normalization_idempotent(p in -50i64..=50, q in -50i64..=50) {
        prop_assume!((p, q) != (0, 0));
        let (a, b) = normalize_coefficient(p, q).unwrap();
        prop_assert_eq!(normalize_coefficient(a, b).unwrap(), (a, b));
        prop_assert_eq!(normalize_coefficient(-p, -q).unwrap(), (a, b));
        prop_assert!(b >= 0 && a.gcd(&b) == 1);
    }

    #[test]
    fn homology_order_is_determinant(seed in any::<u64>(), f in prop::collection::vec(-5i64..=5, 2)) {
        let d = sample(seed, 2, 8);
        let fl = FramedLink::new(d, f.clone()).unwrap();
        let m = linking_matrix(&fl).unwrap();
        let r = m.rows();
        let det = r[0][0] * r[1][1] - r[0][1] * r[1][0];
        let h = first_homology(&SurgeryDescription::from_framed_link(&fl)).unwrap();
        if det == 0 {
            prop_assert!(h.rank >= 1);
        } else {
            prop_assert_eq!(h.rank, 0);
            prop_assert_eq!(h.torsion_order(), det.unsigned_abs());
        }
    }
}

mod geometric {
    use framelink::geometry::{gauss_linking, project_to_diagram, pushoff_curve, relative_twist, shapes, FramePair};
    use framelink::invariants::linking_number;
    use framelink::sampling::random_curve_pair;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn integral_matches_projection(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (a, b) = random_curve_pair(&mut rng, 40, 0.05);
            let g = gauss_linking(&a, &b).unwrap();
            let p = project_to_diagram(&[a.clone(), b.clone()], None, seed).unwrap();
            prop_assert_eq!(linking_number(&p.diagram, p.components[0], p.components[1]).unwrap(), g);
            prop_assert_eq!(gauss_linking(&b, &a).unwrap(), g);
            prop_assert_eq!(gauss_linking(&a, &b.reversed()).unwrap(), -g);
        }

        #[test]
        fn twist_is_sampling_invariant(k in -5i64..=5, extra in 0usize..64) {
            let (c, v, w) = shapes::twisted_circle(k, 64 + extra);
            prop_assert_eq!(relative_twist(&c, &FramePair { reference: v, candidate: w.clone() }).unwrap(), k);
            let framed = c.with_normals(w).unwrap();
            let p = pushoff_curve(&framed, 0.05).unwrap();
            prop_assert_eq!(gauss_linking(&framed, &p).unwrap(), k);
        }
    }
}
