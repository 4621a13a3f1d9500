use super::{apply_unchecked, Anchor, Handedness, MoveKind, MoveSite};
use crate::diagram::{ArcRef, ComponentId, LinkDiagram, Sign};
use crate::invariants::{component_writhes, FramedLink};

fn add_kinks(d: LinkDiagram, arc: ArcRef, count: i64) -> LinkDiagram {
    let sign = if count > 0 { Sign::Positive } else { Sign::Negative };
    let site = MoveSite {
        kind: MoveKind::R1Add,
        anchor: Anchor::Arc { arc },
        handedness: Some(Handedness::from_sign(sign)),
    };
    (0..count.abs()).fold(d, |d, _| apply_unchecked(&d, &site).expect("kink insertion on an existing arc"))
}

/// Inserts kinks until every component's writhe equals its framing.
///
/// Kinks go on the first arc of each component. A crossing-free loop that
/// needs kinks becomes a traced component, which moves it in front of the
/// remaining loops; loops are interchangeable, so this only reorders equal
/// strands.
pub fn realize_framing(fl: &FramedLink) -> LinkDiagram {
    let mut d = fl.diagram().clone();
    let writhes = component_writhes(&d);
    let traced = d.component_count() - d.unknotted_loops();
    for c in 0..traced {
        let arc = d.first_arc(ComponentId(c)).expect("component exists");
        d = add_kinks(d, arc, fl.framings()[c] - writhes[c]);
    }
    let mut traced_now = traced;
    for &f in &fl.framings()[traced..] {
        if f == 0 {
            continue;
        }
        d = add_kinks(d, ArcRef::Loop(0), f.signum());
        let arc = d.first_arc(ComponentId(traced_now)).expect("new traced component");
        d = add_kinks(d, arc, f - f.signum());
        traced_now += 1;
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codecs::parse_pd;
    use crate::invariants::total_writhe;

    #[test]
    fn unknot_framings() {
        let u = LinkDiagram::unknot();
        assert_eq!(realize_framing(&FramedLink::new(u.clone(), vec![0]).unwrap()), u);
        let d = realize_framing(&FramedLink::new(u, vec![2]).unwrap());
        assert_eq!(d.crossing_count(), 2);
        assert!(d.crossings().iter().all(|c| c.sign() == Sign::Positive));
        assert_eq!(total_writhe(&d), 2);
        assert_eq!(d.component_count(), 1);
        assert!(d.is_planar());
    }

    #[test]
    fn trefoil_one_less() {
        let t = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        let d = realize_framing(&FramedLink::new(t, vec![-4]).unwrap());
        assert_eq!(d.crossing_count(), 4);
        assert_eq!(total_writhe(&d), -4);
    }

    #[test]
    fn loops_and_links() {
        let d = parse_pd("X[1,1,2,2] U U").unwrap();
        let r = realize_framing(&FramedLink::new(d, vec![-1, 0, 3]).unwrap());
        assert_eq!(r.component_count(), 3);
        assert_eq!(component_writhes(&r), vec![-1, 3, 0]);
        assert!(r.is_planar());
    }
}
