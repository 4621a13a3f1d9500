use std::collections::HashSet;

use super::{ArcRef, ComponentId, Crossing, DiagramError, Editor, LinkDiagram};

impl LinkDiagram {
    /// Reverses the orientation of one component. Crossings between that
    /// component and another change sign; its self-crossings keep theirs.
    pub fn reverse_component(&self, c: ComponentId) -> Result<LinkDiagram, DiagramError> {
        self.check_component(c)?;
        let comps = self.trace_components();
        let arcs: HashSet<u32> = comps[c.0].arcs().iter().copied().collect();
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let mut y = *x;
                if arcs.contains(&x.under_in()) {
                    y = y.reverse_under();
                }
                if arcs.contains(&x.over_in()) {
                    y = y.reverse_over();
                }
                y
            })
            .collect();
        LinkDiagram::from_crossings(crossings, self.unknotted_loops)
    }

    /// Toggles which strand passes over at crossing `k`.
    pub fn crossing_change(&self, k: usize) -> Result<LinkDiagram, DiagramError> {
        let c = *self.crossing(k)?;
        let mut crossings = self.crossings.clone();
        crossings[k] = c.switched();
        LinkDiagram::from_crossings(crossings, self.unknotted_loops)
    }

    /// Reflection of the projection plane: every sign flips, over/under stays.
    pub fn mirror(&self) -> LinkDiagram {
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let [a, b, cc, d] = c.arcs();
                Crossing::new([a, d, cc, b], c.over_dir().flipped())
            })
            .collect();
        LinkDiagram {
            crossings,
            unknotted_loops: self.unknotted_loops,
        }
    }

    /// Places `other` beside `self` with its labels shifted past ours.
    pub fn disjoint_union(&self, other: &LinkDiagram) -> LinkDiagram {
        let off = self.max_label();
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|c| c.relabeled(|l| l + off)));
        LinkDiagram {
            crossings,
            unknotted_loops: self.unknotted_loops + other.unknotted_loops,
        }
    }

    fn check_arc_on(&self, c: ComponentId, a: ArcRef) -> Result<(), DiagramError> {
        self.check_component(c)?;
        if self.component_of(a) == Some(c) {
            Ok(())
        } else {
            Err(DiagramError::ArcNotOnComponent { arc: a, component: c.0 })
        }
    }

    /// Connected sum of component `c1` of `self` with component `c2` of
    /// `other`, cutting arc `a1` and arc `a2` and reconnecting their ends.
    /// The summands sit side by side, so no crossings are added. Labels of
    /// `other` are shifted internally.
    pub fn connected_sum(
        &self,
        c1: ComponentId,
        a1: ArcRef,
        other: &LinkDiagram,
        c2: ComponentId,
        a2: ArcRef,
    ) -> Result<LinkDiagram, DiagramError> {
        self.check_arc_on(c1, a1)?;
        other.check_arc_on(c2, a2)?;
        let off = self.max_label();
        let mut ed = Editor::new(&self.disjoint_union(other));
        match (a1, a2) {
            (ArcRef::Label(x), ArcRef::Label(y)) => {
                splice(&mut ed, x, y + off);
            }
            (ArcRef::Loop(_), _) | (_, ArcRef::Loop(_)) => {
                // summing with a crossing-free unknot leaves the other summand
                ed.loops -= 1;
            }
        }
        ed.finish()
    }

    /// Connected sum of two components of the same diagram along a band
    /// lying in one face: `a1` and `a2` must bound a common face and run
    /// antiparallel along it.
    pub fn band_sum(&self, a1: u32, a2: u32) -> Result<LinkDiagram, DiagramError> {
        let err = DiagramError::NoCoherentBand {
            first: ArcRef::Label(a1),
            second: ArcRef::Label(a2),
        };
        let (Some(c1), Some(c2)) = (self.component_of(ArcRef::Label(a1)), self.component_of(ArcRef::Label(a2)))
        else {
            return Err(err);
        };
        if c1 == c2 || !self.band_faces(a1, a2) {
            return Err(err);
        }
        let mut ed = Editor::new(self);
        splice(&mut ed, a1, a2);
        ed.finish()
    }

    /// Whether some face has both arcs on its boundary, walked in the same
    /// direction relative to their orientations.
    pub fn band_faces(&self, a1: u32, a2: u32) -> bool {
        self.faces().iter().any(|f| {
            f.edges.iter().any(|e| {
                e.arc == a1 && f.edges.iter().any(|g| g.arc == a2 && g.forward == e.forward)
            })
        })
    }
}

/// Swaps the incoming ends of two arcs.
fn splice(ed: &mut Editor, x: u32, y: u32) {
    let find = |ed: &Editor, l: u32| {
        ed.crossings
            .iter()
            .enumerate()
            .find_map(|(k, c)| (0..4).find(|&s| c.arcs()[s] == l && c.is_incoming_slot(s)).map(|s| (k, s)))
            .expect("validated arc has an incoming end")
    };
    let (kx, sx) = find(ed, x);
    let (ky, sy) = find(ed, y);
    ed.set_slot(kx, sx, y);
    ed.set_slot(ky, sy, x);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Sign;

    fn trefoil() -> LinkDiagram {
        LinkDiagram::from_pd_quads(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]], 0).unwrap()
    }

    fn hopf() -> LinkDiagram {
        LinkDiagram::from_pd_quads(&[[4, 1, 3, 2], [2, 3, 1, 4]], 0).unwrap()
    }

    #[test]
    fn reverse_is_an_involution() {
        let t = trefoil();
        let r = t.reverse_component(ComponentId(0)).unwrap();
        assert!(r.crossings().iter().all(|c| c.sign() == Sign::Negative));
        assert!(r.reverse_component(ComponentId(0)).unwrap().same_as(&t));
    }

    #[test]
    fn reversing_one_hopf_component_flips_signs() {
        let h = hopf();
        let r = h.reverse_component(ComponentId(1)).unwrap();
        for (a, b) in h.crossings().iter().zip(r.crossings()) {
            assert_eq!(a.sign(), b.sign().negate());
        }
        assert!(r.is_planar());
    }

    #[test]
    fn connected_sum_counts() {
        let u = LinkDiagram::unknot();
        let uu = u.connected_sum(ComponentId(0), ArcRef::Loop(0), &u, ComponentId(0), ArcRef::Loop(0)).unwrap();
        assert_eq!(uu, LinkDiagram::unknot());
        let t = trefoil();
        let tu = t.connected_sum(ComponentId(0), ArcRef::Label(1), &u, ComponentId(0), ArcRef::Loop(0)).unwrap();
        assert!(tu.same_as(&t));
        let tt = t.connected_sum(ComponentId(0), ArcRef::Label(3), &t, ComponentId(0), ArcRef::Label(5)).unwrap();
        assert_eq!(tt.crossing_count(), 6);
        assert_eq!(tt.component_count(), 1);
        assert!(tt.is_planar());
        let err = t.connected_sum(ComponentId(0), ArcRef::Label(9), &t, ComponentId(0), ArcRef::Label(1));
        assert!(matches!(err, Err(DiagramError::ArcNotOnComponent { .. })));
    }

    #[test]
    fn crossing_change_keeps_orientation() {
        let t = trefoil();
        let c = t.crossing_change(1).unwrap();
        assert_eq!(c.crossings()[1].sign(), Sign::Positive);
        assert_eq!(c.trace_components(), t.trace_components());
        assert!(c.crossing_change(1).unwrap() == t);
    }

    #[test]
    fn mirror_flips_signs_and_stays_planar() {
        let m = trefoil().mirror();
        assert!(m.crossings().iter().all(|c| c.sign() == Sign::Positive));
        assert!(m.is_planar());
        assert!(m.validate().is_ok());
    }
}
