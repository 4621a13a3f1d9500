use std::collections::{BTreeMap, HashSet};

use super::{ArcRef, Crossing, DiagramError, LinkDiagram};

/// Mutable working copy used by the diagram rewrites.
#[derive(Debug, Clone)]
pub(crate) struct Editor {
    pub crossings: Vec<Crossing>,
    pub loops: usize,
    next_label: u32,
}

impl Editor {
    pub fn new(d: &LinkDiagram) -> Self {
        Editor {
            crossings: d.crossings.clone(),
            loops: d.unknotted_loops,
            next_label: d.max_label() + 1,
        }
    }

    pub fn fresh(&mut self) -> u32 {
        let l = self.next_label;
        self.next_label += 1;
        l
    }

    fn incoming_slot(&self, label: u32) -> Option<(usize, usize)> {
        self.crossings.iter().enumerate().find_map(|(k, c)| {
            (0..4).find(|&s| c.arcs()[s] == label && c.is_incoming_slot(s)).map(|s| (k, s))
        })
    }

    pub fn set_slot(&mut self, k: usize, slot: usize, label: u32) {
        let mut arcs = self.crossings[k].arcs();
        arcs[slot] = label;
        self.crossings[k] = Crossing::new(arcs, self.crossings[k].over_dir());
    }

    /// Cuts the strand at `arc` into `cuts + 1` pieces and returns their
    /// labels in orientation order. A labeled arc keeps its label on the first
    /// piece; a loop becomes a closed strand whose last piece equals the
    /// first. The caller must add crossings joining consecutive pieces.
    pub fn split(&mut self, arc: ArcRef, cuts: usize) -> Result<Vec<u32>, DiagramError> {
        match arc {
            ArcRef::Label(x) => {
                let (k, s) = self
                    .incoming_slot(x)
                    .ok_or(DiagramError::ArcNotOnComponent { arc, component: usize::MAX })?;
                let mut pieces = vec![x];
                for _ in 0..cuts {
                    pieces.push(self.fresh());
                }
                let last = *pieces.last().unwrap();
                self.set_slot(k, s, last);
                Ok(pieces)
            }
            ArcRef::Loop(i) => {
                if i >= self.loops || cuts == 0 {
                    return Err(DiagramError::ArcNotOnComponent { arc, component: usize::MAX });
                }
                self.loops -= 1;
                let mut pieces: Vec<u32> = (0..cuts).map(|_| self.fresh()).collect();
                pieces.push(pieces[0]);
                Ok(pieces)
            }
        }
    }

    /// Deletes crossings, joining each strand's incoming and outgoing arcs.
    /// Strands that no longer meet any crossing become loops.
    pub fn remove(&mut self, ks: &[usize]) {
        let kill: HashSet<usize> = ks.iter().copied().collect();
        let mut parent: BTreeMap<u32, u32> = BTreeMap::new();
        fn find(p: &mut BTreeMap<u32, u32>, x: u32) -> u32 {
            let mut r = x;
            while let Some(&n) = p.get(&r) {
                if n == r {
                    break;
                }
                r = n;
            }
            let mut y = x;
            while y != r {
                let n = p[&y];
                p.insert(y, r);
                y = n;
            }
            r
        }
        let mut touched = Vec::new();
        for &k in &kill {
            let c = self.crossings[k];
            for (a, b) in [(c.under_in(), c.under_out()), (c.over_in(), c.over_out())] {
                let ra = find(&mut parent, a);
                let rb = find(&mut parent, b);
                if ra != rb {
                    parent.insert(ra.max(rb), ra.min(rb));
                }
                touched.push(a);
                touched.push(b);
            }
        }
        let kept: Vec<Crossing> = self
            .crossings
            .iter()
            .enumerate()
            .filter(|(k, _)| !kill.contains(k))
            .map(|(_, c)| *c)
            .collect();
        let mut remaining_roots = HashSet::new();
        let kept: Vec<Crossing> = kept
            .into_iter()
            .map(|c| {
                c.relabeled(|l| {
                    let r = find(&mut parent, l);
                    remaining_roots.insert(r);
                    r
                })
            })
            .collect();
        let mut roots: Vec<u32> = touched.iter().map(|&l| find(&mut parent, l)).collect();
        roots.sort_unstable();
        roots.dedup();
        self.loops += roots.iter().filter(|r| !remaining_roots.contains(r)).count();
        self.crossings = kept;
    }

    pub fn finish(self) -> Result<LinkDiagram, DiagramError> {
        LinkDiagram::from_crossings(self.crossings, self.loops)
    }
}
