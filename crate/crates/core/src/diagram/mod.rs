//! Oriented link diagrams stored as PD crossings.
//!
//! A diagram is a list of [`Crossing`]s over positive arc labels plus a count
//! of crossing-free loops, which PD quadruples cannot express. Components are
//! recovered by tracing arcs through crossings; their order is fixed by the
//! smallest arc label on each traced cycle, with crossing-free loops last.

mod canonical;
mod crossing;
mod edit;
mod faces;
mod ops;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use crossing::{Crossing, OverDir, Sign};
pub(crate) use edit::Editor;
pub use faces::{Face, FaceEdge};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("arc {label} is used {count} times (expected 2); first seen at crossing {crossing}")]
    DanglingArc { label: u32, count: usize, crossing: usize },
    #[error("arc {label} cannot be traced into a closed oriented cycle at crossing {crossing}")]
    BrokenCycle { label: u32, crossing: usize },
    #[error("crossing {crossing} has an unset (zero) arc label")]
    EmptyCrossing { crossing: usize },
    #[error("component {index} out of range ({count} components)")]
    ComponentOutOfRange { index: usize, count: usize },
    #[error("crossing {index} out of range ({count} crossings)")]
    CrossingOutOfRange { index: usize, count: usize },
    #[error("arc {arc} does not lie on component {component}")]
    ArcNotOnComponent { arc: ArcRef, component: usize },
    #[error("arcs {first} and {second} do not bound a common face with coherent orientation")]
    NoCoherentBand { first: ArcRef, second: ArcRef },
}

impl DiagramError {
    pub fn code(&self) -> &'static str {
        match self {
            DiagramError::DanglingArc { .. } => "DanglingArc",
            DiagramError::BrokenCycle { .. } => "BrokenCycle",
            DiagramError::EmptyCrossing { .. } => "EmptyCrossing",
            DiagramError::ComponentOutOfRange { .. } => "ComponentOutOfRange",
            DiagramError::CrossingOutOfRange { .. } => "IndexOutOfRange",
            DiagramError::ArcNotOnComponent { .. } => "ArcNotOnComponent",
            DiagramError::NoCoherentBand { .. } => "NoCoherentBand",
        }
    }
}

/// Index of a component in canonical trace order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ComponentId(pub usize);

impl fmt::Display for ComponentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A place on the diagram where a strand runs: a labeled arc, or one of the
/// crossing-free loops (indexed among the loops only).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArcRef {
    Label(u32),
    Loop(usize),
}

impl fmt::Display for ArcRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArcRef::Label(l) => write!(f, "{l}"),
            ArcRef::Loop(i) => write!(f, "loop#{i}"),
        }
    }
}

/// Where an arc starts and ends: `(crossing, slot)` pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct ArcEnds {
    pub start: (usize, usize),
    pub end: (usize, usize),
}

/// One traced component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Component {
    /// Arc labels in orientation order, starting from the smallest.
    Arcs(Vec<u32>),
    /// A crossing-free loop.
    Loop,
}

impl Component {
    pub fn arcs(&self) -> &[u32] {
        match self {
            Component::Arcs(a) => a,
            Component::Loop => &[],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    unknotted_loops: usize,
}

impl LinkDiagram {
    pub fn empty() -> Self {
        LinkDiagram::default()
    }

    /// The crossing-free unknot.
    pub fn unknot() -> Self {
        LinkDiagram::unlink(1)
    }

    pub fn unlink(n: usize) -> Self {
        LinkDiagram {
            crossings: Vec::new(),
            unknotted_loops: n,
        }
    }

    /// Builds a diagram from oriented crossings and checks every invariant.
    pub fn from_crossings(crossings: Vec<Crossing>, unknotted_loops: usize) -> Result<Self, DiagramError> {
        let d = LinkDiagram {
            crossings,
            unknotted_loops,
        };
        d.validate()?;
        Ok(d)
    }

    /// Builds a diagram from bare PD quadruples, inferring the direction of
    /// every over-strand.
    ///
    /// Under-strands fix orientation (`a` in, `c` out) and the choice
    /// propagates along each component. Components that never pass under
    /// anything are oriented by label succession: walking from the smallest
    /// label, the next label is smaller than the previous one. Two-arc
    /// components of that kind are ambiguous under succession; the smaller
    /// label is taken to end at the crossing whose incoming under-label is
    /// smaller. A one-arc over-only loop is read as a positive crossing.
    pub fn from_pd_quads(quads: &[[u32; 4]], unknotted_loops: usize) -> Result<Self, DiagramError> {
        let over = infer_over_dirs(quads)?;
        let crossings = quads.iter().zip(over).map(|(q, o)| Crossing::new(*q, o)).collect();
        LinkDiagram::from_crossings(crossings, unknotted_loops)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing(&self, k: usize) -> Result<&Crossing, DiagramError> {
        self.crossings.get(k).ok_or(DiagramError::CrossingOutOfRange {
            index: k,
            count: self.crossings.len(),
        })
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn unknotted_loops(&self) -> usize {
        self.unknotted_loops
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty() && self.unknotted_loops == 0
    }

    /// Confirms the arc-usage invariants, reporting the first violation.
    pub fn validate(&self) -> Result<(), DiagramError> {
        let mut seen: BTreeMap<u32, (usize, usize, usize, usize)> = BTreeMap::new();
        for (k, c) in self.crossings.iter().enumerate() {
            for (slot, &label) in c.arcs().iter().enumerate() {
                if label == 0 {
                    return Err(DiagramError::EmptyCrossing { crossing: k });
                }
                let e = seen.entry(label).or_insert((0, 0, 0, k));
                e.0 += 1;
                if c.is_incoming_slot(slot) {
                    e.1 += 1;
                } else {
                    e.2 += 1;
                }
            }
        }
        let mut first_bad: Option<(usize, DiagramError)> = None;
        for (&label, &(count, inc, out, first)) in &seen {
            let err = if count != 2 {
                Some(DiagramError::DanglingArc {
                    label,
                    count,
                    crossing: first,
                })
            } else if inc != 1 || out != 1 {
                Some(DiagramError::BrokenCycle { label, crossing: first })
            } else {
                None
            };
            if let Some(err) = err {
                let better = match &first_bad {
                    None => true,
                    Some((k, prev)) => {
                        first < *k
                            || (first == *k
                                && matches!(err, DiagramError::DanglingArc { .. })
                                && !matches!(prev, DiagramError::DanglingArc { .. }))
                    }
                };
                if better {
                    first_bad = Some((first, err));
                }
            }
        }
        match first_bad {
            Some((_, e)) => Err(e),
            None => Ok(()),
        }
    }

    /// Start and end of every arc. Only meaningful on a validated diagram.
    pub(crate) fn arc_ends(&self) -> HashMap<u32, ArcEnds> {
        let mut starts = HashMap::new();
        let mut ends = HashMap::new();
        for (k, c) in self.crossings.iter().enumerate() {
            for (slot, &label) in c.arcs().iter().enumerate() {
                if c.is_incoming_slot(slot) {
                    ends.insert(label, (k, slot));
                } else {
                    starts.insert(label, (k, slot));
                }
            }
        }
        starts
            .into_iter()
            .map(|(label, start)| (label, ArcEnds { start, end: ends[&label] }))
            .collect()
    }

    /// Successor of every arc along its component.
    pub(crate) fn successors(&self) -> HashMap<u32, u32> {
        let mut next = HashMap::new();
        for c in &self.crossings {
            next.insert(c.under_in(), c.under_out());
            next.insert(c.over_in(), c.over_out());
        }
        next
    }

    pub fn labels(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.crossings.iter().flat_map(|c| c.arcs()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub(crate) fn max_label(&self) -> u32 {
        self.crossings.iter().flat_map(|c| c.arcs()).max().unwrap_or(0)
    }

    /// Oriented arc cycles in canonical order, followed by crossing-free loops.
    pub fn trace_components(&self) -> Vec<Component> {
        let next = self.successors();
        let mut labels: Vec<u32> = next.keys().copied().collect();
        labels.sort_unstable();
        let mut visited = std::collections::HashSet::new();
        let mut out = Vec::new();
        for &start in &labels {
            if visited.contains(&start) {
                continue;
            }
            let mut cycle = vec![start];
            visited.insert(start);
            let mut cur = next[&start];
            while cur != start {
                visited.insert(cur);
                cycle.push(cur);
                cur = next[&cur];
            }
            out.push(Component::Arcs(cycle));
        }
        out.extend(std::iter::repeat_n(Component::Loop, self.unknotted_loops));
        out
    }

    pub fn component_count(&self) -> usize {
        self.traced_count() + self.unknotted_loops
    }

    fn traced_count(&self) -> usize {
        self.trace_components()
            .iter()
            .filter(|c| matches!(c, Component::Arcs(_)))
            .count()
    }

    /// Component index of every arc label.
    pub fn component_of_arcs(&self) -> HashMap<u32, usize> {
        let mut map = HashMap::new();
        for (i, comp) in self.trace_components().iter().enumerate() {
            for &a in comp.arcs() {
                map.insert(a, i);
            }
        }
        map
    }

    /// For each crossing, the components of its under- and over-strand.
    pub fn crossing_components(&self) -> Vec<(ComponentId, ComponentId)> {
        let comp = self.component_of_arcs();
        self.crossings
            .iter()
            .map(|c| (ComponentId(comp[&c.under_in()]), ComponentId(comp[&c.over_in()])))
            .collect()
    }

    pub fn check_component(&self, c: ComponentId) -> Result<(), DiagramError> {
        let count = self.component_count();
        if c.0 >= count {
            Err(DiagramError::ComponentOutOfRange { index: c.0, count })
        } else {
            Ok(())
        }
    }

    /// The first arc of a component (its smallest label, or the loop itself).
    pub fn first_arc(&self, c: ComponentId) -> Result<ArcRef, DiagramError> {
        self.check_component(c)?;
        let comps = self.trace_components();
        Ok(match &comps[c.0] {
            Component::Arcs(a) => ArcRef::Label(a[0]),
            Component::Loop => ArcRef::Loop(c.0 - self.traced_count()),
        })
    }

    /// Which component an arc reference belongs to.
    pub fn component_of(&self, arc: ArcRef) -> Option<ComponentId> {
        match arc {
            ArcRef::Label(l) => self.component_of_arcs().get(&l).map(|&i| ComponentId(i)),
            ArcRef::Loop(i) if i < self.unknotted_loops => Some(ComponentId(self.traced_count() + i)),
            ArcRef::Loop(_) => None,
        }
    }

    /// Every strand position: all arc labels then every loop.
    pub fn arc_refs(&self) -> Vec<ArcRef> {
        let mut v: Vec<ArcRef> = self.labels().into_iter().map(ArcRef::Label).collect();
        v.extend((0..self.unknotted_loops).map(ArcRef::Loop));
        v
    }

    /// Whether the underlying 4-valent map has genus zero on every connected
    /// piece. Non-planar (virtual) codes are accepted but flagged here.
    pub fn is_planar(&self) -> bool {
        faces::is_planar(self)
    }

    /// Crossing indices of each connected piece of the crossing graph.
    pub(crate) fn crossing_pieces(&self) -> Vec<Vec<usize>> {
        faces::crossing_pieces(self)
    }

    pub fn faces(&self) -> Vec<Face> {
        faces::faces(self)
    }

    /// Canonical relabeling: see [`canonical`](self::canonical) for details.
    pub fn canonical(&self) -> LinkDiagram {
        canonical::canonicalize(self)
    }

    /// Canonical form together with where each component went: entry `i` is
    /// the canonical index of component `i`.
    pub fn canonical_with_components(&self) -> (LinkDiagram, Vec<ComponentId>) {
        let (c, map) = canonical::canonicalize_with_map(self);
        let new_comp = c.component_of_arcs();
        let traced = self.trace_components();
        let n_traced = traced.iter().filter(|x| !x.arcs().is_empty()).count();
        let perm = traced
            .iter()
            .enumerate()
            .map(|(i, comp)| match comp.arcs().first() {
                Some(a) => ComponentId(new_comp[&map[a]]),
                None => ComponentId(i),
            })
            .collect();
        debug_assert_eq!(n_traced, c.component_count() - c.unknotted_loops());
        (c, perm)
    }

    /// True when the two diagrams agree up to relabeling and crossing order.
    pub fn same_as(&self, other: &LinkDiagram) -> bool {
        self.canonical() == other.canonical()
    }
}

/// Orientation inference for bare PD quadruples; see
/// [`LinkDiagram::from_pd_quads`].
fn infer_over_dirs(quads: &[[u32; 4]]) -> Result<Vec<OverDir>, DiagramError> {
    // occurrences per label
    let mut occ: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
    for (k, q) in quads.iter().enumerate() {
        for (slot, &label) in q.iter().enumerate() {
            if label == 0 {
                return Err(DiagramError::EmptyCrossing { crossing: k });
            }
            occ.entry(label).or_default().push((k, slot));
        }
    }
    let mut bad = occ
        .iter()
        .filter(|(_, v)| v.len() != 2)
        .map(|(&label, v)| (v[0].0, label, v.len()))
        .collect::<Vec<_>>();
    bad.sort();
    if let Some(&(crossing, label, count)) = bad.first() {
        return Err(DiagramError::DanglingArc { label, count, crossing });
    }
    let partner = |k: usize, slot: usize| -> (usize, usize) {
        let v = &occ[&quads[k][slot]];
        if v[0] == (k, slot) {
            v[1]
        } else {
            v[0]
        }
    };

    // Some(true) = incoming at that slot.
    let mut state: Vec<[Option<bool>; 4]> = vec![[None; 4]; quads.len()];
    let mut work: Vec<(usize, usize, bool)> = Vec::new();
    for k in 0..quads.len() {
        work.push((k, 0, true));
        work.push((k, 2, false));
    }
    let conflict = |k: usize, slot: usize| DiagramError::BrokenCycle {
        label: quads[k][slot],
        crossing: k,
    };
    let propagate = |state: &mut Vec<[Option<bool>; 4]>, work: &mut Vec<(usize, usize, bool)>| {
        while let Some((k, slot, incoming)) = work.pop() {
            match state[k][slot] {
                Some(s) if s == incoming => continue,
                Some(_) => return Err(conflict(k, slot)),
                None => {}
            }
            state[k][slot] = Some(incoming);
            let (pk, ps) = partner(k, slot);
            work.push((pk, ps, !incoming));
            let opp = Crossing::opposite_slot(slot);
            work.push((k, opp, !incoming));
        }
        Ok(())
    };
    propagate(&mut state, &mut work)?;

    // Over-only cycles.
    while let Some((k0, s0)) = (0..quads.len())
        .flat_map(|k| (0..4).map(move |s| (k, s)))
        .find(|&(k, s)| state[k][s].is_none())
    {
        // Walk with (k0, s0) outgoing; record each arc's (label, start, end).
        let mut arcs = Vec::new();
        let (mut k, mut s) = (k0, s0);
        loop {
            let end = partner(k, s);
            arcs.push((quads[k][s], (k, s), end));
            let next = (end.0, Crossing::opposite_slot(end.1));
            if next == (k0, s0) {
                break;
            }
            (k, s) = next;
            if arcs.len() > 4 * quads.len() {
                return Err(conflict(k0, s0));
            }
        }
        let labels: Vec<u32> = arcs.iter().map(|a| a.0).collect();
        let keep = match labels.len() {
            1 => {
                // outgoing at b means over runs b -> d: choose the positive reading
                s0 == 3
            }
            2 => {
                let (m_idx, _) = labels.iter().enumerate().min_by_key(|(_, &l)| l).unwrap();
                let end_crossing = arcs[m_idx].2 .0;
                let other = arcs[m_idx].1 .0;
                quads[end_crossing][0] < quads[other][0]
            }
            n => {
                let (i, _) = labels.iter().enumerate().min_by_key(|(_, &l)| l).unwrap();
                labels[(i + 1) % n] < labels[(i + n - 1) % n]
            }
        };
        for &(_, start, end) in &arcs {
            work.push((start.0, start.1, !keep));
            work.push((end.0, end.1, keep));
        }
        propagate(&mut state, &mut work)?;
    }

    Ok(state
        .iter()
        .map(|s| if s[3] == Some(true) { OverDir::DToB } else { OverDir::BToD })
        .collect())
}
