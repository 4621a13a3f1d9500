//! Reidemeister moves, the framed kink-pair move, framing realization and a
//! bounded framed-equivalence search.
//!
//! Sites are plain data referring to the labels and crossing indices of the
//! diagram they were enumerated on. Crossing-free loops are interchangeable,
//! so insertion sites only ever name the first loop (and the second, for a
//! pair of loops).

mod framing;
mod search;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{ArcRef, Crossing, DiagramError, Editor, LinkDiagram, Sign};

pub use framing::realize_framing;
pub use search::{framed_equivalent, framed_equivalent_with, Budget, Equivalence, PathStep, SearchStats};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("move site {site} does not match the diagram")]
    StaleSite { site: String },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

impl MoveError {
    pub fn code(&self) -> &'static str {
        match self {
            MoveError::StaleSite { .. } => "StaleSite",
            MoveError::Diagram(e) => e.code(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    #[serde(rename = "R1_add")]
    R1Add,
    #[serde(rename = "R1_remove")]
    R1Remove,
    #[serde(rename = "R2_add")]
    R2Add,
    #[serde(rename = "R2_remove")]
    R2Remove,
    R3,
    #[serde(rename = "FR1_add")]
    Fr1Add,
    #[serde(rename = "FR1_remove")]
    Fr1Remove,
}

impl MoveKind {
    pub const ALL: [MoveKind; 7] = [
        MoveKind::R1Add,
        MoveKind::R1Remove,
        MoveKind::R2Add,
        MoveKind::R2Remove,
        MoveKind::R3,
        MoveKind::Fr1Add,
        MoveKind::Fr1Remove,
    ];

    /// Moves that preserve the blackboard framing.
    pub const FRAMED: [MoveKind; 5] = [
        MoveKind::R2Add,
        MoveKind::R2Remove,
        MoveKind::R3,
        MoveKind::Fr1Add,
        MoveKind::Fr1Remove,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::R1Add => "R1_add",
            MoveKind::R1Remove => "R1_remove",
            MoveKind::R2Add => "R2_add",
            MoveKind::R2Remove => "R2_remove",
            MoveKind::R3 => "R3",
            MoveKind::Fr1Add => "FR1_add",
            MoveKind::Fr1Remove => "FR1_remove",
        }
    }

    /// Change in crossing count.
    pub fn crossing_delta(self) -> i64 {
        match self {
            MoveKind::R1Add => 1,
            MoveKind::R1Remove => -1,
            MoveKind::R2Add | MoveKind::Fr1Add => 2,
            MoveKind::R2Remove | MoveKind::Fr1Remove => -2,
            MoveKind::R3 => 0,
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MoveKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        MoveKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown move kind '{s}'"))
    }
}

/// Kink handedness: a right kink is a positive crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Handedness {
    LeftKink,
    RightKink,
}

impl Handedness {
    pub fn sign(self) -> Sign {
        match self {
            Handedness::LeftKink => Sign::Negative,
            Handedness::RightKink => Sign::Positive,
        }
    }

    pub fn from_sign(s: Sign) -> Self {
        match s {
            Sign::Positive => Handedness::RightKink,
            Sign::Negative => Handedness::LeftKink,
        }
    }
}

/// Side of an oriented arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Anchor {
    /// Insertion on a strand.
    Arc { arc: ArcRef },
    /// A single kink crossing.
    Crossing { crossing: usize },
    /// A bigon (sorted) or two kinks in strand order.
    Pair { crossings: [usize; 2] },
    /// Push `over` across the face on its `over_side` and over `under`,
    /// which bounds that face on its `under_side`.
    Arcs {
        over: ArcRef,
        over_side: Side,
        under: ArcRef,
        under_side: Side,
    },
    /// A triangular face: its crossings and edge arcs, each sorted.
    Triangle { crossings: [usize; 3], arcs: [u32; 3] },
}

impl Anchor {
    /// Flattened indices used for ordering sites.
    fn indices(&self) -> Vec<i64> {
        let arc = |a: &ArcRef| match a {
            ArcRef::Label(l) => *l as i64,
            ArcRef::Loop(i) => -1 - *i as i64,
        };
        let side = |s: &Side| if *s == Side::Left { 0 } else { 1 };
        match self {
            Anchor::Arc { arc: a } => vec![arc(a)],
            Anchor::Crossing { crossing } => vec![*crossing as i64],
            Anchor::Pair { crossings } => crossings.iter().map(|&k| k as i64).collect(),
            Anchor::Arcs {
                over,
                over_side,
                under,
                under_side,
            } => vec![arc(over), arc(under), side(over_side), side(under_side)],
            Anchor::Triangle { crossings, arcs } => crossings
                .iter()
                .map(|&k| k as i64)
                .chain(arcs.iter().map(|&a| a as i64))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MoveSite {
    pub kind: MoveKind,
    pub anchor: Anchor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub handedness: Option<Handedness>,
}

impl MoveSite {
    fn sort_key(&self) -> (Vec<i64>, MoveKind, Option<Handedness>) {
        (self.anchor.indices(), self.kind, self.handedness)
    }
}

impl fmt::Display for MoveSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}", self.kind, self.anchor)?;
        if let Some(h) = self.handedness {
            write!(f, " {h:?}")?;
        }
        Ok(())
    }
}

/// All sites of the requested kinds, ordered by anchor indices.
pub fn enumerate_moves(d: &LinkDiagram, kinds: &[MoveKind]) -> Vec<MoveSite> {
    let mut out = Vec::new();
    let kinds: BTreeSet<MoveKind> = kinds.iter().copied().collect();
    for k in kinds {
        match k {
            MoveKind::R1Add | MoveKind::Fr1Add => {
                for arc in insertion_arcs(d) {
                    for h in [Handedness::LeftKink, Handedness::RightKink] {
                        out.push(MoveSite {
                            kind: k,
                            anchor: Anchor::Arc { arc },
                            handedness: Some(h),
                        });
                    }
                }
            }
            MoveKind::R1Remove => out.extend(r1_remove_sites(d)),
            MoveKind::R2Add => out.extend(r2_add_sites(d)),
            MoveKind::R2Remove => out.extend(r2_remove_sites(d)),
            MoveKind::R3 => out.extend(r3_sites(d)),
            MoveKind::Fr1Remove => out.extend(fr1_remove_sites(d)),
        }
    }
    out.sort_by_key(|a| a.sort_key());
    out
}

/// Applies a site after checking it still matches `d`.
pub fn apply_move(d: &LinkDiagram, m: &MoveSite) -> Result<LinkDiagram, MoveError> {
    if !enumerate_moves(d, &[m.kind]).contains(m) {
        return Err(MoveError::StaleSite { site: m.to_string() });
    }
    apply_unchecked(d, m)
}

/// Applies a site taken from `enumerate_moves(d, ..)` without re-checking.
pub(crate) fn apply_unchecked(d: &LinkDiagram, m: &MoveSite) -> Result<LinkDiagram, MoveError> {
    let stale = || MoveError::StaleSite { site: m.to_string() };
    match (&m.kind, &m.anchor) {
        (MoveKind::R1Add, Anchor::Arc { arc }) => {
            let sign = m.handedness.ok_or_else(stale)?.sign();
            let mut ed = Editor::new(d);
            let p = ed.split(*arc, 1)?;
            let lp = ed.fresh();
            ed.crossings.push(Crossing::kink(p[0], lp, p[1], sign));
            Ok(ed.finish()?)
        }
        (MoveKind::Fr1Add, Anchor::Arc { arc }) => {
            let first = m.handedness.ok_or_else(stale)?.sign();
            let mut ed = Editor::new(d);
            let p = ed.split(*arc, 2)?;
            let (l1, l2) = (ed.fresh(), ed.fresh());
            ed.crossings.push(Crossing::kink(p[0], l1, p[1], first));
            ed.crossings.push(Crossing::kink(p[1], l2, p[2], first.negate()));
            Ok(ed.finish()?)
        }
        (MoveKind::R1Remove, Anchor::Crossing { crossing }) => {
            let mut ed = Editor::new(d);
            ed.remove(&[*crossing]);
            Ok(ed.finish()?)
        }
        (MoveKind::R2Remove | MoveKind::Fr1Remove, Anchor::Pair { crossings }) => {
            let mut ed = Editor::new(d);
            ed.remove(crossings);
            Ok(ed.finish()?)
        }
        (
            MoveKind::R2Add,
            Anchor::Arcs {
                over,
                over_side,
                under,
                under_side,
            },
        ) => r2_add(d, *over, *over_side, *under, *under_side),
        (MoveKind::R3, Anchor::Triangle { arcs, .. }) => Ok(r3(d, arcs)?),
        _ => Err(stale()),
    }
}

fn insertion_arcs(d: &LinkDiagram) -> Vec<ArcRef> {
    let mut v: Vec<ArcRef> = d.labels().into_iter().map(ArcRef::Label).collect();
    if d.unknotted_loops() > 0 {
        v.push(ArcRef::Loop(0));
    }
    v
}

fn r1_remove_sites(d: &LinkDiagram) -> Vec<MoveSite> {
    d.crossings()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.kink_loop().is_some())
        .map(|(k, c)| MoveSite {
            kind: MoveKind::R1Remove,
            anchor: Anchor::Crossing { crossing: k },
            handedness: Some(Handedness::from_sign(c.sign())),
        })
        .collect()
}

/// A kink in the form built by [`Crossing::kink`]: the strand passes under,
/// runs around the loop and passes over.
fn is_standard_kink(c: &Crossing) -> bool {
    c.under_out() == c.over_in() && c.under_in() != c.under_out()
}

fn fr1_remove_sites(d: &LinkDiagram) -> Vec<MoveSite> {
    let ends = d.arc_ends();
    let mut out = Vec::new();
    for (k1, c1) in d.crossings().iter().enumerate() {
        if !is_standard_kink(c1) {
            continue;
        }
        let (k2, slot) = ends[&c1.over_out()].end;
        let c2 = &d.crossings()[k2];
        // a component made of just the two kinks matches in both orders
        let closed = ends[&c2.over_out()].end.0 == k1;
        if k2 != k1 && slot == 0 && is_standard_kink(c2) && c2.sign() != c1.sign() && (!closed || k1 < k2) {
            out.push(MoveSite {
                kind: MoveKind::Fr1Remove,
                anchor: Anchor::Pair { crossings: [k1, k2] },
                handedness: Some(Handedness::from_sign(c1.sign())),
            });
        }
    }
    out
}

fn side_of(forward: bool) -> Side {
    // faces lie to the right of the boundary walk
    if forward {
        Side::Right
    } else {
        Side::Left
    }
}

fn r2_add_sites(d: &LinkDiagram) -> Vec<MoveSite> {
    let mut set: BTreeSet<(ArcRef, Side, ArcRef, Side)> = BTreeSet::new();
    for f in d.faces() {
        for e1 in &f.edges {
            for e2 in &f.edges {
                if e1.arc != e2.arc {
                    set.insert((
                        ArcRef::Label(e1.arc),
                        side_of(e1.forward),
                        ArcRef::Label(e2.arc),
                        side_of(e2.forward),
                    ));
                }
            }
        }
    }
    // strands in different pieces can be brought next to each other freely
    let ends = d.arc_ends();
    let mut piece_of = vec![0; d.crossing_count()];
    let pieces = d.crossing_pieces();
    for (i, p) in pieces.iter().enumerate() {
        for &k in p {
            piece_of[k] = i;
        }
    }
    let mut strands: Vec<(ArcRef, usize)> = d
        .labels()
        .into_iter()
        .map(|l| (ArcRef::Label(l), piece_of[ends[&l].start.0]))
        .collect();
    for i in 0..d.unknotted_loops().min(2) {
        strands.push((ArcRef::Loop(i), pieces.len() + i));
    }
    let sides = [Side::Left, Side::Right];
    for &(a, pa) in &strands {
        for &(b, pb) in &strands {
            if pa == pb {
                continue;
            }
            // with a single loop there is no Loop(1) to cut second
            if let (ArcRef::Loop(_), ArcRef::Loop(j)) = (a, b) {
                if j == 0 {
                    continue;
                }
            }
            for sa in sides {
                for sb in sides {
                    set.insert((a, sa, b, sb));
                }
            }
        }
    }
    set.into_iter()
        .map(|(over, over_side, under, under_side)| MoveSite {
            kind: MoveKind::R2Add,
            anchor: Anchor::Arcs {
                over,
                over_side,
                under,
                under_side,
            },
            handedness: None,
        })
        .collect()
}

fn r2_add(d: &LinkDiagram, over: ArcRef, over_side: Side, under: ArcRef, under_side: Side) -> Result<LinkDiagram, MoveError> {
    // Local model: `under` runs east along y = 0 and the shared face lies
    // north of it when it is on the under arc's left. A finger of `over`
    // reaches across the face, crosses `under` going toward it and again
    // coming back.
    let face_north = under_side == Side::Left;
    let over_east = if face_north {
        over_side == Side::Right
    } else {
        over_side == Side::Left
    };
    let toward = if face_north { -1 } else { 1 };
    let mut ed = Editor::new(d);
    let o = ed.split(over, 2)?;
    // after cutting one loop the remaining loop is the first one
    let under = match (over, under) {
        (ArcRef::Loop(_), ArcRef::Loop(_)) => ArcRef::Loop(0),
        _ => under,
    };
    let u = ed.split(under, 2)?;
    let (first_u, second_u) = if over_east {
        ((u[0], u[1]), (u[1], u[2]))
    } else {
        ((u[1], u[2]), (u[0], u[1]))
    };
    // over direction (0, dy) against under direction (1, 0): sign = -dy
    let sign_at = |dy: i64| Sign::from_value(-dy).expect("unit step");
    ed.crossings
        .push(Crossing::from_roles(first_u.0, first_u.1, o[0], o[1], sign_at(toward)));
    ed.crossings
        .push(Crossing::from_roles(second_u.0, second_u.1, o[1], o[2], sign_at(-toward)));
    Ok(ed.finish()?)
}

fn r2_remove_sites(d: &LinkDiagram) -> Vec<MoveSite> {
    let mut set = BTreeSet::new();
    for f in d.faces() {
        if f.edges.len() != 2 {
            continue;
        }
        let (e1, e2) = (f.edges[0], f.edges[1]);
        if e1.from_crossing == e1.to_crossing {
            continue;
        }
        let over_both = |e: &crate::diagram::FaceEdge| e.over_at_from && e.over_at_to;
        let under_both = |e: &crate::diagram::FaceEdge| !e.over_at_from && !e.over_at_to;
        if (over_both(&e1) && under_both(&e2)) || (over_both(&e2) && under_both(&e1)) {
            let (a, b) = (e1.from_crossing, e1.to_crossing);
            set.insert([a.min(b), a.max(b)]);
        }
    }
    set.into_iter()
        .map(|crossings| MoveSite {
            kind: MoveKind::R2Remove,
            anchor: Anchor::Pair { crossings },
            handedness: None,
        })
        .collect()
}

fn r3_sites(d: &LinkDiagram) -> Vec<MoveSite> {
    let mut set = BTreeSet::new();
    for f in d.faces() {
        if f.edges.len() != 3 {
            continue;
        }
        let mut ks: Vec<usize> = f.edges.iter().map(|e| e.from_crossing).collect();
        ks.sort_unstable();
        ks.dedup();
        if ks.len() != 3 {
            continue;
        }
        let mut arcs: Vec<u32> = f.edges.iter().map(|e| e.arc).collect();
        arcs.sort_unstable();
        arcs.dedup();
        if arcs.len() != 3 || !f.edges.iter().any(|e| e.over_at_from && e.over_at_to) {
            continue;
        }
        set.insert(([ks[0], ks[1], ks[2]], [arcs[0], arcs[1], arcs[2]]));
    }
    set.into_iter()
        .map(|(crossings, arcs)| MoveSite {
            kind: MoveKind::R3,
            anchor: Anchor::Triangle { crossings, arcs },
            handedness: None,
        })
        .collect()
}

/// Slides one strand of a triangular face across the opposite crossing:
/// every strand meets the other two in the reverse order, and each pair
/// keeps its over/under relation and sign.
fn r3(d: &LinkDiagram, arcs: &[u32; 3]) -> Result<LinkDiagram, DiagramError> {
    struct Strand {
        first: usize,
        second: usize,
        inc: u32,
        mid: u32,
        out: u32,
    }
    let ends = d.arc_ends();
    let cs = d.crossings();
    let strands: Vec<Strand> = arcs
        .iter()
        .map(|&m| {
            let e = ends[&m];
            Strand {
                first: e.start.0,
                second: e.end.0,
                inc: cs[e.start.0].arcs()[Crossing::opposite_slot(e.start.1)],
                mid: m,
                out: cs[e.end.0].arcs()[Crossing::opposite_slot(e.end.1)],
            }
        })
        .collect();
    let mut new: HashMap<usize, Crossing> = HashMap::new();
    for s in &strands {
        for k in [s.first, s.second] {
            if new.contains_key(&k) {
                continue;
            }
            let c = cs[k];
            let labels = |t: &Strand| {
                if t.first == k {
                    (t.mid, t.out)
                } else {
                    (t.inc, t.mid)
                }
            };
            let old_in = |t: &Strand| if t.first == k { t.inc } else { t.mid };
            let pair: Vec<&Strand> = strands.iter().filter(|t| t.first == k || t.second == k).collect();
            let under = pair.iter().find(|t| old_in(t) == c.under_in()).expect("strand through crossing");
            let over = pair.iter().find(|t| old_in(t) == c.over_in()).expect("strand through crossing");
            let (ui, uo) = labels(under);
            let (oi, oo) = labels(over);
            new.insert(k, Crossing::from_roles(ui, uo, oi, oo, c.sign()));
        }
    }
    let crossings = cs
        .iter()
        .enumerate()
        .map(|(k, c)| new.get(&k).copied().unwrap_or(*c))
        .collect();
    LinkDiagram::from_crossings(crossings, d.unknotted_loops())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codecs::parse_pd;
    use crate::invariants::total_writhe;

    fn trefoil() -> LinkDiagram {
        parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap()
    }

    fn kinds(sites: &[MoveSite]) -> Vec<MoveKind> {
        sites.iter().map(|s| s.kind).collect()
    }

    #[test]
    fn unknot_sites() {
        let u = LinkDiagram::unknot();
        let sites = enumerate_moves(&u, &MoveKind::ALL);
        assert_eq!(kinds(&sites), vec![MoveKind::R1Add, MoveKind::R1Add, MoveKind::Fr1Add, MoveKind::Fr1Add]);
        let r1: Vec<_> = enumerate_moves(&u, &[MoveKind::R1Add]);
        assert_eq!(r1.len(), 2);
        assert!(r1.iter().all(|s| s.anchor == Anchor::Arc { arc: ArcRef::Loop(0) }));
    }

    #[test]
    fn single_kink_has_one_removal() {
        let k = parse_pd("X[1,1,2,2]").unwrap();
        let sites = enumerate_moves(&k, &[MoveKind::R1Remove]);
        assert_eq!(sites.len(), 1);
        assert_eq!(sites[0].handedness, Some(Handedness::RightKink));
        assert_eq!(apply_move(&k, &sites[0]).unwrap(), LinkDiagram::unknot());
    }

    #[test]
    fn r1_round_trip_and_writhe() {
        let t = trefoil();
        let site = MoveSite {
            kind: MoveKind::R1Add,
            anchor: Anchor::Arc { arc: ArcRef::Label(2) },
            handedness: Some(Handedness::RightKink),
        };
        let k = apply_move(&t, &site).unwrap();
        assert_eq!(total_writhe(&k), total_writhe(&t) + 1);
        assert!(k.is_planar());
        let removals = enumerate_moves(&k, &[MoveKind::R1Remove]);
        assert_eq!(removals.len(), 1);
        assert!(apply_move(&k, &removals[0]).unwrap().same_as(&t));
    }

    #[test]
    fn fr1_pair() {
        let t = trefoil();
        let site = MoveSite {
            kind: MoveKind::Fr1Add,
            anchor: Anchor::Arc { arc: ArcRef::Label(1) },
            handedness: Some(Handedness::LeftKink),
        };
        let k = apply_move(&t, &site).unwrap();
        assert_eq!(k.crossing_count(), 5);
        assert_eq!(total_writhe(&k), total_writhe(&t));
        let rem = enumerate_moves(&k, &[MoveKind::Fr1Remove]);
        assert_eq!(rem.len(), 1);
        assert!(apply_move(&k, &rem[0]).unwrap().same_as(&t));

        let stacked = apply_move(&LinkDiagram::unknot(), &MoveSite {
            kind: MoveKind::Fr1Add,
            anchor: Anchor::Arc { arc: ArcRef::Loop(0) },
            handedness: Some(Handedness::RightKink),
        })
        .unwrap();
        assert_eq!(enumerate_moves(&stacked, &[MoveKind::Fr1Remove]).len(), 1);
        assert_eq!(enumerate_moves(&stacked, &[MoveKind::R1Remove]).len(), 2);
    }

    #[test]
    fn r2_add_is_planar_and_reversible() {
        for d in [trefoil(), LinkDiagram::unlink(2), parse_pd("X[1,1,2,2] U").unwrap()] {
            for site in enumerate_moves(&d, &[MoveKind::R2Add]) {
                let e = apply_move(&d, &site).unwrap();
                assert!(e.is_planar(), "{site}");
                assert_eq!(total_writhe(&e), total_writhe(&d));
                assert_eq!(e.component_count(), d.component_count());
                let back = enumerate_moves(&e, &[MoveKind::R2Remove]);
                assert!(
                    back.iter().any(|b| apply_move(&e, b).unwrap().same_as(&d)),
                    "{site}"
                );
            }
        }
    }

    #[test]
    fn r2_remove_sites_invert() {
        let d = parse_pd("X[1,1,2,2] U").unwrap();
        for site in enumerate_moves(&d, &[MoveKind::R2Add]) {
            let e = apply_move(&d, &site).unwrap();
            for r in enumerate_moves(&e, &[MoveKind::R2Remove]) {
                let f = apply_move(&e, &r).unwrap();
                assert!(f.is_planar());
                let again = enumerate_moves(&f, &[MoveKind::R2Add]);
                assert!(again.iter().any(|a| apply_move(&f, a).unwrap().same_as(&e)), "{site} {r}");
            }
        }
    }

    #[test]
    fn r3_on_a_triangle() {
        // push a strand over two strands of a crossing: build via R2 moves
        let t = trefoil();
        let mut found = false;
        for site in enumerate_moves(&t, &[MoveKind::R2Add]) {
            let e = apply_move(&t, &site).unwrap();
            for r in enumerate_moves(&e, &[MoveKind::R3]) {
                found = true;
                let f = apply_move(&e, &r).unwrap();
                assert!(f.is_planar(), "{site} {r}");
                assert_eq!(total_writhe(&f), total_writhe(&e));
                let back = enumerate_moves(&f, &[MoveKind::R3]);
                assert!(back.iter().any(|b| apply_move(&f, b).unwrap().same_as(&e)), "{site} {r}");
            }
        }
        assert!(found);
    }

    #[test]
    fn stale_sites_are_rejected() {
        let t = trefoil();
        let site = MoveSite {
            kind: MoveKind::R1Remove,
            anchor: Anchor::Crossing { crossing: 0 },
            handedness: Some(Handedness::RightKink),
        };
        assert_eq!(apply_move(&t, &site).unwrap_err().code(), "StaleSite");
        let site = MoveSite {
            kind: MoveKind::R1Add,
            anchor: Anchor::Arc { arc: ArcRef::Label(40) },
            handedness: Some(Handedness::RightKink),
        };
        assert_eq!(apply_move(&t, &site).unwrap_err().code(), "StaleSite");
    }

    #[test]
    fn site_json() {
        let site = MoveSite {
            kind: MoveKind::Fr1Add,
            anchor: Anchor::Arc { arc: ArcRef::Label(3) },
            handedness: Some(Handedness::RightKink),
        };
        let j = serde_json::to_string(&site).unwrap();
        assert_eq!(j, r#"{"kind":"FR1_add","anchor":{"type":"arc","arc":{"label":3}},"handedness":"right_kink"}"#);
        assert_eq!(serde_json::from_str::<MoveSite>(&j).unwrap(), site);
        assert_eq!("r2_add".parse::<MoveKind>().unwrap(), MoveKind::R2Add);
    }
}
