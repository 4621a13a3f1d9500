//! Faces of the 4-valent map underlying a PD code.
//!
//! A dart is a `(crossing, slot)` pair. Rotating a dart to the next slot
//! counterclockwise and then jumping to the other end of that slot's arc
//! walks a face boundary with the face on the right.

use std::collections::HashMap;

use super::LinkDiagram;

/// One edge of a face boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceEdge {
    pub arc: u32,
    /// True when the boundary walk follows the arc's orientation.
    pub forward: bool,
    pub from_crossing: usize,
    pub to_crossing: usize,
    /// Whether the arc is the over-strand at its `from` and `to` ends.
    pub over_at_from: bool,
    pub over_at_to: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub edges: Vec<FaceEdge>,
}

fn other_end(d: &LinkDiagram) -> HashMap<(usize, usize), (usize, usize)> {
    let mut by_label: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
    for (k, c) in d.crossings().iter().enumerate() {
        for (s, &l) in c.arcs().iter().enumerate() {
            by_label.entry(l).or_default().push((k, s));
        }
    }
    let mut out = HashMap::new();
    for v in by_label.values() {
        out.insert(v[0], v[1]);
        out.insert(v[1], v[0]);
    }
    out
}

pub(super) fn faces(d: &LinkDiagram) -> Vec<Face> {
    let alpha = other_end(d);
    let n = d.crossings().len();
    let mut seen = vec![[false; 4]; n];
    let mut out = Vec::new();
    for k0 in 0..n {
        for s0 in 0..4 {
            if seen[k0][s0] {
                continue;
            }
            let mut edges = Vec::new();
            let (mut k, mut s) = (k0, s0);
            loop {
                seen[k][s] = true;
                let leave = (k, (s + 1) % 4);
                let arrive = alpha[&leave];
                let c = &d.crossings()[leave.0];
                let label = c.arcs()[leave.1];
                edges.push(FaceEdge {
                    arc: label,
                    forward: !c.is_incoming_slot(leave.1),
                    from_crossing: leave.0,
                    to_crossing: arrive.0,
                    over_at_from: leave.1 % 2 == 1,
                    over_at_to: arrive.1 % 2 == 1,
                });
                (k, s) = arrive;
                if (k, s) == (k0, s0) {
                    break;
                }
            }
            out.push(Face { edges });
        }
    }
    out
}

/// Connected pieces of the crossing graph (crossing indices).
pub(crate) fn crossing_pieces(d: &LinkDiagram) -> Vec<Vec<usize>> {
    let alpha = other_end(d);
    let n = d.crossings().len();
    let mut piece = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if piece[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![start];
        piece[start] = id;
        let mut i = 0;
        while i < members.len() {
            let k = members[i];
            for s in 0..4 {
                let (m, _) = alpha[&(k, s)];
                if piece[m] == usize::MAX {
                    piece[m] = id;
                    members.push(m);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

pub(super) fn is_planar(d: &LinkDiagram) -> bool {
    if d.crossings().is_empty() {
        return true;
    }
    let pieces = crossing_pieces(d);
    let mut piece_of = vec![0; d.crossings().len()];
    for (i, p) in pieces.iter().enumerate() {
        for &k in p {
            piece_of[k] = i;
        }
    }
    let mut face_count = vec![0usize; pieces.len()];
    for f in faces(d) {
        face_count[piece_of[f.edges[0].from_crossing]] += 1;
    }
    // V - E + F = 2 with E = 2V on every piece
    pieces
        .iter()
        .zip(face_count)
        .all(|(p, f)| f == p.len() + 2)
}
