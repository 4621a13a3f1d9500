//! Canonical relabeling.
//!
//! Each connected piece of the diagram is labeled by a breadth-first walk:
//! starting from a chosen arc, its component is numbered consecutively along
//! the orientation, and every component met at a crossing is queued with the
//! arc leaving that crossing as its start. The piece's label is the smallest
//! sorted crossing list over all start arcs. Pieces are then ordered by that
//! list and numbered one after another; crossing-free loops stay a count.

use std::collections::{HashMap, HashSet, VecDeque};

use super::{Crossing, LinkDiagram};

type Key = Vec<Crossing>;

pub(super) fn canonicalize(d: &LinkDiagram) -> LinkDiagram {
    canonicalize_with_map(d).0
}

/// Canonical diagram plus the old-label to new-label map.
pub(super) fn canonicalize_with_map(d: &LinkDiagram) -> (LinkDiagram, HashMap<u32, u32>) {
    if d.crossings.is_empty() {
        return (d.clone(), HashMap::new());
    }
    let next = d.successors();
    let ends = d.arc_ends();
    let comp_of = d.component_of_arcs();
    let comps = d.trace_components();

    // pieces: connected groups of components
    let n_comp = comps.len() - d.unknotted_loops;
    let mut parent: Vec<usize> = (0..n_comp).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let n = p[y];
            p[y] = r;
            y = n;
        }
        r
    }
    for c in &d.crossings {
        let a = find(&mut parent, comp_of[&c.under_in()]);
        let b = find(&mut parent, comp_of[&c.over_in()]);
        parent[a] = b;
    }
    let mut pieces: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..n_comp {
        let r = find(&mut parent, i);
        pieces.entry(r).or_default().push(i);
    }

    // component -> does it ever pass under
    let mut passes_under = vec![false; n_comp];
    for c in &d.crossings {
        passes_under[comp_of[&c.under_in()]] = true;
    }

    let mut keyed: Vec<(Key, Vec<(u32, u32)>)> = Vec::new();
    for members in pieces.values() {
        let mut best: Option<(Key, HashMap<u32, u32>)> = None;
        for &ci in members {
            for &start in comps[ci].arcs() {
                let map = bfs_labels(d, start, &next, &ends, &comp_of, &comps);
                let map = fix_over_only_pairs(d, map, members, &comps, &passes_under, &ends);
                let key = relabeled_key(d, &map, members, &comp_of);
                if best.as_ref().is_none_or(|(k, _)| key < *k) {
                    best = Some((key, map));
                }
            }
        }
        let (key, map) = best.expect("piece has arcs");
        let mut pairs: Vec<(u32, u32)> = map.into_iter().collect();
        pairs.sort_unstable();
        keyed.push((key, pairs));
    }
    keyed.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));

    let mut offset = 0u32;
    let mut global: HashMap<u32, u32> = HashMap::new();
    for (_, pairs) in &keyed {
        for &(old, new) in pairs {
            global.insert(old, new + offset);
        }
        offset += pairs.len() as u32;
    }
    let mut crossings: Vec<Crossing> = d.crossings.iter().map(|c| c.relabeled(|l| global[&l])).collect();
    crossings.sort_unstable();
    let out = LinkDiagram {
        crossings,
        unknotted_loops: d.unknotted_loops,
    };
    (out, global)
}

fn bfs_labels(
    d: &LinkDiagram,
    start: u32,
    next: &HashMap<u32, u32>,
    ends: &HashMap<u32, super::ArcEnds>,
    comp_of: &HashMap<u32, usize>,
    comps: &[super::Component],
) -> HashMap<u32, u32> {
    let mut labels = HashMap::new();
    let mut queued = HashSet::new();
    let mut queue = VecDeque::new();
    queue.push_back(start);
    queued.insert(comp_of[&start]);
    let mut counter = 1u32;
    while let Some(s) = queue.pop_front() {
        let mut cur = s;
        let len = comps[comp_of[&s]].arcs().len();
        for _ in 0..len {
            labels.insert(cur, counter);
            counter += 1;
            let (k, slot) = ends[&cur].end;
            let c = &d.crossings[k];
            // the other strand at this crossing
            let other_out = if slot == 0 { c.over_out() } else { c.under_out() };
            let oc = comp_of[&other_out];
            if queued.insert(oc) {
                queue.push_back(other_out);
            }
            cur = next[&cur];
        }
    }
    labels
}

/// Two-arc components that never pass under have no orientation visible from
/// label succession; give the smaller label to the arc ending at the crossing
/// with the smaller incoming under-label so the text form re-parses to the
/// same orientation.
fn fix_over_only_pairs(
    d: &LinkDiagram,
    mut map: HashMap<u32, u32>,
    members: &[usize],
    comps: &[super::Component],
    passes_under: &[bool],
    ends: &HashMap<u32, super::ArcEnds>,
) -> HashMap<u32, u32> {
    for &ci in members {
        let arcs = comps[ci].arcs();
        if passes_under[ci] || arcs.len() != 2 {
            continue;
        }
        let (x, y) = (arcs[0], arcs[1]);
        let (lx, ly) = (map[&x], map[&y]);
        let end_x = ends[&x].end.0;
        let end_y = ends[&y].end.0;
        let under_at = |k: usize| map[&d.crossings[k].under_in()];
        // the arc holding the smaller label must end at the crossing with smaller under-in
        let smaller_arc_end = if lx < ly { end_x } else { end_y };
        let other_end = if lx < ly { end_y } else { end_x };
        if under_at(smaller_arc_end) > under_at(other_end) {
            map.insert(x, ly);
            map.insert(y, lx);
        }
    }
    map
}

fn relabeled_key(
    d: &LinkDiagram,
    map: &HashMap<u32, u32>,
    members: &[usize],
    comp_of: &HashMap<u32, usize>,
) -> Key {
    let mut key: Vec<Crossing> = d
        .crossings
        .iter()
        .filter(|c| members.contains(&comp_of[&c.under_in()]))
        .map(|c| c.relabeled(|l| map[&l]))
        .collect();
    key.sort_unstable();
    key
}
