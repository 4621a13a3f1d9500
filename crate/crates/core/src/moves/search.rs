//! Bidirectional breadth-first search over the framed move graph.
//!
//! Nodes are canonical PD strings. Each layer is expanded in parallel and
//! merged in a fixed order, so results do not depend on the thread count.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{apply_unchecked, enumerate_moves, MoveKind, MoveSite};
use crate::codecs::serialize_pd;
use crate::diagram::LinkDiagram;
use crate::invariants::{component_writhes, linking_matrix, blackboard_framing, total_writhe};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_crossings: usize,
    pub max_depth: usize,
    /// Cap on stored nodes across both directions.
    pub max_nodes: usize,
}

impl Budget {
    pub const DEFAULT_DEPTH: usize = 12;
    pub const DEFAULT_NODES: usize = 200_000;

    /// Larger input plus four crossings, depth 12.
    pub fn for_inputs(d1: &LinkDiagram, d2: &LinkDiagram) -> Self {
        Budget {
            max_crossings: d1.crossing_count().max(d2.crossing_count()) + 4,
            max_depth: Self::DEFAULT_DEPTH,
            max_nodes: Self::DEFAULT_NODES,
        }
    }
}

/// One move; `site` refers to the canonical labeling of the previous diagram
/// (the canonical form of the first input for the first step) and `result`
/// is the canonical PD text after the move.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathStep {
    pub site: MoveSite,
    pub result: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SearchStats {
    pub visited: usize,
    pub depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Equivalence {
    Equivalent { path: Vec<PathStep>, stats: SearchStats },
    /// Inconclusive unless `reason` names an invariant obstruction.
    NotFound { reason: String, stats: SearchStats },
}

impl Equivalence {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Equivalence::Equivalent { .. })
    }
}

struct Node {
    diagram: LinkDiagram,
    parent: Option<(String, MoveSite)>,
}

struct Side {
    nodes: HashMap<String, Node>,
    frontier: Vec<String>,
    depth: usize,
}

impl Side {
    fn new(key: String, d: LinkDiagram) -> Self {
        let mut nodes = HashMap::new();
        nodes.insert(key.clone(), Node { diagram: d, parent: None });
        Side {
            nodes,
            frontier: vec![key],
            depth: 0,
        }
    }
}

fn obstruction(d1: &LinkDiagram, d2: &LinkDiagram) -> Option<&'static str> {
    if d1.component_count() != d2.component_count() {
        return Some("component count obstruction");
    }
    if total_writhe(d1) != total_writhe(d2) {
        return Some("writhe obstruction");
    }
    let sorted = |mut v: Vec<i64>| {
        v.sort_unstable();
        v
    };
    if sorted(component_writhes(d1)) != sorted(component_writhes(d2)) {
        return Some("framing obstruction");
    }
    let lks = |d: &LinkDiagram| match linking_matrix(&blackboard_framing(d)) {
        Ok(m) => sorted(m.off_diagonal().into_iter().flatten().collect()),
        Err(_) => Vec::new(),
    };
    if lks(d1) != lks(d2) {
        return Some("linking obstruction");
    }
    None
}

/// Framed equivalence on the current rayon pool.
pub fn framed_equivalent(d1: &LinkDiagram, d2: &LinkDiagram, budget: Budget) -> Equivalence {
    let k1 = serialize_pd(d1);
    let k2 = serialize_pd(d2);
    if k1 == k2 {
        return Equivalence::Equivalent {
            path: Vec::new(),
            stats: SearchStats { visited: 1, depth: 0 },
        };
    }
    if let Some(reason) = obstruction(d1, d2) {
        return Equivalence::NotFound {
            reason: reason.into(),
            stats: SearchStats::default(),
        };
    }
    let mut fwd = Side::new(k1, d1.canonical());
    let mut bwd = Side::new(k2, d2.canonical());
    loop {
        let stats = SearchStats {
            visited: fwd.nodes.len() + bwd.nodes.len(),
            depth: fwd.depth + bwd.depth,
        };
        if stats.depth >= budget.max_depth {
            return not_found("depth budget exhausted", stats);
        }
        if stats.visited >= budget.max_nodes {
            return not_found("node budget exhausted", stats);
        }
        if fwd.frontier.is_empty() || bwd.frontier.is_empty() {
            return not_found("move graph exhausted within the crossing budget", stats);
        }
        let forward = fwd.frontier.len() <= bwd.frontier.len();
        let (this, other) = if forward { (&mut fwd, &bwd) } else { (&mut bwd, &fwd) };
        if let Some(meet) = expand(this, other, budget) {
            let stats = SearchStats {
                visited: fwd.nodes.len() + bwd.nodes.len(),
                depth: fwd.depth + bwd.depth,
            };
            return match reconstruct(&fwd, &bwd, &meet) {
                Some(path) => Equivalence::Equivalent { path, stats },
                None => not_found("path reconstruction failed", stats),
            };
        }
    }
}

/// Runs [`framed_equivalent`] on a dedicated pool with `threads` workers
/// (0 picks rayon's default).
pub fn framed_equivalent_with(d1: &LinkDiagram, d2: &LinkDiagram, budget: Budget, threads: usize) -> Equivalence {
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(|| framed_equivalent(d1, d2, budget)),
        Err(_) => framed_equivalent(d1, d2, budget),
    }
}

fn not_found(reason: &str, stats: SearchStats) -> Equivalence {
    Equivalence::NotFound {
        reason: reason.into(),
        stats,
    }
}

/// Expands one layer of `this`; returns a key seen by both sides.
fn expand(this: &mut Side, other: &Side, budget: Budget) -> Option<String> {
    let layer: Vec<Vec<(String, LinkDiagram, MoveSite)>> = this
        .frontier
        .par_iter()
        .map(|key| {
            let d = &this.nodes[key].diagram;
            enumerate_moves(d, &MoveKind::FRAMED)
                .into_iter()
                .filter(|m| (d.crossing_count() as i64 + m.kind.crossing_delta()) as usize <= budget.max_crossings)
                .filter_map(|m| {
                    let e = apply_unchecked(d, &m).ok()?;
                    let c = e.canonical();
                    Some((serialize_pd(&c), c, m))
                })
                .collect()
        })
        .collect();
    let mut next = Vec::new();
    let mut meet = None;
    for (parent, children) in this.frontier.iter().zip(layer) {
        for (key, diagram, site) in children {
            if this.nodes.contains_key(&key) {
                continue;
            }
            this.nodes.insert(
                key.clone(),
                Node {
                    diagram,
                    parent: Some((parent.clone(), site)),
                },
            );
            if meet.is_none() && other.nodes.contains_key(&key) {
                meet = Some(key.clone());
            }
            next.push(key);
        }
    }
    this.depth += 1;
    // smaller diagrams first
    next.sort_by_cached_key(|k| (this.nodes[k].diagram.crossing_count(), k.clone()));
    this.frontier = next;
    meet
}

fn reconstruct(fwd: &Side, bwd: &Side, meet: &str) -> Option<Vec<PathStep>> {
    let mut path = Vec::new();
    let mut key = meet.to_string();
    while let Some((parent, site)) = &fwd.nodes[&key].parent {
        path.push(PathStep {
            site: site.clone(),
            result: key.clone(),
        });
        key = parent.clone();
    }
    path.reverse();
    // backward tree edges run toward the meeting point; invert each one
    let mut key = meet.to_string();
    while let Some((parent, _)) = &bwd.nodes[&key].parent {
        let d = &bwd.nodes[&key].diagram;
        let site = enumerate_moves(d, &MoveKind::FRAMED).into_iter().find(|m| {
            apply_unchecked(d, m)
                .map(|e| serialize_pd(&e) == *parent)
                .unwrap_or(false)
        })?;
        path.push(PathStep {
            site,
            result: parent.clone(),
        });
        key = parent.clone();
    }
    Some(path)
}
