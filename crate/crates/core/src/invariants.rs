//! Crossing signs, writhe, linking numbers and the framed-link model.
//!
//! A framing is stored as the integer of the `(K, n)` model, one per
//! component. Diagrams without explicit framings get the blackboard framing,
//! whose integer on each component is that component's writhe.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{ComponentId, Crossing, DiagramError, LinkDiagram, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("linking number needs two distinct components (got {0} twice)")]
    SameComponent(ComponentId),
    #[error("signed crossing count {sum} between components {first} and {second} is odd (non-planar code)")]
    OddCrossingSum {
        first: ComponentId,
        second: ComponentId,
        sum: i64,
    },
    #[error("{found} framings given for {expected} components")]
    FramingCount { expected: usize, found: usize },
}

impl InvariantError {
    pub fn code(&self) -> &'static str {
        match self {
            InvariantError::Diagram(e) => e.code(),
            InvariantError::SameComponent(_) => "SameComponent",
            InvariantError::OddCrossingSum { .. } => "OddCrossingSum",
            InvariantError::FramingCount { .. } => "FramingCount",
        }
    }
}

/// A diagram with one framing integer per component (canonical order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramedLink {
    diagram: LinkDiagram,
    framings: Vec<i64>,
}

impl FramedLink {
    pub fn new(diagram: LinkDiagram, framings: Vec<i64>) -> Result<Self, InvariantError> {
        let expected = diagram.component_count();
        if framings.len() != expected {
            return Err(InvariantError::FramingCount {
                expected,
                found: framings.len(),
            });
        }
        Ok(FramedLink { diagram, framings })
    }

    pub fn diagram(&self) -> &LinkDiagram {
        &self.diagram
    }

    pub fn framings(&self) -> &[i64] {
        &self.framings
    }

    pub fn into_parts(self) -> (LinkDiagram, Vec<i64>) {
        (self.diagram, self.framings)
    }
}

/// Symmetric integer matrix: linking numbers off the diagonal, framings on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LinkingMatrix(Vec<Vec<i64>>);

impl LinkingMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        LinkingMatrix(rows)
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.0
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.size()).map(|i| self.0[i][i]).collect()
    }

    pub fn off_diagonal(&self) -> Vec<Vec<i64>> {
        let mut m = self.0.clone();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 0;
        }
        m
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| self.0[i].len() == n && (0..n).all(|j| self.0[i][j] == self.0[j][i]))
    }
}

pub fn crossing_sign(d: &LinkDiagram, k: usize) -> Result<Sign, DiagramError> {
    Ok(d.crossing(k)?.sign())
}

/// Sum of signs over self-crossings of component `c`.
pub fn writhe(d: &LinkDiagram, c: ComponentId) -> Result<i64, DiagramError> {
    d.check_component(c)?;
    Ok(d
        .crossing_components()
        .iter()
        .zip(d.crossings())
        .filter(|((u, o), _)| *u == c && *o == c)
        .map(|(_, x)| x.sign().value())
        .sum())
}

pub fn component_writhes(d: &LinkDiagram) -> Vec<i64> {
    let mut w = vec![0; d.component_count()];
    for ((u, o), x) in d.crossing_components().iter().zip(d.crossings()) {
        if u == o {
            w[u.0] += x.sign().value();
        }
    }
    w
}

pub fn total_writhe(d: &LinkDiagram) -> i64 {
    d.crossings().iter().map(|c| c.sign().value()).sum()
}

/// Half the signed count of crossings between `c1` and `c2`.
pub fn linking_number(d: &LinkDiagram, c1: ComponentId, c2: ComponentId) -> Result<i64, InvariantError> {
    d.check_component(c1)?;
    d.check_component(c2)?;
    if c1 == c2 {
        return Err(InvariantError::SameComponent(c1));
    }
    let sum: i64 = d
        .crossing_components()
        .iter()
        .zip(d.crossings())
        .filter(|((u, o), _)| (*u == c1 && *o == c2) || (*u == c2 && *o == c1))
        .map(|(_, x)| x.sign().value())
        .sum();
    if sum % 2 != 0 {
        return Err(InvariantError::OddCrossingSum {
            first: c1,
            second: c2,
            sum,
        });
    }
    Ok(sum / 2)
}

/// Off-diagonal linking numbers of a diagram, with `diagonal` on the diagonal.
fn matrix_with_diagonal(d: &LinkDiagram, diagonal: &[i64]) -> Result<LinkingMatrix, InvariantError> {
    let n = d.component_count();
    let mut sums = vec![vec![0i64; n]; n];
    for ((u, o), x) in d.crossing_components().iter().zip(d.crossings()) {
        if u != o {
            sums[u.0][o.0] += x.sign().value();
            sums[o.0][u.0] += x.sign().value();
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && sums[i][j] % 2 != 0 {
                return Err(InvariantError::OddCrossingSum {
                    first: ComponentId(i.min(j)),
                    second: ComponentId(i.max(j)),
                    sum: sums[i][j],
                });
            }
        }
    }
    let rows = (0..n)
        .map(|i| (0..n).map(|j| if i == j { diagonal[i] } else { sums[i][j] / 2 }).collect())
        .collect();
    Ok(LinkingMatrix(rows))
}

pub fn linking_matrix(fl: &FramedLink) -> Result<LinkingMatrix, InvariantError> {
    matrix_with_diagonal(&fl.diagram, &fl.framings)
}

pub fn blackboard_framing(d: &LinkDiagram) -> FramedLink {
    FramedLink {
        diagram: d.clone(),
        framings: component_writhes(d),
    }
}

/// A diagram with one component doubled, and where the two copies ended up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pushoff {
    pub diagram: LinkDiagram,
    pub original: ComponentId,
    pub copy: ComponentId,
}

/// Doubles component `c` along the blackboard direction: a parallel copy
/// runs just to the right of every arc of `c`. Each self-crossing of `c`
/// becomes four crossings of the same sign and each crossing of `c` with
/// another strand becomes two.
///
/// The copy is a new traced component placed after all existing traced
/// components (or a new trailing loop when `c` is crossing-free), so loops
/// following it shift by one index.
pub fn pushoff(d: &LinkDiagram, c: ComponentId) -> Result<Pushoff, InvariantError> {
    d.check_component(c)?;
    let comps = d.trace_components();
    let traced = comps.iter().filter(|x| !x.arcs().is_empty()).count();
    if comps[c.0].arcs().is_empty() {
        let diagram = LinkDiagram::from_crossings(d.crossings().to_vec(), d.unknotted_loops() + 1)?;
        return Ok(Pushoff {
            diagram,
            original: c,
            copy: ComponentId(d.component_count()),
        });
    }
    let on_c: HashSet<u32> = comps[c.0].arcs().iter().copied().collect();
    let off = d.labels().last().copied().unwrap_or(0);
    let copy = |l: u32| l + off;
    let mut fresh = 2 * off;
    let mut next_fresh = || {
        fresh += 1;
        fresh
    };

    let mut out = Vec::new();
    for x in d.crossings() {
        let u_in = on_c.contains(&x.under_in());
        let o_in = on_c.contains(&x.over_in());
        if !u_in && !o_in {
            out.push(*x);
            continue;
        }
        // Local model: under strand runs north along x = 0, over strand
        // runs along y = 0 eastward (positive) or westward (negative).
        // Copies sit to the right of their strand.
        let dx: i32 = if x.sign() == Sign::Positive { 1 } else { -1 };
        let mut unders = vec![(0i32, x.under_in(), x.under_out())];
        if u_in {
            unders.push((1, copy(x.under_in()), copy(x.under_out())));
        }
        let mut overs = vec![(0i32, x.over_in(), x.over_out())];
        if o_in {
            overs.push((-dx, copy(x.over_in()), copy(x.over_out())));
        }
        // arc sequences along each strand through the cluster
        let seq = |n: usize, inc: u32, outc: u32, next: &mut dyn FnMut() -> u32| {
            let mut s = vec![inc];
            for _ in 1..n {
                s.push(next());
            }
            s.push(outc);
            s
        };
        let under_seqs: Vec<Vec<u32>> = unders
            .iter()
            .map(|&(_, i, o)| seq(overs.len(), i, o, &mut next_fresh))
            .collect();
        let over_seqs: Vec<Vec<u32>> = overs
            .iter()
            .map(|&(_, i, o)| seq(unders.len(), i, o, &mut next_fresh))
            .collect();
        for (ui, &(ux, _, _)) in unders.iter().enumerate() {
            for (oi, &(oy, _, _)) in overs.iter().enumerate() {
                // position of this crossing along each strand
                let along_u = overs.iter().filter(|&&(y, _, _)| y < oy).count();
                let along_o = unders.iter().filter(|&&(xx, _, _)| xx * dx < ux * dx).count();
                let us = &under_seqs[ui];
                let os = &over_seqs[oi];
                out.push(Crossing::from_roles(
                    us[along_u],
                    us[along_u + 1],
                    os[along_o],
                    os[along_o + 1],
                    x.sign(),
                ));
            }
        }
    }
    let diagram = LinkDiagram::from_crossings(out, d.unknotted_loops())?;
    Ok(Pushoff {
        diagram,
        original: c,
        copy: ComponentId(traced),
    })
}

/// Crossings of `d` whose two strands both lie on `c`.
pub fn self_crossings(d: &LinkDiagram, c: ComponentId) -> Vec<usize> {
    d.crossing_components()
        .iter()
        .enumerate()
        .filter(|(_, (u, o))| *u == c && *o == c)
        .map(|(k, _)| k)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codecs::parse_pd;

    fn trefoil() -> LinkDiagram {
        parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap()
    }

    fn figure_eight() -> LinkDiagram {
        parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]").unwrap()
    }

    fn positive_hopf() -> LinkDiagram {
        let g: crate::codecs::GaussCode = "O1+ U2+ | U1+ O2+".parse().unwrap();
        crate::codecs::gauss_to_diagram(&g).unwrap()
    }

    #[test]
    fn kink_signs() {
        let p = parse_pd("X[1,1,2,2]").unwrap();
        let n = parse_pd("X[1,2,2,1]").unwrap();
        assert_eq!(crossing_sign(&p, 0).unwrap(), Sign::Positive);
        assert_eq!(crossing_sign(&n, 0).unwrap(), Sign::Negative);
        assert_eq!(crossing_sign(&p, 1).unwrap_err().code(), "IndexOutOfRange");
    }

    #[test]
    fn writhes() {
        assert_eq!(total_writhe(&LinkDiagram::unknot()), 0);
        assert_eq!(writhe(&trefoil(), ComponentId(0)).unwrap(), -3);
        assert_eq!(total_writhe(&figure_eight()), 0);
        let signs: Vec<i64> = figure_eight().crossings().iter().map(|c| c.sign().value()).collect();
        assert_eq!(signs.iter().filter(|&&s| s == 1).count(), 2);
    }

    #[test]
    fn linking_numbers() {
        let unlink = LinkDiagram::unlink(2);
        assert_eq!(linking_number(&unlink, ComponentId(0), ComponentId(1)).unwrap(), 0);
        let h = positive_hopf();
        assert_eq!(linking_number(&h, ComponentId(0), ComponentId(1)).unwrap(), 1);
        assert_eq!(linking_number(&h, ComponentId(1), ComponentId(0)).unwrap(), 1);
        assert!(matches!(
            linking_number(&h, ComponentId(1), ComponentId(1)),
            Err(InvariantError::SameComponent(_))
        ));
        let r = h.reverse_component(ComponentId(1)).unwrap();
        assert_eq!(linking_number(&r, ComponentId(0), ComponentId(1)).unwrap(), -1);
    }

    #[test]
    fn matrices() {
        let u = FramedLink::new(LinkDiagram::unknot(), vec![0]).unwrap();
        assert_eq!(linking_matrix(&u).unwrap().rows(), &[vec![0]]);
        let u5 = FramedLink::new(LinkDiagram::unknot(), vec![5]).unwrap();
        assert_eq!(linking_matrix(&u5).unwrap().rows(), &[vec![5]]);
        let bb = blackboard_framing(&positive_hopf());
        assert_eq!(linking_matrix(&bb).unwrap().rows(), &[vec![0, 1], vec![1, 0]]);
        assert!(FramedLink::new(LinkDiagram::unknot(), vec![]).is_err());
        assert_eq!(blackboard_framing(&trefoil()).framings(), &[-3]);
        assert_eq!(blackboard_framing(&figure_eight()).framings(), &[0]);
        assert_eq!(blackboard_framing(&LinkDiagram::unknot()).framings(), &[0]);
    }

    #[test]
    fn pushoff_of_unknot_and_kink() {
        let p = pushoff(&LinkDiagram::unknot(), ComponentId(0)).unwrap();
        assert_eq!(p.diagram.component_count(), 2);
        assert_eq!(linking_number(&p.diagram, p.original, p.copy).unwrap(), 0);

        let k = parse_pd("X[1,1,2,2]").unwrap();
        let p = pushoff(&k, ComponentId(0)).unwrap();
        assert_eq!(p.diagram.crossing_count(), 4);
        assert!(p.diagram.is_planar());
        assert_eq!(linking_number(&p.diagram, p.original, p.copy).unwrap(), 1);
    }

    #[test]
    fn pushoff_of_trefoil_links_by_writhe() {
        let t = trefoil();
        let p = pushoff(&t, ComponentId(0)).unwrap();
        assert_eq!(p.diagram.crossing_count(), 12);
        assert!(p.diagram.is_planar());
        assert_eq!(linking_number(&p.diagram, p.original, p.copy).unwrap(), -3);
        assert_eq!(writhe(&p.diagram, p.copy).unwrap(), -3);
    }

    #[test]
    fn pushoff_in_a_link() {
        let h = positive_hopf();
        let p = pushoff(&h, ComponentId(0)).unwrap();
        assert_eq!(p.diagram.crossing_count(), 4);
        assert!(p.diagram.is_planar());
        assert_eq!(linking_number(&p.diagram, p.original, p.copy).unwrap(), 0);
        assert_eq!(linking_number(&p.diagram, p.copy, ComponentId(1)).unwrap(), 1);
    }
}
