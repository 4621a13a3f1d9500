//! Dowker–Thistlethwaite codes for knots.
//!
//! Walking the knot numbers the visits `1..=2n`; every crossing gets one odd
//! and one even number. The code lists, for the odd visits `1, 3, 5, ...`,
//! the even partner, negated when the strand passes over at the even visit.
//! The code fixes the Gauss word and over/under data only; the plane
//! embedding is recovered by searching crossing signs for a genus-zero
//! realization, with the crossing at visit 1 fixed positive to choose
//! between mirror images.

use std::fmt;
use std::str::FromStr;

use super::CodecError;
use crate::diagram::{Crossing, LinkDiagram, Sign};

/// Largest code accepted by the embedding search (2^(n-1) sign patterns).
pub const MAX_DT_CROSSINGS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DtCode {
    pub entries: Vec<i64>,
}

impl fmt::Display for DtCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for DtCode {
    type Err = CodecError;

    fn from_str(text: &str) -> Result<Self, CodecError> {
        let mut entries = Vec::new();
        let mut col = 1;
        for tok in text.split(|c: char| c.is_whitespace() || c == ',') {
            let tcol = col;
            col += tok.chars().count() + 1;
            if tok.is_empty() {
                continue;
            }
            let norm = tok.replace('\u{2212}', "-");
            let v: i64 = norm.parse().map_err(|_| CodecError::Syntax {
                line: 1,
                col: tcol,
                message: format!("expected a signed even integer, found '{tok}'"),
            })?;
            entries.push(v);
        }
        let code = DtCode { entries };
        code.check()?;
        Ok(code)
    }
}

impl DtCode {
    pub fn new(entries: Vec<i64>) -> Result<Self, CodecError> {
        let code = DtCode { entries };
        code.check()?;
        Ok(code)
    }

    fn check(&self) -> Result<(), CodecError> {
        let n = self.entries.len();
        let mut seen = vec![false; n];
        for &e in &self.entries {
            let a = e.unsigned_abs() as usize;
            if a == 0 || a % 2 == 1 || a > 2 * n || seen[a / 2 - 1] {
                return Err(CodecError::InvalidPairing {
                    message: format!("|{e}| is not an unused even number in 2..={}", 2 * n),
                });
            }
            seen[a / 2 - 1] = true;
        }
        Ok(())
    }
}

/// Result of realizing a DT code in the plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DtRealization {
    pub diagram: LinkDiagram,
    /// Number of planar sign patterns with the first crossing positive. More
    /// than one means the code does not pin down the diagram (composite
    /// knots, nugatory kinks); the lexicographically first pattern, reading
    /// positive before negative, is returned.
    pub planar_realizations: usize,
}

impl DtRealization {
    pub fn is_ambiguous(&self) -> bool {
        self.planar_realizations > 1
    }
}

/// Visit layout: for visit `v` (0-based) the crossing index and whether the
/// strand passes over there.
fn visits(code: &DtCode) -> Vec<(usize, bool)> {
    let n = code.entries.len();
    let mut out = vec![(0, false); 2 * n];
    for (k, &e) in code.entries.iter().enumerate() {
        let odd = 2 * k; // visit 2k+1, 0-based
        let even = e.unsigned_abs() as usize - 1;
        let even_over = e < 0;
        out[odd] = (k, !even_over);
        out[even] = (k, even_over);
    }
    out
}

fn build(layout: &[(usize, bool)], signs: &[Sign]) -> Vec<Crossing> {
    let m = layout.len() as u32;
    let n = signs.len();
    let mut under = vec![(0, 0); n];
    let mut over = vec![(0, 0); n];
    for (v, &(k, is_over)) in layout.iter().enumerate() {
        // arc v+1 ends at visit v; arc v+2 leaves it
        let inc = v as u32 + 1;
        let out = (v as u32 + 1) % m + 1;
        if is_over {
            over[k] = (inc, out);
        } else {
            under[k] = (inc, out);
        }
    }
    (0..n)
        .map(|k| Crossing::from_roles(under[k].0, under[k].1, over[k].0, over[k].1, signs[k]))
        .collect()
}

pub fn dt_to_diagram(code: &DtCode) -> Result<DtRealization, CodecError> {
    code.check()?;
    let n = code.entries.len();
    if n == 0 {
        return Ok(DtRealization {
            diagram: LinkDiagram::empty(),
            planar_realizations: 1,
        });
    }
    if n > MAX_DT_CROSSINGS {
        return Err(CodecError::TooLarge {
            crossings: n,
            limit: MAX_DT_CROSSINGS,
        });
    }
    let layout = visits(code);
    let mut first: Option<LinkDiagram> = None;
    let mut count = 0;
    for mask in 0u32..(1u32 << (n - 1)) {
        let signs: Vec<Sign> = (0..n)
            .map(|k| {
                if k > 0 && mask >> (n - 1 - k) & 1 == 1 {
                    Sign::Negative
                } else {
                    Sign::Positive
                }
            })
            .collect();
        let crossings = build(&layout, &signs);
        let d = LinkDiagram::from_crossings(crossings, 0)?;
        if d.is_planar() {
            count += 1;
            if first.is_none() {
                first = Some(d);
            }
        }
    }
    match first {
        Some(diagram) => Ok(DtRealization {
            diagram,
            planar_realizations: count,
        }),
        None => Err(CodecError::NotRealizable),
    }
}

/// Like [`dt_to_diagram`] but refuses codes with several planar realizations.
pub fn dt_to_diagram_unique(code: &DtCode) -> Result<LinkDiagram, CodecError> {
    let r = dt_to_diagram(code)?;
    if r.is_ambiguous() {
        Err(CodecError::AmbiguousEmbedding {
            realizations: r.planar_realizations,
        })
    } else {
        Ok(r.diagram)
    }
}

/// DT code of a knot diagram, walking from the start of its smallest arc.
pub fn diagram_to_dt(d: &LinkDiagram) -> Result<DtCode, CodecError> {
    let comps = d.trace_components();
    match comps.len() {
        0 => return Ok(DtCode::default()),
        1 => {}
        _ => {
            return Err(CodecError::InvalidPairing {
                message: "DT codes are supported for knots only".into(),
            })
        }
    }
    let arcs = comps[0].arcs();
    let ends = d.arc_ends();
    let n = d.crossing_count();
    let mut odd: Vec<Option<usize>> = vec![None; n];
    let mut even: Vec<Option<(usize, bool)>> = vec![None; n];
    for (i, a) in arcs.iter().enumerate() {
        let visit = i + 1;
        let (k, slot) = ends[a].end;
        let bucket_taken = if visit % 2 == 1 {
            odd[k].replace(visit).is_some()
        } else {
            even[k].replace((visit, slot != 0)).is_some()
        };
        if bucket_taken {
            return Err(CodecError::InvalidPairing {
                message: format!("crossing {k} is visited twice with the same parity"),
            });
        }
    }
    let mut pairs: Vec<(usize, i64)> = (0..n)
        .map(|k| {
            let o = odd[k].expect("every crossing visited once per parity");
            let (e, over) = even[k].expect("every crossing visited once per parity");
            (o, if over { -(e as i64) } else { e as i64 })
        })
        .collect();
    pairs.sort_unstable();
    Ok(DtCode {
        entries: pairs.into_iter().map(|p| p.1).collect(),
    })
}
