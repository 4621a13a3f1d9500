//! Signed Gauss codes.
//!
//! Text form: visits such as `O1+ U2-` separated by whitespace, components
//! separated by `|`, and `o` standing for a crossing-free component. Each
//! crossing is visited twice, once over and once under, with the same sign.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::CodecError;
use crate::diagram::{Crossing, LinkDiagram, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Visit {
    pub crossing: u32,
    pub over: bool,
    pub sign: Sign,
}

impl fmt::Display for Visit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ou = if self.over { 'O' } else { 'U' };
        let s = if self.sign == Sign::Positive { '+' } else { '-' };
        write!(f, "{ou}{}{s}", self.crossing)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GaussCode {
    /// One cyclic word per component; an empty word is a crossing-free loop.
    pub components: Vec<Vec<Visit>>,
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, comp) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            if comp.is_empty() {
                f.write_str("o")?;
            }
            for (j, v) in comp.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for GaussCode {
    type Err = CodecError;

    fn from_str(text: &str) -> Result<Self, CodecError> {
        if text.trim().is_empty() {
            return Ok(GaussCode::default());
        }
        let mut components = Vec::new();
        let mut col = 1;
        for part in text.split('|') {
            let mut comp = Vec::new();
            let mut words = 0;
            let mut offset = 0;
            for tok in part.split(|c: char| c.is_whitespace() || c == ',') {
                let tcol = col + offset;
                offset += tok.chars().count() + 1;
                if tok.is_empty() {
                    continue;
                }
                words += 1;
                if tok == "o" {
                    continue;
                }
                comp.push(parse_visit(tok, tcol)?);
            }
            if words == 0 {
                return Err(CodecError::Syntax {
                    line: 1,
                    col,
                    message: "empty component (write 'o' for a crossing-free loop)".into(),
                });
            }
            col += part.chars().count() + 1;
            components.push(comp);
        }
        Ok(GaussCode { components })
    }
}

fn parse_visit(tok: &str, col: usize) -> Result<Visit, CodecError> {
    let err = |m: &str| CodecError::Syntax {
        line: 1,
        col,
        message: format!("{m} in '{tok}'"),
    };
    let mut chars = tok.chars();
    let over = match chars.next() {
        Some('O' | 'o') => true,
        Some('U' | 'u') => false,
        _ => return Err(err("expected O or U")),
    };
    let rest: String = chars.collect();
    let (num, sign) = match rest.chars().last() {
        Some('+') => (&rest[..rest.len() - 1], Sign::Positive),
        Some('-') => (&rest[..rest.len() - 1], Sign::Negative),
        Some('\u{2212}') => (&rest[..rest.len() - '\u{2212}'.len_utf8()], Sign::Negative),
        _ => return Err(err("expected trailing sign")),
    };
    let crossing: u32 = num.parse().map_err(|_| err("expected crossing number"))?;
    if crossing == 0 {
        return Err(err("crossing numbers start at 1"));
    }
    Ok(Visit { crossing, over, sign })
}

pub fn gauss_to_diagram(g: &GaussCode) -> Result<LinkDiagram, CodecError> {
    #[derive(Default)]
    struct Ends {
        under: Option<(u32, u32, Sign)>,
        over: Option<(u32, u32, Sign)>,
        visits: usize,
    }
    let mut table: BTreeMap<u32, Ends> = BTreeMap::new();
    let mut base = 1u32;
    let mut loops = 0;
    for comp in &g.components {
        let m = comp.len() as u32;
        if m == 0 {
            loops += 1;
            continue;
        }
        for (i, v) in comp.iter().enumerate() {
            let i = i as u32;
            let inc = base + i;
            let out = base + (i + 1) % m;
            let e = table.entry(v.crossing).or_default();
            e.visits += 1;
            let slot = if v.over { &mut e.over } else { &mut e.under };
            if slot.is_some() {
                return Err(CodecError::UnpairedCrossing { crossing: v.crossing });
            }
            *slot = Some((inc, out, v.sign));
        }
        base += m;
    }
    let mut crossings = Vec::new();
    for (&k, e) in &table {
        let (Some((ui, uo, us)), Some((oi, oo, os))) = (e.under, e.over) else {
            return Err(CodecError::UnpairedCrossing { crossing: k });
        };
        if e.visits != 2 {
            return Err(CodecError::UnpairedCrossing { crossing: k });
        }
        if us != os {
            return Err(CodecError::SignMismatch { crossing: k });
        }
        crossings.push(Crossing::from_roles(ui, uo, oi, oo, us));
    }
    Ok(LinkDiagram::from_crossings(crossings, loops)?)
}

/// Gauss code in component trace order, each word starting at the end of
/// the component's smallest arc, crossings numbered by first visit.
pub fn diagram_to_gauss(d: &LinkDiagram) -> GaussCode {
    let ends = d.arc_ends();
    let mut numbering: BTreeMap<usize, u32> = BTreeMap::new();
    let mut components = Vec::new();
    for comp in d.trace_components() {
        let mut word = Vec::new();
        for a in comp.arcs() {
            let (k, slot) = ends[a].end;
            let next = numbering.len() as u32 + 1;
            let n = *numbering.entry(k).or_insert(next);
            word.push(Visit {
                crossing: n,
                over: slot != 0,
                sign: d.crossings()[k].sign(),
            });
        }
        components.push(word);
    }
    GaussCode { components }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codecs::parse_pd;

    #[test]
    fn empty_code_is_empty_link() {
        let g: GaussCode = "".parse().unwrap();
        assert!(gauss_to_diagram(&g).unwrap().is_empty());
        assert_eq!(diagram_to_gauss(&LinkDiagram::empty()).to_string(), "");
    }

    #[test]
    fn positive_trefoil() {
        let g: GaussCode = "O1+ U2+ O3+ U1+ O2+ U3+".parse().unwrap();
        let d = gauss_to_diagram(&g).unwrap();
        assert_eq!((d.crossing_count(), d.component_count()), (3, 1));
        assert!(d.crossings().iter().all(|c| c.sign() == Sign::Positive));
        assert!(d.is_planar());
        // the all-negative word is the PD trefoil
        let neg: GaussCode = "O1- U2- O3- U1- O2- U3-".parse().unwrap();
        let pd = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        assert!(gauss_to_diagram(&neg).unwrap().same_as(&pd));
        assert!(d.same_as(&pd.mirror()));
    }

    #[test]
    fn hopf_and_loops() {
        let g: GaussCode = "O1+ U2+ | U1+ O2+ | o".parse().unwrap();
        let d = gauss_to_diagram(&g).unwrap();
        assert_eq!(d.component_count(), 3);
        assert_eq!(d.unknotted_loops(), 1);
        assert_eq!(diagram_to_gauss(&d), g);
        assert_eq!(g.to_string(), "O1+ U2+ | U1+ O2+ | o");
    }

    #[test]
    fn pairing_errors() {
        let g: GaussCode = "O1+ U2+ O3+ U1+ O2+".parse().unwrap();
        assert!(matches!(gauss_to_diagram(&g), Err(CodecError::UnpairedCrossing { crossing: 3 })));
        let g: GaussCode = "O1+ O1+".parse().unwrap();
        assert!(matches!(gauss_to_diagram(&g), Err(CodecError::UnpairedCrossing { crossing: 1 })));
        let g: GaussCode = "O1+ U1-".parse().unwrap();
        assert!(matches!(gauss_to_diagram(&g), Err(CodecError::SignMismatch { crossing: 1 })));
        assert!("O1 U1+".parse::<GaussCode>().is_err());
        assert!("O1+ |  | U1+".parse::<GaussCode>().is_err());
        assert!("O1\u{2212} U1\u{2212}".parse::<GaussCode>().is_ok());
    }
}
