//! Surgery descriptions: per-component coefficients on a link diagram,
//! recognition of surgery on a crossing-free unknot, and first homology
//! from the linking matrix.

mod snf;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use snf::smith_diagonal;

use crate::codecs::{CodecError, FramedLinkDoc};
use crate::diagram::LinkDiagram;
use crate::invariants::{linking_matrix, FramedLink, InvariantError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurgeryError {
    #[error("0/0 is not a curve class")]
    ZeroClass,
    #[error("cannot parse surgery coefficient '{0}'")]
    CoefficientSyntax(String),
    #[error("{found} coefficients given for {expected} components")]
    CoefficientCount { expected: usize, found: usize },
    #[error("the inf coefficient is only accepted on a single crossing-free unknot")]
    InfiniteCoefficient,
    #[error("recognition needs a single crossing-free unknot")]
    NotAnUnknotDescription,
    #[error("first homology needs integer coefficients")]
    NonIntegerCoefficients,
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Codec(#[from] CodecError),
}

impl SurgeryError {
    pub fn code(&self) -> &'static str {
        match self {
            SurgeryError::ZeroClass => "ZeroClass",
            SurgeryError::CoefficientSyntax(_) => "CoefficientSyntax",
            SurgeryError::CoefficientCount { .. } => "CoefficientCount",
            SurgeryError::InfiniteCoefficient => "InfiniteCoefficient",
            SurgeryError::NotAnUnknotDescription => "NotAnUnknotDescription",
            SurgeryError::NonIntegerCoefficients => "NonIntegerCoefficients",
            SurgeryError::Invariant(e) => e.code(),
            SurgeryError::Codec(e) => e.code(),
        }
    }
}

/// Lowest terms with `q >= 0` and the sign on `p`. `(±p, 0)` becomes
/// `(1, 0)`, the meridian filling.
pub fn normalize_coefficient(p: i64, q: i64) -> Result<(i64, i64), SurgeryError> {
    if p == 0 && q == 0 {
        return Err(SurgeryError::ZeroClass);
    }
    if q == 0 {
        return Ok((1, 0));
    }
    let g = p.gcd(&q);
    let (p, q) = (p / g, q / g);
    Ok(if q < 0 { (-p, -q) } else { (p, q) })
}

/// A surgery coefficient; text form `p/q`, `p` or `inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Coefficient {
    Rational { p: i64, q: i64 },
    Infinity,
}

impl Coefficient {
    pub fn new(p: i64, q: i64) -> Result<Self, SurgeryError> {
        Ok(match normalize_coefficient(p, q)? {
            (_, 0) => Coefficient::Infinity,
            (p, q) => Coefficient::Rational { p, q },
        })
    }

    pub fn integer(n: i64) -> Self {
        Coefficient::Rational { p: n, q: 1 }
    }

    pub fn as_integer(&self) -> Option<i64> {
        match self {
            Coefficient::Rational { p, q: 1 } => Some(*p),
            _ => None,
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Infinity => f.write_str("inf"),
            Coefficient::Rational { p, q: 1 } => write!(f, "{p}"),
            Coefficient::Rational { p, q } => write!(f, "{p}/{q}"),
        }
    }
}

impl FromStr for Coefficient {
    type Err = SurgeryError;

    fn from_str(s: &str) -> Result<Self, SurgeryError> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "\u{221e}" {
            return Ok(Coefficient::Infinity);
        }
        let bad = || SurgeryError::CoefficientSyntax(s.to_string());
        let num = |x: &str| x.trim().replace('\u{2212}', "-").parse::<i64>().map_err(|_| bad());
        match t.split_once('/') {
            Some((p, q)) => Coefficient::new(num(p)?, num(q)?),
            None => Ok(Coefficient::integer(num(t)?)),
        }
    }
}

impl TryFrom<String> for Coefficient {
    type Error = SurgeryError;

    fn try_from(s: String) -> Result<Self, SurgeryError> {
        s.parse()
    }
}

impl From<Coefficient> for String {
    fn from(c: Coefficient) -> String {
        c.to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryDescription {
    diagram: LinkDiagram,
    coefficients: Vec<Coefficient>,
}

impl SurgeryDescription {
    pub fn new(diagram: LinkDiagram, coefficients: Vec<Coefficient>) -> Result<Self, SurgeryError> {
        let expected = diagram.component_count();
        if coefficients.len() != expected {
            return Err(SurgeryError::CoefficientCount {
                expected,
                found: coefficients.len(),
            });
        }
        if coefficients.contains(&Coefficient::Infinity) && diagram != LinkDiagram::unknot() {
            return Err(SurgeryError::InfiniteCoefficient);
        }
        Ok(SurgeryDescription { diagram, coefficients })
    }

    /// Integer surgery: coefficient `n/1` for framing `n`.
    pub fn from_framed_link(fl: &FramedLink) -> Self {
        SurgeryDescription {
            diagram: fl.diagram().clone(),
            coefficients: fl.framings().iter().map(|&n| Coefficient::integer(n)).collect(),
        }
    }

    /// Reads explicit `coefficients` when present, else the framings.
    pub fn from_doc(doc: &FramedLinkDoc) -> Result<Self, SurgeryError> {
        match &doc.coefficients {
            Some(cs) => {
                let d = crate::codecs::parse_pd(&doc.pd)?;
                let cs = cs.iter().map(|c| c.parse()).collect::<Result<Vec<_>, _>>()?;
                SurgeryDescription::new(d, cs)
            }
            None => Ok(SurgeryDescription::from_framed_link(&doc.to_framed_link()?)),
        }
    }

    pub fn diagram(&self) -> &LinkDiagram {
        &self.diagram
    }

    pub fn coefficients(&self) -> &[Coefficient] {
        &self.coefficients
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ManifoldTag {
    S3,
    S2xS1,
    Lens { p: i64, q: i64 },
    Unknown,
}

impl fmt::Display for ManifoldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ManifoldTag::S3 => f.write_str("S3"),
            ManifoldTag::S2xS1 => f.write_str("S2xS1"),
            ManifoldTag::Lens { p, q } => write!(f, "L({p},{q})"),
            ManifoldTag::Unknown => f.write_str("Unknown"),
        }
    }
}

impl Serialize for ManifoldTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecognizedManifold {
    pub tag: ManifoldTag,
    pub evidence: String,
}

/// Names the manifold from surgery on a single crossing-free unknot.
pub fn recognize_unknot_surgery(s: &SurgeryDescription) -> Result<RecognizedManifold, SurgeryError> {
    if s.diagram != LinkDiagram::unknot() {
        return Err(SurgeryError::NotAnUnknotDescription);
    }
    let c = s.coefficients[0];
    let (tag, evidence) = match c {
        Coefficient::Infinity => (ManifoldTag::S3, "inf filling returns the meridian to itself".to_string()),
        Coefficient::Rational { p: 0, .. } => (ManifoldTag::S2xS1, "0-framed unknot".to_string()),
        Coefficient::Rational { p, .. } if p.abs() == 1 => (ManifoldTag::S3, format!("{c} surgery on the unknot")),
        Coefficient::Rational { p, q } => {
            let m = p.abs();
            (
                ManifoldTag::Lens { p: m, q: q.rem_euclid(m) },
                format!("{c} surgery on the unknot"),
            )
        }
    };
    Ok(RecognizedManifold { tag, evidence })
}

/// Like [`recognize_unknot_surgery`] but declines with `Unknown`.
pub fn recognize(s: &SurgeryDescription) -> RecognizedManifold {
    recognize_unknot_surgery(s).unwrap_or_else(|e| RecognizedManifold {
        tag: ManifoldTag::Unknown,
        evidence: e.to_string(),
    })
}

/// Finitely generated abelian group `Z^rank + Z/t1 + Z/t2 + ...`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl HomologyGroup {
    pub fn torsion_order(&self) -> u64 {
        self.torsion.iter().product()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// First homology of integer surgery, from the Smith form of the linking
/// matrix with the coefficients on the diagonal.
pub fn first_homology(s: &SurgeryDescription) -> Result<HomologyGroup, SurgeryError> {
    let framings = s
        .coefficients
        .iter()
        .map(|c| c.as_integer())
        .collect::<Option<Vec<i64>>>()
        .ok_or(SurgeryError::NonIntegerCoefficients)?;
    let fl = FramedLink::new(s.diagram.clone(), framings)?;
    let m = linking_matrix(&fl)?;
    let diag = smith_diagonal(m.rows());
    Ok(HomologyGroup {
        rank: diag.iter().filter(|&&d| d == 0).count(),
        torsion: diag.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codecs::{parse_pd, read_framed_link};

    fn unknot(c: &str) -> SurgeryDescription {
        SurgeryDescription::new(LinkDiagram::unknot(), vec![c.parse().unwrap()]).unwrap()
    }

    #[test]
    fn coefficient_normal_form() {
        assert_eq!(normalize_coefficient(-3, -1), Ok((3, 1)));
        assert_eq!(normalize_coefficient(4, 2), Ok((2, 1)));
        assert_eq!(normalize_coefficient(0, -5), Ok((0, 1)));
        assert_eq!(normalize_coefficient(0, 0), Err(SurgeryError::ZeroClass));
        assert_eq!("6/-4".parse::<Coefficient>().unwrap().to_string(), "-3/2");
        assert_eq!("inf".parse::<Coefficient>().unwrap(), Coefficient::Infinity);
        assert_eq!("1/0".parse::<Coefficient>().unwrap(), Coefficient::Infinity);
        assert_eq!("x".parse::<Coefficient>().unwrap_err().code(), "CoefficientSyntax");
    }

    #[test]
    fn from_framed_links() {
        let fl = read_framed_link(r#"{"pd": "U", "framings": [0]}"#).unwrap();
        assert_eq!(SurgeryDescription::from_framed_link(&fl).coefficients(), &[Coefficient::integer(0)]);
        let fl = read_framed_link(r#"{"pd": "U U", "framings": [2, 3]}"#).unwrap();
        let s = SurgeryDescription::from_framed_link(&fl);
        assert_eq!(s.coefficients()[1].to_string(), "3");
    }

    #[test]
    fn unknot_recognition() {
        assert_eq!(recognize(&unknot("0")).tag, ManifoldTag::S2xS1);
        assert_eq!(recognize(&unknot("inf")).tag, ManifoldTag::S3);
        assert_eq!(recognize(&unknot("-1")).tag, ManifoldTag::S3);
        assert_eq!(recognize(&unknot("1/7")).tag, ManifoldTag::S3);
        assert_eq!(recognize(&unknot("5/2")).tag, ManifoldTag::Lens { p: 5, q: 2 });
        assert_eq!(recognize(&unknot("-5/2")).tag, ManifoldTag::Lens { p: 5, q: 2 });
        assert_eq!(recognize(&unknot("7/9")).tag, ManifoldTag::Lens { p: 7, q: 2 });
        assert_eq!(ManifoldTag::Lens { p: 5, q: 2 }.to_string(), "L(5,2)");
        let k = SurgeryDescription::new(parse_pd("X[1,1,2,2]").unwrap(), vec![Coefficient::integer(1)]).unwrap();
        assert_eq!(recognize_unknot_surgery(&k).unwrap_err().code(), "NotAnUnknotDescription");
        assert_eq!(recognize(&k).tag, ManifoldTag::Unknown);
    }

    #[test]
    fn infinity_is_restricted() {
        let r = SurgeryDescription::new(LinkDiagram::unlink(2), vec![Coefficient::Infinity, Coefficient::integer(1)]);
        assert_eq!(r.unwrap_err().code(), "InfiniteCoefficient");
    }

    #[test]
    fn homology() {
        let h = first_homology(&unknot("0")).unwrap();
        assert_eq!((h.rank, h.torsion.clone()), (1, vec![]));
        assert_eq!(h.to_string(), "Z");
        assert_eq!(first_homology(&unknot("-5")).unwrap().torsion, vec![5]);
        assert_eq!(first_homology(&unknot("1")).unwrap().to_string(), "0");
        assert_eq!(first_homology(&unknot("5/2")).unwrap_err().code(), "NonIntegerCoefficients");
        // 0-framed Hopf link gives S3
        let hopf = read_framed_link(r#"{"pd": "X[4,1,3,2] X[2,3,1,4]", "framings": [0, 0]}"#).unwrap();
        let h = first_homology(&SurgeryDescription::from_framed_link(&hopf)).unwrap();
        assert_eq!(h.to_string(), "0");
    }

    #[test]
    fn coefficient_json() {
        let c: Vec<Coefficient> = serde_json::from_str(r#"["3/2", "inf", "-4"]"#).unwrap();
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"["3/2","inf","-4"]"#);
        let doc = FramedLinkDoc::from_json(r#"{"pd": "U", "coefficients": ["5/2"]}"#).unwrap();
        assert_eq!(recognize(&SurgeryDescription::from_doc(&doc).unwrap()).tag, ManifoldTag::Lens { p: 5, q: 2 });
    }
}
