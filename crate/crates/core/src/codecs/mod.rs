//! Text encodings of diagrams: PD text, signed Gauss codes, DT codes, and
//! the framed-link JSON document.

mod dt;
mod gauss;
mod json;
mod pd;

use thiserror::Error;

use crate::diagram::DiagramError;

pub use dt::{diagram_to_dt, dt_to_diagram, dt_to_diagram_unique, DtCode, DtRealization, MAX_DT_CROSSINGS};
pub use gauss::{diagram_to_gauss, gauss_to_diagram, GaussCode, Visit};
pub use json::{read_framed_link, write_framed_link, FramedLinkDoc};
pub use pd::{parse_pd, parse_pd_file, serialize_pd};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("syntax error at {line}:{col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
    #[error("crossing at {line}:{col} has {found} arc labels (expected 4)")]
    ArcCount { line: usize, col: usize, found: usize },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("crossing {crossing} is not visited exactly once over and once under")]
    UnpairedCrossing { crossing: u32 },
    #[error("the two visits of crossing {crossing} carry different signs")]
    SignMismatch { crossing: u32 },
    #[error("invalid DT pairing: {message}")]
    InvalidPairing { message: String },
    #[error("DT code has {realizations} planar realizations up to reflection")]
    AmbiguousEmbedding { realizations: usize },
    #[error("DT code has no planar realization")]
    NotRealizable,
    #[error("{crossings} crossings exceeds the limit of {limit}")]
    TooLarge { crossings: usize, limit: usize },
    #[error("framed-link document: {message}")]
    Json { message: String },
    #[error("{found} framings given for {expected} components")]
    FramingCount { expected: usize, found: usize },
}

impl CodecError {
    pub fn code(&self) -> &'static str {
        match self {
            CodecError::Syntax { .. } => "SyntaxError",
            CodecError::ArcCount { .. } => "ArcCountError",
            CodecError::Diagram(e) => e.code(),
            CodecError::UnpairedCrossing { .. } => "UnpairedCrossing",
            CodecError::SignMismatch { .. } => "SignMismatch",
            CodecError::InvalidPairing { .. } => "InvalidPairing",
            CodecError::AmbiguousEmbedding { .. } => "AmbiguousEmbedding",
            CodecError::NotRealizable => "NotRealizable",
            CodecError::TooLarge { .. } => "TooLarge",
            CodecError::Json { .. } => "JsonError",
            CodecError::FramingCount { .. } => "FramingCount",
        }
    }
}
