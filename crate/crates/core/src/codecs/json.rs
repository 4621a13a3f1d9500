//! Framed-link JSON: `{"pd": "<PD text>", "framings": [int, ...]}`.
//!
//! Framings follow canonical component order. A missing `framings` field
//! means blackboard framing. Surgery input may also carry `coefficients`
//! as strings (`"p/q"`, `"p"`, `"inf"`); they are kept verbatim here.

use serde::{Deserialize, Serialize};

use super::{parse_pd, serialize_pd, CodecError};
use crate::invariants::{blackboard_framing, FramedLink};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FramedLinkDoc {
    pub pd: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub framings: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<String>>,
}

impl FramedLinkDoc {
    pub fn from_json(text: &str) -> Result<Self, CodecError> {
        serde_json::from_str(text).map_err(|e| CodecError::Json { message: e.to_string() })
    }

    pub fn to_framed_link(&self) -> Result<FramedLink, CodecError> {
        let d = parse_pd(&self.pd)?;
        match &self.framings {
            None => Ok(blackboard_framing(&d)),
            Some(f) => {
                let expected = d.component_count();
                if f.len() != expected {
                    return Err(CodecError::FramingCount { expected, found: f.len() });
                }
                Ok(FramedLink::new(d, f.clone()).expect("length checked"))
            }
        }
    }
}

pub fn read_framed_link(text: &str) -> Result<FramedLink, CodecError> {
    FramedLinkDoc::from_json(text)?.to_framed_link()
}

/// Canonical JSON for a framed link. Framings are re-ordered to follow the
/// canonical component order of the serialized PD text.
pub fn write_framed_link(fl: &FramedLink) -> String {
    let (canon, perm) = fl.diagram().canonical_with_components();
    let mut framings = vec![0; perm.len()];
    for (i, c) in perm.iter().enumerate() {
        framings[c.0] = fl.framings()[i];
    }
    let pd = serialize_pd(&canon);
    let doc = FramedLinkDoc {
        pd,
        framings: Some(framings),
        coefficients: None,
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}
