//! The JSON space document: `{"n": 2, "opens": [[], [0], [0, 1]]}`.
//!
//! Reading normalises to canonical form (sorted, deduplicated opens);
//! writing always emits canonical form, each open as an ascending point list.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mask::{SubsetMask, MASK_BITS};
use crate::space::FiniteSpace;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDocument {
    pub n: usize,
    pub opens: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl SpaceDocument {
    pub fn from_space(space: &FiniteSpace) -> Self {
        SpaceDocument {
            n: space.n(),
            opens: space.opens().iter().map(|u| u.to_vec()).collect(),
            name: None,
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn to_space(&self) -> Result<FiniteSpace> {
        let mut family = Vec::with_capacity(self.opens.len());
        for (i, open) in self.opens.iter().enumerate() {
            if let Some(&p) = open.iter().find(|&&p| p >= self.n || p >= MASK_BITS) {
                return Err(Error::PreconditionViolated(format!(
                    "opens[{i}] lists point {p}, outside 0..{}",
                    self.n
                )));
            }
            family.push(SubsetMask::from_points(open.iter().copied()));
        }
        FiniteSpace::from_opens(self.n, family)
    }
}

pub fn parse_space(text: &str) -> Result<FiniteSpace> {
    let doc: SpaceDocument = serde_json::from_str(text)?;
    doc.to_space()
}

/// Single-line canonical JSON.
pub fn write_space(space: &FiniteSpace) -> String {
    serde_json::to_string(&SpaceDocument::from_space(space)).expect("document serialises")
}
