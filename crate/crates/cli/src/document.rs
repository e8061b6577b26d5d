//! Placement files: `{"n": 4, "queens": [[1, 1], [2, 3]]}` with optional
//! `label` and `source` fields.

use std::collections::BTreeMap;

use no3line::{Placement, Square};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlacementDocument {
    pub n: i32,
    pub queens: Vec<[i32; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed placement document at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("field n: board side must be at least 1, got {0}")]
    InvalidSide(i32),

    #[error("queens[{index}]: square ({x},{y}) is outside the {n}x{n} board")]
    OutOfRange {
        index: usize,
        x: i32,
        y: i32,
        n: i32,
    },

    #[error("queens[{index}]: square ({x},{y}) already listed at queens[{first}]")]
    Duplicate {
        index: usize,
        first: usize,
        x: i32,
        y: i32,
    },
}

impl PlacementDocument {
    pub fn from_placement(p: &Placement) -> Self {
        Self {
            n: p.n(),
            queens: p.queens().iter().map(|s| [s.x, s.y]).collect(),
            label: None,
            source: None,
        }
    }

    pub fn to_placement(&self) -> Result<Placement, ParseError> {
        let n = self.n;
        if n < 1 {
            return Err(ParseError::InvalidSide(n));
        }
        let mut seen = BTreeMap::new();
        for (index, &[x, y]) in self.queens.iter().enumerate() {
            if !Square::new(x, y).in_board(n) {
                return Err(ParseError::OutOfRange { index, x, y, n });
            }
            if let Some(&first) = seen.get(&(x, y)) {
                return Err(ParseError::Duplicate { index, first, x, y });
            }
            seen.insert((x, y), index);
        }
        Ok(
            Placement::new(n, self.queens.iter().map(|&[x, y]| Square::new(x, y)))
                .expect("squares validated above"),
        )
    }
}

pub fn parse_document(text: &str) -> Result<PlacementDocument, ParseError> {
    serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn parse_placement(text: &str) -> Result<Placement, ParseError> {
    parse_document(text)?.to_placement()
}

pub fn placement_to_json(p: &Placement) -> String {
    serde_json::to_string(&PlacementDocument::from_placement(p))
        .expect("placement documents always serialize")
}
