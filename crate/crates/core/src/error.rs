use thiserror::Error;

use crate::board::{Line, Square};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("board side must be at least 1, got {0}")]
    InvalidBoardSide(i32),

    #[error("square {square} is outside the {n}x{n} board")]
    OutOfRange { square: Square, n: i32 },

    #[error("duplicate square {0} in placement")]
    DuplicateSquare(Square),

    #[error("line {line} does not meet the {n}x{n} board")]
    EmptyIntersection { line: Line, n: i32 },

    #[error("placement has three or more queens on {0}")]
    ThreeInLine(Line),

    #[error("lower bound argument does not apply: {q} queens on a board of side {n} (needs at most {max_q})")]
    BoundNotApplicable { n: i32, q: usize, max_q: i64 },

    #[error("line planner failed: {0}")]
    Planner(String),

    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),

    #[error("search for {q} queens on side {n} exhausted its budget of {budget} nodes")]
    Inconclusive { n: i32, q: usize, budget: u64 },

    #[error("m(n) for side {n} unresolved within budget: bracket [{lower}, {}]", upper.map_or("?".to_string(), |u| u.to_string()))]
    Unresolved {
        n: i32,
        lower: usize,
        upper: Option<usize>,
    },

    #[error("board side {n} exceeds the search engine limit of {max}")]
    UnsupportedBoard { n: i32, max: i32 },
}
