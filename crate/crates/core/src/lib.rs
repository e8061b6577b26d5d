//! Exact solver, verifier and lower-bound certificates for the minimum
//! no-3-in-line queens problem: the least number of queens on an `n x n`
//! board, no three on a row, column or diagonal, such that no further queen
//! can be added without making three in a line.

pub mod board;
pub mod elementary;
pub mod error;
pub mod nullstellensatz;
pub mod poly;
pub mod search;
pub mod verify;

pub use board::{
    canonical_form, count_attacked, line_squares, lines_through, Line, Placement, Slope, Square,
    Symmetry,
};
pub use elementary::{audit, AuditReport};
pub use error::{Error, Result};
pub use nullstellensatz::{
    defined_lines, isolated_queens, line_polynomial, plan_line_set, refute_goodness, CnCertificate,
    LinePlan,
};
pub use poly::SparseBivariatePoly;
pub use search::{
    exists_good_of_size, lower_bound, naive_lower_bound, solve_min_good, SearchConfig,
    SearchResult, SearchStats,
};
pub use verify::{addable_squares, has_three_in_line, is_good, verify, LineCounts, VerifyReport};
