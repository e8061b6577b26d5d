//! Counting argument for the lower bound on even boards.
//!
//! Split the lines a placement defines into orthogonal ones (slope 0 or
//! infinite) and diagonal ones (slope +1 or -1). `U` is the set of squares on
//! no defined orthogonal line, `Q''` the queens on no defined orthogonal
//! line, and `C_i`, `R_j` the column and row slices of `U`. With `a < b` the
//! extreme nonempty columns, the squares of `C_a ∪ C_b` can only be saturated
//! by diagonal lines, and each defined diagonal line meets at most one of
//! them, except for at most one line per slope that crosses both columns.
//! This forces at least `2r - 2 - min(q'', 2)` defined diagonal lines, while
//! `q` queens define at most `q` of them.
//!
//! [`audit`] computes every quantity in that argument for a concrete
//! placement and reports which inequalities hold. It is descriptive: for
//! placements that are not good the conclusions are reported as
//! not applicable.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::board::{Placement, Slope, Square, Symmetry};
use crate::error::{Error, Result};
use crate::verify::{has_three_in_line, is_good, LineCounts};

/// Nonempty slices of `U` along one axis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceSummary {
    /// Indices with a nonempty slice, ascending.
    pub indices: Vec<i32>,
    pub min: Option<i32>,
    pub max: Option<i32>,
    pub count: usize,
}

impl SliceSummary {
    fn of(indices: BTreeSet<i32>) -> Self {
        Self {
            min: indices.first().copied(),
            max: indices.last().copied(),
            count: indices.len(),
            indices: indices.into_iter().collect(),
        }
    }

    fn spread(&self) -> i32 {
        match (self.min, self.max) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EvenBranch {
    /// `q'' = 0`: then `r >= n/2 + 1`, so at least `n` diagonal lines are needed.
    NoOffLineQueens,
    /// `q'' > 0`: at least `n - 1` diagonal lines are needed.
    OffLineQueens,
}

/// The even-board case `q <= n - 1`, where at most `(n-2)/2` lines of each
/// slope can be defined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenCase {
    pub branch: EvenBranch,
    /// Diagonal lines a good placement would have to define.
    pub lines_needed: i64,
    /// Diagonal lines `n - 1` queens can define at most.
    pub lines_available: i64,
    pub contradiction: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub n: i32,
    pub q: usize,
    pub good: bool,
    /// `q''`: queens on no defined row or column line.
    pub q_dd: usize,
    /// `|U|`.
    pub u_size: usize,
    /// Whether the placement was turned by 90 degrees, `(x, y) -> (y, n+1-x)`,
    /// so that the column spread is at least the row spread. All indices
    /// below refer to that frame.
    pub rotated: bool,
    /// Nonempty `C_i`: `a = min`, `b = max`, `c = count`.
    pub columns: SliceSummary,
    /// Nonempty `R_j`: `a' = min`, `b' = max`, `r = count`.
    pub rows: SliceSummary,
    pub slope_pm1_lines_defined: usize,
    /// Defined lines of slope +1 and -1 that meet two squares of `C_a ∪ C_b`.
    pub extreme_double_hits: [usize; 2],
    /// `n - (q - q'')/2`, the floor for both `c` and `r`.
    pub slice_floor: f64,
    pub slices_above_floor: Option<bool>,
    /// `c <= 1` or `r <= 1`.
    pub degenerate: bool,
    /// In the degenerate case: `q >= 2(n - 1)`.
    pub degenerate_bound_holds: Option<bool>,
    /// `2r - 2 - min(q'', 2)`.
    pub inequality_lhs: i64,
    /// `2n - q - 2`.
    pub inequality_rhs_chain: i64,
    pub chain_holds: Option<bool>,
    /// Defined diagonal lines `>= inequality_lhs`.
    pub diagonal_demand_met: Option<bool>,
    pub pm1_lines_at_most_q: bool,
    pub even_case: Option<EvenCase>,
    /// For good placements: `q >= n - 1`, and `q >= n` when `n` is even.
    pub bound_holds: Option<bool>,
}

struct Frame {
    columns: SliceSummary,
    rows: SliceSummary,
    u: Vec<Square>,
}

fn frame(p: &Placement) -> Frame {
    let n = p.n();
    let counts = LineCounts::of(p);
    let orth_defined =
        |s: Square| counts.get(s.line(Slope::H)) >= 2 || counts.get(s.line(Slope::V)) >= 2;
    let u: Vec<Square> = p.squares().filter(|&s| !orth_defined(s)).collect();
    let columns = SliceSummary::of(u.iter().map(|s| s.x).collect());
    let rows = SliceSummary::of(u.iter().map(|s| s.y).collect());
    debug_assert!(u.iter().all(|s| s.in_board(n)));
    Frame { columns, rows, u }
}

pub fn audit(p: &Placement) -> Result<AuditReport> {
    if let Some(line) = has_three_in_line(p) {
        return Err(Error::ThreeInLine(line));
    }
    let n = p.n();
    let good = is_good(p);

    let mut placement = p.clone();
    let mut fr = frame(&placement);
    let rotated = fr.columns.spread() < fr.rows.spread();
    if rotated {
        placement = p.transform(Symmetry::Rot90);
        fr = frame(&placement);
    }
    let p = &placement;

    let counts = LineCounts::of(p);
    let q = p.len();
    let q_dd = p
        .queens()
        .iter()
        .filter(|&&s| counts.get(s.line(Slope::H)) < 2 && counts.get(s.line(Slope::V)) < 2)
        .count();
    let diagonals: Vec<_> = counts
        .lines_with_at_least(2)
        .map(|(l, _)| l)
        .filter(|l| matches!(l.slope, Slope::D | Slope::A))
        .collect();

    let extremes: Vec<Square> = match (fr.columns.min, fr.columns.max) {
        (Some(a), Some(b)) => {
            fr.u.iter()
                .copied()
                .filter(|s| s.x == a || s.x == b)
                .collect()
        }
        _ => Vec::new(),
    };
    let double_hits = |slope: Slope| {
        diagonals
            .iter()
            .filter(|l| {
                l.slope == slope && extremes.iter().filter(|&&s| l.contains(s)).count() >= 2
            })
            .count()
    };

    let (c, r) = (fr.columns.count as i64, fr.rows.count as i64);
    let (ni, qi, qdd) = (n as i64, q as i64, q_dd as i64);
    let slice_floor = ni as f64 - (qi - qdd) as f64 / 2.0;
    // 2c >= 2n - (q - q'') avoids halves.
    let slices_ok = 2 * c >= 2 * ni - (qi - qdd) && 2 * r >= 2 * ni - (qi - qdd);
    let degenerate = c <= 1 || r <= 1;
    let inequality_lhs = 2 * r - 2 - qdd.min(2);
    let inequality_rhs_chain = 2 * ni - qi - 2;
    let pm1 = diagonals.len() as i64;

    let when_good = |v: bool| good.then_some(v);
    let main_branch = good && !degenerate;

    let even_case = (n % 2 == 0 && qi < ni).then(|| {
        let (branch, lines_needed) = if q_dd == 0 {
            (EvenBranch::NoOffLineQueens, ni)
        } else {
            (EvenBranch::OffLineQueens, ni - 1)
        };
        let lines_available = ni - 2;
        EvenCase {
            branch,
            lines_needed,
            lines_available,
            contradiction: lines_needed > lines_available,
        }
    });

    let bound_holds = when_good(qi >= ni - 1 && (n % 2 != 0 || qi >= ni));

    Ok(AuditReport {
        n,
        q,
        good,
        q_dd,
        u_size: fr.u.len(),
        rotated,
        extreme_double_hits: [double_hits(Slope::D), double_hits(Slope::A)],
        columns: fr.columns,
        rows: fr.rows,
        slope_pm1_lines_defined: diagonals.len(),
        slice_floor,
        slices_above_floor: when_good(slices_ok),
        degenerate,
        degenerate_bound_holds: (good && degenerate).then_some(qi >= 2 * (ni - 1)),
        inequality_lhs,
        inequality_rhs_chain,
        chain_holds: main_branch.then_some(inequality_lhs >= inequality_rhs_chain),
        diagonal_demand_met: main_branch.then_some(pm1 >= inequality_lhs),
        pm1_lines_at_most_q: pm1 <= qi,
        even_case,
        bound_holds,
    })
}
