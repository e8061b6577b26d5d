//! The no-3-in-line property, addable squares and goodness.

use serde::{Deserialize, Serialize};

use crate::board::{all_lines, line_count, Line, Placement, Square};
use crate::error::{Error, Result};

/// Queen count on every line meeting the board, indexed by [`Line::index`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineCounts {
    n: i32,
    counts: Vec<u32>,
}

impl LineCounts {
    pub fn new(n: i32) -> Self {
        Self {
            n,
            counts: vec![0; line_count(n)],
        }
    }

    pub fn of(p: &Placement) -> Self {
        let mut counts = Self::new(p.n());
        for &q in p.queens() {
            counts.add(q);
        }
        counts
    }

    pub fn add(&mut self, s: Square) {
        for l in s.lines() {
            self.counts[l.index(self.n)] += 1;
        }
    }

    pub fn remove(&mut self, s: Square) {
        for l in s.lines() {
            self.counts[l.index(self.n)] -= 1;
        }
    }

    /// Count on `line`; zero for lines that miss the board.
    pub fn get(&self, line: Line) -> u32 {
        if line.meets_board(self.n) {
            self.counts[line.index(self.n)]
        } else {
            0
        }
    }

    /// Counts on the H, V, D, A lines through `s`.
    pub fn through(&self, s: Square) -> [u32; 4] {
        s.lines().map(|l| self.counts[l.index(self.n)])
    }

    /// Lines carrying at least `min` queens, in index order.
    pub fn lines_with_at_least(&self, min: u32) -> impl Iterator<Item = (Line, u32)> + '_ {
        all_lines(self.n)
            .into_iter()
            .zip(self.counts.iter().copied())
            .filter(move |&(_, c)| c >= min)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub no_three: bool,
    pub addable: Vec<Square>,
    pub good: bool,
    pub violating_line: Option<Line>,
}

/// First line (in index order) holding three or more queens, if any.
pub fn has_three_in_line(p: &Placement) -> Option<Line> {
    LineCounts::of(p)
        .lines_with_at_least(3)
        .map(|(l, _)| l)
        .next()
}

fn addable_with(p: &Placement, counts: &LineCounts) -> Vec<Square> {
    p.squares()
        .filter(|&s| !p.contains(s) && counts.through(s).iter().all(|&c| c <= 1))
        .collect()
}

/// Unoccupied squares where a queen can be added without creating three in a
/// line, in `(x, y)` order.
pub fn addable_squares(p: &Placement) -> Result<Vec<Square>> {
    let counts = LineCounts::of(p);
    if let Some((line, _)) = counts.lines_with_at_least(3).next() {
        return Err(Error::ThreeInLine(line));
    }
    Ok(addable_with(p, &counts))
}

pub fn is_good(p: &Placement) -> bool {
    verify(p).good
}

/// Full verification report. Placements with three in a line are reported as
/// not good, with the offending line, rather than rejected.
pub fn verify(p: &Placement) -> VerifyReport {
    let counts = LineCounts::of(p);
    let violating = counts.lines_with_at_least(3).map(|(l, _)| l).next();
    match violating {
        Some(line) => VerifyReport {
            no_three: false,
            addable: Vec::new(),
            good: false,
            violating_line: Some(line),
        },
        None => {
            let addable = addable_with(p, &counts);
            VerifyReport {
                no_three: true,
                good: addable.is_empty(),
                addable,
                violating_line: None,
            }
        }
    }
}
