//! Squares, lines and dihedral symmetry of the board `[1,n] x [1,n]`.
//!
//! Coordinates are 1-based throughout: `x` is the column, `y` the row. Every
//! square lies on exactly four lines, one per [`Slope`], and a line is named
//! by its slope and an integer offset:
//!
//! | slope | equation      | offsets on the board |
//! |-------|---------------|----------------------|
//! | `H`   | `y = c`       | `1..=n`              |
//! | `V`   | `x = c`       | `1..=n`              |
//! | `D`   | `x - y = c`   | `1-n..=n-1`          |
//! | `A`   | `x + y = c`   | `2..=2n`             |
//!
//! Lines with offsets outside those ranges are still valid values; they just
//! miss the board.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(i32, i32)", into = "(i32, i32)")]
pub struct Square {
    pub x: i32,
    pub y: i32,
}

impl Square {
    pub const fn new(x: i32, y: i32) -> Self {
        Self { x, y }
    }

    pub fn in_board(self, n: i32) -> bool {
        (1..=n).contains(&self.x) && (1..=n).contains(&self.y)
    }

    pub fn check(self, n: i32) -> Result<Self> {
        if self.in_board(n) {
            Ok(self)
        } else {
            Err(Error::OutOfRange { square: self, n })
        }
    }

    /// The line of the given slope passing through this square.
    pub fn line(self, slope: Slope) -> Line {
        let offset = match slope {
            Slope::H => self.y,
            Slope::V => self.x,
            Slope::D => self.x - self.y,
            Slope::A => self.x + self.y,
        };
        Line { slope, offset }
    }

    pub fn lines(self) -> [Line; 4] {
        Slope::ALL.map(|slope| self.line(slope))
    }
}

impl From<(i32, i32)> for Square {
    fn from((x, y): (i32, i32)) -> Self {
        Self { x, y }
    }
}

impl From<Square> for (i32, i32) {
    fn from(s: Square) -> Self {
        (s.x, s.y)
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Slope class of a line: horizontal (0), vertical (infinite), diagonal
/// (+1) or antidiagonal (-1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Slope {
    H,
    V,
    D,
    A,
}

impl Slope {
    pub const ALL: [Slope; 4] = [Slope::H, Slope::V, Slope::D, Slope::A];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Range of offsets for which a line of this slope meets `B_n`.
    pub fn offsets(self, n: i32) -> std::ops::RangeInclusive<i32> {
        match self {
            Slope::H | Slope::V => 1..=n,
            Slope::D => 1 - n..=n - 1,
            Slope::A => 2..=2 * n,
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Slope::H => "H",
            Slope::V => "V",
            Slope::D => "D",
            Slope::A => "A",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Line {
    pub slope: Slope,
    pub offset: i32,
}

impl Line {
    pub const fn new(slope: Slope, offset: i32) -> Self {
        Self { slope, offset }
    }

    pub fn contains(self, s: Square) -> bool {
        s.line(self.slope).offset == self.offset
    }

    pub fn meets_board(self, n: i32) -> bool {
        self.slope.offsets(n).contains(&self.offset)
    }

    /// Dense index of an on-board line in `0..6n-2`.
    ///
    /// Only meaningful when [`Line::meets_board`] holds.
    pub fn index(self, n: i32) -> usize {
        let n = n as usize;
        let o = self.offset as isize;
        match self.slope {
            Slope::H => (o - 1) as usize,
            Slope::V => n + (o - 1) as usize,
            Slope::D => 2 * n + (o + n as isize - 1) as usize,
            Slope::A => 4 * n - 1 + (o - 2) as usize,
        }
    }

    /// Value of the affine form `l(x, y)` whose zero set is this line:
    /// `y - c`, `x - c`, `x - y - c` or `x + y - c`.
    pub fn eval(self, x: i64, y: i64) -> i64 {
        let c = self.offset as i64;
        match self.slope {
            Slope::H => y - c,
            Slope::V => x - c,
            Slope::D => x - y - c,
            Slope::A => x + y - c,
        }
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.slope, self.offset)
    }
}

/// Number of distinct lines meeting `B_n`.
pub fn line_count(n: i32) -> usize {
    (6 * n - 2).max(0) as usize
}

/// Every line meeting `B_n`, ordered by [`Line::index`].
pub fn all_lines(n: i32) -> Vec<Line> {
    Slope::ALL
        .iter()
        .flat_map(|&slope| slope.offsets(n).map(move |offset| Line { slope, offset }))
        .collect()
}

/// The four lines through `square`, in the order H, V, D, A.
pub fn lines_through(square: Square, n: i32) -> Result<[Line; 4]> {
    Ok(square.check(n)?.lines())
}

/// Squares of `B_n` on `line`, ordered by increasing `x` (then `y`).
pub fn line_squares(line: Line, n: i32) -> Result<Vec<Square>> {
    if !line.meets_board(n) {
        return Err(Error::EmptyIntersection { line, n });
    }
    let c = line.offset;
    let squares = match line.slope {
        Slope::H => (1..=n).map(|x| Square::new(x, c)).collect(),
        Slope::V => (1..=n).map(|y| Square::new(c, y)).collect(),
        Slope::D => (1..=n)
            .map(|x| Square::new(x, x - c))
            .filter(|s| s.in_board(n))
            .collect(),
        Slope::A => (1..=n)
            .map(|x| Square::new(x, c - x))
            .filter(|s| s.in_board(n))
            .collect(),
    };
    Ok(squares)
}

/// Number of squares on `line` inside `B_n` (zero when it misses the board).
pub fn line_len(line: Line, n: i32) -> i32 {
    if !line.meets_board(n) {
        return 0;
    }
    match line.slope {
        Slope::H | Slope::V => n,
        Slope::D => n - line.offset.abs(),
        Slope::A => n - (line.offset - (n + 1)).abs(),
    }
}

/// Number of other squares of `B_n` sharing a line with `square`.
pub fn count_attacked(n: i32, square: Square) -> Result<usize> {
    let lines = lines_through(square, n)?;
    Ok(lines.iter().map(|&l| (line_len(l, n) - 1) as usize).sum())
}

/// One of the eight symmetries of the square board.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Identity,
    Rot90,
    Rot180,
    Rot270,
    FlipX,
    FlipY,
    Transpose,
    AntiTranspose,
}

impl Symmetry {
    pub const ALL: [Symmetry; 8] = [
        Symmetry::Identity,
        Symmetry::Rot90,
        Symmetry::Rot180,
        Symmetry::Rot270,
        Symmetry::FlipX,
        Symmetry::FlipY,
        Symmetry::Transpose,
        Symmetry::AntiTranspose,
    ];

    pub fn apply(self, s: Square, n: i32) -> Square {
        let m = n + 1;
        let (x, y) = (s.x, s.y);
        let (x, y) = match self {
            Symmetry::Identity => (x, y),
            Symmetry::Rot90 => (y, m - x),
            Symmetry::Rot180 => (m - x, m - y),
            Symmetry::Rot270 => (m - y, x),
            Symmetry::FlipX => (m - x, y),
            Symmetry::FlipY => (x, m - y),
            Symmetry::Transpose => (y, x),
            Symmetry::AntiTranspose => (m - y, m - x),
        };
        Square::new(x, y)
    }
}

/// A set of queens on `B_n`. Queens are kept sorted by `(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPlacement", into = "RawPlacement")]
pub struct Placement {
    n: i32,
    queens: Vec<Square>,
}

#[derive(Serialize, Deserialize)]
struct RawPlacement {
    n: i32,
    queens: Vec<Square>,
}

impl TryFrom<RawPlacement> for Placement {
    type Error = Error;

    fn try_from(raw: RawPlacement) -> Result<Self> {
        Placement::new(raw.n, raw.queens)
    }
}

impl From<Placement> for RawPlacement {
    fn from(p: Placement) -> Self {
        RawPlacement {
            n: p.n,
            queens: p.queens,
        }
    }
}

impl Placement {
    /// Validates side, ranges and uniqueness.
    pub fn new(n: i32, queens: impl IntoIterator<Item = Square>) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidBoardSide(n));
        }
        let mut queens: Vec<Square> = queens
            .into_iter()
            .map(|s| s.check(n))
            .collect::<Result<_>>()?;
        queens.sort_unstable();
        if let Some(w) = queens.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateSquare(w[0]));
        }
        Ok(Self { n, queens })
    }

    pub fn empty(n: i32) -> Result<Self> {
        Self::new(n, [])
    }

    pub fn full(n: i32) -> Result<Self> {
        Self::new(
            n,
            (1..=n).flat_map(|x| (1..=n).map(move |y| Square::new(x, y))),
        )
    }

    pub fn n(&self) -> i32 {
        self.n
    }

    pub fn queens(&self) -> &[Square] {
        &self.queens
    }

    pub fn len(&self) -> usize {
        self.queens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.queens.is_empty()
    }

    pub fn contains(&self, s: Square) -> bool {
        self.queens.binary_search(&s).is_ok()
    }

    pub fn squares(&self) -> impl Iterator<Item = Square> {
        let n = self.n;
        (1..=n).flat_map(move |x| (1..=n).map(move |y| Square::new(x, y)))
    }

    /// Returns a copy with `s` added. Errors on range or duplicates.
    pub fn with(&self, s: Square) -> Result<Self> {
        Self::new(self.n, self.queens.iter().copied().chain([s]))
    }

    pub fn transform(&self, g: Symmetry) -> Self {
        let mut queens: Vec<Square> = self.queens.iter().map(|&s| g.apply(s, self.n)).collect();
        queens.sort_unstable();
        Self { n: self.n, queens }
    }
}

/// Lexicographically least of the eight dihedral images of `p`.
pub fn canonical_form(p: &Placement) -> Placement {
    Symmetry::ALL
        .iter()
        .map(|&g| p.transform(g))
        .min_by(|a, b| a.queens.cmp(&b.queens))
        .expect("symmetry group is non-empty")
}
