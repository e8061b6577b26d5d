//! Algebraic refutation of small good placements.
//!
//! Given a placement of fewer than [`lower_bound`] queens, build a multiset
//! of lines from three sources:
//!
//! 1. every line through two queens of the placement;
//! 2. one line through each queen lying on none of those (the isolated
//!    queens), slopes assigned round-robin in the order H, D, A, V;
//! 3. padding lines off the board, topping each slope up to a fixed target.
//!
//! The product `f` of the affine forms of these lines has degree
//! `t1 + t2`, and its top homogeneous part is
//! `x^cV y^cH (x - y)^cD (x + y)^cA`, which depends only on the per-slope
//! targets. The targets are chosen so that the coefficient of `x^t1 y^t2` is
//! a nonzero binomial coefficient with `t1, t2 < n`. The Combinatorial
//! Nullstellensatz then guarantees a point of `{1..n}^2` where `f` does not
//! vanish. Such a point is on no type-1 or type-2 line, so it is unoccupied
//! and can take a queen without making three in a line: the placement is
//! not good.
//!
//! Targets and monomials by residue of `n` (`q'` is the number of isolated
//! queens, `k = floor(n/4)`):
//!
//! | n        | case      | targets (H, V, D, A)      | (t1, t2)          |
//! |----------|-----------|---------------------------|-------------------|
//! | 4k + 1   | any       | 2k, 2k, 2k, 2k            | (4k, 4k)          |
//! | 4k       | q' != 1   | 2k-1 each                 | (4k-1, 4k-3)      |
//! | 4k       | q' = 1    | 2k-1, 2k, 2k-1, 2k-1      | (4k-2, 4k-1)      |
//! | 4k+2, +3 | q' != 1   | 2k each                   | (4k, 4k)          |
//! | 4k+2, +3 | q' = 1    | 2k, 2k+1, 2k, 2k          | (4k+1, 4k)        |
//!
//! In both `q' = 1` rows the single isolated queen gets a vertical line.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::board::{Line, Placement, Slope, Square};
use crate::error::{Error, Result};
use crate::poly::{Exponents, SparseBivariatePoly};
use crate::search::lower_bound;
use crate::verify::{has_three_in_line, LineCounts};

/// Slope order of the round-robin assignment for isolated queens.
pub const ROUND_ROBIN: [Slope; 4] = [Slope::H, Slope::D, Slope::A, Slope::V];

/// A count per slope class.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerSlope {
    #[serde(rename = "H")]
    pub h: u32,
    #[serde(rename = "V")]
    pub v: u32,
    #[serde(rename = "D")]
    pub d: u32,
    #[serde(rename = "A")]
    pub a: u32,
}

impl PerSlope {
    pub const fn uniform(c: u32) -> Self {
        Self {
            h: c,
            v: c,
            d: c,
            a: c,
        }
    }

    pub fn get(&self, slope: Slope) -> u32 {
        match slope {
            Slope::H => self.h,
            Slope::V => self.v,
            Slope::D => self.d,
            Slope::A => self.a,
        }
    }

    pub fn get_mut(&mut self, slope: Slope) -> &mut u32 {
        match slope {
            Slope::H => &mut self.h,
            Slope::V => &mut self.v,
            Slope::D => &mut self.d,
            Slope::A => &mut self.a,
        }
    }

    pub fn total(&self) -> u32 {
        self.h + self.v + self.d + self.a
    }

    fn tally<'a>(lines: impl IntoIterator<Item = &'a Line>) -> Self {
        let mut counts = Self::default();
        for l in lines {
            *counts.get_mut(l.slope) += 1;
        }
        counts
    }
}

/// A line through an isolated queen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolatedLine {
    pub line: Line,
    pub queen: Square,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinePlan {
    pub n: i32,
    pub type1: Vec<Line>,
    pub type2: Vec<IsolatedLine>,
    pub type3: Vec<Line>,
    pub targets: PerSlope,
    pub monomial: Exponents,
}

impl LinePlan {
    pub fn lines(&self) -> impl Iterator<Item = Line> + '_ {
        self.type1
            .iter()
            .copied()
            .chain(self.type2.iter().map(|t| t.line))
            .chain(self.type3.iter().copied())
    }

    pub fn line_count(&self) -> usize {
        self.type1.len() + self.type2.len() + self.type3.len()
    }

    /// Type-1 plus type-2 lines per slope.
    pub fn load(&self) -> PerSlope {
        PerSlope::tally(self.type1.iter().chain(self.type2.iter().map(|t| &t.line)))
    }

    pub fn polynomial(&self) -> SparseBivariatePoly {
        line_polynomial(&self.lines().collect::<Vec<_>>())
    }

    /// Whether the product of type-1 and type-2 forms vanishes at `s`.
    pub fn covers(&self, s: Square) -> bool {
        self.type1
            .iter()
            .chain(self.type2.iter().map(|t| &t.line))
            .any(|l| l.contains(s))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnCertificate {
    pub n: i32,
    pub q: usize,
    pub q_prime: usize,
    pub plan: LinePlan,
    #[serde(with = "decimal")]
    pub coefficient: BigInt,
    pub witness: Square,
    /// `f(witness)`.
    #[serde(with = "decimal")]
    pub value: BigInt,
}

/// Serializes big integers as decimal strings.
pub mod decimal {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Ways an independent re-check of a certificate can fail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateDefect {
    LineCountMismatch {
        slope: Slope,
        expected: u32,
        found: u32,
    },
    DuplicateLine(Line),
    ExponentTooLarge(Exponents),
    DegreeMismatch {
        degree: u32,
        expected: u32,
    },
    CoefficientMismatch {
        stored: BigInt,
        computed: BigInt,
    },
    ZeroCoefficient,
    WitnessOffBoard(Square),
    WitnessVanishes(Square),
    ValueMismatch {
        stored: BigInt,
        computed: BigInt,
    },
    IsolatedQueenOffLine(IsolatedLine),
    UncoveredQueen(Square),
    MissingDefinedLine(Line),
}

impl fmt::Display for CertificateDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::LineCountMismatch {
                slope,
                expected,
                found,
            } => {
                write!(
                    f,
                    "slope {slope}: target {expected}, plan has {found} lines"
                )
            }
            Self::DuplicateLine(l) => write!(f, "line {l} listed twice"),
            Self::ExponentTooLarge((i, j)) => {
                write!(f, "monomial x^{i} y^{j} has an exponent >= n")
            }
            Self::DegreeMismatch { degree, expected } => {
                write!(
                    f,
                    "monomial degree {degree} differs from line count {expected}"
                )
            }
            Self::CoefficientMismatch { stored, computed } => {
                write!(f, "stored coefficient {stored}, recomputed {computed}")
            }
            Self::ZeroCoefficient => f.write_str("coefficient is zero"),
            Self::WitnessOffBoard(s) => write!(f, "witness {s} is off the board"),
            Self::WitnessVanishes(s) => write!(f, "polynomial vanishes at witness {s}"),
            Self::ValueMismatch { stored, computed } => {
                write!(f, "stored value {stored}, recomputed {computed}")
            }
            Self::IsolatedQueenOffLine(t) => write!(f, "queen {} is not on {}", t.queen, t.line),
            Self::UncoveredQueen(s) => write!(f, "queen {s} is on no type-1 or type-2 line"),
            Self::MissingDefinedLine(l) => write!(f, "line {l} holds two queens but is not type 1"),
        }
    }
}

impl CnCertificate {
    /// Re-derives everything checkable from the certificate alone: per-slope
    /// targets, distinct lines, exponent bounds, the coefficient by exact
    /// expansion, and the value at the witness.
    pub fn recheck(&self) -> std::result::Result<(), CertificateDefect> {
        let plan = &self.plan;
        let all = PerSlope::tally(
            plan.type1
                .iter()
                .chain(plan.type2.iter().map(|t| &t.line))
                .chain(&plan.type3),
        );
        for slope in Slope::ALL {
            let (expected, found) = (plan.targets.get(slope), all.get(slope));
            if expected != found {
                return Err(CertificateDefect::LineCountMismatch {
                    slope,
                    expected,
                    found,
                });
            }
        }
        let mut seen = BTreeSet::new();
        if let Some(l) = plan.lines().find(|&l| !seen.insert(l)) {
            return Err(CertificateDefect::DuplicateLine(l));
        }
        let (t1, t2) = plan.monomial;
        if t1 as i64 >= self.n as i64 || t2 as i64 >= self.n as i64 {
            return Err(CertificateDefect::ExponentTooLarge(plan.monomial));
        }
        let expected = plan.line_count() as u32;
        if t1 + t2 != expected {
            return Err(CertificateDefect::DegreeMismatch {
                degree: t1 + t2,
                expected,
            });
        }
        if let Some(t) = plan.type2.iter().find(|t| !t.line.contains(t.queen)) {
            return Err(CertificateDefect::IsolatedQueenOffLine(*t));
        }
        let f = plan.polynomial();
        let computed = f.coefficient(plan.monomial);
        if computed != self.coefficient {
            return Err(CertificateDefect::CoefficientMismatch {
                stored: self.coefficient.clone(),
                computed,
            });
        }
        if computed.is_zero() {
            return Err(CertificateDefect::ZeroCoefficient);
        }
        if !self.witness.in_board(self.n) {
            return Err(CertificateDefect::WitnessOffBoard(self.witness));
        }
        let value = f.eval_i64(self.witness.x as i64, self.witness.y as i64);
        if value.is_zero() {
            return Err(CertificateDefect::WitnessVanishes(self.witness));
        }
        if value != self.value {
            return Err(CertificateDefect::ValueMismatch {
                stored: self.value.clone(),
                computed: value,
            });
        }
        Ok(())
    }

    /// [`CnCertificate::recheck`] plus the link to a concrete placement: every
    /// line through two of its queens is type 1 and every queen is on a type-1
    /// or type-2 line. Together these make the witness addable.
    pub fn recheck_for(&self, p: &Placement) -> std::result::Result<(), CertificateDefect> {
        self.recheck()?;
        let type1: BTreeSet<Line> = self.plan.type1.iter().copied().collect();
        if let Some(l) = defined_lines(p).into_iter().find(|l| !type1.contains(l)) {
            return Err(CertificateDefect::MissingDefinedLine(l));
        }
        if let Some(&s) = p.queens().iter().find(|&&s| !self.plan.covers(s)) {
            return Err(CertificateDefect::UncoveredQueen(s));
        }
        Ok(())
    }
}

/// Lines holding at least two queens of `p`, sorted.
pub fn defined_lines(p: &Placement) -> Vec<Line> {
    LineCounts::of(p)
        .lines_with_at_least(2)
        .map(|(l, _)| l)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Queens of `p` collinear with no other queen, in `(x, y)` order.
pub fn isolated_queens(p: &Placement) -> Vec<Square> {
    let counts = LineCounts::of(p);
    p.queens()
        .iter()
        .copied()
        .filter(|&s| counts.through(s).iter().all(|&c| c == 1))
        .collect()
}

/// Product of the affine forms of `lines`; the empty product is 1.
pub fn line_polynomial(lines: &[Line]) -> SparseBivariatePoly {
    let mut f = SparseBivariatePoly::one();
    for l in lines {
        let c = -(l.offset as i64);
        match l.slope {
            Slope::H => f.mul_linear(0, 1, c),
            Slope::V => f.mul_linear(1, 0, c),
            Slope::D => f.mul_linear(1, -1, c),
            Slope::A => f.mul_linear(1, 1, c),
        }
    }
    f
}

/// Per-slope line targets and the monomial `(t1, t2)` for side `n` with
/// `q_prime` isolated queens. Requires `n >= 2`.
pub fn plan_targets(n: i32, q_prime: usize) -> (PerSlope, Exponents) {
    let k = (n / 4) as u32;
    let single = q_prime == 1;
    match n % 4 {
        1 => (PerSlope::uniform(2 * k), (4 * k, 4 * k)),
        0 if single => (
            PerSlope {
                v: 2 * k,
                ..PerSlope::uniform(2 * k - 1)
            },
            (4 * k - 2, 4 * k - 1),
        ),
        0 => (PerSlope::uniform(2 * k - 1), (4 * k - 1, 4 * k - 3)),
        _ if single => (
            PerSlope {
                v: 2 * k + 1,
                ..PerSlope::uniform(2 * k)
            },
            (4 * k + 1, 4 * k),
        ),
        _ => (PerSlope::uniform(2 * k), (4 * k, 4 * k)),
    }
}

/// Most type-1 plus type-2 lines any one slope can carry: `q_max` queens at
/// most, `q_prime` of them isolated, leaves at most `(q_max - q')/2` defined
/// lines per slope, and round-robin hands each slope at most `ceil(q'/4)`
/// isolated-queen lines. Here `q_max = lower_bound(n) - 1`.
pub fn line_load_bound(n: i32, q_prime: usize) -> Result<u32> {
    let q_max = lower_bound(n)? as i64 - 1;
    let paired = (q_max - q_prime as i64).max(0) / 2;
    Ok((paired + (q_prime as i64 + 3) / 4) as u32)
}

fn check_applicable(p: &Placement) -> Result<()> {
    let n = p.n();
    let bound = lower_bound(n)?;
    if n < 2 || p.len() >= bound {
        return Err(Error::BoundNotApplicable {
            n,
            q: p.len(),
            max_q: bound as i64 - 1,
        });
    }
    Ok(())
}

/// Off-board lines of the given slope, none of which meets `B_n`.
fn padding_lines(slope: Slope, n: i32) -> impl Iterator<Item = Line> {
    let first = *slope.offsets(n).end() + 1;
    (first..).map(move |offset| Line::new(slope, offset))
}

fn build_plan(p: &Placement) -> Result<(LinePlan, SparseBivariatePoly)> {
    check_applicable(p)?;
    let n = p.n();
    let type1 = defined_lines(p);
    let isolated = isolated_queens(p);
    let (targets, monomial) = plan_targets(n, isolated.len());

    let type2: Vec<IsolatedLine> = if isolated.len() == 1 {
        vec![IsolatedLine {
            line: isolated[0].line(Slope::V),
            queen: isolated[0],
        }]
    } else {
        isolated
            .iter()
            .enumerate()
            .map(|(i, &queen)| IsolatedLine {
                line: queen.line(ROUND_ROBIN[i % 4]),
                queen,
            })
            .collect()
    };

    let mut plan = LinePlan {
        n,
        type1,
        type2,
        type3: Vec::new(),
        targets,
        monomial,
    };
    let load = plan.load();
    for slope in Slope::ALL {
        let (have, want) = (load.get(slope), targets.get(slope));
        if have > want {
            return Err(Error::Planner(format!(
                "slope {slope} needs {have} lines but the target is {want}"
            )));
        }
        plan.type3
            .extend(padding_lines(slope, n).take((want - have) as usize));
    }

    let mut seen = BTreeSet::new();
    if let Some(l) = plan.lines().find(|&l| !seen.insert(l)) {
        return Err(Error::Planner(format!("line {l} would appear twice")));
    }
    let f = plan.polynomial();
    if f.coefficient(monomial).is_zero() {
        return Err(Error::Planner(format!(
            "coefficient of x^{} y^{} vanishes",
            monomial.0, monomial.1
        )));
    }
    Ok((plan, f))
}

/// Builds the three-type line plan for a placement with fewer than
/// [`lower_bound`] queens. The returned plan has a verified nonzero
/// coefficient at its monomial.
pub fn plan_line_set(p: &Placement) -> Result<LinePlan> {
    build_plan(p).map(|(plan, _)| plan)
}

/// Refutes goodness of a sub-bound placement with a certificate whose
/// witness is the lexicographically least grid point where the plan's
/// polynomial does not vanish.
pub fn refute_goodness(p: &Placement) -> Result<CnCertificate> {
    if let Some(line) = has_three_in_line(p) {
        return Err(Error::ThreeInLine(line));
    }
    let (plan, f) = build_plan(p)?;
    let n = p.n();
    let coefficient = f.coefficient(plan.monomial);
    let (witness, value) = p
        .squares()
        .map(|s| (s, f.eval_i64(s.x as i64, s.y as i64)))
        .find(|(_, v)| !v.is_zero())
        .ok_or_else(|| Error::Planner("polynomial vanishes on the whole grid".into()))?;
    if p.contains(witness) || plan.covers(witness) {
        return Err(Error::Planner(format!(
            "witness {witness} lies on a planned line"
        )));
    }
    Ok(CnCertificate {
        n,
        q: p.len(),
        q_prime: plan.type2.len(),
        plan,
        coefficient,
        witness,
        value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::addable_squares;

    fn place(n: i32, qs: &[(i32, i32)]) -> Placement {
        Placement::new(n, qs.iter().map(|&(x, y)| Square::new(x, y))).unwrap()
    }

    #[test]
    fn defined_and_isolated_examples() {
        let p = place(3, &[(1, 1), (1, 2)]);
        assert_eq!(defined_lines(&p), vec![Line::new(Slope::V, 1)]);
        assert!(isolated_queens(&p).is_empty());
        let p = place(3, &[(1, 1), (2, 2)]);
        assert_eq!(defined_lines(&p), vec![Line::new(Slope::D, 0)]);
        let p = place(3, &[(1, 1), (2, 3)]);
        assert!(defined_lines(&p).is_empty());
        assert_eq!(isolated_queens(&p), p.queens().to_vec());
    }

    #[test]
    fn line_polynomial_examples() {
        let f = line_polynomial(&[Line::new(Slope::V, 1), Line::new(Slope::H, 1)]);
        assert_eq!(f.to_string(), "xy - x - y + 1");
        let f = line_polynomial(&[Line::new(Slope::D, 0), Line::new(Slope::A, 0)]);
        assert_eq!(f.to_string(), "x^2 - y^2");
        assert_eq!(line_polynomial(&[]), SparseBivariatePoly::one());
    }

    #[test]
    fn plan_for_five_by_five() {
        let p = place(5, &[(1, 1), (1, 2), (2, 4), (4, 2)]);
        let plan = plan_line_set(&p).unwrap();
        let type1: BTreeSet<_> = plan.type1.iter().copied().collect();
        let expected: BTreeSet<_> = [
            Line::new(Slope::V, 1),
            Line::new(Slope::H, 2),
            Line::new(Slope::A, 6),
        ]
        .into_iter()
        .collect();
        assert_eq!(type1, expected);
        assert!(plan.type2.is_empty());
        assert_eq!(plan.targets, PerSlope::uniform(2));
        assert_eq!(plan.monomial, (4, 4));
        assert_eq!(plan.type3.len(), 5);
        // top part x^2 y^2 (x^2 - y^2)^2 gives -2 x^4 y^4
        assert_eq!(plan.polynomial().coefficient((4, 4)), BigInt::from(-2));
    }

    #[test]
    fn empty_placement_is_all_padding() {
        let plan = plan_line_set(&Placement::empty(5).unwrap()).unwrap();
        assert!(plan.type1.is_empty() && plan.type2.is_empty());
        assert_eq!(plan.type3.len(), 8);
        assert_eq!(plan.monomial, (4, 4));
        let cert = refute_goodness(&Placement::empty(5).unwrap()).unwrap();
        assert_eq!(cert.witness, Square::new(1, 1));
    }

    #[test]
    fn single_isolated_queen_on_four_by_four() {
        let p = place(4, &[(2, 3)]);
        let plan = plan_line_set(&p).unwrap();
        assert_eq!(
            plan.targets,
            PerSlope {
                h: 1,
                v: 2,
                d: 1,
                a: 1
            }
        );
        assert_eq!(plan.monomial, (2, 3));
        assert_eq!(
            plan.type2,
            vec![IsolatedLine {
                line: Line::new(Slope::V, 2),
                queen: Square::new(2, 3)
            }]
        );
        // (-1)^1 C(1,1)
        assert_eq!(plan.polynomial().coefficient((2, 3)), BigInt::from(-1));
    }

    #[test]
    fn refutation_examples() {
        let p = place(5, &[(1, 1), (1, 2), (2, 4), (4, 2)]);
        let cert = refute_goodness(&p).unwrap();
        assert_eq!(cert.witness, addable_squares(&p).unwrap()[0]);
        cert.recheck_for(&p).unwrap();

        let p = place(4, &[(1, 1), (2, 3), (3, 2)]);
        let cert = refute_goodness(&p).unwrap();
        assert!(addable_squares(&p).unwrap().contains(&cert.witness));
        cert.recheck_for(&p).unwrap();

        let p = place(5, &[(1, 1), (1, 3), (2, 5), (4, 2), (5, 4)]);
        assert!(matches!(
            refute_goodness(&p),
            Err(Error::BoundNotApplicable { .. })
        ));
        let p = place(4, &[(1, 1), (2, 2), (3, 3)]);
        assert!(matches!(refute_goodness(&p), Err(Error::ThreeInLine(_))));
        assert!(matches!(
            refute_goodness(&place(1, &[])),
            Err(Error::BoundNotApplicable { .. })
        ));
    }

    #[test]
    fn round_robin_order() {
        // Three mutually non-collinear queens on B_6 (q <= 5).
        let p = place(6, &[(1, 1), (2, 3), (3, 6)]);
        assert_eq!(isolated_queens(&p).len(), 3);
        let plan = plan_line_set(&p).unwrap();
        let slopes: Vec<_> = plan.type2.iter().map(|t| t.line.slope).collect();
        assert_eq!(slopes, vec![Slope::H, Slope::D, Slope::A]);
    }

    #[test]
    fn tampered_certificate_is_rejected() {
        let p = place(5, &[(1, 1), (1, 2), (2, 4), (4, 2)]);
        let mut cert = refute_goodness(&p).unwrap();
        cert.coefficient += 1;
        assert!(matches!(
            cert.recheck(),
            Err(CertificateDefect::CoefficientMismatch { .. })
        ));
        let mut cert = refute_goodness(&p).unwrap();
        cert.witness = Square::new(1, 1);
        assert!(matches!(
            cert.recheck(),
            Err(CertificateDefect::WitnessVanishes(_))
        ));
        let mut cert = refute_goodness(&p).unwrap();
        cert.plan.type1.pop();
        assert!(cert.recheck().is_err());
    }
}
