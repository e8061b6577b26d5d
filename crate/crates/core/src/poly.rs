//! Sparse bivariate polynomials over the integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(i, j)` of the monomial `x^i y^j`.
pub type Exponents = (u32, u32);

/// Map from exponent pair to nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseBivariatePoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl SparseBivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term((0, 0), c.into());
        p
    }

    pub fn monomial(exp: Exponents, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    /// `a x + b y + c`.
    pub fn linear(a: i64, b: i64, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term((1, 0), a.into());
        p.add_term((0, 1), b.into());
        p.add_term((0, 0), c.into());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponents, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: Exponents) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exponents, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// Homogeneous part of the given total degree.
    pub fn homogeneous_part(&self, degree: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(&(i, j), _)| i + j == degree)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        }
    }

    /// Multiplies in place by `a x + b y + c`.
    pub fn mul_linear(&mut self, a: i64, b: i64, c: i64) {
        let mut out = BTreeMap::new();
        let mut push = |e: Exponents, v: BigInt| {
            if !v.is_zero() {
                *out.entry(e).or_insert_with(BigInt::zero) += v;
            }
        };
        for (&(i, j), coef) in &self.terms {
            if a != 0 {
                push((i + 1, j), coef * a);
            }
            if b != 0 {
                push((i, j + 1), coef * b);
            }
            if c != 0 {
                push((i, j), coef * c);
            }
        }
        out.retain(|_, v: &mut BigInt| !v.is_zero());
        self.terms = out;
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let max_i = self.terms.keys().map(|e| e.0).max().unwrap_or(0);
        let max_j = self.terms.keys().map(|e| e.1).max().unwrap_or(0);
        let powers = |base: &BigInt, top: u32| {
            let mut v = Vec::with_capacity(top as usize + 1);
            let mut acc = BigInt::one();
            for _ in 0..=top {
                v.push(acc.clone());
                acc *= base;
            }
            v
        };
        let (xp, yp) = (powers(x, max_i), powers(y, max_j));
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * &xp[i as usize] * &yp[j as usize])
            .sum()
    }

    pub fn eval_i64(&self, x: i64, y: i64) -> BigInt {
        self.eval(&BigInt::from(x), &BigInt::from(y))
    }
}

impl Add for &SparseBivariatePoly {
    type Output = SparseBivariatePoly;

    fn add(self, rhs: Self) -> SparseBivariatePoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &SparseBivariatePoly {
    type Output = SparseBivariatePoly;

    fn sub(self, rhs: Self) -> SparseBivariatePoly {
        self + &(-rhs)
    }
}

impl Neg for &SparseBivariatePoly {
    type Output = SparseBivariatePoly;

    fn neg(self) -> SparseBivariatePoly {
        SparseBivariatePoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &SparseBivariatePoly {
    type Output = SparseBivariatePoly;

    fn mul(self, rhs: Self) -> SparseBivariatePoly {
        let mut out = SparseBivariatePoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for SparseBivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Highest total degree first, then by descending power of x.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(&(i, j), _)| std::cmp::Reverse((i + j, i)));
        for (k, (&(i, j), c)) in terms.into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            let unit = mag.is_one() && (i, j) != (0, 0);
            if !unit {
                write!(f, "{mag}")?;
            }
            for (var, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => f.write_str(var)?,
                    e => write!(f, "{var}^{e}")?,
                }
            }
        }
        Ok(())
    }
}
