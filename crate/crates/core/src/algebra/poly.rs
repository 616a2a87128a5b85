use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::Rational;

/// Integer polynomial in one variable; `coeffs[k]` is the coefficient of `t^k`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct UniPoly {
    coeffs: Vec<i64>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly { coeffs: vec![1] }
    }

    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `(1 + t)^k`
    pub fn one_plus_t_pow(k: usize) -> Self {
        let mut row = vec![1i64];
        for _ in 0..k {
            let mut next = vec![1i64; row.len() + 1];
            for i in 1..row.len() {
                next[i] = row[i - 1] + row[i];
            }
            row = next;
        }
        UniPoly { coeffs: row }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn shift(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        UniPoly { coeffs }
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + BigInt::from(*c))
    }

    pub fn eval_rational(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + Rational::from_integer((*c).into()))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().enumerate().map(|(k, &c)| (c, mono("t", k))))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

fn mono(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, m) in terms {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 { "-" } else { "+" };
        if first {
            if c < 0 {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        let a = c.unsigned_abs();
        match (a, m.is_empty()) {
            (_, true) => write!(f, "{a}")?,
            (1, false) => write!(f, "{m}")?,
            _ => write!(f, "{a}{m}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Integer polynomial in `x, y`; `coeffs[i][j]` is the coefficient of `x^i y^j`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct BiPoly {
    coeffs: Vec<Vec<i64>>,
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<Vec<i64>>) -> Self {
        for row in coeffs.iter_mut() {
            while row.last() == Some(&0) {
                row.pop();
            }
        }
        while coeffs.last().is_some_and(|r| r.is_empty()) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn monomial(c: i64, i: usize, j: usize) -> Self {
        let mut coeffs = vec![Vec::new(); i + 1];
        coeffs[i] = vec![0; j + 1];
        coeffs[i][j] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Vec<i64>] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize) -> i64 {
        self.coeffs
            .get(i)
            .and_then(|r| r.get(j))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms `(i, j, c)` in increasing `(i, j)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.coeffs.iter().enumerate().flat_map(|(i, r)| {
            r.iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(move |(j, c)| (i, j, *c))
        })
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let rows = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).map_or(&[][..], |r| r);
                let b = other.coeffs.get(i).map_or(&[][..], |r| r);
                let w = a.len().max(b.len());
                (0..w)
                    .map(|j| a.get(j).unwrap_or(&0) + b.get(j).unwrap_or(&0))
                    .collect()
            })
            .collect();
        Self::new(rows)
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let width = |p: &BiPoly| p.coeffs.iter().map(Vec::len).max().unwrap_or(0);
        let (wa, wb) = (width(self), width(other));
        let mut out = vec![vec![0i64; wa + wb]; self.coeffs.len() + other.coeffs.len() - 1];
        for (i1, j1, a) in self.terms() {
            for (i2, j2, b) in other.terms() {
                out[i1 + i2][j1 + j2] += a * b;
            }
        }
        Self::new(out)
    }

    /// Multiply by `x^a y^b`.
    pub fn shift(&self, a: usize, b: usize) -> BiPoly {
        let mut rows = vec![Vec::new(); a];
        for r in &self.coeffs {
            let mut row = vec![0; if r.is_empty() { 0 } else { b }];
            row.extend_from_slice(r);
            rows.push(row);
        }
        Self::new(rows)
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let mut total = BigInt::zero();
        let mut xp = BigInt::one();
        for row in &self.coeffs {
            let inner = row
                .iter()
                .rev()
                .fold(BigInt::zero(), |acc, c| acc * y + BigInt::from(*c));
            total += &xp * inner;
            xp *= x;
        }
        total
    }

    pub fn eval_rational(&self, x: &Rational, y: &Rational) -> Rational {
        let mut total = Rational::zero();
        let mut xp = Rational::one();
        for row in &self.coeffs {
            let inner = row.iter().rev().fold(Rational::zero(), |acc, c| {
                acc * y + Rational::from_integer((*c).into())
            });
            total += &xp * inner;
            xp *= x;
        }
        total
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // highest total degree first reads most naturally: x^2 + x + y
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        write_terms(
            f,
            terms.into_iter().map(|(i, j, c)| {
                let m = format!("{}{}", mono("x", i), mono("y", j));
                (c, m)
            }),
        )
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unipoly_trims_and_multiplies() {
        let p = UniPoly::new(vec![1, 1, 0, 0]);
        assert_eq!(p.coeffs(), &[1, 1]);
        assert_eq!(p.mul(&p), UniPoly::one_plus_t_pow(2));
        assert_eq!(UniPoly::one_plus_t_pow(3).coeffs(), &[1, 3, 3, 1]);
        assert_eq!(UniPoly::new(vec![0, 0]).degree(), None);
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(3));
        assert_eq!(p.shift(2).coeffs(), &[0, 0, 1, 1]);
    }

    #[test]
    fn bipoly_arithmetic() {
        let tri = BiPoly::x()
            .mul(&BiPoly::x())
            .add(&BiPoly::x())
            .add(&BiPoly::y());
        assert_eq!(tri.to_string(), "x^2 + x + y");
        assert_eq!(tri.coeff(2, 0), 1);
        assert_eq!(tri.eval(&BigInt::one(), &BigInt::one()), BigInt::from(3));
        assert_eq!(BiPoly::one().shift(1, 2), BiPoly::monomial(1, 1, 2));
        assert_eq!(
            BiPoly::new(vec![vec![0], vec![]]),
            BiPoly::zero()
        );
    }

    #[test]
    fn display_signs() {
        assert_eq!(UniPoly::new(vec![-1, 0, 2]).to_string(), "-1 + 2t^2");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }
}
