use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::Rational;

/// Truncated q-expansion with nonnegative rational exponents, all `<= bound`.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    bound: u64,
    terms: BTreeMap<Rational, i64>,
}

impl QSeries {
    pub fn zero(bound: u64) -> Self {
        QSeries {
            bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(bound: u64) -> Self {
        let mut s = Self::zero(bound);
        s.add_term(Rational::zero(), 1);
        s
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Adds `c q^e`; terms beyond the bound are dropped.
    ///
    /// Panics on a negative exponent.
    pub fn add_term(&mut self, e: Rational, c: i64) {
        assert!(!e.is_negative(), "negative q exponent {e}");
        if c == 0 || e > Rational::from_integer(self.bound.into()) {
            return;
        }
        let v = self.terms.get(&e).copied().unwrap_or(0) + c;
        if v == 0 {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, v);
        }
    }

    pub fn coeff(&self, e: &Rational) -> i64 {
        self.terms.get(e).copied().unwrap_or(0)
    }

    pub fn coeff_int(&self, e: u64) -> i64 {
        self.coeff(&Rational::from_integer(e.into()))
    }

    /// Nonzero terms in increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (&Rational, i64)> {
        self.terms.iter().map(|(e, c)| (e, *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_integral_exponents(&self) -> bool {
        self.terms.keys().all(|e| e.is_integer())
    }

    /// Restricts to a smaller bound.
    pub fn truncate(&self, bound: u64) -> QSeries {
        let mut s = QSeries::zero(bound.min(self.bound));
        for (e, c) in self.terms() {
            s.add_term(e.clone(), c);
        }
        s
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let mut s = self.truncate(self.bound.min(other.bound));
        for (e, c) in other.terms() {
            s.add_term(e.clone(), c);
        }
        s
    }

    /// Product truncated at the smaller of the two bounds. Exact up to that
    /// bound because all exponents are nonnegative.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let bound = self.bound.min(other.bound);
        let limit = Rational::from_integer(bound.into());
        let mut s = QSeries::zero(bound);
        for (e1, c1) in self.terms() {
            if *e1 > limit {
                break;
            }
            for (e2, c2) in other.terms() {
                let e = e1 + e2;
                if e > limit {
                    break;
                }
                s.add_term(e, c1 * c2);
            }
        }
        s
    }

    /// First exponent at which the two series differ, if any, up to the
    /// smaller bound.
    pub fn first_difference(&self, other: &QSeries) -> Option<Rational> {
        let limit = Rational::from_integer(self.bound.min(other.bound).into());
        let exps: std::collections::BTreeSet<&Rational> =
            self.terms.keys().chain(other.terms.keys()).collect();
        exps.into_iter()
            .take_while(|e| **e <= limit)
            .find(|e| self.coeff(e) != other.coeff(e))
            .cloned()
    }
}

/// `ψ(α | w z) = Σ_{n ∈ Z} q^{w (n + α)^2}`, keeping exponents `<= bound`.
pub fn psi_series(alpha: &Rational, w: u64, bound: u64) -> QSeries {
    assert!(w >= 1, "psi series weight must be positive");
    let mut s = QSeries::zero(bound);
    let limit = Rational::from_integer(bound.into());
    let weight = Rational::from_integer(w.into());
    let start = (-alpha).floor().to_integer();
    let exponent = |n: &num_bigint::BigInt| {
        let x = Rational::from_integer(n.clone()) + alpha;
        &weight * &x * &x
    };
    let mut n = start.clone();
    loop {
        let e = exponent(&n);
        if e > limit {
            break;
        }
        s.add_term(e, 1);
        n -= 1;
    }
    let mut n = start + 1;
    loop {
        let e = exponent(&n);
        if e > limit {
            break;
        }
        s.add_term(e, 1);
        n += 1;
    }
    s
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 + O(q^{})", self.bound + 1);
        }
        for (i, (e, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let a = c.abs();
            if e.is_zero() {
                write!(f, "{a}")?;
                continue;
            }
            if a != 1 {
                write!(f, "{a}")?;
            }
            if e.is_one() {
                write!(f, "q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries[<= {}]({self})", self.bound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qi};

    fn series(bound: u64, terms: &[(Rational, i64)]) -> QSeries {
        let mut s = QSeries::zero(bound);
        for (e, c) in terms {
            s.add_term(e.clone(), *c);
        }
        s
    }

    #[test]
    fn psi_examples() {
        assert_eq!(
            psi_series(&qi(0), 1, 4),
            series(4, &[(qi(0), 1), (qi(1), 2), (qi(4), 2)])
        );
        assert_eq!(
            psi_series(&q(1, 2), 1, 3),
            series(3, &[(q(1, 4), 2), (q(9, 4), 2)])
        );
        assert_eq!(psi_series(&qi(3), 2, 20), psi_series(&qi(0), 2, 20));
        assert_eq!(psi_series(&qi(-2), 3, 12), psi_series(&qi(0), 3, 12));
    }

    #[test]
    fn product_truncates() {
        let a = psi_series(&qi(0), 1, 4);
        let p = a.mul(&a);
        // sums of two squares: r_2(n) for n <= 4
        assert_eq!(p.coeff_int(0), 1);
        assert_eq!(p.coeff_int(1), 4);
        assert_eq!(p.coeff_int(2), 4);
        assert_eq!(p.coeff_int(3), 0);
        assert_eq!(p.coeff_int(4), 4);
        assert_eq!(p.bound(), 4);
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut s = QSeries::one(3);
        s.add_term(qi(0), -1);
        assert!(s.is_empty());
        s.add_term(qi(5), 1);
        assert!(s.is_empty());
    }

    #[test]
    fn first_difference_and_display() {
        let a = psi_series(&qi(0), 3, 12);
        let b = psi_series(&qi(0), 2, 12);
        assert_eq!(a.first_difference(&a), None);
        assert_eq!(a.first_difference(&b), Some(qi(2)));
        assert_eq!(a.to_string(), "1 + 2q^3 + 2q^12");
        assert_eq!(psi_series(&q(1, 2), 1, 3).to_string(), "2q^1/4 + 2q^9/4");
    }
}
