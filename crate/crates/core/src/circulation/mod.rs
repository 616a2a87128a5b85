//! The graded algebra of circulations: functionals on edge subsets with the
//! subset-convolution product.

mod inequalities;
mod monomials;

pub use inequalities::{
    macaulay_representation, pseudopower, verify_inequalities, verify_inequalities_with,
    InequalityReport,
};
pub use monomials::{
    generator_family, monomial_dimensions, relation_membership_check, MembershipReport,
};

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, Graph, MAX_EDGES, SUBSET_TABLE_LIMIT};
use crate::kirchhoff::{relation_matrix, GradedBasis};

/// Coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Rational,
    Integer,
    /// Integers modulo a prime `p <= 97`.
    Prime(u32),
}

pub const MAX_PRIME: u32 = 97;

impl Ring {
    pub fn prime(p: u32) -> Result<Ring> {
        let r = Ring::Prime(p);
        r.validate()?;
        Ok(r)
    }

    fn validate(self) -> Result<()> {
        if let Ring::Prime(p) = self {
            let is_prime = p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0);
            if !is_prime || p > MAX_PRIME {
                return Err(Error::input(format!(
                    "{p} is not a prime at most {MAX_PRIME}"
                )));
            }
        }
        Ok(())
    }

    /// Brings an arbitrary rational into the ring.
    pub fn element(self, x: &Rational) -> Result<Rational> {
        match self {
            Ring::Rational => Ok(x.clone()),
            Ring::Integer => {
                if x.is_integer() {
                    Ok(x.clone())
                } else {
                    Err(Error::domain(format!("{x} is not an integer")))
                }
            }
            Ring::Prime(p) => {
                let p = BigInt::from(p);
                let d = x.denom().mod_floor(&p);
                if d.is_zero() {
                    return Err(Error::domain(format!(
                        "denominator of {x} is not invertible modulo {p}"
                    )));
                }
                // d^(p-2) is the inverse of d modulo p
                let inv = d.modpow(&(&p - 2u32), &p);
                Ok(Rational::from_integer((x.numer() * inv).mod_floor(&p)))
            }
        }
    }

    /// Reduction of a value already known to be integral in this ring.
    fn reduce(self, x: Rational) -> Rational {
        match self {
            Ring::Prime(p) => Rational::from_integer(x.to_integer().mod_floor(&BigInt::from(p))),
            _ => x,
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Ring::Prime(p) => p,
            _ => 0,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Rational => write!(f, "Q"),
            Ring::Integer => write!(f, "Z"),
            Ring::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// A functional on the edge subsets of an `m`-edge graph with values in a
/// ring; absent subsets have value zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Circulation {
    ring: Ring,
    m: usize,
    table: BTreeMap<u64, Rational>,
}

impl Circulation {
    pub fn zero(ring: Ring, m: usize) -> Result<Self> {
        ring.validate()?;
        if m > MAX_EDGES {
            return Err(Error::Capacity {
                what: "edge count",
                actual: m,
                limit: MAX_EDGES,
            });
        }
        Ok(Circulation {
            ring,
            m,
            table: BTreeMap::new(),
        })
    }

    /// The multiplicative identity: value 1 on the empty set.
    pub fn unit(ring: Ring, m: usize) -> Result<Self> {
        Self::xi(ring, m, EdgeSubset::EMPTY)
    }

    /// The coordinate functional of `s`.
    pub fn xi(ring: Ring, m: usize, s: EdgeSubset) -> Result<Self> {
        Self::from_table(ring, m, [(s, Rational::one())])
    }

    /// Sums repeated subsets; zero values are dropped.
    pub fn from_table(
        ring: Ring,
        m: usize,
        entries: impl IntoIterator<Item = (EdgeSubset, Rational)>,
    ) -> Result<Self> {
        let mut c = Self::zero(ring, m)?;
        let full = EdgeSubset::full(m);
        for (s, v) in entries {
            if !s.is_subset_of(full) {
                return Err(Error::input(format!(
                    "subset {:#x} is outside the {m} edges",
                    s.mask()
                )));
            }
            let v = ring.element(&v)?;
            c.accumulate(s.mask(), v);
        }
        Ok(c)
    }

    /// Degree-one functional with value `values[p]` on the edge at position `p`.
    pub fn from_edge_values(ring: Ring, values: &[Rational]) -> Result<Self> {
        Self::from_table(
            ring,
            values.len(),
            values
                .iter()
                .enumerate()
                .map(|(p, v)| (EdgeSubset::singleton(p), v.clone())),
        )
    }

    pub fn from_flow(ring: Ring, values: &[i64]) -> Result<Self> {
        let values: Vec<Rational> = values.iter().map(|&v| Rational::from_integer(v.into())).collect();
        Self::from_edge_values(ring, &values)
    }

    fn accumulate(&mut self, mask: u64, v: Rational) {
        let total = match self.table.remove(&mask) {
            Some(old) => self.ring.reduce(old + v),
            None => self.ring.reduce(v),
        };
        if !total.is_zero() {
            self.table.insert(mask, total);
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn get(&self, s: EdgeSubset) -> Rational {
        self.table.get(&s.mask()).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero entries by increasing mask.
    pub fn entries(&self) -> impl Iterator<Item = (EdgeSubset, &Rational)> {
        self.table.iter().map(|(m, v)| (EdgeSubset::from_mask(*m), v))
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_empty()
    }

    /// Number of subsets with a nonzero value.
    pub fn support_size(&self) -> usize {
        self.table.len()
    }

    /// True iff every nonzero value sits on a subset of size `j`.
    pub fn is_homogeneous(&self, j: usize) -> bool {
        self.table.keys().all(|m| m.count_ones() as usize == j)
    }

    pub fn graded_component(&self, j: usize) -> Circulation {
        Circulation {
            ring: self.ring,
            m: self.m,
            table: self
                .table
                .iter()
                .filter(|(m, _)| m.count_ones() as usize == j)
                .map(|(m, v)| (*m, v.clone()))
                .collect(),
        }
    }

    /// Values on the degree-`j` subsets, in basis order.
    pub fn to_vector(&self, basis: &GradedBasis) -> Vec<Rational> {
        basis.subsets().iter().map(|s| self.get(*s)).collect()
    }

    fn compatible(&self, other: &Circulation) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.to_string(), other.ring.to_string()));
        }
        if self.m != other.m {
            return Err(Error::input(format!(
                "circulations on {} and {} edges cannot be combined",
                self.m, other.m
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Circulation) -> Result<Circulation> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (m, v) in &other.table {
            out.accumulate(*m, v.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Result<Circulation> {
        let c = self.ring.element(c)?;
        let mut out = Circulation {
            table: BTreeMap::new(),
            ..self.clone()
        };
        for (m, v) in &self.table {
            out.accumulate(*m, v * &c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Circulation {
        self.scale(&-Rational::one()).expect("-1 lies in every ring")
    }

    /// `(φ·θ)(σ) = Σ_{τ ⊆ σ} φ(τ) θ(σ \ τ)`.
    pub fn multiply(&self, other: &Circulation) -> Result<Circulation> {
        self.compatible(other)?;
        let mut acc: HashMap<u64, Rational> = HashMap::new();
        for (a, x) in &self.table {
            for (b, y) in &other.table {
                if a & b == 0 {
                    *acc.entry(a | b).or_insert_with(Rational::zero) += x * y;
                }
            }
        }
        let mut out = Circulation {
            table: BTreeMap::new(),
            ..self.clone()
        };
        for (m, v) in acc {
            out.accumulate(m, v);
        }
        Ok(out)
    }

    pub fn power(&self, r: usize) -> Result<Circulation> {
        let mut out = Circulation::unit(self.ring, self.m)?;
        for _ in 0..r {
            out = out.multiply(self)?;
        }
        Ok(out)
    }

    /// `exp(φ)(σ)`: the sum over set partitions of `σ` of the product of
    /// `φ` on the blocks. Requires `φ(∅) = 0`.
    pub fn exponential(&self) -> Result<Circulation> {
        if self.table.contains_key(&0) {
            return Err(Error::domain("exponential needs a zero degree-0 part"));
        }
        let union = self.table.keys().fold(0u64, |a, b| a | b);
        if union.count_ones() as usize > SUBSET_TABLE_LIMIT {
            return Err(Error::Capacity {
                what: "support width for the exponential",
                actual: union.count_ones() as usize,
                limit: SUBSET_TABLE_LIMIT,
            });
        }
        let blocks: Vec<(u64, &Rational)> = self.table.iter().map(|(m, v)| (*m, v)).collect();
        let mut values: HashMap<u64, Rational> = HashMap::new();
        values.insert(0, Rational::one());
        let mut out = Circulation::unit(self.ring, self.m)?;
        // submasks of the union in increasing order; the block holding the
        // lowest element of s is split off first
        let mut s: u64 = 0;
        loop {
            s = s.wrapping_sub(union) & union;
            if s == 0 {
                break;
            }
            let low = s & s.wrapping_neg();
            let mut total = Rational::zero();
            for &(b, v) in &blocks {
                if b & low != 0 && b & !s == 0 {
                    if let Some(rest) = values.get(&(s ^ b)) {
                        total += v * rest;
                    }
                }
            }
            let total = self.ring.reduce(total);
            if !total.is_zero() {
                out.accumulate(s, total.clone());
                values.insert(s, total);
            }
        }
        Ok(out)
    }

    fn require_degree_one(&self, what: &str) -> Result<()> {
        if self.is_homogeneous(1) {
            Ok(())
        } else {
            Err(Error::domain(format!("{what} needs a homogeneous degree-1 argument")))
        }
    }

    /// `φ^{<j>}(σ) = Π_{e ∈ σ} φ(e)` for `|σ| = j`, the degree-`j` part of
    /// `exp(φ)`.
    pub fn divided_power(&self, j: usize) -> Result<Circulation> {
        self.require_degree_one("divided power")?;
        let support: Vec<(u64, &Rational)> = self.table.iter().map(|(m, v)| (*m, v)).collect();
        let mut out = Circulation {
            table: BTreeMap::new(),
            ..self.clone()
        };
        if j == 0 {
            return Circulation::unit(self.ring, self.m);
        }
        if j > support.len() {
            return Ok(out);
        }
        let mut idx: Vec<usize> = (0..j).collect();
        loop {
            let mask = idx.iter().fold(0u64, |a, &i| a | support[i].0);
            let value = idx
                .iter()
                .fold(Rational::one(), |a, &i| self.ring.reduce(a * support[i].1));
            out.accumulate(mask, value);
            // next combination
            let mut k = j;
            while k > 0 && idx[k - 1] == support.len() - j + k - 1 {
                k -= 1;
            }
            if k == 0 {
                break;
            }
            idx[k - 1] += 1;
            for t in k..j {
                idx[t] = idx[t - 1] + 1;
            }
        }
        Ok(out)
    }

    /// Greatest `n` with `φ^n != 0`; zero for the zero functional.
    pub fn nilpotence(&self) -> Result<usize> {
        self.require_degree_one("nilpotence")?;
        let mut n = 0;
        let mut cur = self.clone();
        while !cur.is_zero() {
            n += 1;
            cur = cur.multiply(self)?;
        }
        Ok(n)
    }

    /// True iff every graded component is annihilated by the relation
    /// matrix of its degree (over the coefficient ring).
    pub fn annihilates_relations(&self, g: &Graph) -> Result<bool> {
        if g.edge_count() != self.m {
            return Err(Error::input(format!(
                "circulation has {} edges, graph has {}",
                self.m,
                g.edge_count()
            )));
        }
        for j in 1..=self.m {
            let part = self.graded_component(j);
            if part.is_zero() {
                continue;
            }
            let n = relation_matrix(g, j)?;
            let x = part.to_vector(&n.columns);
            for r in 0..n.matrix.rows() {
                let dot = n
                    .matrix
                    .row(r)
                    .iter()
                    .zip(&x)
                    .filter(|(a, _)| **a != 0)
                    .fold(Rational::zero(), |acc, (a, v)| acc + v * Rational::from_integer((*a).into()));
                if !self.ring.reduce(dot).is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for Circulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Circulation[{}; m={}]{{", self.ring, self.m)?;
        for (i, (m, v)) in self.table.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m:#b}: {v}")?;
        }
        write!(f, "}}")
    }
}

pub(crate) fn is_unit_valued(v: &[i64]) -> bool {
    v.iter().all(|x| x.abs() <= 1)
}
