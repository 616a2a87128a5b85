//! Rational linear algebra: rank, kernels, minimum-norm points, positive
//! definiteness.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::int::rank_big;
use super::matrix::MatrixQ;
use super::Rational;
use crate::error::{Error, Result};

/// Clears denominators row by row.
pub(crate) fn integer_rows(m: &MatrixQ) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|r| {
            let row = m.row(r);
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| x.numer() * (&l / x.denom()))
                .collect()
        })
        .collect()
}

/// Rank over the rationals.
pub fn rank(m: &MatrixQ) -> usize {
    rank_big(&integer_rows(m), m.cols())
}

/// Reduced row echelon form; returns the nonzero rows and pivot columns.
pub fn rref(m: &MatrixQ) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut a = m.to_rows();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols() {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Basis of the right null space, one vector per free column.
pub fn kernel_basis(m: &MatrixQ) -> Vec<Vec<Rational>> {
    let (rows, pivots) = rref(m);
    let n = m.cols();
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Some solution of `A x = b`, or `None` when inconsistent.
pub fn solve(a: &MatrixQ, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.rows(), b.len(), "right-hand side has wrong length");
    let n = a.cols();
    let aug = MatrixQ::from_rows(
        n + 1,
        (0..a.rows())
            .map(|r| {
                let mut row = a.row(r).to_vec();
                row.push(b[r].clone());
                row
            })
            .collect(),
    );
    let (rows, pivots) = rref(&aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (row, &p) in rows.iter().zip(&pivots) {
        x[p] = row[n].clone();
    }
    Some(x)
}

/// The minimum-norm solution of `A x = b`: `x = Aᵀy` with `A Aᵀ y = b`.
pub fn min_norm_solution(a: &MatrixQ, b: &[Rational]) -> Result<Vec<Rational>> {
    if a.rows() != b.len() {
        return Err(Error::input(format!(
            "right-hand side has length {}, matrix has {} rows",
            b.len(),
            a.rows()
        )));
    }
    let at = a.transpose();
    let y = solve(&a.mul(&at), b)
        .ok_or_else(|| Error::Infeasible("affine system has no solution".into()))?;
    Ok(at.apply(&y))
}

/// Minimum-norm point of `{x : M x = 0, x_i = v_i for (i, v_i) in fixed}`.
pub fn min_norm_affine(m: &MatrixQ, fixed: &[(usize, Rational)]) -> Result<Vec<Rational>> {
    let n = m.cols();
    let mut rows = m.to_rows();
    let mut rhs = vec![Rational::zero(); rows.len()];
    for (i, v) in fixed {
        if *i >= n {
            return Err(Error::input(format!(
                "fixed coordinate {i} out of range for {n} columns"
            )));
        }
        let mut e = vec![Rational::zero(); n];
        e[*i] = Rational::one();
        rows.push(e);
        rhs.push(v.clone());
    }
    min_norm_solution(&MatrixQ::from_rows(n, rows), &rhs)
}

/// Leading principal minors, computed by elimination without pivoting.
/// Stops after the first zero minor.
pub fn leading_principal_minors(g: &MatrixQ) -> Vec<Rational> {
    let n = g.rows().min(g.cols());
    let mut a = g.to_rows();
    let mut minors = Vec::with_capacity(n);
    let mut acc = Rational::one();
    for k in 0..n {
        acc *= &a[k][k];
        minors.push(acc.clone());
        if a[k][k].is_zero() {
            break;
        }
        let pivot_row = a[k].clone();
        for row in a.iter_mut().skip(k + 1) {
            if row[k].is_zero() {
                continue;
            }
            let f = &row[k] / &pivot_row[k];
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(k) {
                *x -= &f * y;
            }
        }
    }
    minors
}

pub fn is_positive_definite(g: &MatrixQ) -> bool {
    g.is_symmetric() && {
        let minors = leading_principal_minors(g);
        minors.len() == g.rows() && minors.iter().all(Signed::is_positive)
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}
