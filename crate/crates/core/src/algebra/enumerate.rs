//! Short-vector enumeration in orthogonalized coordinates.

use num_traits::{Signed, ToPrimitive, Zero};

use super::linear::is_positive_definite;
use super::matrix::MatrixQ;
use super::Rational;
use crate::error::{Error, Result};

/// Writes `vᵀGv = Σ_i q_ii (v_i + Σ_{j>i} q_ij v_j)^2`.
fn quadratic_decomposition(g: &MatrixQ) -> Vec<Vec<Rational>> {
    let n = g.rows();
    let mut q = g.to_rows();
    for i in 0..n {
        for j in i + 1..n {
            q[j][i] = q[i][j].clone();
            q[i][j] = &q[i][j] / &q[i][i];
        }
        for k in i + 1..n {
            for l in k..n {
                let d = &q[k][i] * &q[i][l];
                q[k][l] -= d;
            }
        }
    }
    q
}

/// Every integer vector `v` with `vᵀGv <= bound`, in lexicographic order.
pub fn enumerate_by_norm(g: &MatrixQ, bound: u64) -> Result<Vec<Vec<i64>>> {
    if !is_positive_definite(g) {
        return Err(Error::input(
            "Gram matrix is not symmetric positive definite",
        ));
    }
    let n = g.rows();
    let q = quadratic_decomposition(g);
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    if n == 0 {
        out.push(x);
        return Ok(out);
    }
    descend(&q, n - 1, Rational::from_integer(bound.into()), &mut x, &mut out);
    out.sort();
    Ok(out)
}

fn descend(q: &[Vec<Rational>], i: usize, budget: Rational, x: &mut [i64], out: &mut Vec<Vec<i64>>) {
    let n = x.len();
    let center = -(i + 1..n)
        .filter(|&j| x[j] != 0)
        .fold(Rational::zero(), |acc, j| acc + &q[i][j] * Rational::from_integer(x[j].into()));
    let qii = &q[i][i];
    let visit = |xi: i64, x: &mut [i64], out: &mut Vec<Vec<i64>>| -> bool {
        let d = Rational::from_integer(xi.into()) - &center;
        let cost = qii * &d * &d;
        if cost > budget {
            return false;
        }
        x[i] = xi;
        if i == 0 {
            out.push(x.to_vec());
        } else {
            descend(q, i - 1, &budget - cost, x, out);
        }
        true
    };
    let start = center
        .floor()
        .to_integer()
        .to_i64()
        .expect("enumeration center fits in i64");
    let mut xi = start;
    while visit(xi, x, out) {
        xi -= 1;
    }
    let mut xi = start + 1;
    while visit(xi, x, out) {
        xi += 1;
    }
    x[i] = 0;
    debug_assert!(!budget.is_negative());
}
