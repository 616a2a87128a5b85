use serde::Serialize;

use super::{Circulation, Ring};
use crate::algebra::{Rational, UniPoly};
use crate::check::Check;
use crate::error::Result;
use crate::graph::Graph;
use crate::kirchhoff::{binomial, check_capacity, circulation_from_vector, integral_circulations, GradedBasis};
use crate::algebra::int::rank_big;
use crate::tutte::poincare;

/// Greedy Macaulay representation `a = C(a_j, j) + C(a_{j-1}, j-1) + ...`
/// as `(a_k, k)` pairs with strictly decreasing `a_k`. Empty for `a = 0`.
pub fn macaulay_representation(a: u64, j: u32) -> Vec<(u64, u32)> {
    let mut rest = a as u128;
    let mut out = Vec::new();
    let mut k = j;
    while rest > 0 && k > 0 {
        let mut x = k as u64;
        while binomial(x as usize + 1, k as usize) <= rest {
            x += 1;
        }
        rest -= binomial(x as usize, k as usize);
        out.push((x, k));
        k -= 1;
    }
    out
}

/// `ψ_j(a)`: shift every term of the Macaulay representation up by one in
/// both arguments.
pub fn pseudopower(a: u64, j: u32) -> u128 {
    assert!(j >= 1, "pseudopower needs j >= 1");
    macaulay_representation(a, j)
        .into_iter()
        .map(|(x, k)| binomial(x as usize + 1, k as usize + 1))
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    pub sequence: Vec<usize>,
    pub checks: Vec<Check>,
}

impl InequalityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| !c.failed())
    }
}

/// Runs the inequality suite on the Poincaré coefficients.
pub fn verify_inequalities(g: &Graph) -> Result<InequalityReport> {
    let d = poincare(g)?;
    let seq: Vec<usize> = d.coeffs().iter().map(|&c| c as usize).collect();
    verify_inequalities_with(g, &seq)
}

/// Runs the inequality suite on a given sequence `d_0, d_1, ...`.
pub fn verify_inequalities_with(g: &Graph, seq: &[usize]) -> Result<InequalityReport> {
    check_capacity(g)?;
    let m = g.edge_count();
    let n = g.vertex_count();
    let k = g.component_count();
    let ell = g.cut_edges().len();
    let top = m - ell;
    let d = |j: usize| seq.get(j).copied().unwrap_or(0);
    let mut checks = Vec::new();

    checks.push(Check::new("d0 equals 1", d(0) == 1, format!("d0 = {}", d(0))));
    checks.push(Check::new(
        "d1 equals cyclomatic number",
        d(1) == m + k - n,
        format!("d1 = {}, m - n + k = {}", d(1), m + k - n),
    ));
    checks.push(Check::new(
        "top degree equals 1",
        d(top) == 1,
        format!("d{top} = {}", d(top)),
    ));
    let outside: Vec<usize> = (0..seq.len().max(m + 1))
        .filter(|&j| (d(j) != 0) != (j <= top))
        .collect();
    checks.push(Check::new(
        "support is 0..=m-l",
        outside.is_empty(),
        format!("m - l = {top}, violating degrees {outside:?}"),
    ));

    let bad: Vec<String> = (1..m)
        .filter(|&j| d(j + 1) as u128 > pseudopower(d(j) as u64, j as u32))
        .map(|j| format!("d{} = {} > psi_{j}({}) = {}", j + 1, d(j + 1), d(j), pseudopower(d(j) as u64, j as u32)))
        .collect();
    checks.push(Check::new(
        "pseudopower growth bound",
        bad.is_empty(),
        if bad.is_empty() { "d_{j+1} <= psi_j(d_j) for all j".to_string() } else { bad.join("; ") },
    ));

    let lengths: Vec<usize> = g
        .basic_flows()
        .iter()
        .map(|(_, f)| f.iter().filter(|&&x| x != 0).count())
        .collect();
    let bound = lengths
        .iter()
        .fold(UniPoly::one(), |acc, &r| acc.mul(&UniPoly::new(vec![1; r + 1])));
    let bad: Vec<usize> = (0..=top).filter(|&j| d(j) as i64 > bound.coeff(j)).collect();
    checks.push(Check::new(
        "fundamental cycle product bound",
        bad.is_empty(),
        format!("cycle lengths {lengths:?}, bound {:?}, violating degrees {bad:?}", bound.coeffs()),
    ));

    let girth_check = match g.girth() {
        None => Check::new("girth binomial equality", true, "no cycles"),
        Some(gg) => {
            let d1 = m + k - n;
            let bad: Vec<usize> = (0..=gg.min(m))
                .filter(|&j| {
                    let expected = if j == 0 { 1 } else { binomial(d1 + j - 1, j) };
                    d(j) as u128 != expected
                })
                .collect();
            Check::new(
                "girth binomial equality",
                bad.is_empty(),
                format!("girth {gg}, d1 = {d1}, violating degrees {bad:?}"),
            )
        }
    };
    checks.push(girth_check);

    let half = top / 2;
    let monotone = (0..half).all(|j| d(j) <= d(j + 1));
    checks.push(Check::new(
        "front half nondecreasing",
        monotone,
        format!("d0..d{half} = {:?}", &seq[..(half + 1).min(seq.len())]),
    ));
    let bad: Vec<usize> = (0..=half).filter(|&j| d(j) > d(top - j)).collect();
    checks.push(Check::new(
        "d_j <= d_(m-l-j)",
        bad.is_empty(),
        format!("violating degrees {bad:?}"),
    ));

    let bad: Vec<usize> = (1..top)
        .filter(|&j| (d(j) as u128).pow(2) < d(j - 1) as u128 * d(j + 1) as u128)
        .collect();
    checks.push(Check::exploratory(
        "log-concavity",
        bad.is_empty(),
        format!("violating degrees {bad:?}"),
    ));

    checks.push(multiplication_rank_check(g, seq)?);
    Ok(InequalityReport {
        sequence: seq.to_vec(),
        checks,
    })
}

/// Multiplication by `φ^{<m-l-2j>}` with `φ = Σ_i 3^i β_{e_i}` maps the
/// degree-`j` circulations injectively into degree `m-l-j`.
fn multiplication_rank_check(g: &Graph, seq: &[usize]) -> Result<Check> {
    let m = g.edge_count();
    let top = m - g.cut_edges().len();
    let mut phi = Circulation::zero(Ring::Rational, m)?;
    let mut weight = Rational::from_integer(1.into());
    for (_, flow) in g.basic_flows() {
        weight *= Rational::from_integer(3.into());
        phi = phi.add(&Circulation::from_flow(Ring::Rational, &flow)?.scale(&weight)?)?;
    }
    let mut bad = Vec::new();
    let mut ranks = Vec::new();
    for j in 0..=top / 2 {
        let multiplier = phi.divided_power(top - 2 * j)?;
        let source = GradedBasis::new(m, j);
        let target = GradedBasis::new(m, top - j);
        let mut rows = Vec::new();
        for v in integral_circulations(g, j)? {
            let c = circulation_from_vector(Ring::Rational, m, &source, &v)?;
            let image = c.multiply(&multiplier)?;
            rows.push(image.to_vector(&target).into_iter().map(|x| x.to_integer()).collect::<Vec<_>>());
        }
        let r = rank_big(&rows, target.len());
        ranks.push(r);
        if r != seq.get(j).copied().unwrap_or(0) {
            bad.push(j);
        }
    }
    Ok(Check::new(
        "multiplication map rank",
        bad.is_empty(),
        format!("ranks {ranks:?}, violating degrees {bad:?}"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pseudopower_examples() {
        assert_eq!(pseudopower(0, 3), 0);
        assert_eq!(pseudopower(3, 1), 6);
        assert_eq!(pseudopower(4, 2), 5);
        assert_eq!(pseudopower(10, 3), 15);
        assert_eq!(pseudopower(6, 2), 10);
        assert_eq!(macaulay_representation(4, 2), vec![(3, 2), (1, 1)]);
    }

    #[test]
    fn macaulay_is_exact() {
        for j in 1..6u32 {
            for a in 0..200u64 {
                let rep = macaulay_representation(a, j);
                let sum: u128 = rep.iter().map(|&(x, k)| binomial(x as usize, k as usize)).sum();
                assert_eq!(sum, a as u128);
                for w in rep.windows(2) {
                    assert!(w[0].0 > w[1].0);
                }
                if let Some(&(x, k)) = rep.last() {
                    assert!(x >= k as u64 && k >= 1);
                }
            }
        }
    }

    #[test]
    fn k4_suite_passes() {
        let r = verify_inequalities(&Graph::complete(4)).unwrap();
        assert!(r.passed(), "{:#?}", r.checks);
        assert_eq!(r.sequence, vec![1, 3, 6, 10, 11, 6, 1]);
    }

    #[test]
    fn cycles_and_forests_pass() {
        for n in 1..=5 {
            assert!(verify_inequalities(&Graph::cycle(n)).unwrap().passed());
        }
        assert!(verify_inequalities(&Graph::path(4)).unwrap().passed());
    }

    #[test]
    fn detects_bad_sequence() {
        let r = verify_inequalities_with(&Graph::complete(4), &[1, 3, 7, 10, 11, 6, 1]).unwrap();
        let failed: Vec<&str> = r.checks.iter().filter(|c| c.failed()).map(|c| c.name.as_str()).collect();
        assert!(failed.contains(&"pseudopower growth bound"));
        assert!(failed.contains(&"girth binomial equality"));
    }
}
