use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::{is_unit_valued, Circulation, Ring};
use crate::algebra::int::rank_big;
use crate::error::Result;
use crate::graph::{DisjointSets, Graph};
use crate::kirchhoff::{check_capacity, GradedBasis};
use crate::tutte::{poincare_from_tutte, tutte};

/// Dimension per degree of the span of the divided-power monomials in the
/// basic flows, each flow `β_c` raised to at most its support size.
pub fn monomial_dimensions(g: &Graph) -> Result<Vec<usize>> {
    check_capacity(g)?;
    let m = g.edge_count();
    let mut generators = Vec::new();
    for (_, flow) in g.basic_flows() {
        let beta = Circulation::from_flow(Ring::Rational, &flow)?;
        let r = flow.iter().filter(|&&x| x != 0).count();
        let powers = (0..=r)
            .map(|k| beta.divided_power(k))
            .collect::<Result<Vec<_>>>()?;
        generators.push(powers);
    }
    let bases: Vec<GradedBasis> = (0..=m).map(|j| GradedBasis::new(m, j)).collect();
    let mut rows: Vec<Vec<Vec<BigInt>>> = vec![Vec::new(); m + 1];
    let unit = Circulation::unit(Ring::Rational, m)?;
    collect_monomials(&generators, 0, unit, 0, &bases, &mut rows)?;
    Ok(rows
        .iter()
        .enumerate()
        .map(|(j, r)| rank_big(r, bases[j].len()))
        .collect())
}

fn collect_monomials(
    generators: &[Vec<Circulation>],
    i: usize,
    current: Circulation,
    degree: usize,
    bases: &[GradedBasis],
    rows: &mut [Vec<Vec<BigInt>>],
) -> Result<()> {
    if i == generators.len() {
        let v = current
            .to_vector(&bases[degree])
            .into_iter()
            .map(|x| x.to_integer())
            .collect();
        rows[degree].push(v);
        return Ok(());
    }
    for (k, power) in generators[i].iter().enumerate() {
        if degree + k >= bases.len() {
            break;
        }
        let next = if k == 0 {
            current.clone()
        } else {
            current.multiply(power)?
        };
        if k > 0 && next.is_zero() {
            continue;
        }
        collect_monomials(generators, i + 1, next, degree + k, bases, rows)?;
    }
    Ok(())
}

/// True iff the edges with nonzero value form a single cycle.
fn supports_a_cycle(g: &Graph, flow: &[i64]) -> bool {
    let support: Vec<usize> = (0..flow.len()).filter(|&p| flow[p] != 0).collect();
    if support.is_empty() {
        return false;
    }
    let mut degree = vec![0usize; g.vertex_count()];
    let mut ds = DisjointSets::new(g.vertex_count());
    for &p in &support {
        let (a, b) = g.endpoints(p);
        degree[a] += 1;
        degree[b] += 1;
        ds.union(a, b);
    }
    let touched: Vec<usize> = (0..degree.len()).filter(|&v| degree[v] > 0).collect();
    let root = ds.find(touched[0]);
    touched.iter().all(|&v| degree[v] == 2 && ds.find(v) == root)
}

/// Basic flows, plus every sum and difference of two of them that is again
/// a `±1` flow on a single cycle. Labels name the chords by edge id.
pub fn generator_family(g: &Graph) -> Vec<(String, Vec<i64>)> {
    let flows = g.basic_flows();
    let mut family: Vec<(String, Vec<i64>)> = flows
        .iter()
        .map(|(c, f)| (format!("b{c}"), f.clone()))
        .collect();
    for h in 0..flows.len() {
        for k in h + 1..flows.len() {
            for (sign, op) in [(1, '+'), (-1, '-')] {
                let v: Vec<i64> = flows[h]
                    .1
                    .iter()
                    .zip(&flows[k].1)
                    .map(|(a, b)| a + sign * b)
                    .collect();
                if is_unit_valued(&v) && supports_a_cycle(g, &v) {
                    family.push((format!("b{}{op}b{}", flows[h].0, flows[k].0), v));
                }
            }
        }
    }
    family
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipReport {
    pub generators: Vec<String>,
    /// Number of divided powers evaluated.
    pub evaluations: usize,
    /// Generators with a divided power that failed to vanish, with the
    /// offending degree.
    pub nonvanishing: Vec<(String, usize)>,
    pub dimensions: Vec<usize>,
    pub dimension_total: u64,
    pub poincare_at_one: u64,
    pub tutte_at_one_two: u64,
}

impl MembershipReport {
    pub fn passed(&self) -> bool {
        self.nonvanishing.is_empty()
            && self.dimension_total == self.poincare_at_one
            && self.poincare_at_one == self.tutte_at_one_two
    }
}

/// For each generator `θ` with support size `s` and each `r` in `s..=m`,
/// checks that `θ^{<1+r>}` vanishes, and certifies that the monomial
/// dimensions sum to `D_X(1) = T_X(1,2)`.
pub fn relation_membership_check(g: &Graph) -> Result<MembershipReport> {
    check_capacity(g)?;
    let m = g.edge_count();
    let family = generator_family(g);
    let mut evaluations = 0;
    let mut nonvanishing = Vec::new();
    for (label, flow) in &family {
        let theta = Circulation::from_flow(Ring::Rational, flow)?;
        let s = flow.iter().filter(|&&x| x != 0).count();
        for r in s..=m {
            evaluations += 1;
            if !theta.divided_power(1 + r)?.is_zero() {
                nonvanishing.push((label.clone(), 1 + r));
            }
        }
    }
    let dimensions = monomial_dimensions(g)?;
    let t = tutte(g)?;
    let rank = g.vertex_count() - g.component_count();
    let d = poincare_from_tutte(&t, rank)?;
    Ok(MembershipReport {
        generators: family.into_iter().map(|(l, _)| l).collect(),
        evaluations,
        nonvanishing,
        dimension_total: dimensions.iter().sum::<usize>() as u64,
        dimensions,
        poincare_at_one: d.coeffs().iter().sum::<i64>() as u64,
        tutte_at_one_two: t
            .eval(&BigInt::from(1), &BigInt::from(2))
            .to_u64()
            .unwrap_or(u64::MAX),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn monomial_dimension_examples() {
        assert_eq!(
            monomial_dimensions(&Graph::complete(4)).unwrap(),
            vec![1, 3, 6, 10, 11, 6, 1]
        );
        for n in 1..=5 {
            assert_eq!(monomial_dimensions(&Graph::cycle(n)).unwrap(), vec![1; n as usize + 1]);
        }
        assert_eq!(monomial_dimensions(&Graph::path(3)).unwrap(), vec![1, 0, 0]);
        assert_eq!(monomial_dimensions(&Graph::empty()).unwrap(), vec![1]);
    }

    #[test]
    fn triangle_membership() {
        let r = relation_membership_check(&Graph::cycle(3)).unwrap();
        assert_eq!(r.generators, vec!["b3".to_string()]);
        assert_eq!(r.evaluations, 1);
        assert!(r.passed());
        assert_eq!(r.dimension_total, 4);
    }

    #[test]
    fn k4_membership() {
        let r = relation_membership_check(&Graph::complete(4)).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.dimension_total, 38);
    }

    #[test]
    fn cycle_support_detection() {
        let g = Graph::complete(4);
        // edges 1:(1,2) 2:(1,3) 4:(2,3) form a triangle
        assert!(supports_a_cycle(&g, &[1, -1, 0, 1, 0, 0]));
        assert!(!supports_a_cycle(&g, &[1, 1, 1, 0, 0, 0]));
        assert!(!supports_a_cycle(&g, &[0; 6]));
    }
}
