//! Randomized algebra properties shared by the property tests and the
//! acceptance suite.

#![allow(dead_code)]

use kirchhoff::algebra::{q, qi, Rational};
use kirchhoff::circulation::{Circulation, Ring};
use kirchhoff::graph::{EdgeSubset, Graph};
use kirchhoff::kirchhoff::binomial;
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

pub const CASES: u32 = 256;

pub fn ring() -> impl Strategy<Value = Ring> {
    prop_oneof![
        Just(Ring::Rational),
        Just(Ring::Prime(2)),
        Just(Ring::Prime(3)),
        Just(Ring::Prime(5)),
    ]
}

fn value(ring: Ring) -> BoxedStrategy<Rational> {
    match ring {
        Ring::Rational => (-4i64..=4, 1i64..=3).prop_map(|(n, d)| q(n, d)).boxed(),
        _ => (-4i64..=4).prop_map(qi).boxed(),
    }
}

fn table(ring: Ring, m: usize, max_len: usize) -> impl Strategy<Value = Circulation> {
    prop::collection::vec((0u64..1 << m, value(ring)), 0..=max_len).prop_map(move |entries| {
        Circulation::from_table(ring, m, entries.into_iter().map(|(s, v)| (EdgeSubset::from_mask(s), v)))
            .unwrap()
    })
}

fn degree_one(ring: Ring, m: usize) -> impl Strategy<Value = Circulation> {
    prop::collection::vec(value(ring), m)
        .prop_map(move |values| Circulation::from_edge_values(ring, &values).unwrap())
}

/// Three arbitrary functionals on the same edge set.
pub fn triples() -> impl Strategy<Value = (Circulation, Circulation, Circulation)> {
    (ring(), 1usize..=5).prop_flat_map(|(r, m)| (table(r, m, 6), table(r, m, 6), table(r, m, 6)))
}

pub fn degree_one_pairs() -> impl Strategy<Value = (Circulation, Circulation)> {
    (ring(), 1usize..=6).prop_flat_map(|(r, m)| (degree_one(r, m), degree_one(r, m)))
}

pub fn degree_one_with_exponents() -> impl Strategy<Value = (Circulation, usize, usize)> {
    (ring(), 1usize..=7).prop_flat_map(|(r, m)| (degree_one(r, m), 0..=m, 0..=m))
}

/// Positive-degree rational functionals for the power-series form of `exp`.
pub fn positive_degree() -> impl Strategy<Value = Circulation> {
    (1usize..=5).prop_flat_map(|m| {
        prop::collection::vec((1u64..1 << m, value(Ring::Rational)), 0..=5).prop_map(move |entries| {
            Circulation::from_table(
                Ring::Rational,
                m,
                entries.into_iter().map(|(s, v)| (EdgeSubset::from_mask(s), v)),
            )
            .unwrap()
        })
    })
}

/// Integer combinations of the basic flows of a small graph.
pub fn graph_flows() -> impl Strategy<Value = (Graph, Circulation, Circulation)> {
    let graphs = vec![
        Graph::complete(4),
        Graph::cycle(4),
        Graph::from_pairs(&[(1, 2), (1, 2), (2, 3), (3, 1), (3, 3)]),
        Graph::from_pairs(&[(1, 2), (2, 3), (3, 4), (4, 1), (1, 3), (2, 4), (2, 4)]),
    ];
    (prop::sample::select(graphs), ring()).prop_flat_map(|(g, r)| {
        let flows: Vec<Vec<i64>> = g.basic_flows().into_iter().map(|(_, f)| f).collect();
        let d = flows.len();
        let combine = move |coeffs: Vec<i64>| {
            let m = flows.first().map_or(0, Vec::len);
            let mut sum = vec![0i64; m];
            for (c, f) in coeffs.iter().zip(&flows) {
                for (s, x) in sum.iter_mut().zip(f) {
                    *s += c * x;
                }
            }
            Circulation::from_flow(r, &sum).unwrap()
        };
        let combine2 = combine.clone();
        (
            Just(g),
            prop::collection::vec(-3i64..=3, d).prop_map(combine),
            prop::collection::vec(-3i64..=3, d).prop_map(combine2),
        )
    })
}

fn ok<E: std::fmt::Display>(r: Result<Circulation, E>) -> Result<Circulation, TestCaseError> {
    r.map_err(|e| TestCaseError::fail(e.to_string()))
}

pub fn ring_laws(
    (a, b, c): (Circulation, Circulation, Circulation),
) -> Result<(), TestCaseError> {
    let ab = ok(a.multiply(&b))?;
    prop_assert_eq!(ok(ab.multiply(&c))?, ok(a.multiply(&ok(b.multiply(&c))?))?);
    prop_assert_eq!(&ab, &ok(b.multiply(&a))?);
    prop_assert_eq!(
        ok(a.multiply(&ok(b.add(&c))?))?,
        ok(ab.add(&ok(a.multiply(&c))?))?
    );
    let one = ok(Circulation::unit(a.ring(), a.edge_count()))?;
    prop_assert_eq!(&ok(one.multiply(&a))?, &a);
    prop_assert!(ok(a.add(&a.neg()))?.is_zero());
    Ok(())
}

pub fn exp_homomorphism((phi, theta): (Circulation, Circulation)) -> Result<(), TestCaseError> {
    let lhs = ok(ok(phi.add(&theta))?.exponential())?;
    let rhs = ok(ok(phi.exponential())?.multiply(&ok(theta.exponential())?))?;
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

/// Over the rationals `exp(φ) = Σ φ^r / r!`.
pub fn exp_power_series(phi: Circulation) -> Result<(), TestCaseError> {
    let m = phi.edge_count();
    let mut sum = ok(Circulation::zero(Ring::Rational, m))?;
    let mut power = ok(Circulation::unit(Ring::Rational, m))?;
    let mut factorial = Rational::one();
    for r in 0..=m {
        if r > 0 {
            power = ok(power.multiply(&phi))?;
            factorial *= qi(r as i64);
        }
        sum = ok(sum.add(&ok(power.scale(&(Rational::one() / &factorial)))?))?;
    }
    prop_assert_eq!(ok(phi.exponential())?, sum);
    Ok(())
}

/// `φ^{<i>} φ^{<j>} = C(i+j, i) φ^{<i+j>}`, and the divided powers are the
/// graded pieces of `exp(φ)` with values `Π_{e ∈ σ} φ(e)`.
pub fn divided_powers((phi, i, j): (Circulation, usize, usize)) -> Result<(), TestCaseError> {
    let ring = phi.ring();
    let di = ok(phi.divided_power(i))?;
    let dj = ok(phi.divided_power(j))?;
    let dij = ok(phi.divided_power(i + j))?;
    let c = qi(binomial(i + j, i) as i64);
    prop_assert_eq!(ok(di.multiply(&dj))?, ok(dij.scale(&c))?);
    prop_assert_eq!(&ok(phi.exponential())?.graded_component(i), &di);
    for (s, v) in di.entries() {
        let product = s.positions().fold(Rational::one(), |a, p| a * phi.get(EdgeSubset::singleton(p)));
        prop_assert_eq!(v, &ring.element(&product).unwrap());
    }
    if ring == Ring::Rational {
        let factorial: i64 = (1..=i as i64).product();
        prop_assert_eq!(di, ok(ok(phi.power(i))?.scale(&q(1, factorial)))?);
    }
    Ok(())
}

/// `np(φ) = #supp φ` in characteristic zero and `min(p - 1, #supp φ)` over `F_p`.
pub fn nilpotence((phi, _, _): (Circulation, usize, usize)) -> Result<(), TestCaseError> {
    let support = phi.support_size();
    let np = phi.nilpotence().map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert!(np <= support);
    let expected = match phi.ring() {
        Ring::Prime(p) => support.min(p as usize - 1),
        _ => support,
    };
    prop_assert_eq!(np, expected);
    Ok(())
}

/// Products of flows are circulations.
pub fn flow_products((g, phi, theta): (Graph, Circulation, Circulation)) -> Result<(), TestCaseError> {
    let product = ok(phi.multiply(&theta))?;
    let holds = product.annihilates_relations(&g).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert!(holds);
    prop_assert!(ok(phi.exponential())?.annihilates_relations(&g).unwrap());
    Ok(())
}

fn runner() -> TestRunner {
    let config = Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

pub fn run<S: Strategy>(
    strategy: S,
    property: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    runner().run(&strategy, property).map_err(|e| e.to_string())
}

/// Every property at [`CASES`] cases each; the error names the failing one.
pub fn all_properties() -> Result<usize, String> {
    fn tag(name: &'static str) -> impl Fn(String) -> String {
        move |e| format!("{name}: {e}")
    }
    run(triples(), ring_laws).map_err(tag("ring laws"))?;
    run(degree_one_pairs(), exp_homomorphism).map_err(tag("exp homomorphism"))?;
    run(positive_degree(), exp_power_series).map_err(tag("exp power series"))?;
    run(degree_one_with_exponents(), divided_powers).map_err(tag("divided powers"))?;
    run(degree_one_with_exponents(), nilpotence).map_err(tag("nilpotence"))?;
    run(graph_flows(), flow_products).map_err(tag("flow products"))?;
    Ok(6 * CASES as usize)
}

pub fn zero_is_absorbing(c: &Circulation) -> bool {
    let z = Circulation::zero(c.ring(), c.edge_count()).unwrap();
    c.multiply(&z).unwrap().is_zero() && Rational::zero() == z.get(EdgeSubset::EMPTY)
}
