//! The lattice of integer flows: Gram data, characteristic flows and their
//! potentials, coset systems, and theta series.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::{
    denominator_lcm, determinant_z, dot, enumerate_by_norm, min_norm_affine, psi_series, MatrixQ,
    MatrixZ, QSeries, Rational,
};
use crate::error::{Error, Result};
use crate::graph::{Direction, EdgeId, EdgeSubset, Graph, VertexId};
use crate::tutte::{complexity, tutte};

/// Largest coset system enumerated explicitly.
pub const MAX_REPRESENTATIVES: u64 = 1 << 20;

/// The minimum-norm flow taking value 1 on an arc, with its potential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicFlow {
    pub edge: EdgeId,
    pub direction: Direction,
    /// Values in stored edge orientation, indexed by edge position; the value
    /// at `edge` is `direction.sign()`.
    pub flow: Vec<Rational>,
    /// Zero at the head of the arc and off its component.
    pub potential: BTreeMap<VertexId, Rational>,
}

impl CharacteristicFlow {
    pub fn norm(&self) -> Rational {
        dot(&self.flow, &self.flow)
    }

    fn arc_ends(&self, g: &Graph) -> (VertexId, VertexId) {
        let e = g.edge_by_id(self.edge).unwrap();
        match self.direction {
            Direction::Forward => (e.tail, e.head),
            Direction::Reverse => (e.head, e.tail),
        }
    }

    /// Checks that the potential vanishes at the head of the arc, that every
    /// other edge carries the potential difference across it, and that the
    /// norm is one more than the potential at the tail of the arc.
    pub fn potential_identities_hold(&self, g: &Graph) -> bool {
        let (tail, head) = self.arc_ends(g);
        let nu = |v: &VertexId| self.potential.get(v).cloned().unwrap_or_else(Rational::zero);
        nu(&head).is_zero()
            && g.edges().iter().enumerate().all(|(p, c)| {
                c.id == self.edge || self.flow[p] == nu(&c.head) - nu(&c.tail)
            })
            && self.norm() == Rational::one() + nu(&tail)
    }
}

fn incidence_q(g: &Graph) -> MatrixQ {
    let rows = g.incidence_matrix();
    MatrixQ::from_rows(
        g.edge_count(),
        rows.into_iter()
            .map(|r| r.into_iter().map(|v| Rational::from_integer(v.into())).collect())
            .collect(),
    )
}

pub fn characteristic_flow(g: &Graph, e: EdgeId, direction: Direction) -> Result<CharacteristicFlow> {
    let pos = g.edge_position(e)?;
    if g.is_cut_edge(e)? {
        return Err(Error::domain(format!(
            "edge {e} is a cut-edge, so every flow vanishes on it"
        )));
    }
    let sign = Rational::from_integer(direction.sign().into());
    let flow = min_norm_affine(&incidence_q(g), &[(pos, sign)])?;
    let edge = g.edges()[pos];
    let head = match direction {
        Direction::Forward => edge.head,
        Direction::Reverse => edge.tail,
    };
    // integrate outward from the head of the arc, avoiding e
    let mut potential: BTreeMap<VertexId, Rational> =
        g.vertices().iter().map(|&v| (v, Rational::zero())).collect();
    let mut seen = std::collections::HashSet::from([head]);
    let mut queue = VecDeque::from([head]);
    while let Some(u) = queue.pop_front() {
        for (p, c) in g.edges().iter().enumerate() {
            if p == pos || c.is_loop() {
                continue;
            }
            let value = &flow[p];
            let (next, nv) = if c.tail == u && !seen.contains(&c.head) {
                (c.head, &potential[&u] + value)
            } else if c.head == u && !seen.contains(&c.tail) {
                (c.tail, &potential[&u] - value)
            } else {
                continue;
            };
            seen.insert(next);
            potential.insert(next, nv);
            queue.push_back(next);
        }
    }
    Ok(CharacteristicFlow {
        edge: e,
        direction,
        flow,
        potential,
    })
}

/// `⟨χ_a, χ_a⟩ = κ(X) / κ(X \ e)`.
pub fn norm_identity_check(g: &Graph, e: EdgeId) -> Result<bool> {
    let chi = characteristic_flow(g, e, Direction::Forward)?;
    let ratio = Rational::new(
        complexity(g)?.into(),
        complexity(&g.delete_edge(e)?)?.into(),
    );
    Ok(chi.norm() == ratio)
}

/// Basic-flow basis of the integer flows and its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowLattice {
    pub chords: Vec<EdgeId>,
    pub basis: Vec<Vec<i64>>,
    pub gram: MatrixZ,
    pub determinant: BigInt,
}

impl FlowLattice {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

fn gram_of(vectors: &[Vec<i64>]) -> MatrixZ {
    let d = vectors.len();
    let mut g = MatrixZ::zeros(d, d);
    for h in 0..d {
        for k in 0..d {
            let v: i64 = vectors[h].iter().zip(&vectors[k]).map(|(a, b)| a * b).sum();
            g.set(h, k, v);
        }
    }
    g
}

/// Lattice data without the determinant cross-check.
pub fn lattice_unchecked(g: &Graph) -> FlowLattice {
    let (chords, basis): (Vec<EdgeId>, Vec<Vec<i64>>) = g.basic_flows().into_iter().unzip();
    let gram = gram_of(&basis);
    let determinant = determinant_z(&gram);
    FlowLattice {
        chords,
        basis,
        gram,
        determinant,
    }
}

/// The flow lattice; its Gram determinant is checked against `κ(X)`.
pub fn lattice(g: &Graph) -> Result<FlowLattice> {
    let l = lattice_unchecked(g);
    let kappa = complexity(g)?;
    if l.determinant != BigInt::from(kappa) {
        return Err(Error::mismatch(
            "flow lattice determinant",
            format!("det(Gram) = {}, complexity = {kappa}", l.determinant),
        ));
    }
    Ok(l)
}

/// Orthogonal rescaled characteristic flows and coset representatives of
/// their span in the flow lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSystem {
    pub chords: Vec<EdgeId>,
    /// `χ_i`, computed with the earlier chords deleted and extended by zero.
    pub flows: Vec<Vec<Rational>>,
    pub indices: Vec<u64>,
    pub scaled: Vec<Vec<i64>>,
    pub weights: Vec<u64>,
    /// Flows `Σ g_i β_i` with `0 <= g_i < r_i`.
    pub representatives: Vec<Vec<i64>>,
}

fn to_u64(x: &BigInt, what: &'static str) -> Result<u64> {
    x.to_u64().ok_or(Error::Capacity {
        what,
        actual: x.bits() as usize,
        limit: 64,
    })
}

pub fn coset_system(g: &Graph) -> Result<CosetSystem> {
    let flows_basic = g.basic_flows();
    let m = g.edge_count();
    let mut removed = EdgeSubset::EMPTY;
    let mut cs = CosetSystem {
        chords: Vec::new(),
        flows: Vec::new(),
        indices: Vec::new(),
        scaled: Vec::new(),
        weights: Vec::new(),
        representatives: Vec::new(),
    };
    for (c, _) in &flows_basic {
        let sub = g.delete(removed)?;
        let chi_sub = characteristic_flow(&sub, *c, Direction::Forward)?;
        let mut chi = vec![Rational::zero(); m];
        for (p, e) in sub.edges().iter().enumerate() {
            chi[g.edge_position(e.id)?] = chi_sub.flow[p].clone();
        }
        let r = denominator_lcm(&chi);
        let phi: Vec<i64> = chi
            .iter()
            .map(|x| (x * Rational::from_integer(r.clone())).to_integer().to_i64())
            .collect::<Option<_>>()
            .ok_or(Error::Capacity {
                what: "rescaled characteristic flow entry",
                actual: 64,
                limit: 63,
            })?;
        let w: i64 = phi.iter().map(|x| x * x).sum();
        cs.chords.push(*c);
        cs.flows.push(chi);
        cs.indices.push(to_u64(&r, "edge index")?);
        cs.scaled.push(phi);
        cs.weights.push(w as u64);
        removed = removed.with(g.edge_position(*c)?);
    }
    for h in 0..cs.scaled.len() {
        for k in h + 1..cs.scaled.len() {
            let ip: i64 = cs.scaled[h].iter().zip(&cs.scaled[k]).map(|(a, b)| a * b).sum();
            if ip != 0 {
                return Err(Error::mismatch(
                    "coset system",
                    format!("rescaled flows {h} and {k} have inner product {ip}"),
                ));
            }
        }
    }
    let kappa = BigInt::from(complexity(g)?);
    let prod_w: BigInt = cs.weights.iter().map(|&w| BigInt::from(w)).product();
    let prod_r: BigInt = cs.indices.iter().map(|&r| BigInt::from(r)).product();
    if prod_w != &kappa * &prod_r * &prod_r {
        return Err(Error::mismatch(
            "coset system",
            format!("product of weights {prod_w} differs from complexity {kappa} times squared index product {}", &prod_r * &prod_r),
        ));
    }
    let count = to_u64(&prod_r, "coset count")?;
    if count > MAX_REPRESENTATIVES {
        return Err(Error::Capacity {
            what: "coset representative count",
            actual: count as usize,
            limit: MAX_REPRESENTATIVES as usize,
        });
    }
    let mut digits = vec![0u64; cs.indices.len()];
    loop {
        let mut lambda = vec![0i64; m];
        for (i, &gi) in digits.iter().enumerate() {
            for (x, b) in lambda.iter_mut().zip(&flows_basic[i].1) {
                *x += gi as i64 * b;
            }
        }
        cs.representatives.push(lambda);
        // odometer over 0 <= g_i < r_i
        let mut i = 0;
        while i < digits.len() {
            digits[i] += 1;
            if digits[i] < cs.indices[i] {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == digits.len() {
            break;
        }
    }
    Ok(cs)
}

/// Theta series as a sum over coset representatives of products of
/// one-variable theta factors.
pub fn theta_product(g: &Graph, bound: u64) -> Result<QSeries> {
    let cs = coset_system(g)?;
    let mut total = QSeries::zero(bound);
    for lambda in &cs.representatives {
        let mut term = QSeries::one(bound);
        for (phi, &w) in cs.scaled.iter().zip(&cs.weights) {
            let ip: i64 = lambda.iter().zip(phi).map(|(a, b)| a * b).sum();
            let alpha = Rational::new(ip.into(), (w as i64).into());
            term = term.mul(&psi_series(&alpha, w, bound));
            if term.is_empty() {
                break;
            }
        }
        total = total.add(&term);
    }
    if !total.has_integral_exponents() || total.coeff_int(0) != 1 {
        return Err(Error::mismatch(
            "theta product",
            format!("series {total} must have integer exponents and constant term 1"),
        ));
    }
    Ok(total)
}

/// Theta series by enumerating all flows of norm at most `bound`.
pub fn theta_enumerate(g: &Graph, bound: u64) -> Result<QSeries> {
    let l = lattice_unchecked(g);
    theta_from_gram(&l.gram, bound)
}

pub fn theta_from_gram(gram: &MatrixZ, bound: u64) -> Result<QSeries> {
    let mut s = QSeries::zero(bound);
    for v in enumerate_by_norm(&gram.to_rational(), bound)? {
        let mut norm = 0i64;
        for h in 0..v.len() {
            for k in 0..v.len() {
                norm += v[h] * v[k] * gram.get(h, k);
            }
        }
        s.add_term(Rational::from_integer(norm.into()), 1);
    }
    Ok(s)
}

/// Number of integer flows of squared norm `s`.
pub fn flows_of_norm(g: &Graph, s: u64) -> Result<i64> {
    Ok(theta_enumerate(g, s)?.coeff_int(s))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompareReport {
    pub tutte_equal: bool,
    /// First exponent at which the theta series differ, if any up to the bound.
    pub theta_first_difference: Option<String>,
    pub max_norm: u64,
}

pub fn codichromatic_compare(g1: &Graph, g2: &Graph, bound: u64) -> Result<CompareReport> {
    let tutte_equal = tutte(g1)? == tutte(g2)?;
    let a = theta_enumerate(g1, bound)?;
    let b = theta_enumerate(g2, bound)?;
    Ok(CompareReport {
        tutte_equal,
        theta_first_difference: a.first_difference(&b).map(|e| e.to_string()),
        max_norm: bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qi};

    #[test]
    fn triangle_characteristic_flow() {
        let g = Graph::cycle(3);
        let chi = characteristic_flow(&g, EdgeId(1), Direction::Forward).unwrap();
        assert_eq!(chi.flow, vec![qi(1), qi(1), qi(1)]);
        assert_eq!(chi.norm(), qi(3));
        assert!(chi.potential_identities_hold(&g));
        let rev = characteristic_flow(&g, EdgeId(1), Direction::Reverse).unwrap();
        assert_eq!(rev.flow, vec![qi(-1), qi(-1), qi(-1)]);
        assert!(rev.potential_identities_hold(&g));
    }

    #[test]
    fn loop_and_cut_edge() {
        let g = Graph::from_pairs(&[(1, 1), (1, 2)]);
        let chi = characteristic_flow(&g, EdgeId(1), Direction::Forward).unwrap();
        assert_eq!(chi.flow, vec![qi(1), qi(0)]);
        assert!(norm_identity_check(&g, EdgeId(1)).unwrap());
        assert!(matches!(
            characteristic_flow(&g, EdgeId(2), Direction::Forward),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn k4_characteristic_flow() {
        let g = Graph::complete(4);
        let chi = characteristic_flow(&g, EdgeId(1), Direction::Forward).unwrap();
        assert_eq!(chi.norm(), qi(2));
        let halves = chi.flow.iter().filter(|x| **x == q(1, 2) || **x == q(-1, 2)).count();
        assert_eq!(halves, 4);
        // edge 6 joins 3 and 4, opposite to edge 1 joining 1 and 2
        assert_eq!(chi.flow[5], qi(0));
        assert!(chi.potential_identities_hold(&g));
        assert!(norm_identity_check(&g, EdgeId(1)).unwrap());
    }

    #[test]
    fn lattice_examples() {
        let l = lattice(&Graph::cycle(3)).unwrap();
        assert_eq!(l.gram.to_rows(), vec![vec![3]]);
        let l = lattice(&Graph::parallel(2)).unwrap();
        assert_eq!(l.gram.to_rows(), vec![vec![2]]);
        assert_eq!(l.basis, vec![vec![-1, 1]]);
        let l = lattice(&Graph::path(3)).unwrap();
        assert_eq!(l.rank(), 0);
        assert_eq!(l.determinant, BigInt::one());
        assert_eq!(lattice(&Graph::complete(4)).unwrap().determinant, BigInt::from(16));
    }

    #[test]
    fn coset_examples() {
        for n in 1..=5 {
            let cs = coset_system(&Graph::cycle(n)).unwrap();
            assert_eq!(cs.indices, vec![1]);
            assert_eq!(cs.weights, vec![n as u64]);
            assert_eq!(cs.representatives.len(), 1);
        }
        let cs = coset_system(&Graph::complete(4)).unwrap();
        assert_eq!(cs.indices[0], 2);
        assert_eq!(cs.weights[0], 8);
        let forest = coset_system(&Graph::path(3)).unwrap();
        assert!(forest.chords.is_empty());
        assert_eq!(forest.representatives, vec![vec![0, 0]]);
    }

    #[test]
    fn theta_examples() {
        let c3 = Graph::cycle(3);
        let expected = "1 + 2q^3 + 2q^12";
        assert_eq!(theta_product(&c3, 12).unwrap().to_string(), expected);
        assert_eq!(theta_enumerate(&c3, 12).unwrap().to_string(), expected);
        let dbl = Graph::parallel(2);
        assert_eq!(theta_product(&dbl, 8).unwrap().to_string(), "1 + 2q^2 + 2q^8");
        assert_eq!(theta_product(&Graph::path(4), 9).unwrap().to_string(), "1");
        assert_eq!(theta_enumerate(&Graph::complete(4), 0).unwrap().to_string(), "1");
    }

    #[test]
    fn k4_theta_routes_agree() {
        let k4 = Graph::complete(4);
        let a = theta_product(&k4, 12).unwrap();
        let b = theta_enumerate(&k4, 12).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn flow_counts() {
        assert_eq!(flows_of_norm(&Graph::cycle(3), 3).unwrap(), 2);
        assert_eq!(flows_of_norm(&Graph::complete(4), 0).unwrap(), 1);
    }

    #[test]
    fn tutte_equivalent_pair_separated_by_flows() {
        let left = Graph::from_pairs(&[
            (1, 4), (1, 2), (5, 2), (5, 4), (1, 3), (4, 3), (3, 5), (5, 6), (4, 6), (4, 6),
        ]);
        let right = Graph::from_pairs(&[
            (1, 4), (1, 2), (5, 4), (5, 2), (1, 3), (3, 2), (4, 6), (5, 6), (4, 3), (4, 3),
        ]);
        let r = codichromatic_compare(&left, &right, 7).unwrap();
        assert!(r.tutte_equal);
        assert_eq!(flows_of_norm(&left, 7).unwrap(), 20);
        assert_eq!(flows_of_norm(&right, 7).unwrap(), 22);
        assert_eq!(flows_of_norm(&left, 6).unwrap(), 24);
        assert_eq!(flows_of_norm(&right, 6).unwrap(), 22);
        assert_eq!(r.theta_first_difference.as_deref(), Some("6"));
    }
}
