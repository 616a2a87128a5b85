//! Tutte polynomial, its Poincaré specialization, and the number of maximal
//! forests.

use std::collections::HashMap;

use crate::algebra::{BiPoly, UniPoly};
use crate::error::{Error, Result};
use crate::graph::{DisjointSets, EdgeSubset, Graph, SUBSET_TABLE_LIMIT};

/// Largest edge count for which the subset-sum oracles are run alongside
/// the recursion.
pub const ORACLE_EDGE_LIMIT: usize = 12;

pub type TuttePolynomial = BiPoly;
pub type PoincarePolynomial = UniPoly;

/// Edges as vertex-index pairs, kept in ascending edge-id order so the first
/// usable edge is the lowest-id one.
#[derive(Clone)]
struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    fn from_graph(g: &Graph) -> Self {
        Multigraph {
            n: g.vertex_count(),
            edges: g.positions_by_id().into_iter().map(|p| g.endpoints(p)).collect(),
        }
    }

    /// Exact description up to a degree-sorted vertex relabeling; equal
    /// keys always mean isomorphic graphs.
    fn key(&self) -> Vec<(u8, u8)> {
        let mut degree = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            degree[a] += 1;
            degree[b] += 1;
        }
        let mut order: Vec<usize> = (0..self.n).filter(|&v| degree[v] > 0).collect();
        order.sort_by_key(|&v| (degree[v], v));
        let mut label = vec![0u8; self.n];
        for (i, &v) in order.iter().enumerate() {
            label[v] = i as u8;
        }
        let mut key: Vec<(u8, u8)> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (label[a], label[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        key.sort_unstable();
        key
    }

    fn is_bridge(&self, i: usize) -> bool {
        let (a, b) = self.edges[i];
        if a == b {
            return false;
        }
        let mut ds = DisjointSets::new(self.n);
        for (j, &(x, y)) in self.edges.iter().enumerate() {
            if j != i {
                ds.union(x, y);
            }
        }
        ds.find(a) != ds.find(b)
    }

    fn delete(&self, i: usize) -> Multigraph {
        let mut edges = self.edges.clone();
        edges.remove(i);
        Multigraph { n: self.n, edges }
    }

    /// Merges the endpoints of edge `i` (head into tail) and removes it.
    fn contract(&self, i: usize) -> Multigraph {
        let (keep, gone) = self.edges[i];
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &(a, b))| {
                let f = |v: usize| if v == gone { keep } else { v };
                (f(a), f(b))
            })
            .collect();
        Multigraph { n: self.n, edges }
    }
}

fn deletion_contraction(g: Multigraph, memo: &mut HashMap<Vec<(u8, u8)>, BiPoly>) -> BiPoly {
    let mut g = g;
    let loops = g.edges.iter().filter(|(a, b)| a == b).count();
    g.edges.retain(|(a, b)| a != b);
    let mut bridges = 0;
    while let Some(i) = (0..g.edges.len()).find(|&i| g.is_bridge(i)) {
        g = g.contract(i);
        bridges += 1;
    }
    let core = if g.edges.is_empty() {
        BiPoly::one()
    } else {
        let key = g.key();
        if let Some(t) = memo.get(&key) {
            t.clone()
        } else {
            // every remaining edge is neither a loop nor a bridge; take the
            // lowest-id one
            let t = deletion_contraction(g.delete(0), memo)
                .add(&deletion_contraction(g.contract(0), memo));
            memo.insert(key, t.clone());
            t
        }
    };
    core.shift(bridges, loops)
}

/// Tutte polynomial by deletion-contraction alone, as a product over
/// connected components.
pub fn tutte_deletion_contraction(g: &Graph) -> TuttePolynomial {
    let mut memo = HashMap::new();
    let mut total = BiPoly::one();
    for part in component_edge_sets(g) {
        let sub = g.delete(g.all_edges().difference(part)).unwrap();
        total = total.mul(&deletion_contraction(Multigraph::from_graph(&sub), &mut memo));
    }
    total
}

fn component_edge_sets(g: &Graph) -> Vec<EdgeSubset> {
    let mut ds = g.merged_classes(g.all_edges());
    let mut by_root: std::collections::BTreeMap<usize, EdgeSubset> = Default::default();
    for p in 0..g.edge_count() {
        let (a, _) = g.endpoints(p);
        let r = ds.find(a);
        let s = by_root.entry(r).or_default();
        *s = s.with(p);
    }
    by_root.into_values().collect()
}

/// Rank of the cycle matroid restricted to `s`.
fn matroid_rank(g: &Graph, s: EdgeSubset) -> usize {
    let mut ds = DisjointSets::new(g.vertex_count());
    s.positions()
        .filter(|&p| {
            let (a, b) = g.endpoints(p);
            ds.union(a, b)
        })
        .count()
}

fn check_subset_capacity(g: &Graph) -> Result<()> {
    if g.edge_count() > SUBSET_TABLE_LIMIT {
        return Err(Error::Capacity {
            what: "edge count for subset enumeration",
            actual: g.edge_count(),
            limit: SUBSET_TABLE_LIMIT,
        });
    }
    Ok(())
}

/// `Σ_{S ⊆ E} (x-1)^{r(E)-r(S)} (y-1)^{|S|-r(S)}`.
pub fn tutte_rank_nullity(g: &Graph) -> Result<TuttePolynomial> {
    check_subset_capacity(g)?;
    let m = g.edge_count();
    let full = matroid_rank(g, g.all_edges());
    let mut counts = vec![vec![0i64; m + 1]; full + 1];
    for mask in 0..(1u64 << m) {
        let s = EdgeSubset::from_mask(mask);
        let r = matroid_rank(g, s);
        counts[full - r][s.len() - r] += 1;
    }
    let binom = |n: usize| UniPoly::one_plus_t_pow(n);
    let mut t = BiPoly::zero();
    for (a, row) in counts.iter().enumerate() {
        for (b, &c) in row.iter().enumerate() {
            if c == 0 {
                continue;
            }
            // (x-1)^a (y-1)^b
            let (pa, pb) = (binom(a), binom(b));
            let mut coeffs = vec![vec![0i64; b + 1]; a + 1];
            for i in 0..=a {
                for j in 0..=b {
                    let sign = if (a - i + b - j) % 2 == 0 { 1 } else { -1 };
                    coeffs[i][j] = c * sign * pa.coeff(i) * pb.coeff(j);
                }
            }
            t = t.add(&BiPoly::new(coeffs));
        }
    }
    Ok(t)
}

/// Tutte polynomial; for graphs with at most [`ORACLE_EDGE_LIMIT`] edges the
/// recursion is checked against the rank-nullity expansion.
pub fn tutte(g: &Graph) -> Result<TuttePolynomial> {
    let t = tutte_deletion_contraction(g);
    if g.edge_count() <= ORACLE_EDGE_LIMIT {
        let oracle = tutte_rank_nullity(g)?;
        if oracle != t {
            return Err(Error::mismatch(
                "tutte polynomial",
                format!("deletion-contraction gives {t}, rank-nullity sum gives {oracle}"),
            ));
        }
    }
    Ok(t)
}

/// `t^{r} T(1/t, 1+t)` where `r` is the rank of the graph.
pub fn poincare_from_tutte(t: &TuttePolynomial, rank: usize) -> Result<PoincarePolynomial> {
    let mut d = UniPoly::zero();
    for (i, j, c) in t.terms() {
        if i > rank {
            return Err(Error::mismatch(
                "poincare polynomial",
                format!("x-degree {i} exceeds graph rank {rank}"),
            ));
        }
        let term = UniPoly::one_plus_t_pow(j).shift(rank - i);
        d = d.add(&term.mul(&UniPoly::new(vec![c])));
    }
    if let Some(k) = d.coeffs().iter().position(|&c| c < 0) {
        return Err(Error::mismatch(
            "poincare polynomial",
            format!("negative coefficient at t^{k}"),
        ));
    }
    Ok(d)
}

/// `D_X(t) = t^{n-k} T_X(1/t, 1+t)`.
pub fn poincare(g: &Graph) -> Result<PoincarePolynomial> {
    let rank = g.vertex_count() - g.component_count();
    poincare_from_tutte(&tutte(g)?, rank)
}

/// Number of maximal forests, read off as `T(1,1)`.
pub fn complexity_from_tutte(t: &TuttePolynomial) -> u64 {
    let total: i64 = t.terms().map(|(_, _, c)| c).sum();
    total as u64
}

/// Counts edge subsets of size `n - k` with no cycle.
pub fn count_maximal_forests(g: &Graph) -> Result<u64> {
    check_subset_capacity(g)?;
    let rank = g.vertex_count() - g.component_count();
    let m = g.edge_count();
    Ok((0..(1u64 << m))
        .map(EdgeSubset::from_mask)
        .filter(|s| s.len() == rank && matroid_rank(g, *s) == rank)
        .count() as u64)
}

/// Number of maximal forests `κ(X)`.
pub fn complexity(g: &Graph) -> Result<u64> {
    let k = complexity_from_tutte(&tutte(g)?);
    if g.edge_count() <= ORACLE_EDGE_LIMIT {
        let direct = count_maximal_forests(g)?;
        if direct != k {
            return Err(Error::mismatch(
                "complexity",
                format!("T(1,1) = {k}, direct forest count = {direct}"),
            ));
        }
    }
    Ok(k)
}
