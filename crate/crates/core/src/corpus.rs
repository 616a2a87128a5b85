//! Every connected multigraph up to a given edge count, one per isomorphism
//! class, and the cross-check pipeline run on each of them.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{dot, Rational, UniPoly};
use crate::check::Check;
use crate::circulation::{monomial_dimensions, relation_membership_check, verify_inequalities};
use crate::error::{Error, Result};
use crate::flow_lattice::{
    characteristic_flow, lattice_unchecked, theta_enumerate, theta_product,
};
use crate::graph::{Direction, EdgeId, EdgeSubset, Graph};
use crate::kirchhoff::{rank_sequence, torsion_check};
use crate::tutte::{complexity, count_maximal_forests, poincare, tutte};

pub const MAX_CORPUS_EDGES: usize = 9;

/// Families of checks run on each corpus graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckGroup {
    Structure,
    Oracles,
    Torsion,
    Recurrences,
    Lattice,
    Theta,
    Inequalities,
    Orientation,
}

impl CheckGroup {
    pub const ALL: [CheckGroup; 8] = [
        CheckGroup::Structure,
        CheckGroup::Oracles,
        CheckGroup::Torsion,
        CheckGroup::Recurrences,
        CheckGroup::Lattice,
        CheckGroup::Theta,
        CheckGroup::Inequalities,
        CheckGroup::Orientation,
    ];
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusOptions {
    pub max_edges: usize,
    pub max_norm: u64,
    pub flip_trials: usize,
    pub seed: u64,
    pub groups: Vec<CheckGroup>,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions {
            max_edges: 7,
            max_norm: 12,
            flip_trials: 50,
            seed: 0x6b69_7263,
            groups: CheckGroup::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    pub index: usize,
    pub vertex_count: usize,
    /// Endpoint pairs in edge-id order.
    pub edges: Vec<(u32, u32)>,
    pub checks: Vec<Check>,
}

impl GraphReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| !c.failed())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub passed: usize,
    pub failed: usize,
    pub exploratory_violations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub max_edges: usize,
    pub graph_count: usize,
    pub tally: BTreeMap<String, CheckTally>,
    pub graphs: Vec<GraphReport>,
}

impl CorpusReport {
    pub fn passed(&self) -> bool {
        self.graphs.iter().all(GraphReport::passed)
    }

    /// `(graph index, check)` for every failed check.
    pub fn failures(&self) -> Vec<(usize, &Check)> {
        self.graphs
            .iter()
            .flat_map(|g| g.checks.iter().filter(|c| c.failed()).map(move |c| (g.index, c)))
            .collect()
    }
}

// adjacency as an upper-triangular multiplicity table, loops on the diagonal
#[derive(Clone, Debug)]
struct Shape {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Shape {
    fn adjacency(&self) -> Vec<Vec<u8>> {
        let mut a = vec![vec![0u8; self.n]; self.n];
        for &(u, v) in &self.edges {
            a[u][v] += 1;
            if u != v {
                a[v][u] += 1;
            }
        }
        a
    }

    fn refined_colours(&self, a: &[Vec<u8>]) -> Vec<usize> {
        let n = self.n;
        let initial: Vec<(usize, usize)> = (0..n)
            .map(|v| (a[v][v] as usize, a[v].iter().map(|&x| x as usize).sum()))
            .collect();
        let mut colours = rank_labels(&initial);
        loop {
            let signature: Vec<(usize, Vec<(usize, u8)>)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<(usize, u8)> = (0..n)
                        .filter(|&w| w != v && a[v][w] > 0)
                        .map(|w| (colours[w], a[v][w]))
                        .collect();
                    nb.sort_unstable();
                    (colours[v], nb)
                })
                .collect();
            let next = rank_labels(&signature);
            let stable = distinct(&next) == distinct(&colours);
            colours = next;
            if stable {
                return colours;
            }
        }
    }

    /// Lexicographically least relabeled table over all orderings that
    /// respect the refined colour classes.
    fn canonical(&self) -> (Vec<u8>, Vec<(usize, usize)>) {
        let a = self.adjacency();
        let colours = self.refined_colours(&a);
        let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &c) in colours.iter().enumerate() {
            cells.entry(c).or_default().push(v);
        }
        let mut cells: Vec<Vec<usize>> = cells.into_values().collect();
        let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
        loop {
            let order: Vec<usize> = cells.iter().flatten().copied().collect();
            let mut key = Vec::with_capacity(self.n * (self.n + 1) / 2 + 1);
            key.push(self.n as u8);
            for i in 0..self.n {
                for j in i..self.n {
                    key.push(a[order[i]][order[j]]);
                }
            }
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, order));
            }
            // advance the product of per-cell permutations
            let mut advanced = false;
            for cell in cells.iter_mut().rev() {
                if next_permutation(cell) {
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
        let (key, order) = best.expect("at least one ordering");
        let mut position = vec![0; self.n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (x, y) = (position[u], position[v]);
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort_unstable();
        (key, edges)
    }

    fn to_graph(&self) -> Graph {
        let vertices: Vec<u32> = (1..=self.n as u32).collect();
        let pairs: Vec<(u32, u32)> = self
            .edges
            .iter()
            .map(|&(u, v)| (u as u32 + 1, v as u32 + 1))
            .collect();
        Graph::with_vertices(&vertices, &pairs).expect("corpus shapes are valid graphs")
    }
}

fn rank_labels<T: Ord + Clone>(items: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = items.to_vec();
    sorted.sort();
    sorted.dedup();
    items
        .iter()
        .map(|x| sorted.binary_search(x).unwrap())
        .collect()
}

fn distinct(labels: &[usize]) -> usize {
    let mut v = labels.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.sort_unstable();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// One representative of each isomorphism class of connected multigraphs
/// (loops and parallel edges allowed) with at most `max_edges` edges,
/// ordered by edge count then canonical form. Vertices are `1..=n` and
/// edges run from the smaller to the larger endpoint.
pub fn connected_multigraphs(max_edges: usize) -> Result<Vec<Graph>> {
    if max_edges > MAX_CORPUS_EDGES {
        return Err(Error::Capacity {
            what: "corpus edge count",
            actual: max_edges,
            limit: MAX_CORPUS_EDGES,
        });
    }
    let mut level = vec![Shape {
        n: 1,
        edges: Vec::new(),
    }];
    let mut out: Vec<Graph> = level.iter().map(Shape::to_graph).collect();
    for _ in 0..max_edges {
        let mut next: BTreeMap<Vec<u8>, Shape> = BTreeMap::new();
        for s in &level {
            // a connected graph with an edge has a non-cut edge or a pendant one
            let mut extensions = Vec::new();
            for u in 0..s.n {
                for v in u..s.n {
                    extensions.push((s.n, (u, v)));
                }
                extensions.push((s.n + 1, (u, s.n)));
            }
            for (n, e) in extensions {
                let mut edges = s.edges.clone();
                edges.push(e);
                let (key, edges) = Shape { n, edges }.canonical();
                next.entry(key).or_insert(Shape { n, edges });
            }
        }
        level = next.into_values().collect();
        out.extend(level.iter().map(Shape::to_graph));
    }
    Ok(out)
}

fn guarded(name: &str, f: impl FnOnce() -> Result<Check>) -> Check {
    f().unwrap_or_else(|e| Check::new(name, false, format!("error: {e}")))
}

fn padded(p: &UniPoly, len: usize) -> Vec<usize> {
    (0..len.max(p.coeffs().len())).map(|j| p.coeff(j) as usize).collect()
}

fn structure_checks(g: &Graph, rng: &mut StdRng) -> Vec<Check> {
    let mut checks = Vec::new();
    let forest = g.maximal_forest();
    let n = g.vertex_count();
    checks.push(Check::new(
        "maximal forest shape",
        forest.len() == n - g.component_count() && g.delete(g.all_edges().difference(forest)).map(|f| f.is_forest()).unwrap_or(false),
        format!("{} forest edges", forest.len()),
    ));
    let rows = g.incidence_matrix();
    let annihilated = g
        .basic_flows()
        .iter()
        .all(|(_, f)| rows.iter().all(|r| r.iter().zip(f).map(|(a, b)| a * b).sum::<i64>() == 0));
    checks.push(Check::new("basic flows annihilated by incidence rows", annihilated, ""));
    let mut bad = Vec::new();
    for _ in 0..8 {
        let inside: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
        let summed: Vec<i64> = (0..g.edge_count())
            .map(|p| (0..n).filter(|&v| inside[v]).map(|v| rows[v][p]).sum())
            .collect();
        let cut: Vec<i64> = g
            .edges()
            .iter()
            .map(|e| {
                let t = inside[g.vertex_index(e.tail).unwrap()];
                let h = inside[g.vertex_index(e.head).unwrap()];
                h as i64 - t as i64
            })
            .collect();
        if summed != cut {
            bad.push(inside);
        }
    }
    checks.push(Check::new(
        "incidence rows sum to directed cut",
        bad.is_empty(),
        format!("{} violating vertex subsets", bad.len()),
    ));
    checks
}

/// `d_j` from the Tutte specialization, the relation ranks and the monomial
/// dimensions.
pub fn three_oracle_check(g: &Graph) -> Check {
    guarded("three-oracle agreement", || {
        let m = g.edge_count();
        let from_tutte = padded(&poincare(g)?, m + 1);
        let from_relations = rank_sequence(g)?;
        let from_monomials = monomial_dimensions(g)?;
        Ok(Check::new(
            "three-oracle agreement",
            from_tutte == from_relations && from_relations == from_monomials,
            format!("tutte {from_tutte:?}, relations {from_relations:?}, monomials {from_monomials:?}"),
        ))
    })
}

fn oracle_checks(g: &Graph) -> Vec<Check> {
    vec![
        three_oracle_check(g),
        guarded("spanning subgraph count", || {
            let r = relation_membership_check(g)?;
            Ok(Check::new(
                "spanning subgraph count",
                r.passed(),
                format!(
                    "monomial total {}, D(1) = {}, T(1,2) = {}, nonvanishing {:?}",
                    r.dimension_total, r.poincare_at_one, r.tutte_at_one_two, r.nonvanishing
                ),
            ))
        }),
    ]
}

fn torsion_checks(g: &Graph) -> Vec<Check> {
    vec![guarded("relation torsion", || {
        let mut bad = Vec::new();
        for j in 0..=g.edge_count() {
            if !torsion_check(g, j)? {
                bad.push(j);
            }
        }
        Ok(Check::new(
            "relation torsion",
            bad.is_empty(),
            format!("degrees with torsion {bad:?}"),
        ))
    })]
}

fn recurrence_checks(g: &Graph) -> Vec<Check> {
    let m = g.edge_count();
    let next_id = g.edges().iter().map(|e| e.id.0).max().unwrap_or(0) + 1;
    let mut checks = Vec::new();
    checks.push(guarded("deletion-contraction", || {
        let d = poincare(g)?;
        let mut bad = Vec::new();
        for e in g.edges() {
            if g.is_cut_edge(e.id)? {
                continue;
            }
            let rhs = poincare(&g.delete_edge(e.id)?)?.add(&poincare(&g.contract_edge(e.id)?)?.shift(1));
            if rhs != d {
                bad.push(e.id.0);
            }
        }
        Ok(Check::new("deletion-contraction", bad.is_empty(), format!("violating edges {bad:?}")))
    }));
    checks.push(guarded("doubled-edge recurrence", || {
        let d = poincare(g)?;
        let t_plus_t2 = UniPoly::new(vec![0, 1, 1]);
        let mut bad = Vec::new();
        for e in g.edges() {
            let doubled = poincare(&g.with_parallel_copy(e.id, EdgeId(next_id))?)?;
            let rhs = d.add(&t_plus_t2.mul(&poincare(&g.contract_edge(e.id)?)?));
            if doubled != rhs {
                bad.push(e.id.0);
            }
        }
        Ok(Check::new("doubled-edge recurrence", bad.is_empty(), format!("violating edges {bad:?}")))
    }));
    checks.push(guarded("one-point union", || {
        let d = poincare(g)?;
        let n = g.vertex_count() as u32;
        let wedge = g.union(&g.shifted(n - 1, next_id))?;
        let disjoint = g.union(&g.shifted(n, next_id))?;
        let square = d.mul(&d);
        let (a, b) = (poincare(&wedge)?, poincare(&disjoint)?);
        Ok(Check::new(
            "one-point union",
            a == square && b == square,
            format!("D^2 = {square}, one shared vertex {a}, none shared {b}"),
        ))
    }));
    checks.push(guarded("rank additivity", || {
        let d = rank_sequence(g)?;
        let mut bad = Vec::new();
        for e in g.edges() {
            let del = rank_sequence(&g.delete_edge(e.id)?)?;
            let at = |v: &[usize], j: usize| v.get(j).copied().unwrap_or(0);
            let ok = if g.is_cut_edge(e.id)? {
                (0..=m).all(|j| d[j] == at(&del, j))
            } else {
                let con = rank_sequence(&g.contract_edge(e.id)?)?;
                (0..=m).all(|j| d[j] == at(&del, j) + if j == 0 { 0 } else { at(&con, j - 1) })
            };
            if !ok {
                bad.push(e.id.0);
            }
        }
        Ok(Check::new("rank additivity", bad.is_empty(), format!("violating edges {bad:?}")))
    }));
    checks
}

fn random_flow(g: &Graph, rng: &mut StdRng) -> Vec<i64> {
    let mut phi = vec![0i64; g.edge_count()];
    for (_, b) in g.basic_flows() {
        let c: i64 = rng.gen_range(-3..=3);
        for (x, y) in phi.iter_mut().zip(&b) {
            *x += c * y;
        }
    }
    phi
}

fn lattice_checks(g: &Graph, rng: &mut StdRng) -> Vec<Check> {
    let mut checks = Vec::new();
    checks.push(guarded("gram determinant", || {
        let det = lattice_unchecked(g).determinant;
        let kappa = complexity(g)?;
        let forests = count_maximal_forests(g)?;
        Ok(Check::new(
            "gram determinant",
            det == BigInt::from(kappa) && kappa == forests,
            format!("det {det}, T(1,1) {kappa}, enumerated forests {forests}"),
        ))
    }));
    let mut norm_bad = Vec::new();
    let mut potential_bad = Vec::new();
    let mut projection_bad = Vec::new();
    let mut errors = Vec::new();
    let kappa = complexity(g);
    for e in g.edges() {
        match g.is_cut_edge(e.id) {
            Ok(false) => {}
            Ok(true) => continue,
            Err(err) => {
                errors.push(err.to_string());
                continue;
            }
        }
        for dir in [Direction::Forward, Direction::Reverse] {
            let result = (|| -> Result<()> {
                let chi = characteristic_flow(g, e.id, dir)?;
                let ratio = Rational::new(
                    kappa.clone()?.into(),
                    complexity(&g.delete_edge(e.id)?)?.into(),
                );
                if chi.norm() != ratio {
                    norm_bad.push(e.id.0);
                }
                if !chi.potential_identities_hold(g) {
                    potential_bad.push(e.id.0);
                }
                let pos = g.edge_position(e.id)?;
                for _ in 0..4 {
                    let phi: Vec<Rational> = random_flow(g, rng)
                        .into_iter()
                        .map(|x| Rational::from_integer(x.into()))
                        .collect();
                    if dot(&phi, &chi.flow) != &phi[pos] * chi.norm() * Rational::from_integer(dir.sign().into()) {
                        projection_bad.push(e.id.0);
                    }
                }
                Ok(())
            })();
            if let Err(err) = result {
                errors.push(err.to_string());
            }
        }
    }
    let suffix = if errors.is_empty() { String::new() } else { format!(", errors {errors:?}") };
    checks.push(Check::new(
        "characteristic flow norm",
        norm_bad.is_empty() && errors.is_empty(),
        format!("violating edges {norm_bad:?}{suffix}"),
    ));
    checks.push(Check::new(
        "potential identities",
        potential_bad.is_empty() && errors.is_empty(),
        format!("violating edges {potential_bad:?}{suffix}"),
    ));
    checks.push(Check::new(
        "flow projection",
        projection_bad.is_empty() && errors.is_empty(),
        format!("violating edges {projection_bad:?}{suffix}"),
    ));
    checks
}

fn theta_checks(g: &Graph, bound: u64) -> Vec<Check> {
    vec![guarded("theta routes agree", || {
        let a = theta_product(g, bound)?;
        let b = theta_enumerate(g, bound)?;
        let odd: Vec<String> = b
            .terms()
            .filter(|(e, c)| !e.is_integer() || (**e != Rational::from_integer(0.into()) && c % 2 != 0))
            .map(|(e, _)| e.to_string())
            .collect();
        Ok(Check::new(
            "theta routes agree",
            a == b && odd.is_empty(),
            format!("product {a}, enumeration {b}, odd coefficients at {odd:?}"),
        ))
    })]
}

fn inequality_checks(g: &Graph) -> Vec<Check> {
    match verify_inequalities(g) {
        Ok(r) => r.checks,
        Err(e) => vec![Check::new("inequality suite", false, format!("error: {e}"))],
    }
}

fn orientation_checks(g: &Graph, bound: u64, trials: usize, rng: &mut StdRng) -> Vec<Check> {
    vec![guarded("orientation invariance", || {
        let m = g.edge_count();
        let t = tutte(g)?;
        let d = poincare(g)?;
        let ranks = rank_sequence(g)?;
        let det = lattice_unchecked(g).determinant;
        let theta = theta_enumerate(g, bound)?;
        let mut bad = Vec::new();
        for trial in 0..trials {
            let mask: u64 = if m == 0 { 0 } else { rng.gen::<u64>() & (u64::MAX >> (64 - m)) };
            let h = g.reoriented(EdgeSubset::from_mask(mask))?;
            let same = tutte(&h)? == t
                && poincare(&h)? == d
                && rank_sequence(&h)? == ranks
                && lattice_unchecked(&h).determinant == det
                && theta_product(&h, bound)? == theta;
            if !same {
                bad.push((trial, mask));
            }
        }
        Ok(Check::new(
            "orientation invariance",
            bad.is_empty(),
            format!("{trials} trials, violating (trial, flip mask) {bad:?}"),
        ))
    })]
}

/// Runs the selected check groups on one graph. `seed` drives the random
/// vertex subsets, flows and flips.
pub fn check_graph(g: &Graph, options: &CorpusOptions, seed: u64) -> Vec<Check> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut checks = Vec::new();
    for group in &options.groups {
        checks.extend(match group {
            CheckGroup::Structure => structure_checks(g, &mut rng),
            CheckGroup::Oracles => oracle_checks(g),
            CheckGroup::Torsion => torsion_checks(g),
            CheckGroup::Recurrences => recurrence_checks(g),
            CheckGroup::Lattice => lattice_checks(g, &mut rng),
            CheckGroup::Theta => theta_checks(g, options.max_norm),
            CheckGroup::Inequalities => inequality_checks(g),
            CheckGroup::Orientation => {
                orientation_checks(g, options.max_norm, options.flip_trials, &mut rng)
            }
        });
    }
    checks
}

pub fn run_corpus(options: &CorpusOptions) -> Result<CorpusReport> {
    let graphs = connected_multigraphs(options.max_edges)?;
    let reports: Vec<GraphReport> = graphs
        .par_iter()
        .enumerate()
        .map(|(index, g)| GraphReport {
            index,
            vertex_count: g.vertex_count(),
            edges: g.edges().iter().map(|e| (e.tail.0, e.head.0)).collect(),
            checks: check_graph(g, options, options.seed.wrapping_add(index as u64)),
        })
        .collect();
    let mut tally: BTreeMap<String, CheckTally> = BTreeMap::new();
    for c in reports.iter().flat_map(|r| &r.checks) {
        let t = tally.entry(c.name.clone()).or_insert(CheckTally {
            passed: 0,
            failed: 0,
            exploratory_violations: 0,
        });
        if c.failed() {
            t.failed += 1;
        } else if c.holds {
            t.passed += 1;
        } else {
            t.exploratory_violations += 1;
        }
    }
    Ok(CorpusReport {
        max_edges: options.max_edges,
        graph_count: reports.len(),
        tally,
        graphs: reports,
    })
}

/// Number of corpus graphs per edge count.
pub fn class_counts(graphs: &[Graph]) -> Vec<usize> {
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for g in graphs {
        *counts.entry(g.edge_count()).or_default() += 1;
    }
    let top = counts.keys().max().copied().unwrap_or(0);
    (0..=top).map(|m| counts.get(&m).copied().unwrap_or(0)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_cycle_back() {
        let mut v = vec![0, 1, 2];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 6);
        assert_eq!(v, vec![0, 1, 2]);
    }

    #[test]
    fn isomorphic_shapes_share_a_key() {
        let a = Shape { n: 3, edges: vec![(0, 1), (1, 2), (1, 1)] };
        let b = Shape { n: 3, edges: vec![(2, 0), (0, 1), (0, 0)] };
        let c = Shape { n: 3, edges: vec![(0, 1), (1, 2), (0, 0)] };
        assert_eq!(a.canonical().0, b.canonical().0);
        assert_ne!(a.canonical().0, c.canonical().0);
    }

    // all labeled connected edge multisets, deduplicated under every vertex
    // permutation
    fn brute_force_classes(m: usize) -> usize {
        let mut seen = std::collections::HashSet::new();
        for n in 1..=m + 1 {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
            let mut choice = vec![0usize; m];
            'multisets: loop {
                let combo: Vec<(usize, usize)> = choice.iter().map(|&i| pairs[i]).collect();
                let g = Shape { n, edges: combo.clone() }.to_graph();
                if g.component_count() == 1 {
                    let mut perm: Vec<usize> = (0..n).collect();
                    let mut best: Option<Vec<(usize, usize)>> = None;
                    loop {
                        let mut k: Vec<(usize, usize)> = combo
                            .iter()
                            .map(|&(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
                            .collect();
                        k.sort_unstable();
                        if best.as_ref().is_none_or(|b| k < *b) {
                            best = Some(k);
                        }
                        if !next_permutation(&mut perm) {
                            break;
                        }
                    }
                    seen.insert((n, best.unwrap()));
                }
                // nondecreasing index sequences enumerate multisets
                let mut i = m;
                loop {
                    if i == 0 {
                        break 'multisets;
                    }
                    i -= 1;
                    if choice[i] + 1 < pairs.len() {
                        choice[i] += 1;
                        let c = choice[i];
                        choice[i + 1..].iter_mut().for_each(|x| *x = c);
                        break;
                    }
                }
            }
        }
        seen.len()
    }

    #[test]
    fn class_counts_match_brute_force() {
        let graphs = connected_multigraphs(5).unwrap();
        let counts = class_counts(&graphs);
        assert_eq!(counts, vec![1, 2, 4, 11, 30, 95]);
        for m in 0..=4 {
            assert_eq!(counts[m], brute_force_classes(m), "{m} edges");
        }
        assert!(graphs.iter().all(|g| g.component_count() == 1));
    }

    #[test]
    fn capacity_is_enforced() {
        assert!(matches!(connected_multigraphs(10), Err(Error::Capacity { .. })));
    }

    #[test]
    fn pipeline_on_small_corpus() {
        let options = CorpusOptions {
            max_edges: 3,
            flip_trials: 3,
            ..CorpusOptions::default()
        };
        let report = run_corpus(&options).unwrap();
        assert!(report.passed(), "{:#?}", report.failures());
        assert_eq!(report.graph_count, 18);
    }
}
