//! Finite multigraphs with a reference orientation.
//!
//! Loops and parallel edges are allowed. Every edge is stored as an ordered
//! pair `(tail, head)`; that pair is the reference orientation used to write
//! down Kirchhoff's vertex relations, and an edge agreeing with it carries
//! sign `+1`. Edge subsets are bit masks over the position of each edge in
//! the stored edge list.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Width of [`EdgeSubset`]; graphs with more edges cannot be represented.
pub const MAX_EDGES: usize = 64;

/// Ceiling on the edge count for computations that tabulate all `2^m` edge
/// subsets.
pub const SUBSET_TABLE_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An edge together with its reference arc `tail -> head`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub tail: VertexId,
    pub head: VertexId,
}

impl Edge {
    pub fn new(id: u32, tail: u32, head: u32) -> Self {
        Edge {
            id: EdgeId(id),
            tail: VertexId(tail),
            head: VertexId(head),
        }
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }

    pub fn reversed(&self) -> Self {
        Edge {
            id: self.id,
            tail: self.head,
            head: self.tail,
        }
    }
}

/// A set of edges, as a bit mask over edge-list positions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeSubset(u64);

impl EdgeSubset {
    pub const EMPTY: EdgeSubset = EdgeSubset(0);

    pub fn from_mask(mask: u64) -> Self {
        EdgeSubset(mask)
    }

    /// All of the first `m` positions.
    pub fn full(m: usize) -> Self {
        if m >= 64 {
            EdgeSubset(u64::MAX)
        } else {
            EdgeSubset((1u64 << m) - 1)
        }
    }

    pub fn singleton(pos: usize) -> Self {
        EdgeSubset(1u64 << pos)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, pos: usize) -> bool {
        pos < 64 && self.0 >> pos & 1 == 1
    }

    pub fn with(self, pos: usize) -> Self {
        EdgeSubset(self.0 | 1u64 << pos)
    }

    pub fn without(self, pos: usize) -> Self {
        EdgeSubset(self.0 & !(1u64 << pos))
    }

    pub fn union(self, other: Self) -> Self {
        EdgeSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        EdgeSubset(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        EdgeSubset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Positions in increasing order.
    pub fn positions(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let p = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(p)
            }
        })
    }
}

/// Union-find over `0..n`.
#[derive(Clone, Debug)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the smaller index as root so class representatives are minimal
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
        true
    }
}

/// Connected components: `parts` are sorted, and ordered by least vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    pub parts: Vec<Vec<VertexId>>,
}

/// The contraction `X_sigma` and the projection of vertices onto it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionImage {
    pub graph: Graph,
    pub vertex_map: BTreeMap<VertexId, VertexId>,
}

/// Orientation of an arc relative to the stored edge direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Reverse,
}

impl Direction {
    pub fn sign(self) -> i64 {
        match self {
            Direction::Forward => 1,
            Direction::Reverse => -1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph, validating endpoints and edge-id uniqueness.
    /// Vertices may be listed in any order and repeated.
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self> {
        let mut vertices: Vec<VertexId> = vertices.into_iter().collect();
        vertices.sort_unstable();
        vertices.dedup();
        let edges: Vec<Edge> = edges.into_iter().collect();
        if edges.len() > MAX_EDGES {
            return Err(Error::Capacity {
                what: "edge count",
                actual: edges.len(),
                limit: MAX_EDGES,
            });
        }
        let mut seen = std::collections::HashSet::new();
        for e in &edges {
            if !seen.insert(e.id) {
                return Err(Error::input(format!("duplicate edge id {}", e.id)));
            }
            for v in [e.tail, e.head] {
                if vertices.binary_search(&v).is_err() {
                    return Err(Error::input(format!(
                        "edge {} references unknown vertex {}",
                        e.id, v
                    )));
                }
            }
        }
        Ok(Graph { vertices, edges })
    }

    /// Graph whose vertex set is exactly the endpoints of `pairs`; edge ids
    /// are `1, 2, ...` in list order.
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        let vertices = pairs.iter().flat_map(|&(a, b)| [VertexId(a), VertexId(b)]);
        let edges = pairs
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| Edge::new(i as u32 + 1, a, b));
        Graph::new(vertices, edges).expect("endpoints are vertices by construction")
    }

    /// Same as [`Graph::from_pairs`] with extra (possibly isolated) vertices.
    pub fn with_vertices(vertices: &[u32], pairs: &[(u32, u32)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| Edge::new(i as u32 + 1, a, b));
        Graph::new(vertices.iter().map(|&v| VertexId(v)), edges)
    }

    /// The null graph.
    pub fn empty() -> Self {
        Graph {
            vertices: Vec::new(),
            edges: Vec::new(),
        }
    }

    /// `C_n` on vertices `1..=n`, edges `i -> i+1` and `n -> 1`. `n = 1` is a
    /// loop and `n = 2` a parallel pair.
    pub fn cycle(n: u32) -> Self {
        assert!(n >= 1);
        let pairs: Vec<(u32, u32)> = (1..=n).map(|i| (i, i % n + 1)).collect();
        Graph::from_pairs(&pairs)
    }

    /// Path on `n` vertices.
    pub fn path(n: u32) -> Self {
        assert!(n >= 1);
        let pairs: Vec<(u32, u32)> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::with_vertices(&(1..=n).collect::<Vec<_>>(), &pairs).unwrap()
    }

    /// `K_n` with edges `i -> j` for `i < j` in lexicographic order.
    pub fn complete(n: u32) -> Self {
        let mut pairs = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                pairs.push((i, j));
            }
        }
        Graph::with_vertices(&(1..=n).collect::<Vec<_>>(), &pairs).unwrap()
    }

    /// Two vertices joined by `k` parallel edges.
    pub fn parallel(k: u32) -> Self {
        let pairs = vec![(1, 2); k as usize];
        Graph::with_vertices(&[1, 2], &pairs).unwrap()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn all_edges(&self) -> EdgeSubset {
        EdgeSubset::full(self.edges.len())
    }

    pub fn vertex_index(&self, v: VertexId) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn edge_position(&self, id: EdgeId) -> Result<usize> {
        self.edges
            .iter()
            .position(|e| e.id == id)
            .ok_or_else(|| Error::input(format!("unknown edge id {id}")))
    }

    pub fn edge_by_id(&self, id: EdgeId) -> Result<&Edge> {
        self.edge_position(id).map(|p| &self.edges[p])
    }

    /// Subset from edge ids.
    pub fn subset(&self, ids: &[EdgeId]) -> Result<EdgeSubset> {
        ids.iter().try_fold(EdgeSubset::EMPTY, |acc, &id| {
            Ok(acc.with(self.edge_position(id)?))
        })
    }

    pub fn subset_ids(&self, s: EdgeSubset) -> Vec<EdgeId> {
        s.positions().map(|p| self.edges[p].id).collect()
    }

    fn check_subset(&self, s: EdgeSubset) -> Result<()> {
        if s.is_subset_of(self.all_edges()) {
            Ok(())
        } else {
            Err(Error::input(format!(
                "edge subset {:#x} refers to edges beyond the {} of this graph",
                s.mask(),
                self.edges.len()
            )))
        }
    }

    /// Index pair (tail, head) of the edge at `pos`.
    pub(crate) fn endpoints(&self, pos: usize) -> (usize, usize) {
        let e = &self.edges[pos];
        (
            self.vertex_index(e.tail).unwrap(),
            self.vertex_index(e.head).unwrap(),
        )
    }

    /// Union-find of vertex indices merged along `s`.
    pub(crate) fn merged_classes(&self, s: EdgeSubset) -> DisjointSets {
        let mut ds = DisjointSets::new(self.vertices.len());
        for p in s.positions() {
            let (a, b) = self.endpoints(p);
            ds.union(a, b);
        }
        ds
    }

    /// Positions sorted by ascending edge id.
    pub fn positions_by_id(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.edges.len()).collect();
        order.sort_by_key(|&p| self.edges[p].id);
        order
    }

    /// The contraction `X_sigma`. Each merged vertex class is named by its
    /// least original vertex id; the remaining edges keep their ids and
    /// orientation.
    pub fn contract(&self, sigma: EdgeSubset) -> Result<ContractionImage> {
        self.check_subset(sigma)?;
        let mut ds = self.merged_classes(sigma);
        let vertex_map: BTreeMap<VertexId, VertexId> = (0..self.vertices.len())
            .map(|i| (self.vertices[i], self.vertices[ds.find(i)]))
            .collect();
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(p, _)| !sigma.contains(*p))
            .map(|(_, e)| Edge {
                id: e.id,
                tail: vertex_map[&e.tail],
                head: vertex_map[&e.head],
            });
        let graph = Graph::new(vertex_map.values().copied(), edges)?;
        Ok(ContractionImage { graph, vertex_map })
    }

    pub fn delete(&self, sigma: EdgeSubset) -> Result<Graph> {
        self.check_subset(sigma)?;
        Ok(Graph {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .enumerate()
                .filter(|(p, _)| !sigma.contains(*p))
                .map(|(_, e)| *e)
                .collect(),
        })
    }

    pub fn delete_edge(&self, id: EdgeId) -> Result<Graph> {
        self.delete(EdgeSubset::singleton(self.edge_position(id)?))
    }

    pub fn contract_edge(&self, id: EdgeId) -> Result<Graph> {
        Ok(self
            .contract(EdgeSubset::singleton(self.edge_position(id)?))?
            .graph)
    }

    pub fn components(&self) -> Components {
        let mut ds = self.merged_classes(self.all_edges());
        let mut groups: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
        for i in 0..self.vertices.len() {
            groups.entry(ds.find(i)).or_default().push(self.vertices[i]);
        }
        let parts: Vec<Vec<VertexId>> = groups.into_values().collect();
        Components {
            count: parts.len(),
            parts,
        }
    }

    pub fn component_count(&self) -> usize {
        let mut ds = self.merged_classes(self.all_edges());
        (0..self.vertices.len()).filter(|&i| ds.find(i) == i).count()
    }

    fn is_cut_position(&self, pos: usize) -> bool {
        let (a, b) = self.endpoints(pos);
        if a == b {
            return false;
        }
        let mut ds = self.merged_classes(self.all_edges().without(pos));
        ds.find(a) != ds.find(b)
    }

    /// True iff removing the edge increases the number of components.
    pub fn is_cut_edge(&self, id: EdgeId) -> Result<bool> {
        Ok(self.is_cut_position(self.edge_position(id)?))
    }

    pub fn cut_edges(&self) -> EdgeSubset {
        (0..self.edges.len())
            .filter(|&p| self.is_cut_position(p))
            .fold(EdgeSubset::EMPTY, EdgeSubset::with)
    }

    /// Greedy spanning forest over ascending edge id.
    pub fn maximal_forest(&self) -> EdgeSubset {
        let mut ds = DisjointSets::new(self.vertices.len());
        let mut forest = EdgeSubset::EMPTY;
        for p in self.positions_by_id() {
            let (a, b) = self.endpoints(p);
            if ds.union(a, b) {
                forest = forest.with(p);
            }
        }
        forest
    }

    /// Edges outside `forest`, by ascending id.
    pub fn chords(&self, forest: EdgeSubset) -> Vec<usize> {
        self.positions_by_id()
            .into_iter()
            .filter(|&p| !forest.contains(p))
            .collect()
    }

    fn check_maximal_forest(&self, forest: EdgeSubset) -> Result<()> {
        self.check_subset(forest)?;
        let mut ds = DisjointSets::new(self.vertices.len());
        for p in forest.positions() {
            let (a, b) = self.endpoints(p);
            if !ds.union(a, b) {
                return Err(Error::input(format!(
                    "edge {} closes a cycle in the given forest",
                    self.edges[p].id
                )));
            }
        }
        if forest.len() + self.component_count() != self.vertices.len() {
            return Err(Error::input("forest is not maximal"));
        }
        Ok(())
    }

    /// The basic flow of chord `c`: the signed indicator of its fundamental
    /// cycle, `+1` on `c` itself.
    pub fn basic_flow(&self, forest: EdgeSubset, c: EdgeId) -> Result<Vec<i64>> {
        self.check_maximal_forest(forest)?;
        let cpos = self.edge_position(c)?;
        if forest.contains(cpos) {
            return Err(Error::input(format!("edge {c} belongs to the forest")));
        }
        let mut flow = vec![0i64; self.edges.len()];
        flow[cpos] = 1;
        let (tail, head) = self.endpoints(cpos);
        if tail == head {
            return Ok(flow);
        }
        // forest path head -> tail closes the cycle
        let path = self
            .path_in(forest, head, tail)
            .expect("chord endpoints lie in one forest component");
        for (pos, forward) in path {
            flow[pos] = if forward { 1 } else { -1 };
        }
        Ok(flow)
    }

    /// Basic flows of the chords of the greedy maximal forest, by ascending
    /// chord id.
    pub fn basic_flows(&self) -> Vec<(EdgeId, Vec<i64>)> {
        let forest = self.maximal_forest();
        self.chords(forest)
            .into_iter()
            .map(|p| {
                let id = self.edges[p].id;
                (id, self.basic_flow(forest, id).unwrap())
            })
            .collect()
    }

    /// BFS path inside `allowed` from vertex index `from` to `to`, as
    /// `(edge position, traversed along stored direction)`.
    pub(crate) fn path_in(
        &self,
        allowed: EdgeSubset,
        from: usize,
        to: usize,
    ) -> Option<Vec<(usize, bool)>> {
        let n = self.vertices.len();
        let mut adj: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); n];
        for p in allowed.positions() {
            let (a, b) = self.endpoints(p);
            if a != b {
                adj[a].push((b, p, true));
                adj[b].push((a, p, false));
            }
        }
        let mut prev: Vec<Option<(usize, usize, bool)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                break;
            }
            for &(w, p, fwd) in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = Some((u, p, fwd));
                    queue.push_back(w);
                }
            }
        }
        if !seen[to] {
            return None;
        }
        let mut path = Vec::new();
        let mut cur = to;
        while cur != from {
            let (u, p, fwd) = prev[cur].unwrap();
            path.push((p, fwd));
            cur = u;
        }
        path.reverse();
        Some(path)
    }

    /// Length of a shortest cycle; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for p in 0..self.edges.len() {
            let (a, b) = self.endpoints(p);
            let len = if a == b {
                Some(1)
            } else {
                self.path_in(self.all_edges().without(p), a, b)
                    .map(|path| path.len() + 1)
            };
            if let Some(l) = len {
                best = Some(best.map_or(l, |b| b.min(l)));
            }
        }
        best
    }

    /// Coefficients of the vertex relation at `v`: `+1` for edges entering
    /// `v`, `-1` for edges leaving it, `0` for loops.
    pub fn incidence_row(&self, v: VertexId) -> Result<Vec<i64>> {
        if self.vertex_index(v).is_none() {
            return Err(Error::input(format!("unknown vertex {v}")));
        }
        Ok(self
            .edges
            .iter()
            .map(|e| (e.head == v) as i64 - (e.tail == v) as i64)
            .collect())
    }

    /// One incidence row per vertex, in vertex order.
    pub fn incidence_matrix(&self) -> Vec<Vec<i64>> {
        self.vertices
            .iter()
            .map(|&v| self.incidence_row(v).unwrap())
            .collect()
    }

    /// Reverses the stored direction of every edge in `s`.
    pub fn reoriented(&self, s: EdgeSubset) -> Result<Graph> {
        self.check_subset(s)?;
        Ok(Graph {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .enumerate()
                .map(|(p, e)| if s.contains(p) { e.reversed() } else { *e })
                .collect(),
        })
    }

    /// Union of two graphs with disjoint edge ids; vertices with equal ids
    /// are identified.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        Graph::new(
            self.vertices.iter().chain(&other.vertices).copied(),
            self.edges.iter().chain(&other.edges).copied(),
        )
    }

    /// Adds a copy of edge `id` parallel to it, with id `new_id`.
    pub fn with_parallel_copy(&self, id: EdgeId, new_id: EdgeId) -> Result<Graph> {
        let e = *self.edge_by_id(id)?;
        let mut edges = self.edges.clone();
        edges.push(Edge { id: new_id, ..e });
        Graph::new(self.vertices.iter().copied(), edges)
    }

    pub fn is_forest(&self) -> bool {
        self.maximal_forest().len() == self.edges.len()
    }

    /// Renames vertices by adding `offset` and edges by adding `edge_offset`.
    pub fn shifted(&self, offset: u32, edge_offset: u32) -> Graph {
        Graph {
            vertices: self.vertices.iter().map(|v| VertexId(v.0 + offset)).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    id: EdgeId(e.id.0 + edge_offset),
                    tail: VertexId(e.tail.0 + offset),
                    head: VertexId(e.head.0 + offset),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::from_pairs(&[(1, 2), (2, 3), (3, 1)])
    }

    #[test]
    fn contract_triangle_edge_gives_parallel_pair() {
        let img = triangle().contract(EdgeSubset::singleton(0)).unwrap();
        assert_eq!(img.graph.vertex_count(), 2);
        assert_eq!(img.graph.edge_count(), 2);
        assert_eq!(img.vertex_map[&VertexId(2)], VertexId(1));
        let e = img.graph.edges();
        assert_eq!((e[0].tail, e[0].head), (VertexId(1), VertexId(3)));
        assert_eq!((e[1].tail, e[1].head), (VertexId(3), VertexId(1)));
    }

    #[test]
    fn contract_loop_leaves_single_vertex() {
        let g = Graph::cycle(1);
        let img = g.contract(g.all_edges()).unwrap();
        assert_eq!(img.graph.vertex_count(), 1);
        assert_eq!(img.graph.edge_count(), 0);
    }

    #[test]
    fn contract_k4_edge() {
        let img = Graph::complete(4).contract(EdgeSubset::singleton(0)).unwrap();
        let h = img.graph;
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_count(), 5);
        // the two edges at the merged vertex each gain a parallel partner
        let mut pairs: Vec<(u32, u32)> = h
            .edges()
            .iter()
            .map(|e| (e.tail.0.min(e.head.0), e.tail.0.max(e.head.0)))
            .collect();
        pairs.sort();
        assert_eq!(pairs, vec![(1, 3), (1, 3), (1, 4), (1, 4), (3, 4)]);
    }

    #[test]
    fn contract_rejects_foreign_subset() {
        assert!(triangle().contract(EdgeSubset::singleton(5)).is_err());
        assert!(triangle().subset(&[EdgeId(9)]).is_err());
    }

    #[test]
    fn delete_cases() {
        let g = triangle();
        let p = g.delete(EdgeSubset::singleton(2)).unwrap();
        assert_eq!(p.vertex_count(), 3);
        assert_eq!(p.edge_count(), 2);
        assert!(p.is_forest());
        assert_eq!(g.delete(EdgeSubset::EMPTY).unwrap(), g);
        let k = Graph::complete(4).delete(EdgeSubset::singleton(0)).unwrap();
        assert_eq!((k.vertex_count(), k.edge_count()), (4, 5));
    }

    #[test]
    fn component_counts() {
        let two = triangle().union(&triangle().shifted(10, 10)).unwrap();
        assert_eq!(two.components().count, 2);
        assert_eq!(Graph::empty().components().count, 0);
        assert_eq!(Graph::complete(4).components().count, 1);
    }

    #[test]
    fn cut_edges() {
        let p = Graph::path(3);
        assert!(p.is_cut_edge(EdgeId(1)).unwrap());
        assert!(!triangle().is_cut_edge(EdgeId(1)).unwrap());
        assert!(!Graph::cycle(1).is_cut_edge(EdgeId(1)).unwrap());
        assert!(triangle().is_cut_edge(EdgeId(7)).is_err());
    }

    #[test]
    fn forest_selection() {
        let p = Graph::path(4);
        assert_eq!(p.maximal_forest(), p.all_edges());
        assert_eq!(triangle().maximal_forest(), EdgeSubset::from_mask(0b011));
        assert_eq!(Graph::cycle(1).maximal_forest(), EdgeSubset::EMPTY);
    }

    #[test]
    fn basic_flow_examples() {
        let g = triangle();
        let f = g.maximal_forest();
        assert_eq!(g.basic_flow(f, EdgeId(3)).unwrap(), vec![1, 1, 1]);
        let l = Graph::cycle(1);
        assert_eq!(l.basic_flow(EdgeSubset::EMPTY, EdgeId(1)).unwrap(), vec![1]);
        let th = Graph::parallel(3);
        let f = th.maximal_forest();
        assert_eq!(th.basic_flow(f, EdgeId(2)).unwrap(), vec![-1, 1, 0]);
        assert!(g.basic_flow(f, EdgeId(1)).is_err());
        assert!(g.basic_flow(EdgeSubset::singleton(0), EdgeId(3)).is_err());
    }

    #[test]
    fn girth_examples() {
        assert_eq!(Graph::complete(4).girth(), Some(3));
        let with_loop = Graph::from_pairs(&[(1, 2), (2, 2)]);
        assert_eq!(with_loop.girth(), Some(1));
        assert_eq!(Graph::parallel(2).girth(), Some(2));
        assert_eq!(Graph::path(5).girth(), None);
    }

    #[test]
    fn incidence_rows() {
        let g = Graph::from_pairs(&[(1, 2)]);
        assert_eq!(g.incidence_row(VertexId(2)).unwrap(), vec![1]);
        let l = Graph::cycle(1);
        assert_eq!(l.incidence_row(VertexId(1)).unwrap(), vec![0]);
        assert!(g.incidence_row(VertexId(5)).is_err());
        let k = Graph::complete(4);
        let rows = k.incidence_matrix();
        for c in 0..k.edge_count() {
            assert_eq!(rows.iter().map(|r| r[c]).sum::<i64>(), 0);
        }
    }

    #[test]
    fn graph_validation() {
        assert!(Graph::new([VertexId(1)], [Edge::new(1, 1, 2)]).is_err());
        assert!(Graph::new(
            [VertexId(1), VertexId(2)],
            [Edge::new(1, 1, 2), Edge::new(1, 2, 1)]
        )
        .is_err());
    }
}
