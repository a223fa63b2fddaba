//! Simple undirected graphs over dense vertex ids, plus the vertex-set algebra
//! the solvers are written against.

use std::fmt;

use thiserror::Error;

/// Dense vertex index in `0..n`.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex set over universe {found} used with a graph on {expected} vertices")]
    UniverseMismatch { expected: usize, found: usize },
}

/// A subset of `0..universe`, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet { universe, words: vec![0; universe.div_ceil(64)] }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    /// Builds a set from vertex ids. Panics on an id outside the universe.
    pub fn from_vertices<I: IntoIterator<Item = VertexId>>(universe: usize, vertices: I) -> Self {
        let mut s = Self::new(universe);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        let (w, b) = (v / 64, 1u64 << (v % 64));
        let fresh = self.words[w] & b == 0;
        self.words[w] |= b;
        fresh
    }

    pub fn remove(&mut self, v: VertexId) -> bool {
        if v >= self.universe {
            return false;
        }
        let (w, b) = (v / 64, 1u64 << (v % 64));
        let present = self.words[w] & b != 0;
        self.words[w] &= !b;
        present
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v < self.universe && self.words[v / 64] & (1u64 << (v % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.universe, other.universe, "vertex sets over different universes");
        VertexSet {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    /// Complement within the universe.
    pub fn complement(&self) -> Self {
        let mut out = Self::full(self.universe);
        for (o, w) in out.words.iter_mut().zip(&self.words) {
            *o &= !w;
        }
        out
    }

    pub fn union_with(&mut self, other: &Self) {
        assert_eq!(self.universe, other.universe, "vertex sets over different universes");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.universe == other.universe && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A simple undirected graph on vertices `0..n`. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    adj_bits: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], adj_bits: vec![VertexSet::new(n); n], m: 0 }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.push_edge(u, v)?;
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    fn push_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj_bits[u].contains(v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj_bits[u].insert(v);
        self.adj_bits[v].insert(u);
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.m += 1;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Sorted neighbor list. Panics if `v` is out of range.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    /// Neighbor bitset. Panics if `v` is out of range.
    pub fn neighbor_set(&self, v: VertexId) -> &VertexSet {
        &self.adj_bits[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n() && self.adj_bits[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    fn check_set(&self, w: &VertexSet) -> Result<(), GraphError> {
        if w.universe() == self.n() {
            Ok(())
        } else {
            Err(GraphError::UniverseMismatch { expected: self.n(), found: w.universe() })
        }
    }

    /// `N(v)`.
    pub fn neighborhood(&self, v: VertexId) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adj_bits[v].clone())
    }

    /// `N(W)`: neighbors of members of `W` that are not themselves in `W`.
    pub fn set_neighborhood(&self, w: &VertexSet) -> Result<VertexSet, GraphError> {
        self.check_set(w)?;
        let mut out = VertexSet::new(self.n());
        for v in w.iter() {
            out.union_with(&self.adj_bits[v]);
        }
        Ok(out.difference(w))
    }

    /// `N[W] = N(W) ∪ W`.
    pub fn closed_neighborhood(&self, w: &VertexSet) -> Result<VertexSet, GraphError> {
        Ok(self.set_neighborhood(w)?.union(w))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2 - self.m);
        for u in 0..n {
            for v in u + 1..n {
                if !self.adj_bits[u].contains(v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, edges).expect("complement of a simple graph is simple")
    }

    /// Returns a copy with one extra vertex adjacent to every original vertex,
    /// along with the new vertex's id (always `n`).
    pub fn add_universal_vertex(&self) -> (Graph, VertexId) {
        let n = self.n();
        let edges = self.edges().chain((0..n).map(|v| (v, n)));
        let g = Graph::from_edges(n + 1, edges).expect("adding a universal vertex keeps the graph simple");
        (g, n)
    }

    /// Subgraph induced by `w`, re-indexed densely in increasing vertex order.
    pub fn induced_subgraph(&self, w: &VertexSet) -> Result<InducedSubgraph, GraphError> {
        self.check_set(w)?;
        let to_parent: Vec<VertexId> = w.iter().collect();
        let mut from_parent = vec![None; self.n()];
        for (i, &v) in to_parent.iter().enumerate() {
            from_parent[v] = Some(i);
        }
        let edges = to_parent.iter().enumerate().flat_map(|(i, &v)| {
            let from_parent = &from_parent;
            self.adj[v].iter().filter_map(move |&u| match from_parent[u] {
                Some(j) if i < j => Some((i, j)),
                _ => None,
            })
        });
        let graph = Graph::from_edges(to_parent.len(), edges.collect::<Vec<_>>())?;
        Ok(InducedSubgraph { graph, to_parent, from_parent })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// An induced subgraph together with the index mapping to its parent.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `to_parent[i]` is the parent id of subgraph vertex `i`.
    pub to_parent: Vec<VertexId>,
    /// `from_parent[v]` is the subgraph id of parent vertex `v`, if kept.
    pub from_parent: Vec<Option<VertexId>>,
}
