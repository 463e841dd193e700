//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Adjacency is stored as one bitset per vertex. The exact solvers work on
//! `u64` neighbourhood masks and therefore cap the order at [`SOLVER_CAP`];
//! construction and validation have no such limit.

mod canon;
mod enumerate;
mod format;
mod generators;

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use enumerate::{enumerate_connected_graphs, MAX_ENUMERATION_ORDER};
pub use format::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
pub use generators::{
    gen_complete, gen_cycle, gen_double_c4, gen_empty, gen_glued_paths, gen_path, gen_star,
};

/// Largest order the bitmask solvers accept.
pub const SOLVER_CAP: usize = 64;

/// A set of vertices of a specific graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    /// The empty set over a graph of order `n`.
    pub fn new(n: usize) -> Self {
        Self { bits: FixedBitSet::with_capacity(n) }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        Self { bits }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Result<Self> {
        let mut set = Self::new(n);
        for v in vertices {
            set.insert(v)?;
        }
        Ok(set)
    }

    /// Builds a set from the low `n` bits of `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n <= 64);
        let mut set = Self::new(n);
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            set.bits.insert(v);
            m &= m - 1;
        }
        set
    }

    /// Order of the underlying graph.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, v: usize) -> Result<()> {
        if v >= self.bits.len() {
            return Err(Error::IndexOutOfRange { index: v, n: self.bits.len() });
        }
        self.bits.insert(v);
        Ok(())
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.bits.len() {
            self.bits.set(v, false);
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.bits.len() && self.bits.contains(v)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn first_common(&self, other: &VertexSet) -> Option<usize> {
        self.bits.intersection(&other.bits).next()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe()
    }

    /// Lowest vertex of the universe not in the set.
    pub fn first_missing(&self) -> Option<usize> {
        self.bits.zeroes().next()
    }

    /// The set as a bitmask; only meaningful for universes of at most 64 vertices.
    pub fn to_mask(&self) -> u64 {
        self.iter().filter(|&v| v < 64).fold(0, |m, v| m | (1u64 << v))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// A finite simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self { adj: vec![FixedBitSet::with_capacity(n); n] }
    }

    /// Builds a graph from explicit edges. Duplicate edges collapse; loops are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, n });
            }
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Δ(G); zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn open_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet { bits: self.adj[v].clone() }
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.open_neighborhood(v);
        s.bits.insert(v);
        s
    }

    /// N(S), the union of open neighbourhoods.
    pub fn open_neighborhood_of(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n());
        for v in set.iter() {
            out.bits.union_with(&self.adj[v]);
        }
        out
    }

    /// N[S], the union of closed neighbourhoods.
    pub fn closed_neighborhood_of(&self, set: &VertexSet) -> VertexSet {
        let mut out = self.open_neighborhood_of(set);
        out.union_with(set);
        out
    }

    fn check_set(&self, set: &VertexSet) -> Result<()> {
        if set.universe() != self.n() {
            return Err(Error::OrderMismatch { expected: self.n(), got: set.universe() });
        }
        Ok(())
    }

    /// N[S] = V(G).
    pub fn is_dominating_set(&self, set: &VertexSet) -> bool {
        self.check_set(set).is_ok() && self.closed_neighborhood_of(set).is_full()
    }

    /// N(S) = V(G).
    pub fn is_total_dominating_set(&self, set: &VertexSet) -> bool {
        self.check_set(set).is_ok() && self.open_neighborhood_of(set).is_full()
    }

    pub fn isolated_vertex(&self) -> Option<usize> {
        (0..self.n()).find(|&v| self.degree(v) == 0)
    }

    pub fn universal_vertex(&self) -> Option<usize> {
        (0..self.n()).find(|&v| self.degree(v) + 1 == self.n())
    }

    /// Connected components, each listed in increasing order, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::new(n);
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(v) = stack.pop() {
                comp.bits.insert(v);
                for u in self.adj[v].ones() {
                    if !seen.contains(u) {
                        seen.insert(u);
                        stack.push(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether the graph is isomorphic to the path on `n` vertices.
    pub fn is_path(&self) -> bool {
        let n = self.n();
        if n == 0 || !self.is_connected() {
            return false;
        }
        if n == 1 {
            return true;
        }
        let degs = self.degrees();
        self.edge_count() == n - 1 && degs.iter().all(|&d| d <= 2) && degs.iter().filter(|&&d| d == 1).count() == 2
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for u in self.adj[v].ones() {
                let j = pos[u];
                if j != usize::MAX {
                    g.adj[i].insert(j);
                }
            }
        }
        g
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n();
        let mut g = Graph::empty(n + other.n());
        for (u, v) in self.edges() {
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        for (u, v) in other.edges() {
            g.adj[n + u].insert(n + v);
            g.adj[n + v].insert(n + u);
        }
        g
    }

    /// Open-neighbourhood masks for the bitmask solvers.
    pub fn neighbor_masks(&self) -> Result<Vec<u64>> {
        if self.n() > SOLVER_CAP {
            return Err(Error::CapacityExceeded { n: self.n(), cap: SOLVER_CAP });
        }
        Ok(self.adj.iter().map(|a| a.ones().fold(0u64, |m, u| m | (1u64 << u))).collect())
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
