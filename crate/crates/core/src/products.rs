//! Cartesian and lexicographic products, layers and projections.
//!
//! Product vertices are numbered row-major: `(g, h)` is `g * n_h + h`.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Bijection between `V(G) × V(H)` and the vertex indices of a product graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProductIndex {
    n_g: usize,
    n_h: usize,
}

impl ProductIndex {
    pub fn new(n_g: usize, n_h: usize) -> Self {
        Self { n_g, n_h }
    }

    pub fn n_g(&self) -> usize {
        self.n_g
    }

    pub fn n_h(&self) -> usize {
        self.n_h
    }

    pub fn order(&self) -> usize {
        self.n_g * self.n_h
    }

    #[inline]
    pub fn encode(&self, g: usize, h: usize) -> usize {
        debug_assert!(g < self.n_g && h < self.n_h);
        g * self.n_h + h
    }

    #[inline]
    pub fn decode(&self, v: usize) -> (usize, usize) {
        debug_assert!(v < self.order());
        (v / self.n_h, v % self.n_h)
    }

    fn check(&self, index: usize, n: usize) -> Result<()> {
        if index >= n {
            Err(Error::IndexOutOfRange { index, n })
        } else {
            Ok(())
        }
    }

    /// The vertex set of the H-layer above `g`.
    pub fn h_layer(&self, g: usize) -> Result<VertexSet> {
        self.check(g, self.n_g)?;
        VertexSet::from_vertices(self.order(), (0..self.n_h).map(|h| self.encode(g, h)))
    }

    /// The vertex set of the G-layer through `h`.
    pub fn g_layer(&self, h: usize) -> Result<VertexSet> {
        self.check(h, self.n_h)?;
        VertexSet::from_vertices(self.order(), (0..self.n_g).map(|g| self.encode(g, h)))
    }

    pub fn project_g(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n_g);
        for v in set.iter() {
            out.insert(self.decode(v).0).expect("decoded index in range");
        }
        out
    }

    pub fn project_h(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n_h);
        for v in set.iter() {
            out.insert(self.decode(v).1).expect("decoded index in range");
        }
        out
    }
}

fn product(g: &Graph, h: &Graph, adjacent: impl Fn(usize, usize, usize, usize) -> bool) -> (Graph, ProductIndex) {
    let index = ProductIndex::new(g.n(), h.n());
    let n = index.order();
    let mut out = Graph::empty(n);
    for a in 0..n {
        let (g1, h1) = index.decode(a);
        for b in a + 1..n {
            let (g2, h2) = index.decode(b);
            if adjacent(g1, h1, g2, h2) {
                out.add_edge(a, b).expect("distinct in-range vertices");
            }
        }
    }
    (out, index)
}

/// G ∘ H: `(g1,h1) ~ (g2,h2)` iff `g1 g2 ∈ E(G)`, or `g1 = g2` and `h1 h2 ∈ E(H)`.
pub fn lexicographic(g: &Graph, h: &Graph) -> (Graph, ProductIndex) {
    product(g, h, |g1, h1, g2, h2| g.has_edge(g1, g2) || (g1 == g2 && h.has_edge(h1, h2)))
}

/// G □ H: equal in one coordinate and adjacent in the other.
pub fn cartesian(g: &Graph, h: &Graph) -> (Graph, ProductIndex) {
    product(g, h, |g1, h1, g2, h2| (g1 == g2 && h.has_edge(h1, h2)) || (h1 == h2 && g.has_edge(g1, g2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_complete, gen_cycle, gen_path, is_isomorphic};

    #[test]
    fn index_round_trip() {
        let idx = ProductIndex::new(3, 4);
        for v in 0..12 {
            let (g, h) = idx.decode(v);
            assert_eq!(idx.encode(g, h), v);
        }
        assert_eq!(idx.encode(2, 1), 9);
    }

    #[test]
    fn identity_factors() {
        let h = gen_cycle(5).unwrap();
        let k1 = Graph::empty(1);
        assert_eq!(lexicographic(&k1, &h).0, h);
        assert_eq!(cartesian(&k1, &h).0, h);
        assert_eq!(lexicographic(&h, &k1).0, h);
        assert_eq!(cartesian(&h, &k1).0, h);
    }

    #[test]
    fn small_products() {
        let p2 = gen_path(2).unwrap();
        assert_eq!(lexicographic(&p2, &p2).0, gen_complete(4).unwrap());
        assert!(is_isomorphic(&cartesian(&p2, &p2).0, &gen_cycle(4).unwrap()));
        let p3 = gen_path(3).unwrap();
        assert_eq!(lexicographic(&p3, &p3).0.edge_count(), 2 * 9 + 3 * 2);
    }

    #[test]
    fn layers_and_projections() {
        let (_, idx) = lexicographic(&gen_path(3).unwrap(), &gen_path(4).unwrap());
        let mut all = VertexSet::new(idx.order());
        for g in 0..3 {
            let layer = idx.h_layer(g).unwrap();
            assert_eq!(layer.len(), 4);
            assert_eq!(idx.project_g(&layer).to_vec(), vec![g]);
            assert!(all.is_disjoint(&layer));
            all.union_with(&layer);
        }
        assert!(all.is_full());
        assert_eq!(idx.g_layer(3).unwrap().to_vec(), vec![3, 7, 11]);
        assert_eq!(idx.project_h(&idx.g_layer(3).unwrap()).to_vec(), vec![3]);
        assert!(idx.h_layer(3).is_err());
        assert!(idx.g_layer(4).is_err());
    }

    #[test]
    fn adjacent_layers_form_a_join() {
        let (prod, idx) = lexicographic(&gen_path(2).unwrap(), &gen_path(3).unwrap());
        let cross = (0..3)
            .flat_map(|a| (0..3).map(move |b| (a, b)))
            .filter(|&(a, b)| prod.has_edge(idx.encode(0, a), idx.encode(1, b)))
            .count();
        assert_eq!(cross, 9);
        assert_eq!(prod.edge_count(), 9 + 2 + 2);
    }
}
