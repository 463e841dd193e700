//! Named graph families with fixed vertex numbering.

use super::Graph;
use crate::error::{Error, Result};

fn at_least(what: &'static str, min: usize, got: usize) -> Result<()> {
    if got < min {
        Err(Error::TooSmall { what, min, got })
    } else {
        Ok(())
    }
}

pub fn gen_empty(n: usize) -> Graph {
    Graph::empty(n)
}

/// P_n with edges `(i, i+1)`.
pub fn gen_path(n: usize) -> Result<Graph> {
    at_least("path order", 1, n)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges)
}

/// C_n with edges `(i, i+1 mod n)`.
pub fn gen_cycle(n: usize) -> Result<Graph> {
    at_least("cycle order", 3, n)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn gen_complete(n: usize) -> Result<Graph> {
    at_least("complete graph order", 1, n)?;
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edge_list(n, &edges)
}

/// K_{1,n-1}: centre 0 joined to leaves `1..n`.
pub fn gen_star(n: usize) -> Result<Graph> {
    at_least("star order", 2, n)?;
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edge_list(n, &edges)
}

/// Two 4-cycles sharing vertex 0: `0-1-2-3-0` and `0-4-5-6-0`.
pub fn gen_double_c4() -> Graph {
    Graph::from_edge_list(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)])
        .expect("fixed edge list is valid")
}

/// A centre vertex 0 with `arms` pendant paths of five vertices each (so every
/// arm together with the centre induces P_6) and `pendants` leaves.
///
/// Arm `i` occupies vertices `1 + 5i ..= 5 + 5i`, listed outwards from the
/// centre; the leaves follow at `1 + 5 * arms ..`.
pub fn gen_glued_paths(arms: usize, pendants: usize) -> Result<Graph> {
    at_least("number of P_6 arms", 1, arms)?;
    let n = 1 + 5 * arms + pendants;
    let mut edges = Vec::with_capacity(n - 1);
    for arm in 0..arms {
        let first = 1 + 5 * arm;
        edges.push((0, first));
        for j in 1..5 {
            edges.push((first + j - 1, first + j));
        }
    }
    for leaf in 1 + 5 * arms..n {
        edges.push((0, leaf));
    }
    Graph::from_edge_list(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        assert_eq!(gen_path(2).unwrap(), gen_complete(2).unwrap());
        let star = gen_star(4).unwrap();
        assert_eq!(star.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3)]);
        assert!(gen_cycle(4).unwrap().degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn rejects_degenerate_orders() {
        assert!(matches!(gen_path(0), Err(Error::TooSmall { .. })));
        assert!(matches!(gen_cycle(2), Err(Error::TooSmall { .. })));
        assert!(matches!(gen_star(1), Err(Error::TooSmall { .. })));
        assert!(matches!(gen_glued_paths(0, 3), Err(Error::TooSmall { .. })));
    }

    #[test]
    fn double_c4_shape() {
        let g = gen_double_c4();
        assert_eq!(g.n(), 7);
        assert_eq!(g.edge_count(), 8);
        assert_eq!(g.degree(0), 4);
        assert!((1..7).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn glued_paths_shape() {
        let g = gen_glued_paths(1, 1).unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.degree(0), 2);
        assert!(g.is_connected());
        // centre + one arm + one leaf is P_7
        assert!(g.is_path());

        let g = gen_glued_paths(2, 3).unwrap();
        assert_eq!(g.n(), 14);
        assert_eq!(g.degree(0), 5);
        assert_eq!(g.edge_count(), 13);
        assert!(g.is_connected());
        let leaves = (0..g.n()).filter(|&v| g.degree(v) == 1).count();
        assert_eq!(leaves, 5);
    }

    #[test]
    fn families_are_connected() {
        for n in 1..10 {
            assert!(gen_path(n).unwrap().is_connected());
            assert!(gen_complete(n).unwrap().is_connected());
        }
        for n in 3..10 {
            assert!(gen_cycle(n).unwrap().is_connected());
        }
        for n in 2..10 {
            let s = gen_star(n).unwrap();
            assert!(s.is_connected());
            assert_eq!(s.degree(0), n - 1);
        }
    }
}
