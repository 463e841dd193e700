//! One representative per isomorphism class of connected graphs on few vertices.

use std::collections::BTreeMap;

use super::{canonical_form, CanonicalForm, Graph};
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_ORDER: usize = 7;

/// All graphs on `n` vertices up to isomorphism, keyed by canonical form.
///
/// Every graph on `n` vertices is some graph on `n - 1` vertices plus a new
/// vertex with an arbitrary neighbourhood, so extending each class
/// representative by all `2^(n-1)` neighbourhoods is exhaustive.
fn all_graphs(n: usize) -> BTreeMap<CanonicalForm, Graph> {
    let mut classes = BTreeMap::new();
    if n == 0 {
        let g = Graph::empty(0);
        classes.insert(canonical_form(&g), g);
        return classes;
    }
    for base in all_graphs(n - 1).into_values() {
        for nbhd in 0u32..(1 << (n - 1)) {
            let mut g = base.disjoint_union(&Graph::empty(1));
            for u in 0..n - 1 {
                if nbhd >> u & 1 == 1 {
                    g.add_edge(u, n - 1).expect("indices in range");
                }
            }
            classes.entry(canonical_form(&g)).or_insert(g);
        }
    }
    classes
}

/// Connected graphs on `n` vertices (1 ≤ n ≤ 7), one per isomorphism class,
/// ordered by edge count and then canonical form.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::TooSmall { what: "enumeration order", min: 1, got: 0 });
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::TooLarge { what: "enumeration order", max: MAX_ENUMERATION_ORDER, got: n });
    }
    let mut out: Vec<(usize, CanonicalForm, Graph)> = all_graphs(n)
        .into_iter()
        .filter(|(_, g)| g.is_connected())
        .map(|(c, g)| (g.edge_count(), c, g))
        .collect();
    out.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(out.into_iter().map(|(_, _, g)| g).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    #[test]
    fn bounds() {
        assert!(matches!(enumerate_connected_graphs(0), Err(Error::TooSmall { .. })));
        assert!(matches!(enumerate_connected_graphs(8), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn representatives_are_pairwise_non_isomorphic() {
        let gs = enumerate_connected_graphs(5).unwrap();
        for (i, a) in gs.iter().enumerate() {
            assert!(a.is_connected());
            for b in &gs[i + 1..] {
                assert!(!is_isomorphic(a, b));
            }
        }
    }
}
