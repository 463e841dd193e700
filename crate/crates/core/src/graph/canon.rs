//! Canonical forms for small graphs.
//!
//! Vertices are first split into cells by colour refinement; the canonical
//! form is then the lexicographically largest upper-triangle adjacency string
//! over all orderings that respect the cell order. Refinement only prunes the
//! permutations, so the cost stays factorial in the largest cell.

use std::collections::BTreeMap;

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<bool>,
}

fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colour: Vec<usize> = g.degrees();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> = {
            let mut sorted: Vec<_> = signatures.iter().collect();
            sorted.sort();
            sorted.dedup();
            sorted.into_iter().enumerate().map(|(i, s)| (s, i)).collect()
        };
        let next: Vec<usize> = signatures.iter().map(|s| ranks[s]).collect();
        let classes = |c: &[usize]| {
            let mut c = c.to_vec();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        if classes(&next) == classes(&colour) {
            return next;
        }
        colour = next;
    }
}

fn adjacency_string(g: &Graph, order: &[usize]) -> Vec<bool> {
    let n = order.len();
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(order[i], order[j]));
        }
    }
    bits
}

fn search(g: &Graph, cells: &[Vec<usize>], cell: usize, order: &mut Vec<usize>, used: &mut [bool], best: &mut Option<Vec<bool>>) {
    if cell == cells.len() {
        let bits = adjacency_string(g, order);
        if best.as_ref().is_none_or(|b| bits > *b) {
            *best = Some(bits);
        }
        return;
    }
    let members = &cells[cell];
    let placed = members.iter().filter(|&&v| used[v]).count();
    if placed == members.len() {
        search(g, cells, cell + 1, order, used, best);
        return;
    }
    for &v in members {
        if used[v] {
            continue;
        }
        used[v] = true;
        order.push(v);
        search(g, cells, cell, order, used, best);
        order.pop();
        used[v] = false;
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let colour = refine(g);
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colour.iter().enumerate() {
        cells.entry(c).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = cells.into_values().collect();
    let mut best = None;
    let mut order = Vec::with_capacity(g.n());
    let mut used = vec![false; g.n()];
    search(g, &cells, 0, &mut order, &mut used, &mut best);
    CanonicalForm { n: g.n(), bits: best.unwrap_or_default() }
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && {
            let mut da = a.degrees();
            let mut db = b.degrees();
            da.sort_unstable();
            db.sort_unstable();
            da == db
        }
        && canonical_form(a) == canonical_form(b)
}
