//! Dominating couples `(A, B)`: disjoint vertex sets such that every vertex
//! outside `B` has a neighbour in `A ∪ B`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, SOLVER_CAP};
use crate::labeling::{ColorSet, RainbowLabeling};
use crate::products::lexicographic;
use crate::solvers::cover::{ones128, CoverInstance, CoverSearch};
use crate::solvers::{SolveResult, Solver};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominatingCouple {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl DominatingCouple {
    pub fn new(a: VertexSet, b: VertexSet) -> Result<Self> {
        if let Some(v) = a.first_common(&b) {
            return Err(Error::NotDisjoint(v));
        }
        Ok(Self { a, b })
    }

    pub fn cost(&self, cost_a: usize, cost_b: usize) -> usize {
        cost_a * self.a.len() + cost_b * self.b.len()
    }
}

fn check_universe(g: &Graph, s: &VertexSet) -> Result<()> {
    if s.universe() != g.n() {
        return Err(Error::OrderMismatch { expected: g.n(), got: s.universe() });
    }
    Ok(())
}

/// The first vertex outside `B` with no neighbour in `A ∪ B`.
fn first_undominated(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<Option<usize>> {
    check_universe(g, a)?;
    check_universe(g, b)?;
    if let Some(v) = a.first_common(b) {
        return Err(Error::NotDisjoint(v));
    }
    let mut ab = a.clone();
    ab.union_with(b);
    Ok((0..g.n()).find(|&x| !b.contains(x) && !g.neighbors(x).any(|w| ab.contains(w))))
}

pub fn is_dominating_couple(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<bool> {
    Ok(first_undominated(g, a, b)?.is_none())
}

impl Solver {
    /// Minimum of `cost_a·|A| + cost_b·|B|` over dominating couples of `G`.
    ///
    /// Token `(v, A)` covers `N(v)`; token `(v, B)` covers `N[v]`, since a
    /// vertex of `B` needs no neighbour. The two tokens of a vertex conflict.
    pub fn min_couple_cost(
        &self,
        g: &Graph,
        cost_a: usize,
        cost_b: usize,
    ) -> Result<SolveResult<DominatingCouple>> {
        if cost_a == 0 || cost_b == 0 {
            let got = cost_a.min(cost_b);
            return Err(Error::TooSmall { what: "couple cost", min: 1, got });
        }
        if g.n() > SOLVER_CAP {
            return Err(Error::CapacityExceeded { n: g.n(), cap: SOLVER_CAP });
        }
        let n = g.n();
        let nbr = g.neighbor_masks()?;
        let weight = |c: usize| u32::try_from(c).map_err(|_| Error::TooLarge { what: "couple cost", max: u32::MAX as usize, got: c });
        let (ca, cb) = (weight(cost_a)?, weight(cost_b)?);
        let mut tokens: Vec<(u64, u32)> = nbr.iter().map(|&m| (m, ca)).collect();
        tokens.extend(nbr.iter().enumerate().map(|(v, &m)| (m | 1u64 << v, cb)));
        let mut inst = CoverInstance::new(n, tokens);
        for v in 0..n {
            inst.add_conflict(v, n + v);
        }
        let mut search = CoverSearch::new(&inst, self.config().node_limit);
        let out = search.minimize()?.expect("B = V(G) is always a dominating couple");
        let (mut a, mut b) = (VertexSet::new(n), VertexSet::new(n));
        for t in ones128(out.chosen) {
            if t < n {
                a.insert(t)?;
            } else {
                b.insert(t - n)?;
            }
        }
        let couple = DominatingCouple::new(a, b)?;
        debug_assert!(is_dominating_couple(g, &couple.a, &couple.b).unwrap_or(false));
        Ok(SolveResult { value: out.cost as usize, witness: couple, nodes_explored: out.nodes })
    }

    /// The labeling of `G ∘ H` that puts `[k]` on `(a, 0)` for `a ∈ A` and a
    /// minimum k-RDF of `H` using every colour on each layer above `B`.
    pub fn couple_labeling(
        &self,
        g: &Graph,
        h: &Graph,
        k: usize,
        couple: &DominatingCouple,
    ) -> Result<RainbowLabeling> {
        if let Some(v) = first_undominated(g, &couple.a, &couple.b)? {
            return Err(Error::NotDominatingCouple(v));
        }
        if h.n() < k || h.n() == 0 {
            return Err(Error::HTooSmall { n: h.n(), k });
        }
        let (product, index) = lexicographic(g, h);
        let mut f = RainbowLabeling::new(k, product.n())?;
        for x in couple.a.iter() {
            f.set(index.encode(x, 0), ColorSet::full(k))?;
        }
        if !couple.b.is_empty() {
            let layer = self.min_rainbow_all_colors(h, k)?.witness;
            for x in couple.b.iter() {
                for y in 0..h.n() {
                    f.set(index.encode(x, y), layer.get(y))?;
                }
            }
        }
        f.validate(&product).map_err(|e| Error::WitnessInvalid(format!("couple labeling: {e}")))?;
        Ok(f)
    }
}

pub fn min_couple_cost(g: &Graph, cost_a: usize, cost_b: usize) -> Result<SolveResult<DominatingCouple>> {
    Solver::default().min_couple_cost(g, cost_a, cost_b)
}

pub fn couple_labeling(g: &Graph, h: &Graph, k: usize, couple: &DominatingCouple) -> Result<RainbowLabeling> {
    Solver::default().couple_labeling(g, h, k, couple)
}
