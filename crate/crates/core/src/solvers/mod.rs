//! Exact solvers for γ, γt and γrk.
//!
//! Two independent routes compute γrk: a direct search over labelings
//! ([`Solver::min_rainbow`]) and domination of `G □ K_k`
//! ([`Solver::min_rainbow_via_cartesian`]). Optimisation entry points split
//! the input into connected components and add up the results.

pub(crate) mod cover;
mod rainbow;

use crate::error::{Error, Result};
use crate::graph::{gen_complete, Graph, VertexSet, SOLVER_CAP};
use crate::labeling::{check_k, dominating_set_to_rdf, ColorSet, RainbowLabeling, MAX_K};
use crate::products::cartesian;

use cover::{ones128, CoverInstance, CoverSearch};
use rainbow::{masks_to_labeling, RainbowSearch};

pub const DEFAULT_NODE_LIMIT: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Branch nodes allowed per solve call before giving up with
    /// [`Error::BudgetExceeded`].
    pub node_limit: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self { node_limit: DEFAULT_NODE_LIMIT }
    }
}

/// An optimum together with a witness attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult<W> {
    pub value: usize,
    pub witness: W,
    pub nodes_explored: u64,
}

/// A minimum 2-RDF of `H` carrying `{1,2}` at `u`. When the weight is 3,
/// `v` is the other labelled vertex, normalised to carry `{1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairWitness {
    pub u: usize,
    pub v: Option<usize>,
    pub labeling: RainbowLabeling,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Solver {
    config: SolverConfig,
}

fn check_capacity(n: usize) -> Result<()> {
    if n > SOLVER_CAP {
        Err(Error::CapacityExceeded { n, cap: SOLVER_CAP })
    } else {
        Ok(())
    }
}

impl Solver {
    pub fn new(config: SolverConfig) -> Self {
        Self { config }
    }

    pub fn with_node_limit(node_limit: u64) -> Self {
        Self::new(SolverConfig { node_limit })
    }

    pub fn config(&self) -> SolverConfig {
        self.config
    }

    /// Runs `solve` on every component and stitches the witnesses together.
    fn by_components<W>(
        &self,
        g: &Graph,
        empty: W,
        mut solve: impl FnMut(&Graph) -> Result<SolveResult<W>>,
        mut merge: impl FnMut(&mut W, &[usize], W),
    ) -> Result<SolveResult<W>> {
        let mut total = SolveResult { value: 0, witness: empty, nodes_explored: 0 };
        for comp in g.components() {
            let vertices = comp.to_vec();
            check_capacity(vertices.len())?;
            let sub = g.induced_subgraph(&vertices);
            let part = solve(&sub)?;
            total.value += part.value;
            total.nodes_explored += part.nodes_explored;
            merge(&mut total.witness, &vertices, part.witness);
        }
        Ok(total)
    }

    fn cover_minimum(&self, inst: &CoverInstance, n: usize) -> Result<SolveResult<VertexSet>> {
        let mut search = CoverSearch::new(inst, self.config.node_limit);
        let out = search.minimize()?.expect("closed neighbourhoods always cover");
        let witness = VertexSet::from_vertices(n, ones128(out.chosen)).expect("token ids are vertices");
        Ok(SolveResult { value: out.cost as usize, witness, nodes_explored: out.nodes })
    }

    fn merge_sets(total: &mut VertexSet, vertices: &[usize], part: VertexSet) {
        for v in part.iter() {
            total.insert(vertices[v]).expect("component vertex in range");
        }
    }

    /// γ(G) with a minimum dominating set.
    pub fn min_dominating_set(&self, g: &Graph) -> Result<SolveResult<VertexSet>> {
        self.by_components(
            g,
            VertexSet::new(g.n()),
            |sub| {
                let nbr = sub.neighbor_masks()?;
                let tokens = nbr.iter().enumerate().map(|(v, &m)| (m | 1u64 << v, 1)).collect();
                self.cover_minimum(&CoverInstance::new(sub.n(), tokens), sub.n())
            },
            Self::merge_sets,
        )
    }

    /// γt(G) with a minimum total dominating set.
    pub fn min_total_dominating_set(&self, g: &Graph) -> Result<SolveResult<VertexSet>> {
        if let Some(v) = g.isolated_vertex() {
            return Err(Error::IsolatedVertex(v));
        }
        self.by_components(
            g,
            VertexSet::new(g.n()),
            |sub| {
                let nbr = sub.neighbor_masks()?;
                let tokens = nbr.iter().map(|&m| (m, 1)).collect();
                self.cover_minimum(&CoverInstance::new(sub.n(), tokens), sub.n())
            },
            Self::merge_sets,
        )
    }

    fn greedy_rdf(&self, nbr: &[u64], k: usize) -> [u64; MAX_K] {
        let n = nbr.len();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        // every vertex labelled {1}
        let mut singletons = [0u64; MAX_K];
        singletons[0] = all;
        // [k] on a greedy dominating set
        let mut dominated = 0u64;
        let mut chosen = 0u64;
        while dominated != all {
            let v = (0..n)
                .max_by_key(|&v| (((nbr[v] | 1u64 << v) & !dominated).count_ones(), std::cmp::Reverse(v)))
                .expect("nonempty");
            chosen |= 1u64 << v;
            dominated |= nbr[v] | 1u64 << v;
        }
        if chosen.count_ones() as usize * k < n {
            let mut full = [0u64; MAX_K];
            for m in full.iter_mut().take(k) {
                *m = chosen;
            }
            full
        } else {
            singletons
        }
    }

    /// γrk(G) by direct search over labelings.
    pub fn min_rainbow(&self, g: &Graph, k: usize) -> Result<SolveResult<RainbowLabeling>> {
        check_k(k)?;
        self.by_components(
            g,
            RainbowLabeling::new(k, g.n())?,
            |sub| {
                let nbr = sub.neighbor_masks()?;
                let mut search = RainbowSearch::new(&nbr, k, self.config.node_limit);
                let best = search.minimize(self.greedy_rdf(&nbr, k))?;
                let witness = masks_to_labeling(k, sub.n(), &best);
                Ok(SolveResult { value: witness.weight(), witness, nodes_explored: search.nodes() })
            },
            |total, vertices, part| {
                for (i, &v) in vertices.iter().enumerate() {
                    total.set(v, part.get(i)).expect("same k");
                }
            },
        )
    }

    /// γrk(G) as γ(G □ K_k), converted back through the `D_f` correspondence.
    pub fn min_rainbow_via_cartesian(&self, g: &Graph, k: usize) -> Result<SolveResult<RainbowLabeling>> {
        check_k(k)?;
        check_capacity(g.n() * k)?;
        let (product, _) = cartesian(g, &gen_complete(k)?);
        let sol = self.min_dominating_set(&product)?;
        let witness = dominating_set_to_rdf(g, k, &sol.witness)?;
        Ok(SolveResult { value: sol.value, witness, nodes_explored: sol.nodes_explored })
    }

    /// Every minimum k-RDF of `G`, sorted by label sequence.
    pub fn enumerate_min_rdfs(&self, g: &Graph, k: usize, cap: usize) -> Result<Vec<RainbowLabeling>> {
        if cap == 0 {
            return Err(Error::TooSmall { what: "enumeration cap", min: 1, got: 0 });
        }
        let value = self.min_rainbow(g, k)?.value;
        let nbr = g.neighbor_masks()?;
        let mut search = RainbowSearch::new(&nbr, k, self.config.node_limit);
        let mut out: Vec<RainbowLabeling> =
            search.enumerate(value, cap)?.iter().map(|c| masks_to_labeling(k, g.n(), c)).collect();
        out.sort();
        Ok(out)
    }

    pub fn enumerate_min_2rdfs(&self, g: &Graph, cap: usize) -> Result<Vec<RainbowLabeling>> {
        self.enumerate_min_rdfs(g, 2, cap)
    }

    /// A minimum 2-RDF of `H` using the label `{1,2}`, if one exists.
    pub fn pair_witness(&self, h: &Graph) -> Result<Option<PairWitness>> {
        if h.n() == 0 {
            return Ok(None);
        }
        let value = self.min_rainbow(h, 2)?.value;
        let nbr = h.neighbor_masks()?;
        for u in 0..h.n() {
            let mut start = [0u64; MAX_K];
            start[0] = 1u64 << u;
            start[1] = 1u64 << u;
            let mut search = RainbowSearch::new(&nbr, 2, self.config.node_limit);
            let Some(found) = search.find(start, value)? else {
                continue;
            };
            let mut labeling = masks_to_labeling(2, h.n(), &found);
            let v = (0..h.n()).find(|&x| x != u && !labeling.get(x).is_empty());
            let v = if value == 3 { v } else { None };
            if let Some(v) = v {
                if labeling.get(v) == ColorSet::singleton(2) {
                    let swapped = labeling.labels().iter().map(|l| l.swap_first_two()).collect();
                    labeling = RainbowLabeling::from_labels(2, swapped)?;
                }
            }
            return Ok(Some(PairWitness { u, v, labeling }));
        }
        Ok(None)
    }

    /// A minimum k-RDF of `H` whose labels together use all of `[k]`.
    ///
    /// If a minimum labeling misses a colour it has no ∅ vertex, so its
    /// weight is `n` with singleton labels, and cycling the colours over the
    /// vertices keeps it valid and minimum once `n ≥ k`.
    pub fn min_rainbow_all_colors(&self, h: &Graph, k: usize) -> Result<SolveResult<RainbowLabeling>> {
        if h.n() < k {
            return Err(Error::HTooSmall { n: h.n(), k });
        }
        let mut sol = self.min_rainbow(h, k)?;
        if sol.witness.colors_used() != ColorSet::full(k) {
            let labels = (0..h.n()).map(|v| ColorSet::singleton(v % k + 1)).collect();
            let cycled = RainbowLabeling::from_labels(k, labels)?;
            if cycled.weight() != sol.value || !cycled.is_k_rainbow_dominating(h) {
                return Err(Error::WitnessInvalid("no minimum labeling uses every colour".into()));
            }
            sol.witness = cycled;
        }
        Ok(sol)
    }
}

pub fn min_dominating_set(g: &Graph) -> Result<SolveResult<VertexSet>> {
    Solver::default().min_dominating_set(g)
}

pub fn min_total_dominating_set(g: &Graph) -> Result<SolveResult<VertexSet>> {
    Solver::default().min_total_dominating_set(g)
}

pub fn min_rainbow(g: &Graph, k: usize) -> Result<SolveResult<RainbowLabeling>> {
    Solver::default().min_rainbow(g, k)
}

pub fn min_rainbow_via_cartesian(g: &Graph, k: usize) -> Result<SolveResult<RainbowLabeling>> {
    Solver::default().min_rainbow_via_cartesian(g, k)
}

pub fn enumerate_min_2rdfs(g: &Graph, cap: usize) -> Result<Vec<RainbowLabeling>> {
    Solver::default().enumerate_min_2rdfs(g, cap)
}

pub fn pair_witness(h: &Graph) -> Result<Option<PairWitness>> {
    Solver::default().pair_witness(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_complete, gen_cycle, gen_double_c4, gen_glued_paths, gen_path};

    #[test]
    fn domination_numbers() {
        for n in 1..6 {
            assert_eq!(min_dominating_set(&gen_complete(n).unwrap()).unwrap().value, 1);
        }
        let p7 = gen_path(7).unwrap();
        let sol = min_dominating_set(&p7).unwrap();
        assert_eq!(sol.value, 3);
        assert!(p7.is_dominating_set(&sol.witness));
        assert_eq!(sol.witness.len(), 3);

        let t = min_total_dominating_set(&p7).unwrap();
        assert_eq!(t.value, 4);
        assert!(p7.is_total_dominating_set(&t.witness));
        assert_eq!(min_total_dominating_set(&gen_complete(2).unwrap()).unwrap().value, 2);
        assert_eq!(min_total_dominating_set(&gen_cycle(4).unwrap()).unwrap().value, 2);
        // the shared vertex covers five vertices; the two far ones are at distance four
        assert_eq!(min_dominating_set(&gen_double_c4()).unwrap().value, 3);
    }

    #[test]
    fn isolated_vertex_has_no_total_domination() {
        let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert_eq!(min_total_dominating_set(&g), Err(Error::IsolatedVertex(2)));
    }

    #[test]
    fn glued_paths_domination() {
        // without pendant arms the centre is not forced and γ drops to 2m
        for (m, p2, want) in [(1, 1, 3), (2, 3, 5), (3, 1, 7), (1, 3, 3), (1, 0, 2), (2, 0, 4), (3, 0, 6)] {
            let g = gen_glued_paths(m, p2).unwrap();
            assert_eq!(min_dominating_set(&g).unwrap().value, want, "m={m} p2={p2}");
        }
    }

    #[test]
    fn rainbow_numbers() {
        let p4 = gen_path(4).unwrap();
        let sol = min_rainbow(&p4, 2).unwrap();
        assert_eq!(sol.value, 3);
        assert!(sol.witness.is_k_rainbow_dominating(&p4));
        assert_eq!(min_rainbow(&gen_cycle(4).unwrap(), 2).unwrap().value, 2);
        assert_eq!(min_rainbow(&Graph::empty(1), 2).unwrap().value, 1);
        assert_eq!(min_rainbow_via_cartesian(&Graph::empty(1), 2).unwrap().value, 1);
        assert_eq!(min_rainbow(&gen_double_c4(), 2).unwrap().value, 3);
        assert_eq!(min_rainbow_via_cartesian(&gen_double_c4(), 2).unwrap().value, 3);
    }

    #[test]
    fn disconnected_graphs_sum_over_components() {
        let g = gen_path(4).unwrap().disjoint_union(&gen_cycle(4).unwrap());
        let sol = min_rainbow(&g, 2).unwrap();
        assert_eq!(sol.value, 5);
        assert!(sol.witness.is_k_rainbow_dominating(&g));
        assert_eq!(min_rainbow_via_cartesian(&g, 2).unwrap().value, 5);
        let d = min_dominating_set(&g).unwrap();
        assert_eq!(d.value, 4);
        assert!(g.is_dominating_set(&d.witness));
        assert_eq!(min_rainbow(&Graph::empty(3), 3).unwrap().value, 3);
    }

    #[test]
    fn capacity_and_budget_errors() {
        let big = gen_path(65).unwrap();
        assert!(matches!(min_dominating_set(&big.disjoint_union(&Graph::empty(0))), Err(Error::CapacityExceeded { .. })));
        assert!(matches!(min_rainbow_via_cartesian(&gen_path(33).unwrap(), 2), Err(Error::CapacityExceeded { .. })));
        assert!(matches!(
            Solver::with_node_limit(3).min_rainbow(&gen_cycle(12).unwrap(), 2),
            Err(Error::BudgetExceeded { limit: 3 })
        ));
        assert!(matches!(min_rainbow(&gen_path(3).unwrap(), 9), Err(Error::InvalidK(9))));
    }

    #[test]
    fn k2_minimum_rdfs() {
        // {1,2} on either end, or both ends labelled with any singletons
        let all = enumerate_min_2rdfs(&gen_complete(2).unwrap(), 100).unwrap();
        assert_eq!(all.len(), 6);
        assert!(matches!(enumerate_min_2rdfs(&gen_complete(2).unwrap(), 5), Err(Error::CapExceeded { cap: 5 })));
    }

    #[test]
    fn pair_witnesses() {
        let p4 = gen_path(4).unwrap();
        let w = pair_witness(&p4).unwrap().unwrap();
        assert_eq!(w.u, 1);
        assert_eq!(w.v, Some(3));
        assert_eq!(w.labeling.get(1), ColorSet::full(2));
        assert_eq!(w.labeling.get(3), ColorSet::singleton(1));
        assert_eq!(w.labeling.weight(), 3);
        assert!(w.labeling.is_k_rainbow_dominating(&p4));

        assert!(pair_witness(&gen_path(5).unwrap()).unwrap().is_none());
        assert!(pair_witness(&gen_double_c4()).unwrap().is_none());
    }

    #[test]
    fn all_colour_witness() {
        // K_3: every minimum 3-RDF is either [3] on one vertex or three singletons
        let k3 = gen_complete(3).unwrap();
        let sol = Solver::default().min_rainbow_all_colors(&k3, 3).unwrap();
        assert_eq!(sol.witness.colors_used(), ColorSet::full(3));
        // three isolated vertices: γr2 = 3 and no ∅ label is possible
        let e3 = Graph::empty(3);
        let sol = Solver::default().min_rainbow_all_colors(&e3, 2).unwrap();
        assert_eq!(sol.value, 3);
        assert_eq!(sol.witness.colors_used(), ColorSet::full(2));
        assert!(sol.witness.is_k_rainbow_dominating(&e3));
        assert!(matches!(
            Solver::default().min_rainbow_all_colors(&Graph::empty(1), 2),
            Err(Error::HTooSmall { n: 1, k: 2 })
        ));
    }
}
