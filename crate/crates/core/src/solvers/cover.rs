//! Exact weighted covering by branch and bound with iterative deepening.
//!
//! Elements are the bits of a `u64` universe; each token covers a mask of
//! elements at an integer cost. At every node the search branches on the
//! uncovered element with the fewest admissible tokens, and every later
//! branch excludes the tokens tried before it, so each cover is generated at
//! most once. Bounding uses a packing of uncovered elements whose admissible
//! token sets are pairwise disjoint.

use crate::error::{Error, Result};

pub(crate) const MAX_TOKENS: usize = 128;

#[derive(Debug, Clone)]
pub(crate) struct CoverInstance {
    universe: u64,
    cover: Vec<u64>,
    cost: Vec<u32>,
    /// Tokens covering each element.
    coverers: Vec<u128>,
    /// Tokens that may not be chosen together with a given token.
    conflicts: Vec<u128>,
}

impl CoverInstance {
    pub(crate) fn new(elements: usize, tokens: Vec<(u64, u32)>) -> Self {
        assert!(elements <= 64 && tokens.len() <= MAX_TOKENS);
        let universe = if elements == 64 { u64::MAX } else { (1u64 << elements) - 1 };
        let mut coverers = vec![0u128; elements];
        for (t, &(mask, _)) in tokens.iter().enumerate() {
            for (e, c) in coverers.iter_mut().enumerate() {
                if mask >> e & 1 == 1 {
                    *c |= 1u128 << t;
                }
            }
        }
        let conflicts = vec![0u128; tokens.len()];
        let (cover, cost) = tokens.into_iter().map(|(m, c)| (m & universe, c)).unzip();
        Self { universe, cover, cost, coverers, conflicts }
    }

    pub(crate) fn add_conflict(&mut self, a: usize, b: usize) {
        self.conflicts[a] |= 1u128 << b;
        self.conflicts[b] |= 1u128 << a;
    }

    /// First element nobody can cover, if any.
    #[cfg(test)]
    pub(crate) fn uncoverable(&self) -> Option<usize> {
        self.coverers.iter().position(|&c| c == 0)
    }

    fn greedy(&self) -> Option<(u32, u128)> {
        let mut covered = 0u64;
        let mut chosen = 0u128;
        let mut blocked = 0u128;
        let mut cost = 0;
        while covered != self.universe {
            let mut best: Option<(usize, u32, u32)> = None;
            for t in 0..self.cover.len() {
                if (chosen | blocked) >> t & 1 == 1 {
                    continue;
                }
                let gain = (self.cover[t] & !covered).count_ones();
                if gain == 0 {
                    continue;
                }
                // compare gain / cost without floating point
                let better = match best {
                    None => true,
                    Some((_, g, c)) => gain * c > g * self.cost[t],
                };
                if better {
                    best = Some((t, gain, self.cost[t]));
                }
            }
            let (t, _, c) = best?;
            chosen |= 1u128 << t;
            blocked |= self.conflicts[t];
            covered |= self.cover[t];
            cost += c;
        }
        Some((cost, chosen))
    }
}

/// Mutable state of one search call.
pub(crate) struct CoverSearch<'a> {
    inst: &'a CoverInstance,
    nodes: u64,
    limit: u64,
    enumerate: bool,
    cap: usize,
    solutions: Vec<u128>,
}

#[derive(Debug, Clone)]
pub(crate) struct CoverOutcome {
    pub cost: u32,
    pub chosen: u128,
    pub nodes: u64,
}

enum Step {
    Continue,
    Stop,
}

impl<'a> CoverSearch<'a> {
    pub(crate) fn new(inst: &'a CoverInstance, limit: u64) -> Self {
        Self { inst, nodes: 0, limit, enumerate: false, cap: usize::MAX, solutions: Vec::new() }
    }

    /// Lower bound on the remaining cost and the element to branch on;
    /// `None` when some uncovered element has no admissible token left.
    fn bound(&self, covered: u64, excluded: u128) -> Option<(u32, usize, u128)> {
        let mut uncovered = self.inst.universe & !covered;
        let mut packed = 0u128;
        let mut lb = 0u32;
        let mut pick: Option<(u32, usize, u128)> = None;
        while uncovered != 0 {
            let e = uncovered.trailing_zeros() as usize;
            uncovered &= uncovered - 1;
            let avail = self.inst.coverers[e] & !excluded;
            if avail == 0 {
                return None;
            }
            let options = avail.count_ones();
            if pick.is_none_or(|(o, _, _)| options < o) {
                pick = Some((options, e, avail));
            }
            if avail & packed == 0 {
                packed |= avail;
                lb += min_cost(&self.inst.cost, avail);
            }
        }
        Some(pick.map_or((0, 0, 0), |(_, e, avail)| (lb, e, avail)))
    }

    fn dfs(&mut self, covered: u64, excluded: u128, chosen: u128, cost: u32, budget: u32) -> Result<Step> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::BudgetExceeded { limit: self.limit });
        }
        if covered == self.inst.universe {
            self.solutions.push(chosen);
            if !self.enumerate {
                return Ok(Step::Stop);
            }
            if self.solutions.len() > self.cap {
                return Err(Error::CapExceeded { cap: self.cap });
            }
            return Ok(Step::Continue);
        }
        let Some((lb, _, avail)) = self.bound(covered, excluded) else {
            return Ok(Step::Continue);
        };
        if cost + lb > budget {
            return Ok(Step::Continue);
        }
        let mut prior = 0u128;
        let mut rest = avail;
        while rest != 0 {
            let t = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let c = self.inst.cost[t];
            if cost + c <= budget {
                let step = self.dfs(
                    covered | self.inst.cover[t],
                    excluded | prior | self.inst.conflicts[t] | (1u128 << t),
                    chosen | (1u128 << t),
                    cost + c,
                    budget,
                )?;
                if let Step::Stop = step {
                    return Ok(Step::Stop);
                }
            }
            prior |= 1u128 << t;
        }
        Ok(Step::Continue)
    }

    fn root_bound(&self) -> Option<u32> {
        self.bound(0, 0).map(|(lb, _, _)| lb)
    }

    /// Minimum-cost cover, or `None` if no cover exists.
    pub(crate) fn minimize(&mut self) -> Result<Option<CoverOutcome>> {
        let Some(lb) = self.root_bound() else {
            return Ok(None);
        };
        let greedy = self.inst.greedy();
        let ub = greedy.map_or_else(|| self.inst.cost.iter().sum::<u32>() + 1, |(c, _)| c);
        for budget in lb..ub {
            self.solutions.clear();
            if let Step::Stop = self.dfs(0, 0, 0, 0, budget)? {
                let chosen = self.solutions[0];
                return Ok(Some(CoverOutcome { cost: self.cost_of(chosen), chosen, nodes: self.nodes }));
            }
        }
        Ok(greedy.map(|(cost, chosen)| CoverOutcome { cost, chosen, nodes: self.nodes }))
    }

    /// Every cover of cost at most `budget`; erroring once more than `cap` are found.
    #[cfg(test)]
    pub(crate) fn enumerate(&mut self, budget: u32, cap: usize) -> Result<Vec<u128>> {
        self.enumerate = true;
        self.cap = cap;
        self.solutions.clear();
        if self.root_bound().is_some() {
            self.dfs(0, 0, 0, 0, budget)?;
        }
        Ok(std::mem::take(&mut self.solutions))
    }

    fn cost_of(&self, chosen: u128) -> u32 {
        ones128(chosen).map(|t| self.inst.cost[t]).sum()
    }
}

fn min_cost(cost: &[u32], mut set: u128) -> u32 {
    let mut best = u32::MAX;
    while set != 0 {
        let t = set.trailing_zeros() as usize;
        set &= set - 1;
        best = best.min(cost[t]);
    }
    best
}

pub(crate) fn ones128(mut set: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let t = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(t)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weighted_choice() {
        // elements {0,1,2}; one expensive token covers all, three cheap ones cover one each
        let inst = CoverInstance::new(3, vec![(0b111, 5), (0b001, 1), (0b010, 1), (0b100, 1)]);
        let out = CoverSearch::new(&inst, 1_000).minimize().unwrap().unwrap();
        assert_eq!(out.cost, 3);
        assert_eq!(out.chosen, 0b1110);
    }

    #[test]
    fn conflicts_are_respected() {
        let mut inst = CoverInstance::new(2, vec![(0b01, 1), (0b10, 1), (0b11, 3)]);
        inst.add_conflict(0, 1);
        let out = CoverSearch::new(&inst, 1_000).minimize().unwrap().unwrap();
        assert_eq!(out.cost, 3);
    }

    #[test]
    fn enumeration_counts_each_cover_once() {
        // two elements, each covered by two tokens, plus one token covering both
        let inst = CoverInstance::new(2, vec![(0b01, 1), (0b01, 1), (0b10, 1), (0b10, 1), (0b11, 1)]);
        let mut s = CoverSearch::new(&inst, 1_000);
        assert_eq!(s.enumerate(1, 100).unwrap().len(), 1);
        let mut s = CoverSearch::new(&inst, 1_000);
        let mut covers = s.enumerate(2, 100).unwrap();
        let n = covers.len();
        covers.sort();
        covers.dedup();
        assert_eq!(covers.len(), n);
        // {a_i, b_j}, {c} alone, and {a_i, c} where c completes a branch started on element 0
        assert_eq!(n, 4 + 1 + 2);
    }

    #[test]
    fn infeasible_and_budget() {
        let inst = CoverInstance::new(2, vec![(0b01, 1)]);
        assert_eq!(inst.uncoverable(), Some(1));
        assert!(CoverSearch::new(&inst, 1_000).minimize().unwrap().is_none());

        let tokens: Vec<(u64, u32)> = (0..40).map(|i| (1u64 << i, 1)).collect();
        let inst = CoverInstance::new(40, tokens);
        // forty singletons: the packing bound is exact, so this needs a single descent
        let out = CoverSearch::new(&inst, 1_000).minimize().unwrap().unwrap();
        assert_eq!(out.cost, 40);
        assert!(matches!(CoverSearch::new(&inst, 5).enumerate(40, 10), Err(Error::BudgetExceeded { .. })));
    }
}
