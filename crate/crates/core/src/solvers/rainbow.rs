//! Direct branch and bound over k-rainbow labelings.
//!
//! A labeling is grown one (vertex, colour) token at a time. A vertex is
//! satisfied once it carries a label or its neighbours show all `k` colours.
//! The search branches on an unsatisfied vertex `v` and a colour `c` missing
//! around it: either `v` takes some colour, or a neighbour takes `c`.
//! Tokens tried in earlier branches are excluded from later ones.

use crate::error::{Error, Result};
use crate::labeling::{ColorSet, RainbowLabeling, MAX_K};

pub(crate) type ColorMasks = [u64; MAX_K];

pub(crate) struct RainbowSearch<'a> {
    nbr: &'a [u64],
    k: usize,
    all: u64,
    nodes: u64,
    limit: u64,
    enumerate: bool,
    cap: usize,
    pub(crate) solutions: Vec<ColorMasks>,
}

enum Step {
    Continue,
    Stop,
}

struct Branch {
    lb: usize,
    vertex: usize,
    color: usize,
    self_avail: u8,
    nbr_avail: u64,
}

impl<'a> RainbowSearch<'a> {
    pub(crate) fn new(nbr: &'a [u64], k: usize, limit: u64) -> Self {
        let n = nbr.len();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Self { nbr, k, all, nodes: 0, limit, enumerate: false, cap: usize::MAX, solutions: Vec::new() }
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes
    }

    fn seen(&self, colors: &ColorMasks) -> ColorMasks {
        let mut seen = [0u64; MAX_K];
        for (c, s) in seen.iter_mut().enumerate().take(self.k) {
            let mut m = colors[c];
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                *s |= self.nbr[u];
            }
        }
        seen
    }

    fn unsatisfied(&self, colors: &ColorMasks, seen: &ColorMasks) -> u64 {
        let labeled = colors[..self.k].iter().fold(0, |a, &m| a | m);
        let rainbow = seen[..self.k].iter().fold(self.all, |a, &m| a & m);
        self.all & !labeled & !rainbow
    }

    /// Lower bound and branching choice; `None` if some vertex can no longer be satisfied.
    fn bound(&self, colors: &ColorMasks, excluded: &ColorMasks) -> Option<Option<Branch>> {
        let seen = self.seen(colors);
        let mut unsat = self.unsatisfied(colors, &seen);
        if unsat == 0 {
            return Some(None);
        }
        let mut packed = 0u64;
        let mut lb = 0;
        let mut best: Option<(u32, Branch)> = None;
        while unsat != 0 {
            let v = unsat.trailing_zeros() as usize;
            unsat &= unsat - 1;
            let bit = 1u64 << v;
            let mut self_avail = 0u8;
            for c in 0..self.k {
                if excluded[c] & bit == 0 {
                    self_avail |= 1 << c;
                }
            }
            let mut missing = 0;
            for c in 0..self.k {
                if seen[c] & bit != 0 {
                    continue;
                }
                missing += 1;
                let nbr_avail = self.nbr[v] & !excluded[c];
                let options = self_avail.count_ones() + nbr_avail.count_ones();
                if options == 0 {
                    return None;
                }
                if best.as_ref().is_none_or(|(o, _)| options < *o) {
                    best = Some((options, Branch { lb: 0, vertex: v, color: c, self_avail, nbr_avail }));
                }
            }
            let footprint = self.nbr[v] | bit;
            if footprint & packed == 0 {
                packed |= footprint;
                lb += if self_avail != 0 { 1 } else { missing };
            }
        }
        best.map(|(_, mut b)| {
            b.lb = lb;
            Some(b)
        })
    }

    fn dfs(&mut self, colors: ColorMasks, excluded: ColorMasks, cost: usize, budget: usize) -> Result<Step> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::BudgetExceeded { limit: self.limit });
        }
        let Some(branch) = self.bound(&colors, &excluded) else {
            return Ok(Step::Continue);
        };
        let Some(branch) = branch else {
            self.solutions.push(colors);
            if !self.enumerate {
                return Ok(Step::Stop);
            }
            if self.solutions.len() > self.cap {
                return Err(Error::CapExceeded { cap: self.cap });
            }
            return Ok(Step::Continue);
        };
        if cost + branch.lb > budget || cost + 1 > budget {
            return Ok(Step::Continue);
        }
        let mut excluded = excluded;
        let v = branch.vertex;
        for c in 0..self.k {
            if branch.self_avail >> c & 1 == 0 {
                continue;
            }
            let mut next = colors;
            next[c] |= 1u64 << v;
            let mut ex = excluded;
            ex[c] |= 1u64 << v;
            if let Step::Stop = self.dfs(next, ex, cost + 1, budget)? {
                return Ok(Step::Stop);
            }
            excluded[c] |= 1u64 << v;
        }
        let c = branch.color;
        let mut rest = branch.nbr_avail;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut next = colors;
            next[c] |= 1u64 << u;
            let mut ex = excluded;
            ex[c] |= 1u64 << u;
            if let Step::Stop = self.dfs(next, ex, cost + 1, budget)? {
                return Ok(Step::Stop);
            }
            excluded[c] |= 1u64 << u;
        }
        Ok(Step::Continue)
    }

    fn weight(colors: &ColorMasks) -> usize {
        colors.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// Root lower bound, or `None` when no extension of `start` is valid.
    fn root_bound(&self, start: &ColorMasks) -> Option<usize> {
        self.bound(start, start).map(|b| b.map_or(0, |b| b.lb))
    }

    /// Searches for a valid labeling extending `start` of weight at most `budget`.
    pub(crate) fn find(&mut self, start: ColorMasks, budget: usize) -> Result<Option<ColorMasks>> {
        self.enumerate = false;
        self.solutions.clear();
        let cost = Self::weight(&start);
        if cost > budget {
            return Ok(None);
        }
        self.dfs(start, start, cost, budget)?;
        Ok(self.solutions.pop())
    }

    /// Minimum weight over valid labelings, by iterative deepening from the
    /// root bound up to the weight of `fallback` (a known valid labeling).
    pub(crate) fn minimize(&mut self, fallback: ColorMasks) -> Result<ColorMasks> {
        let empty = [0u64; MAX_K];
        let ub = Self::weight(&fallback);
        let Some(lb) = self.root_bound(&empty) else {
            return Ok(fallback);
        };
        for budget in lb..ub {
            if let Some(found) = self.find(empty, budget)? {
                return Ok(found);
            }
        }
        Ok(fallback)
    }

    /// Every valid labeling of weight at most `budget`.
    pub(crate) fn enumerate(&mut self, budget: usize, cap: usize) -> Result<Vec<ColorMasks>> {
        self.enumerate = true;
        self.cap = cap;
        self.solutions.clear();
        let empty = [0u64; MAX_K];
        self.dfs(empty, empty, 0, budget)?;
        Ok(std::mem::take(&mut self.solutions))
    }
}

pub(crate) fn masks_to_labeling(k: usize, n: usize, colors: &ColorMasks) -> RainbowLabeling {
    let labels = (0..n)
        .map(|v| {
            (0..k).fold(ColorSet::EMPTY, |acc, c| {
                if colors[c] >> v & 1 == 1 {
                    acc.union(ColorSet::singleton(c + 1))
                } else {
                    acc
                }
            })
        })
        .collect();
    RainbowLabeling::from_labels(k, labels).expect("colours within k")
}
