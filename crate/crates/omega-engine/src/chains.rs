//! Weighted sums over chains in a poset of sets, each chain weighted by the
//! number of Ferroni paths satisfying the constraints at its members.
//!
//! Two evaluators share one description of the chain family: a backward
//! transfer recursion over the poset, and a depth-first enumeration with
//! incremental path states. Arithmetic is `i128`; with `n ≤ 16` there are at
//! most about `5·10^15` chains, each weighed by at most `2^16` (a product of
//! Möbius values) times at most `C(14, 7)` paths, far below `i128::MAX`.

use rayon::prelude::*;

use ferroni_paths::{PathKernel, PathMode, PathState};
use matroid_core::{Matroid, SubsetMask};

/// How a chain family is summed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Evaluator {
    /// Backward recursion over the member poset, `O(edges · r^2)`.
    Transfer,
    /// Depth-first enumeration of chains with pruning of dead path states.
    Dfs,
}

/// Result of summing a chain family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSum {
    pub value: i128,
    /// Number of chains in the family.
    pub chains: u128,
    /// Chain prefixes visited by the evaluator.
    pub visited: u64,
}

/// Chains `H_0 ⊂ H_1 ⊂ ... ⊂ E` through a set of member nodes.
///
/// `starts` lists admissible `H_0` with their weights; each step `S → T`
/// carries a weight; every member other than `∅` and `E` constrains paths at
/// `(|S| - rank S, rank S)`.
pub(crate) struct ChainFamily {
    pub sets: Vec<SubsetMask>,
    pub succ: Vec<Vec<(u32, i64)>>,
    pub starts: Vec<(usize, i64)>,
    pub top: usize,
    pub mode: PathMode,
    pub global: i64,
    x: Vec<usize>,
    y: Vec<i64>,
    constrained: Vec<bool>,
}

impl ChainFamily {
    /// Build a family on `members` (which must contain `E`), with edges
    /// between comparable members weighted by `edge`, which returns `None`
    /// for excluded steps.
    pub fn new(
        m: &Matroid,
        mut members: Vec<SubsetMask>,
        starts: impl Fn(SubsetMask) -> Option<i64>,
        edge: impl Fn(SubsetMask, SubsetMask) -> Option<i64> + Sync,
        mode: PathMode,
        global: i64,
    ) -> Self {
        let n = m.ground_size();
        let full = m.ground();
        members.sort_by_key(|s| (s.len(), s.bits()));
        members.dedup();
        let top = members
            .iter()
            .position(|&s| s == full)
            .expect("chain families always contain the ground set");
        assert_eq!(top, members.len() - 1);
        let x = members.iter().map(|&s| m.corank_of(s)).collect();
        let y = members.iter().map(|&s| m.rank_of(s) as i64).collect();
        let constrained = members
            .iter()
            .map(|&s| !s.is_empty() && s != full)
            .collect();

        // Superset enumeration costs sum 2^(n - |S|); pairwise scanning
        // costs N^2. Use whichever is cheaper.
        let superset_cost: u64 = members.iter().map(|s| 1u64 << (n - s.len())).sum();
        let pair_cost = (members.len() as u64).pow(2) / 2;
        let index: Option<Vec<u32>> = (superset_cost < pair_cost).then(|| {
            let mut idx = vec![u32::MAX; 1 << n];
            for (i, s) in members.iter().enumerate() {
                idx[s.index()] = i as u32;
            }
            idx
        });
        let succ = (0..members.len())
            .into_par_iter()
            .map(|i| {
                let s = members[i];
                let mut out: Vec<(u32, i64)> = Vec::new();
                match &index {
                    Some(idx) => {
                        for extra in s.complement(n).submasks() {
                            if extra.is_empty() {
                                continue;
                            }
                            let j = idx[s.union(extra).index()];
                            if j != u32::MAX {
                                if let Some(w) = edge(s, members[j as usize]) {
                                    out.push((j, w));
                                }
                            }
                        }
                        out.sort_unstable_by_key(|&(j, _)| j);
                    }
                    None => {
                        for (j, &t) in members.iter().enumerate().skip(i + 1) {
                            if s.is_proper_subset_of(t) {
                                if let Some(w) = edge(s, t) {
                                    out.push((j as u32, w));
                                }
                            }
                        }
                    }
                }
                out.retain(|&(_, w)| w != 0);
                out
            })
            .collect();
        let starts = members
            .iter()
            .enumerate()
            .filter_map(|(i, &s)| starts(s).filter(|&w| w != 0).map(|w| (i, w)))
            .collect();
        ChainFamily {
            sets: members,
            succ,
            starts,
            top,
            mode,
            global,
            x,
            y,
            constrained,
        }
    }

    /// Number of chains from each start to `E`.
    pub fn chain_count(&self) -> u128 {
        let mut count = vec![0u128; self.sets.len()];
        for i in (0..self.sets.len()).rev() {
            count[i] = if i == self.top {
                1
            } else {
                self.succ[i].iter().map(|&(j, _)| count[j as usize]).sum()
            };
        }
        self.starts.iter().map(|&(s, _)| count[s]).sum()
    }

    pub fn evaluate(&self, kernel: &PathKernel, evaluator: Evaluator) -> ChainSum {
        let chains = self.chain_count();
        let (value, visited) = match evaluator {
            Evaluator::Transfer => (self.transfer(kernel), self.sets.len() as u64),
            Evaluator::Dfs => self.dfs(kernel),
        };
        ChainSum {
            value: value * self.global as i128,
            chains,
            visited,
        }
    }

    fn admits(&self, i: usize, d: usize) -> bool {
        !self.constrained[i] || self.mode.admits(d, self.y[i])
    }

    fn transfer(&self, kernel: &PathKernel) -> i128 {
        let width = kernel.top() + 1;
        let col: Vec<usize> = self.x.iter().map(|&x| kernel.column(x)).collect();
        // h[i][d]: signed completions from member i having d diagonals at its
        // column, already filtered by the constraint at i.
        let mut h = vec![vec![0i128; width]; self.sets.len()];
        for i in (0..self.sets.len()).rev() {
            let mut g = vec![0i128; width];
            if i == self.top {
                g[kernel.top()] = 1;
            } else {
                for &(j, w) in &self.succ[i] {
                    let j = j as usize;
                    let gap = col[j] - col[i];
                    for (d, gd) in g.iter_mut().enumerate() {
                        let mut acc = 0i128;
                        for (dj, &hv) in h[j].iter().enumerate().skip(d) {
                            if hv != 0 {
                                acc += kernel.binomial(gap, dj - d) as i128 * hv;
                            }
                        }
                        *gd += w as i128 * acc;
                    }
                }
            }
            for (d, v) in g.into_iter().enumerate() {
                h[i][d] = if self.admits(i, d) { v } else { 0 };
            }
        }
        self.starts
            .iter()
            .map(|&(s, w)| {
                let from_origin: i128 = h[s]
                    .iter()
                    .enumerate()
                    .map(|(d, &v)| kernel.binomial(col[s], d) as i128 * v)
                    .sum();
                w as i128 * from_origin
            })
            .sum()
    }

    fn enter(&self, kernel: &PathKernel, state: &PathState, i: usize) -> PathState {
        if self.constrained[i] {
            kernel.constrain(state, self.x[i], self.y[i], self.mode)
        } else {
            kernel.walk(state, kernel.column(self.x[i]))
        }
    }

    fn dfs(&self, kernel: &PathKernel) -> (i128, u64) {
        // Split the work at the first step so branches run in parallel.
        let mut work: Vec<(usize, i128, PathState)> = Vec::new();
        let mut value = 0i128;
        let mut visited = 0u64;
        for &(s, w) in &self.starts {
            visited += 1;
            if s == self.top {
                value += w as i128 * kernel.finish(&kernel.start()) as i128;
                continue;
            }
            let state = self.enter(kernel, &kernel.start(), s);
            if !state.is_zero() {
                work.push((s, w as i128, state));
            }
        }
        let tasks: Vec<(usize, u32, i64, i128, &PathState)> = work
            .iter()
            .flat_map(|(s, w, st)| self.succ[*s].iter().map(move |&(j, ew)| (*s, j, ew, *w, st)))
            .collect();
        let (sum, seen) = tasks
            .par_iter()
            .map(|&(_, j, ew, w, st)| self.step(kernel, st, j as usize, w * ew as i128))
            .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
        (value + sum, visited + seen)
    }

    /// Sum over chains continuing from `state` into member `j`.
    fn step(&self, kernel: &PathKernel, state: &PathState, j: usize, weight: i128) -> (i128, u64) {
        if j == self.top {
            return (weight * kernel.finish(state) as i128, 1);
        }
        let next = self.enter(kernel, state, j);
        if next.is_zero() {
            return (0, 1);
        }
        let mut total = 0i128;
        let mut visited = 1u64;
        for &(k, w) in &self.succ[j] {
            let (v, c) = self.step(kernel, &next, k as usize, weight * w as i128);
            total += v;
            visited += c;
        }
        (total, visited)
    }
}
