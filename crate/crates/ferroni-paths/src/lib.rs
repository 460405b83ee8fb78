//! Ferroni lattice paths: step sequences of length `L = n - r - 1` with
//! exactly `r - 1` diagonal steps, constrained to pass strictly below or
//! weakly above given lattice points.
//!
//! A constraint at `(x, y)` is evaluated on `D(x)`, the number of diagonal
//! steps among the first `min(x, L)` steps. Strictly below means `D(x) < y`,
//! weakly above means `D(x) ≥ y`.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use matroid_core::SetChain;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("constraint x = {x} is outside [0, {max}] for n = {n}, r = {r}")]
    ConstraintOutOfRange { x: i64, max: usize, n: usize, r: usize },
    #[error("chain has {chain} members but {ranks} ranks were given")]
    LengthMismatch { chain: usize, ranks: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathMode {
    StrictlyBelow,
    WeaklyAbove,
}

impl PathMode {
    /// Whether a path with `d` diagonals at the constraint column passes.
    #[inline]
    pub fn admits(self, d: usize, y: i64) -> bool {
        match self {
            PathMode::StrictlyBelow => (d as i64) < y,
            PathMode::WeaklyAbove => (d as i64) >= y,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathConstraint {
    pub x: i64,
    pub y: i64,
    pub mode: PathMode,
}

impl PathConstraint {
    pub fn below(x: i64, y: i64) -> Self {
        PathConstraint { x, y, mode: PathMode::StrictlyBelow }
    }

    pub fn above(x: i64, y: i64) -> Self {
        PathConstraint { x, y, mode: PathMode::WeaklyAbove }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathProblem {
    pub n: usize,
    pub r: usize,
    pub constraints: Vec<PathConstraint>,
}

impl PathProblem {
    pub fn new(n: usize, r: usize, constraints: Vec<PathConstraint>) -> Self {
        PathProblem { n, r, constraints }
    }

    /// Number of steps, or `None` when no path exists (`r = 0` or `n < 2r`).
    pub fn length(&self) -> Option<usize> {
        path_length(self.n, self.r)
    }
}

fn path_length(n: usize, r: usize) -> Option<usize> {
    if r == 0 || n < 2 * r {
        None
    } else {
        Some(n - r - 1)
    }
}

/// Number of Ferroni paths satisfying every constraint of `problem`.
pub fn count_paths(problem: &PathProblem) -> Result<BigUint, PathError> {
    let (n, r) = (problem.n, problem.r);
    let max_x = n.saturating_sub(r);
    for c in &problem.constraints {
        if c.x < 0 || c.x as usize > max_x {
            return Err(PathError::ConstraintOutOfRange { x: c.x, max: max_x, n, r });
        }
    }
    let Some(l) = problem.length() else {
        return Ok(BigUint::zero());
    };
    let top = r - 1;
    let mut by_column: Vec<Vec<&PathConstraint>> = vec![Vec::new(); l + 1];
    for c in &problem.constraints {
        by_column[(c.x as usize).min(l)].push(c);
    }
    let mut state: Vec<BigUint> = vec![BigUint::zero(); top + 1];
    state[0] = BigUint::one();
    for (t, here) in by_column.iter().enumerate() {
        for (d, v) in state.iter_mut().enumerate() {
            if here.iter().any(|c| !c.mode.admits(d, c.y)) {
                *v = BigUint::zero();
            }
        }
        if t < l {
            for d in (1..=top).rev() {
                let prev = state[d - 1].clone();
                state[d] += prev;
            }
        }
    }
    Ok(state.swap_remove(top))
}

/// The points `(|S| - a, a)` for every member `S` of `chain` other than `∅`
/// and `E`, where `a` is the rank attached to `S`.
pub fn verts_of_chain(chain: &SetChain, ranks: &[usize]) -> Result<Vec<(i64, i64)>, PathError> {
    if chain.len() != ranks.len() {
        return Err(PathError::LengthMismatch { chain: chain.len(), ranks: ranks.len() });
    }
    let full = chain.ground_size();
    Ok(chain
        .sets()
        .iter()
        .zip(ranks)
        .filter(|(s, _)| !s.is_empty() && s.len() != full)
        .map(|(s, &a)| ((s.len() - a) as i64, a as i64))
        .collect())
}

/// Per-column diagonal counts of a partially walked path ensemble.
///
/// `counts[d]` is the number of admissible step prefixes of length `column`
/// with `d` diagonals. Constraints must be applied in nondecreasing column
/// order, which holds along any chain of sets since `|S| - rank(S)` is
/// monotone under inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathState {
    pub column: usize,
    pub counts: Vec<u64>,
}

impl PathState {
    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }
}

/// Machine-word path counting for a fixed `(n, r)`, with precomputed
/// binomials for jumping several columns at once.
#[derive(Debug, Clone)]
pub struct PathKernel {
    length: usize,
    top: usize,
    binom: Vec<Vec<u64>>,
}

impl PathKernel {
    /// `None` when there are no Ferroni paths at all.
    pub fn new(n: usize, r: usize) -> Option<Self> {
        let length = path_length(n, r)?;
        // C(L, r-1) ≤ 2^L and L < 64 keeps every count in a u64.
        assert!(length < 64, "path length {length} too large for machine-word counts");
        let mut binom = vec![vec![0u64; length + 1]; length + 1];
        for i in 0..=length {
            binom[i][0] = 1;
            for j in 1..=i {
                binom[i][j] = binom[i - 1][j - 1] + if j < i { binom[i - 1][j] } else { 0 };
            }
        }
        Some(PathKernel { length, top: r - 1, binom })
    }

    /// Path length `L`.
    pub fn length(&self) -> usize {
        self.length
    }

    /// Required number of diagonals, `r - 1`.
    pub fn top(&self) -> usize {
        self.top
    }

    /// Column at which a constraint with abscissa `x` is evaluated.
    #[inline]
    pub fn column(&self, x: usize) -> usize {
        x.min(self.length)
    }

    /// `C(k, j)` for `k ≤ L`; zero when `j > k`.
    #[inline]
    pub fn binomial(&self, k: usize, j: usize) -> u64 {
        if j > k {
            0
        } else {
            self.binom[k][j]
        }
    }

    pub fn start(&self) -> PathState {
        let mut counts = vec![0; self.top + 1];
        counts[0] = 1;
        PathState { column: 0, counts }
    }

    /// Walk `state` forward to `column`.
    pub fn walk(&self, state: &PathState, column: usize) -> PathState {
        debug_assert!(state.column <= column && column <= self.length);
        let gap = column - state.column;
        if gap == 0 {
            return state.clone();
        }
        let mut counts = vec![0u64; self.top + 1];
        for (d, &c) in state.counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (j, slot) in counts[d..].iter_mut().enumerate().take(gap + 1) {
                *slot += c * self.binom[gap][j];
            }
        }
        PathState { column, counts }
    }

    /// Walk to the column of `x` and discard prefixes violating `(x, y, mode)`.
    pub fn constrain(&self, state: &PathState, x: usize, y: i64, mode: PathMode) -> PathState {
        let mut next = self.walk(state, self.column(x));
        for (d, c) in next.counts.iter_mut().enumerate() {
            if !mode.admits(d, y) {
                *c = 0;
            }
        }
        next
    }

    /// Number of complete paths extending `state`.
    pub fn finish(&self, state: &PathState) -> u64 {
        let gap = self.length - state.column;
        state
            .counts
            .iter()
            .enumerate()
            .map(|(d, &c)| c * self.binomial(gap, self.top - d))
            .sum()
    }

    /// Count paths meeting every constraint, in any order.
    pub fn count(&self, constraints: &[PathConstraint]) -> u64 {
        let mut sorted: Vec<&PathConstraint> = constraints.iter().collect();
        sorted.sort_by_key(|c| self.column(c.x.max(0) as usize));
        let state = sorted.iter().fold(self.start(), |s, c| {
            self.constrain(&s, c.x.max(0) as usize, c.y, c.mode)
        });
        self.finish(&state)
    }
}
