use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU8, Ordering};

use crate::{binomial, MatroidError, Result, SubsetMask, MAX_GROUND_SET};

const UNKNOWN: u8 = u8::MAX;

/// Memoized rank values indexed by subset mask.
///
/// Cells are written at most once with the same value, so relaxed atomics are
/// enough for concurrent readers to observe either `UNKNOWN` or the final rank.
struct RankTable {
    cells: Box<[AtomicU8]>,
    complete: AtomicBool,
}

impl RankTable {
    fn new(n: usize) -> Self {
        let cells = (0..1usize << n).map(|_| AtomicU8::new(UNKNOWN)).collect();
        RankTable {
            cells,
            complete: AtomicBool::new(false),
        }
    }

    fn snapshot(&self) -> Self {
        let cells = self
            .cells
            .iter()
            .map(|c| AtomicU8::new(c.load(Ordering::Relaxed)))
            .collect();
        RankTable {
            cells,
            complete: AtomicBool::new(self.complete.load(Ordering::Relaxed)),
        }
    }
}

/// A matroid given by its bases.
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<SubsetMask>,
    table: RankTable,
}

impl Matroid {
    /// Build a matroid from an explicit basis list, checking the exchange axiom.
    pub fn from_bases(n: usize, bases: Vec<SubsetMask>) -> Result<Self> {
        let m = Self::from_bases_unchecked(n, bases)?;
        m.check_exchange()?;
        Ok(m)
    }

    /// Build a matroid whose basis list is known to satisfy the exchange
    /// axiom. Shape checks (sizes, ground set) still run.
    pub(crate) fn from_bases_unchecked(n: usize, mut bases: Vec<SubsetMask>) -> Result<Self> {
        if n == 0 {
            return Err(MatroidError::EmptyGroundSet);
        }
        if n > MAX_GROUND_SET {
            return Err(MatroidError::GroundSetTooLarge(n));
        }
        if bases.is_empty() {
            return Err(MatroidError::NotAMatroid("empty basis list".into()));
        }
        let full = SubsetMask::full(n);
        for b in &bases {
            if !b.is_subset_of(full) {
                let element = b.difference(full).first().unwrap_or(0);
                return Err(MatroidError::ElementOutOfRange { element, n });
            }
        }
        let rank = bases[0].len();
        if bases.iter().any(|b| b.len() != rank) {
            return Err(MatroidError::NotAMatroid(
                "bases have different cardinalities".into(),
            ));
        }
        bases.sort_unstable();
        bases.dedup();
        Ok(Matroid {
            n,
            rank,
            bases,
            table: RankTable::new(n),
        })
    }

    /// The uniform matroid `U(r, n)`.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(MatroidError::EmptyGroundSet);
        }
        if n > MAX_GROUND_SET {
            return Err(MatroidError::GroundSetTooLarge(n));
        }
        if r > n {
            return Err(MatroidError::InvalidRank { r, n });
        }
        let bases = (0u32..1 << n)
            .map(SubsetMask)
            .filter(|s| s.len() == r)
            .collect();
        Self::from_bases_unchecked(n, bases)
    }

    fn check_exchange(&self) -> Result<()> {
        let mut is_basis = vec![false; 1 << self.n];
        for b in &self.bases {
            is_basis[b.index()] = true;
        }
        // reach[i][e]: elements f such that B_i - e + f is a basis.
        let reach: Vec<Vec<u32>> = self
            .bases
            .iter()
            .map(|&b| {
                (0..self.n)
                    .map(|e| {
                        if !b.contains(e) {
                            return 0;
                        }
                        let rest = b.without(e);
                        b.complement(self.n)
                            .iter()
                            .filter(|&f| is_basis[rest.with(f).index()])
                            .fold(0u32, |acc, f| acc | 1 << f)
                    })
                    .collect()
            })
            .collect();
        for (i, &b1) in self.bases.iter().enumerate() {
            for &b2 in &self.bases {
                let only2 = b2.difference(b1).bits();
                for e in b1.difference(b2).iter() {
                    if reach[i][e] & only2 == 0 {
                        return Err(MatroidError::NotAMatroid(format!(
                            "exchange fails for B1={b1}, B2={b2}, e={e}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// Rank of the whole matroid.
    #[inline]
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn ground(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    pub fn bases(&self) -> &[SubsetMask] {
        &self.bases
    }

    pub fn is_basis(&self, s: SubsetMask) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    pub fn is_uniform(&self) -> bool {
        self.bases.len() as u128 == binomial(self.n, self.rank)
    }

    /// `rank(S) = max |B ∩ S|` over bases, memoized.
    pub fn rank_of(&self, s: SubsetMask) -> usize {
        let cell = &self.table.cells[s.index()];
        let v = cell.load(Ordering::Relaxed);
        if v != UNKNOWN {
            return v as usize;
        }
        let mut best = 0;
        for b in &self.bases {
            best = best.max(b.intersection(s).len());
            if best == s.len().min(self.rank) {
                break;
            }
        }
        cell.store(best as u8, Ordering::Relaxed);
        best
    }

    /// `|S| - rank(S)`.
    pub fn corank_of(&self, s: SubsetMask) -> usize {
        s.len() - self.rank_of(s)
    }

    pub fn is_independent(&self, s: SubsetMask) -> bool {
        self.rank_of(s) == s.len()
    }

    /// Fill every cell of the rank table in `O(n 2^n)`.
    pub fn precompute_rank_table(&self) {
        if self.table.complete.load(Ordering::Acquire) {
            return;
        }
        let size = 1usize << self.n;
        let mut independent = vec![false; size];
        for b in &self.bases {
            independent[b.index()] = true;
        }
        for bit in 0..self.n {
            for s in 0..size {
                if s >> bit & 1 == 0 && independent[s | 1 << bit] {
                    independent[s] = true;
                }
            }
        }
        let mut rank = vec![0u8; size];
        for s in 1..size {
            rank[s] = if independent[s] {
                (s as u32).count_ones() as u8
            } else {
                let mut best = 0;
                let mut bits = s;
                while bits != 0 {
                    let low = bits & bits.wrapping_neg();
                    best = best.max(rank[s ^ low]);
                    bits ^= low;
                }
                best
            };
        }
        for (cell, v) in self.table.cells.iter().zip(rank) {
            cell.store(v, Ordering::Relaxed);
        }
        self.table.complete.store(true, Ordering::Release);
    }

    pub fn rank_table_complete(&self) -> bool {
        self.table.complete.load(Ordering::Acquire)
    }

    /// Largest superset of `S` with the same rank.
    pub fn closure(&self, s: SubsetMask) -> SubsetMask {
        let r = self.rank_of(s);
        s.complement(self.n)
            .iter()
            .filter(|&e| self.rank_of(s.with(e)) == r)
            .fold(s, |acc, e| acc.with(e))
    }

    pub fn is_flat(&self, s: SubsetMask) -> bool {
        self.closure(s) == s
    }

    /// Elements lying in no basis.
    pub fn loops(&self) -> SubsetMask {
        let covered = self.bases.iter().fold(SubsetMask::EMPTY, |a, &b| a.union(b));
        covered.complement(self.n)
    }

    /// Elements lying in every basis.
    pub fn coloops(&self) -> SubsetMask {
        self.bases
            .iter()
            .fold(self.ground(), |a, &b| a.intersection(b))
    }

    pub fn has_loops(&self) -> bool {
        !self.loops().is_empty()
    }

    pub fn has_coloops(&self) -> bool {
        !self.coloops().is_empty()
    }
}

impl Clone for Matroid {
    fn clone(&self) -> Self {
        Matroid {
            n: self.n,
            rank: self.rank,
            bases: self.bases.clone(),
            table: self.table.snapshot(),
        }
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("n", &self.n)
            .field("rank", &self.rank)
            .field("bases", &self.bases.len())
            .finish()
    }
}
