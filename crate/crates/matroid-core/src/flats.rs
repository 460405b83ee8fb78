use std::collections::HashMap;
use std::sync::OnceLock;

use crate::{Matroid, SubsetMask};

/// The lattice of flats of a matroid, graded by rank.
///
/// Möbius values `μ(F, ·)` are computed on first request for each `F` and
/// cached, so the lattice can be shared across threads.
#[derive(Debug)]
pub struct FlatLattice {
    flats: Vec<SubsetMask>,
    ranks: Vec<usize>,
    rank_start: Vec<usize>,
    index: HashMap<SubsetMask, usize>,
    covers: Vec<Vec<usize>>,
    mobius: Vec<OnceLock<Vec<(usize, i64)>>>,
}

impl FlatLattice {
    pub fn new(m: &Matroid) -> Self {
        let bottom = m.closure(SubsetMask::EMPTY);
        let r = m.rank();
        let mut levels: Vec<Vec<SubsetMask>> = vec![Vec::new(); r + 1];
        levels[m.rank_of(bottom)].push(bottom);
        for k in 0..r {
            let mut next: Vec<SubsetMask> = Vec::new();
            for &f in &levels[k] {
                for e in f.complement(m.ground_size()).iter() {
                    next.push(m.closure(f.with(e)));
                }
            }
            next.sort_unstable();
            next.dedup();
            levels[k + 1].extend(next);
        }
        let mut flats = Vec::new();
        let mut ranks = Vec::new();
        let mut rank_start = Vec::with_capacity(r + 2);
        for (k, level) in levels.iter_mut().enumerate() {
            level.sort_unstable();
            rank_start.push(flats.len());
            for &f in level.iter() {
                flats.push(f);
                ranks.push(k);
            }
        }
        rank_start.push(flats.len());
        let index: HashMap<SubsetMask, usize> =
            flats.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let covers = flats
            .iter()
            .zip(&ranks)
            .map(|(&f, &k)| {
                if k == r {
                    return Vec::new();
                }
                let mut up: Vec<usize> = f
                    .complement(m.ground_size())
                    .iter()
                    .map(|e| index[&m.closure(f.with(e))])
                    .collect();
                up.sort_unstable();
                up.dedup();
                up
            })
            .collect();
        let mobius = (0..flats.len()).map(|_| OnceLock::new()).collect();
        FlatLattice {
            flats,
            ranks,
            rank_start,
            index,
            covers,
            mobius,
        }
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// All flats, sorted by rank and then by mask.
    pub fn flats(&self) -> &[SubsetMask] {
        &self.flats
    }

    pub fn flat(&self, i: usize) -> SubsetMask {
        self.flats[i]
    }

    pub fn rank_of(&self, i: usize) -> usize {
        self.ranks[i]
    }

    /// Rank of the top flat.
    pub fn rank(&self) -> usize {
        self.rank_start.len() - 2
    }

    pub fn flats_of_rank(&self, k: usize) -> &[SubsetMask] {
        if k > self.rank() {
            return &[];
        }
        &self.flats[self.rank_start[k]..self.rank_start[k + 1]]
    }

    pub fn index_of(&self, f: SubsetMask) -> Option<usize> {
        self.index.get(&f).copied()
    }

    pub fn bottom(&self) -> SubsetMask {
        self.flats[0]
    }

    pub fn top(&self) -> SubsetMask {
        self.flats[self.flats.len() - 1]
    }

    pub fn top_index(&self) -> usize {
        self.flats.len() - 1
    }

    /// Indices of the flats covering flat `i`.
    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.covers[i]
    }

    /// Indices of flats `G ⊋ F_i`, in lattice order.
    pub fn strict_uppers(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let f = self.flats[i];
        (self.rank_start[self.ranks[i] + 1]..self.flats.len())
            .filter(move |&j| f.is_subset_of(self.flats[j]))
    }

    /// `μ(F_i, G)` for every flat `G ⊇ F_i`, as `(index, value)` pairs in
    /// increasing index order.
    pub fn mobius_row(&self, i: usize) -> &[(usize, i64)] {
        self.mobius[i].get_or_init(|| {
            let mut row: Vec<(usize, i64)> = vec![(i, 1)];
            for j in self.strict_uppers(i) {
                let g = self.flats[j];
                let sum: i64 = row
                    .iter()
                    .filter(|&&(h, _)| self.flats[h].is_subset_of(g))
                    .map(|&(_, v)| v)
                    .sum();
                row.push((j, -sum));
            }
            row
        })
    }

    /// `μ(F_i, F_j)`, or `None` when `F_i ⊄ F_j`.
    pub fn mobius(&self, i: usize, j: usize) -> Option<i64> {
        let row = self.mobius_row(i);
        row.binary_search_by_key(&j, |&(k, _)| k)
            .ok()
            .map(|p| row[p].1)
    }
}

impl Matroid {
    pub fn flat_lattice(&self) -> FlatLattice {
        FlatLattice::new(self)
    }
}
