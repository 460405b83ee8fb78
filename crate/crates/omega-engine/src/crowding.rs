//! Crowding `stress(S) = |S| - 2 rank(S)` and the notions built on it:
//! crowded sets, overcrowded subsets, crowding records, the `Z`/`Y` split and
//! crowd hulls.

use matroid_core::{FlatLattice, Matroid, SetChain, SubsetMask};

pub fn stress(m: &Matroid, s: SubsetMask) -> i64 {
    s.len() as i64 - 2 * m.rank_of(s) as i64
}

/// `T` is a summand of `S` when `M|S = M|T ⊕ M|(S \ T)`.
pub fn is_summand(m: &Matroid, t: SubsetMask, s: SubsetMask) -> bool {
    m.rank_of(s) == m.rank_of(t) + m.rank_of(s.difference(t))
}

/// Whether `T ⊆ S` is overcrowded in `S`.
pub fn is_overcrowded_in(m: &Matroid, t: SubsetMask, s: SubsetMask) -> bool {
    let (st, ss) = (stress(m, t), stress(m, s));
    st > ss || (st == ss && !is_summand(m, t, s))
}

/// A subset of `S` that is overcrowded in `S`, if any.
pub fn find_overcrowded_in(m: &Matroid, s: SubsetMask) -> Option<SubsetMask> {
    s.submasks().find(|&t| is_overcrowded_in(m, t, s))
}

/// `S` is a crowding record when no subset is overcrowded in it.
pub fn is_crowding_record(m: &Matroid, s: SubsetMask) -> bool {
    find_overcrowded_in(m, s).is_none()
}

/// Components of `M|S` split by the sign of their crowding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZYSplit {
    /// Union of the components of crowding zero.
    pub z_part: SubsetMask,
    /// Union of the components of positive crowding.
    pub y_part: SubsetMask,
}

pub fn zy_split(m: &Matroid, s: SubsetMask) -> ZYSplit {
    let mut split = ZYSplit {
        z_part: SubsetMask::EMPTY,
        y_part: SubsetMask::EMPTY,
    };
    for c in m.components_of(s) {
        match stress(m, c) {
            0 => split.z_part = split.z_part.union(c),
            x if x > 0 => split.y_part = split.y_part.union(c),
            _ => {}
        }
    }
    split
}

/// Inclusion-minimal nonempty subsets of crowding at least zero.
pub fn minimal_crowded_sets(m: &Matroid) -> Vec<SubsetMask> {
    let n = m.ground_size();
    let mut crowded: Vec<SubsetMask> = (1u32..1 << n)
        .map(SubsetMask)
        .filter(|&s| stress(m, s) >= 0)
        .collect();
    crowded.sort_by_key(|s| (s.len(), s.bits()));
    let mut minimal: Vec<SubsetMask> = Vec::new();
    for s in crowded {
        if !minimal.iter().any(|t| t.is_subset_of(s)) {
            minimal.push(s);
        }
    }
    minimal
}

/// Members `S_i` with `stress(S_j) > stress(S_i)` for every later `S_j`.
pub fn crowd_hull(chain: &SetChain, stresses: &[i64]) -> SetChain {
    let keep: Vec<SubsetMask> = chain
        .sets()
        .iter()
        .enumerate()
        .filter(|&(i, _)| stresses[i + 1..].iter().all(|&s| s > stresses[i]))
        .map(|(_, &s)| s)
        .collect();
    SetChain::new(chain.ground_size(), keep).expect("a subchain is a chain")
}

/// The crowd hull with, in addition, every member dropped that has a later
/// member of the same rank.
pub fn minimal_crowd_hull(chain: &SetChain, stresses: &[i64], ranks: &[usize]) -> SetChain {
    let keep: Vec<SubsetMask> = chain
        .sets()
        .iter()
        .enumerate()
        .filter(|&(i, _)| {
            stresses[i + 1..].iter().all(|&s| s > stresses[i])
                && ranks[i + 1..].iter().all(|&r| r > ranks[i])
        })
        .map(|(_, &s)| s)
        .collect();
    SetChain::new(chain.ground_size(), keep).expect("a subchain is a chain")
}

/// Crowding of every subset, indexed by mask.
pub(crate) fn stress_table(m: &Matroid) -> Vec<i32> {
    (0u32..1 << m.ground_size())
        .map(|s| stress(m, SubsetMask(s)) as i32)
        .collect()
}

/// Record verdict for every subset, indexed by mask.
///
/// `S` can only be a record when no subset has larger crowding, which a
/// subset-maximum sweep finds in `O(n 2^n)`; the remaining candidates are
/// scanned for equally crowded non-summands.
pub(crate) fn record_table(m: &Matroid, stresses: &[i32]) -> Vec<bool> {
    let n = m.ground_size();
    let size = 1usize << n;
    let mut best = stresses.to_vec();
    for bit in 0..n {
        for s in 0..size {
            if s >> bit & 1 == 1 {
                best[s] = best[s].max(best[s ^ 1 << bit]);
            }
        }
    }
    (0..size)
        .map(|s| {
            let ss = SubsetMask(s as u32);
            best[s] == stresses[s]
                && ss
                    .submasks()
                    .all(|t| stresses[t.index()] != stresses[s] || is_summand(m, t, ss))
        })
        .collect()
}

/// Everything about crowding that the chain sums and closed forms consult.
#[derive(Debug, Clone)]
pub struct CrowdingProfile {
    /// `stress[S]` for every subset mask `S`.
    pub stress: Vec<i64>,
    pub crowded_sets: Vec<SubsetMask>,
    pub crowded_flats: Vec<SubsetMask>,
    pub records_sets: Vec<SubsetMask>,
    pub records_flats: Vec<SubsetMask>,
    pub minimal_crowded: Vec<SubsetMask>,
}

impl CrowdingProfile {
    pub fn new(m: &Matroid, lattice: &FlatLattice) -> Self {
        let table = stress_table(m);
        let records = record_table(m, &table);
        let all = || (0u32..1 << m.ground_size()).map(SubsetMask);
        let crowded_sets: Vec<SubsetMask> = all().filter(|s| table[s.index()] >= 0).collect();
        let records_sets: Vec<SubsetMask> = all().filter(|s| records[s.index()]).collect();
        let crowded_flats = lattice
            .flats()
            .iter()
            .copied()
            .filter(|f| table[f.index()] >= 0)
            .collect();
        let records_flats = lattice
            .flats()
            .iter()
            .copied()
            .filter(|f| records[f.index()])
            .collect();
        let minimal_crowded = minimal_crowded_sets(m);
        CrowdingProfile {
            stress: table.into_iter().map(i64::from).collect(),
            crowded_sets,
            crowded_flats,
            records_sets,
            records_flats,
            minimal_crowded,
        }
    }
}
