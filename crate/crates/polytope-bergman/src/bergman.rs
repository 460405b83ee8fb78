//! The associated graded matroid `gr^z(M)` and membership in the Bergman
//! fan and its thickenings.

use matroid_core::{Matroid, SubsetMask};

use crate::{RationalPoint, Result};

/// The flag `S_1 ⊂ S_2 ⊂ … ⊂ E` of upper level sets of `z`.
pub fn level_flag(z: &RationalPoint) -> Vec<SubsetMask> {
    let mut values = z.coords().to_vec();
    values.sort_by(|a, b| b.cmp(a));
    values.dedup();
    values
        .iter()
        .map(|t| SubsetMask::from_elements((0..z.len()).filter(|&i| z.coord(i) >= t)))
        .collect()
}

/// Independent subsets of `block` in the minor `M|S / T`, where
/// `S = T ∪ block`, of the full rank of that minor.
fn minor_bases(m: &Matroid, below: SubsetMask, block: SubsetMask) -> Vec<SubsetMask> {
    let base = m.rank_of(below);
    let target = m.rank_of(below.union(block)) - base;
    block
        .submasks()
        .filter(|x| x.len() == target && m.rank_of(below.union(*x)) - base == target)
        .collect()
}

/// `gr^z(M) = ⊕ M|S_i / S_{i-1}` over the level flag of `z`, on the
/// original ground set.
pub fn graded_matroid(m: &Matroid, z: &RationalPoint) -> Result<Matroid> {
    let n = m.ground_size();
    z.check_len(n)?;
    let mut bases = vec![SubsetMask::EMPTY];
    let mut below = SubsetMask::EMPTY;
    for s in level_flag(z) {
        let block = s.difference(below);
        let pieces = minor_bases(m, below, block);
        bases = bases
            .iter()
            .flat_map(|b| pieces.iter().map(move |p| b.union(*p)))
            .collect();
        below = s;
    }
    Ok(Matroid::from_bases(n, bases)?)
}

/// `z ∈ Berg(M)` iff `gr^z(M)` is loop-free.
pub fn bergman_contains(m: &Matroid, z: &RationalPoint) -> Result<bool> {
    thickened_bergman_contains(m, 0, z)
}

/// `z` lies in the `ell`-thickened Bergman fan iff `gr^z(M)` has at most
/// `ell` loops.
pub fn thickened_bergman_contains(m: &Matroid, ell: usize, z: &RationalPoint) -> Result<bool> {
    Ok(graded_matroid(m, z)?.loops().len() <= ell)
}
