//! Schubert matroids in their three indexings: a chain with an upper bound
//! profile, a chain with a lower bound profile, and a total order with a
//! minimal set in the Gale order.

use crate::{Matroid, MatroidError, Result, SetChain, SubsetMask};

/// Check that `a` is a valid lower (or upper) profile for `chain`: the chain
/// runs from `∅` to `E`, `a_0 = 0`, and `a_{i-1} ≤ a_i ≤ a_{i-1} + |S_i \ S_{i-1}|`.
pub fn check_profile(chain: &SetChain, a: &[usize]) -> Result<()> {
    if !chain.includes_bottom() || !chain.includes_top() {
        return Err(MatroidError::InvalidChain(
            "a Schubert chain must run from the empty set to the ground set".into(),
        ));
    }
    if a.len() != chain.len() {
        return Err(MatroidError::InvalidProfile(format!(
            "profile has {} entries for a chain of {} sets",
            a.len(),
            chain.len()
        )));
    }
    if a[0] != 0 {
        return Err(MatroidError::InvalidProfile("a_0 must be 0".into()));
    }
    let sets = chain.sets();
    for i in 1..a.len() {
        let step = sets[i].difference(sets[i - 1]).len();
        if a[i] < a[i - 1] || a[i] > a[i - 1] + step {
            return Err(MatroidError::InvalidProfile(format!(
                "a_{i} = {} is outside [{}, {}]",
                a[i],
                a[i - 1],
                a[i - 1] + step
            )));
        }
    }
    Ok(())
}

fn validate_order(order: &[usize]) -> Result<()> {
    let n = order.len();
    let mut seen = SubsetMask::EMPTY;
    for &e in order {
        if e >= n || seen.contains(e) {
            return Err(MatroidError::InvalidChain(format!(
                "{order:?} is not a permutation of 0..{n}"
            )));
        }
        seen = seen.with(e);
    }
    Ok(())
}

impl Matroid {
    /// Bases are the `a_k`-subsets `B` with `|B ∩ S_i| ≤ a_i` for every `i`.
    pub fn schubert_lower(chain: &SetChain, a: &[usize]) -> Result<Matroid> {
        check_profile(chain, a)?;
        let n = chain.ground_size();
        if n == 0 {
            return Err(MatroidError::EmptyGroundSet);
        }
        let r = a[a.len() - 1];
        let interior = &chain.sets()[1..chain.len() - 1];
        let bounds = &a[1..a.len() - 1];
        let bases = (0u32..1 << n)
            .map(SubsetMask)
            .filter(|b| {
                b.len() == r
                    && interior
                        .iter()
                        .zip(bounds)
                        .all(|(s, &ai)| b.intersection(*s).len() <= ai)
            })
            .collect();
        Matroid::from_bases_unchecked(n, bases)
    }

    /// Bases are the `a_k`-subsets `B` with `|B ∩ S_i| ≥ a_i` for every `i`.
    pub fn schubert_upper(chain: &SetChain, a: &[usize]) -> Result<Matroid> {
        let (c, abar) = upper_as_lower(chain, a)?;
        Matroid::schubert_lower(&c, &abar)
    }

    /// Bases are the `|A|`-subsets dominating `A` in the Gale order induced
    /// by `order` (first entry smallest).
    pub fn schubert_from_order(order: &[usize], a: SubsetMask) -> Result<Matroid> {
        let (chain, profile) = profile_from_order(order, a)?;
        Matroid::schubert_lower(&chain, &profile)
    }
}

/// Lower-profile data `(E \ S_{k-i}, r - a_{k-i})` describing the same
/// matroid as the upper-profile data `(S_•, a)`.
pub fn upper_as_lower(chain: &SetChain, a: &[usize]) -> Result<(SetChain, Vec<usize>)> {
    check_profile(chain, a)?;
    let r = a[a.len() - 1];
    let abar = a.iter().rev().map(|&ai| r - ai).collect();
    Ok((chain.reversed_complement(), abar))
}

/// Convert `(order, A)` to a chain of initial segments with its profile.
///
/// Only the ends of runs of elements outside `A` give binding constraints,
/// so the chain cuts there.
pub fn profile_from_order(order: &[usize], a: SubsetMask) -> Result<(SetChain, Vec<usize>)> {
    validate_order(order)?;
    let n = order.len();
    if n == 0 {
        return Err(MatroidError::EmptyGroundSet);
    }
    if let Some(element) = a.difference(SubsetMask::full(n)).first() {
        return Err(MatroidError::ElementOutOfRange { element, n });
    }
    let mut sizes = vec![0];
    for j in 1..n {
        if !a.contains(order[j - 1]) && a.contains(order[j]) {
            sizes.push(j);
        }
    }
    sizes.push(n);
    let profile = sizes
        .iter()
        .map(|&s| order[..s].iter().filter(|&&e| a.contains(e)).count())
        .collect();
    Ok((SetChain::initial_segments(order, &sizes)?, profile))
}

/// Convert a lower profile to `(order, A)`: the order lists each difference
/// `S_i \ S_{i-1}` in increasing element order, and `A` takes the first
/// `a_i - a_{i-1}` elements of each difference.
pub fn order_data_from_profile(chain: &SetChain, a: &[usize]) -> Result<(Vec<usize>, SubsetMask)> {
    check_profile(chain, a)?;
    let sets = chain.sets();
    let mut order = Vec::with_capacity(chain.ground_size());
    let mut set = SubsetMask::EMPTY;
    for i in 1..sets.len() {
        let diff = sets[i].difference(sets[i - 1]);
        for (j, e) in diff.iter().enumerate() {
            order.push(e);
            if j < a[i] - a[i - 1] {
                set = set.with(e);
            }
        }
    }
    Ok((order, set))
}
