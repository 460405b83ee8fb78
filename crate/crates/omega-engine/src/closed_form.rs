//! Closed forms for `ω(M)` in special situations.
//!
//! Each rule returns `None` when it does not apply. [`omega_closed_form`]
//! tries them in a fixed order and reports the first that applies.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use matroid_core::{binomial, Matroid, SubsetMask};

use crate::crowding::{find_overcrowded_in, minimal_crowded_sets, stress};
use crate::{OmegaError, Result};

/// Which closed form produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedFormRule {
    SmallGroundSet,
    Loops,
    Components,
    HalfSize,
    HalfSizePlusOne,
    RankOne,
    RankTwo,
    RankThree,
    RankFour,
    Overcrowded,
    NoCrowdedFlats,
}

impl ClosedFormRule {
    pub fn name(self) -> &'static str {
        match self {
            ClosedFormRule::SmallGroundSet => "n<2r",
            ClosedFormRule::Loops => "loops",
            ClosedFormRule::Components => "components",
            ClosedFormRule::HalfSize => "n=2r",
            ClosedFormRule::HalfSizePlusOne => "n=2r+1",
            ClosedFormRule::RankOne => "rank-1",
            ClosedFormRule::RankTwo => "rank-2",
            ClosedFormRule::RankThree => "rank-3",
            ClosedFormRule::RankFour => "rank-4",
            ClosedFormRule::Overcrowded => "overcrowded",
            ClosedFormRule::NoCrowdedFlats => "no-crowded-flats",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub value: BigInt,
    pub rule: ClosedFormRule,
}

fn big(v: u128) -> BigInt {
    BigInt::from(v)
}

/// `C(k, j)` for a possibly negative `k`, zero outside `0 ≤ j ≤ k`.
fn binom_i(k: i64, j: i64) -> BigInt {
    if k < 0 || j < 0 || j > k {
        BigInt::zero()
    } else {
        big(binomial(k as usize, j as usize))
    }
}

/// `0` when `n < 2r`.
pub fn small_ground_set(m: &Matroid) -> Option<BigInt> {
    (m.ground_size() < 2 * m.rank()).then(BigInt::zero)
}

/// `0` when `M` has a loop.
pub fn loops(m: &Matroid) -> Option<BigInt> {
    m.has_loops().then(BigInt::zero)
}

/// Product over connected components, when `M` is disconnected and every
/// component has a closed form.
pub fn components(m: &Matroid) -> Result<Option<BigInt>> {
    let comps = m.connected_components();
    if comps.len() < 2 {
        return Ok(None);
    }
    let mut product = BigInt::one();
    for c in comps {
        match omega_closed_form(&m.restrict(c)?)? {
            Some(cf) => product *= cf.value,
            None => return Ok(None),
        }
    }
    Ok(Some(product))
}

fn has_proper_crowded_subset(m: &Matroid) -> bool {
    let full = m.ground();
    (1u32..full.bits()).any(|s| stress(m, SubsetMask(s)) >= 0)
}

/// For `n = 2r`: `1` when every component `M_i` has `n_i = 2 r_i` and no
/// proper nonempty crowded subset, else `0`.
pub fn half_size(m: &Matroid) -> Result<Option<BigInt>> {
    if m.ground_size() != 2 * m.rank() {
        return Ok(None);
    }
    for c in m.connected_components() {
        let mi = m.restrict(c)?;
        if mi.ground_size() != 2 * mi.rank() || has_proper_crowded_subset(&mi) {
            return Ok(Some(BigInt::zero()));
        }
    }
    Ok(Some(BigInt::one()))
}

/// For `n = 2r + 1`: reduce to the unique component with `n_1 = 2 r_1 + 1`,
/// then read `ω` off the minimal nonempty crowded sets of that component.
pub fn half_size_plus_one(m: &Matroid) -> Result<Option<BigInt>> {
    if m.ground_size() != 2 * m.rank() + 1 {
        return Ok(None);
    }
    let mut core = None;
    for c in m.connected_components() {
        let mi = m.restrict(c)?;
        let (ni, ri) = (mi.ground_size(), mi.rank());
        if ni < 2 * ri {
            return Ok(Some(BigInt::zero()));
        }
        if ni == 2 * ri + 1 {
            core = Some(mi);
        } else if has_proper_crowded_subset(&mi) {
            return Ok(Some(BigInt::zero()));
        }
    }
    let core = core.expect("sizes force exactly one odd component");
    if core.rank() == 0 {
        return Ok(Some(BigInt::zero()));
    }
    let full = core.ground();
    if (1u32..full.bits()).any(|s| stress(&core, SubsetMask(s)) > 0) {
        return Ok(Some(BigInt::zero()));
    }
    let t = minimal_crowded_sets(&core);
    let p = t.len();
    let pairs = || (0..p).flat_map(|i| (i + 1..p).map(move |j| (i, j)));
    if pairs().all(|(i, j)| t[i].intersection(t[j]).is_empty()) {
        return Ok(Some(BigInt::zero()));
    }
    if pairs().all(|(i, j)| t[i].union(t[j]) == full) {
        return Ok(Some(BigInt::from((p - 1) / 2)));
    }
    Ok(None)
}

fn connected_loop_free_of_rank(m: &Matroid, r: usize) -> bool {
    m.rank() == r && !m.has_loops() && m.is_connected()
}

/// Connected rank 1: `1` for `n ≥ 2`, `0` for a single coloop.
pub fn rank_one(m: &Matroid) -> Option<BigInt> {
    connected_loop_free_of_rank(m, 1).then(|| BigInt::from(u8::from(m.ground_size() >= 2)))
}

/// Connected rank 2: `n' - 3` on the simplification.
pub fn rank_two(m: &Matroid) -> Result<Option<BigInt>> {
    if !connected_loop_free_of_rank(m, 2) {
        return Ok(None);
    }
    let n = m.simplify()?.matroid.ground_size() as i64;
    Ok(Some(BigInt::from(n - 3)))
}

/// Connected rank 3: `C(n-4, 2) - Σ C(|L|-2, 2)` over rank-2 flats of the
/// simplification.
pub fn rank_three(m: &Matroid) -> Result<Option<BigInt>> {
    if !connected_loop_free_of_rank(m, 3) {
        return Ok(None);
    }
    let s = m.simplify()?.matroid;
    let n = s.ground_size() as i64;
    let lattice = s.flat_lattice();
    let mut value = binom_i(n - 4, 2);
    for l in lattice.flats_of_rank(2) {
        value -= binom_i(l.len() as i64 - 2, 2);
    }
    Ok(Some(value))
}

/// Connected rank 4: the four-term formula over rank-2 flats `L` and rank-3
/// flats `P` of the simplification, evaluated exactly.
pub fn rank_four(m: &Matroid) -> Result<Option<BigInt>> {
    if !connected_loop_free_of_rank(m, 4) {
        return Ok(None);
    }
    let s = m.simplify()?.matroid;
    let n = s.ground_size() as i64;
    let lattice = s.flat_lattice();
    let q = |num: i64, den: i64| BigRational::new(num.into(), den.into());
    let whole = |v: BigInt| BigRational::from_integer(v);
    let mut value = whole(binom_i(n - 5, 3));
    for p in lattice.flats_of_rank(3) {
        value -= whole(binom_i(p.len() as i64 - 3, 3));
    }
    for l in lattice.flats_of_rank(2) {
        let ll = l.len() as i64;
        let c = whole(binom_i(ll - 2, 2));
        value -= c.clone() * (q(n, 1) - q(2 * ll, 3) - q(13, 3));
        for p in lattice.flats_of_rank(3).iter().filter(|p| l.is_subset_of(**p)) {
            value += c.clone() * (q(p.len() as i64, 1) - q(2 * ll, 3) - q(7, 3));
        }
    }
    if !value.is_integer() {
        return Err(OmegaError::NonIntegralRank4(value.to_string()));
    }
    Ok(Some(value.to_integer()))
}

/// `0` when some subset is overcrowded in `E`.
pub fn overcrowded(m: &Matroid) -> Option<BigInt> {
    find_overcrowded_in(m, m.ground()).map(|_| BigInt::zero())
}

/// `C(n-r-1, r-1)` when no nonempty proper flat is crowded.
pub fn no_crowded_flats(m: &Matroid) -> Option<BigInt> {
    let (n, r) = (m.ground_size(), m.rank());
    if r == 0 || n < 2 * r {
        return None;
    }
    let lattice = m.flat_lattice();
    let full = m.ground();
    let crowded = lattice
        .flats()
        .iter()
        .any(|&f| !f.is_empty() && f != full && stress(m, f) >= 0);
    (!crowded).then(|| big(binomial(n - r - 1, r - 1)))
}

/// The first closed form that applies, in the order: `n < 2r`, loops,
/// components, `n = 2r`, `n = 2r + 1`, ranks 1–4, overcrowding, no crowded
/// flats.
pub fn omega_closed_form(m: &Matroid) -> Result<Option<ClosedForm>> {
    use ClosedFormRule::*;
    let found = |value: BigInt, rule| Ok(Some(ClosedForm { value, rule }));
    if let Some(v) = small_ground_set(m) {
        return found(v, SmallGroundSet);
    }
    if let Some(v) = loops(m) {
        return found(v, Loops);
    }
    if let Some(v) = components(m)? {
        return found(v, Components);
    }
    if let Some(v) = half_size(m)? {
        return found(v, HalfSize);
    }
    if let Some(v) = half_size_plus_one(m)? {
        return found(v, HalfSizePlusOne);
    }
    if let Some(v) = rank_one(m) {
        return found(v, RankOne);
    }
    if let Some(v) = rank_two(m)? {
        return found(v, RankTwo);
    }
    if let Some(v) = rank_three(m)? {
        return found(v, RankThree);
    }
    if let Some(v) = rank_four(m)? {
        return found(v, RankFour);
    }
    if let Some(v) = overcrowded(m) {
        return found(v, Overcrowded);
    }
    if let Some(v) = no_crowded_flats(m) {
        return found(v, NoCrowdedFlats);
    }
    Ok(None)
}

/// Whether a value is negative; only rank ≥ 4 matroids could produce one.
pub fn is_negative(v: &BigInt) -> bool {
    v.is_negative()
}
