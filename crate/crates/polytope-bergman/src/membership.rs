//! Exact membership in base polytopes, Schubert polytopes and their
//! half-open versions.

use num_rational::BigRational;

use matroid_core::{check_profile, Matroid, SetChain, SubsetMask};

use crate::{RationalPoint, Result};

fn int(v: usize) -> BigRational {
    BigRational::from_integer(v.into())
}

/// `Σ_{i∈S} z_i <= rank(S)` for every `S`, with equality at `S = E`.
pub fn in_base_polytope(m: &Matroid, z: &RationalPoint) -> Result<bool> {
    let n = m.ground_size();
    z.check_len(n)?;
    if z.sum() != int(m.rank()) {
        return Ok(false);
    }
    let (d, ints) = z.scaled();
    let mut sums = vec![num_bigint::BigInt::from(0); 1 << n];
    for s in 1usize..1 << n {
        let low = s.trailing_zeros() as usize;
        sums[s] = &sums[s & (s - 1)] + &ints[low];
        if sums[s] > &d * m.rank_of(SubsetMask(s as u32)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The hypersimplex `Δ(r, E)`: `0 <= z_i <= 1` and `Σ z_i = r`.
pub fn in_hypersimplex(r: usize, z: &RationalPoint) -> bool {
    z.in_unit_box() && z.sum() == int(r)
}

fn top(a: &[usize]) -> usize {
    a[a.len() - 1]
}

/// The lower Schubert polytope: `Σ_{S_i} z <= a_i` inside `Δ(a_k, E)`.
pub fn in_schubert_lower(chain: &SetChain, a: &[usize], z: &RationalPoint) -> Result<bool> {
    check_profile(chain, a)?;
    z.check_len(chain.ground_size())?;
    Ok(in_hypersimplex(top(a), z)
        && chain.sets().iter().zip(a).all(|(&s, &ai)| z.sum_over(s) <= int(ai)))
}

/// The upper Schubert polytope: `Σ_{S_i} z >= a_i` inside `Δ(a_k, E)`.
pub fn in_schubert_upper(chain: &SetChain, a: &[usize], z: &RationalPoint) -> Result<bool> {
    check_profile(chain, a)?;
    z.check_len(chain.ground_size())?;
    Ok(in_hypersimplex(top(a), z)
        && chain.sets().iter().zip(a).all(|(&s, &ai)| z.sum_over(s) >= int(ai)))
}

/// The half-open polytope: `Σ_{S_i} z > a_i` for every interior `S_i`,
/// inside `Δ(a_k, E)`.
pub fn in_halfopen(chain: &SetChain, a: &[usize], z: &RationalPoint) -> Result<bool> {
    check_profile(chain, a)?;
    z.check_len(chain.ground_size())?;
    let k = chain.len();
    Ok(in_hypersimplex(top(a), z)
        && (1..k - 1).all(|i| z.sum_over(chain.sets()[i]) > int(a[i])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(pairs: &[(i64, i64)]) -> RationalPoint {
        RationalPoint::from_fractions(pairs).unwrap()
    }

    #[test]
    fn segment() {
        let m = Matroid::uniform(1, 2).unwrap();
        assert!(in_base_polytope(&m, &pt(&[(1, 2), (1, 2)])).unwrap());
        assert!(!in_base_polytope(&m, &RationalPoint::from_integers(&[2, -1])).unwrap());
        assert!(in_base_polytope(&m, &RationalPoint::from_integers(&[0, 1])).unwrap());
        assert!(in_base_polytope(&m, &RationalPoint::from_integers(&[0, 1, 0])).is_err());
    }

    #[test]
    fn trivial_chain_is_hypersimplex() {
        let chain = SetChain::spanning(3, &[]).unwrap();
        for z in [pt(&[(1, 2), (1, 2), (1, 1)]), pt(&[(3, 2), (1, 2), (0, 1)]), pt(&[(1, 3), (1, 3), (1, 3)])] {
            let h = in_hypersimplex(2, &z);
            assert_eq!(in_schubert_lower(&chain, &[0, 2], &z).unwrap(), h);
            assert_eq!(in_schubert_upper(&chain, &[0, 2], &z).unwrap(), h);
            assert_eq!(in_halfopen(&chain, &[0, 2], &z).unwrap(), h);
        }
    }

    #[test]
    fn halfopen_is_strict() {
        let chain = SetChain::spanning(2, &[SubsetMask::singleton(0)]).unwrap();
        assert!(in_halfopen(&chain, &[0, 0, 1], &pt(&[(1, 2), (1, 2)])).unwrap());
        assert!(!in_halfopen(&chain, &[0, 0, 1], &RationalPoint::from_integers(&[0, 1])).unwrap());
    }

    #[test]
    fn bases_are_vertices() {
        let m = Matroid::uniform(2, 4).unwrap();
        for &b in m.bases() {
            assert!(in_base_polytope(&m, &RationalPoint::indicator(4, b)).unwrap());
        }
        assert!(!in_base_polytope(&m, &RationalPoint::indicator(4, SubsetMask(0b111))).unwrap());
    }
}
