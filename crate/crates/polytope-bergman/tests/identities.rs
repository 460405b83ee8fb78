mod common;

use common::{random_matroid, random_schubert_data, rng};
use matroid_core::{Matroid, SetChain, SubsetMask};
use polytope_bergman::{
    check_batch, check_identity, in_base_polytope, in_halfopen, in_schubert_lower, in_schubert_upper,
    sample_points, IdentityKind, RationalPoint,
};
use proptest::prelude::*;

/// Every chain `∅ ⊂ … ⊂ E` drawn from `members`.
fn chains(members: &[SubsetMask], full: SubsetMask) -> Vec<Vec<SubsetMask>> {
    fn go(acc: &mut Vec<SubsetMask>, members: &[SubsetMask], full: SubsetMask, out: &mut Vec<Vec<SubsetMask>>) {
        let cur = *acc.last().unwrap();
        if cur == full {
            out.push(acc.clone());
            return;
        }
        for &t in members {
            if cur.is_proper_subset_of(t) {
                acc.push(t);
                go(acc, members, full, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![SubsetMask::EMPTY], members, full, &mut out);
    out
}

/// Right-hand side of `kind` by listing every chain and testing each piece
/// with the polytope membership functions.
fn literal_rhs(m: &Matroid, kind: IdentityKind, z: &RationalPoint) -> i64 {
    let n = m.ground_size();
    let lattice = m.flat_lattice();
    let members: Vec<SubsetMask> = if kind.uses_flats() {
        lattice.flats().to_vec()
    } else {
        (0u32..1 << n).map(SubsetMask).collect()
    };
    let mut total = 0;
    for ch in chains(&members, m.ground()) {
        let k = ch.len() - 1;
        let chain = SetChain::new(n, ch.clone()).unwrap();
        let a: Vec<usize> = ch.iter().map(|&s| m.rank_of(s)).collect();
        let (sign, inside) = match kind {
            IdentityKind::InwardSets => {
                (if (n - k) % 2 == 0 { 1 } else { -1 }, in_schubert_lower(&chain, &a, z).unwrap())
            }
            IdentityKind::OutwardSets | IdentityKind::OuterFlats => {
                (if (k - 1) % 2 == 0 { 1 } else { -1 }, in_halfopen(&chain, &a, z).unwrap())
            }
            IdentityKind::InnerFlats => {
                let mu: i64 = ch
                    .windows(2)
                    .map(|w| {
                        lattice
                            .mobius(lattice.index_of(w[0]).unwrap(), lattice.index_of(w[1]).unwrap())
                            .unwrap()
                    })
                    .product();
                let s = if k % 2 == 0 { 1 } else { -1 };
                (s * mu, in_schubert_lower(&chain, &a, z).unwrap())
            }
        };
        if inside {
            total += sign;
        }
    }
    total
}

#[test]
fn dynamic_programme_matches_literal_chains() {
    let mut r = rng(0x11);
    for case in 0..25 {
        let m = random_matroid(&mut r, 4);
        for z in sample_points(&m, 40, case) {
            for kind in IdentityKind::ALL {
                if kind.uses_flats() && m.has_loops() {
                    continue;
                }
                let got = check_identity(&m, kind, &z).unwrap();
                assert_eq!(got.rhs, literal_rhs(&m, kind, &z), "{kind} at {z} on {m:?}");
            }
        }
    }
}

#[test]
fn identities_hold_on_samples() {
    let mut r = rng(0x1d);
    for case in 0..12 {
        let m = random_matroid(&mut r, 6);
        let pts = sample_points(&m, 150, case);
        for kind in IdentityKind::ALL {
            if kind.uses_flats() && m.has_loops() {
                continue;
            }
            for (z, c) in pts.iter().zip(check_batch(&m, kind, &pts).unwrap()) {
                assert!(c.holds(), "{kind} at {z} on {m:?}: {c:?}");
            }
        }
    }
}

#[test]
fn both_sides_are_nontrivial() {
    let m = Matroid::uniform(2, 4).unwrap();
    let pts = sample_points(&m, 200, 5);
    let inside = pts.iter().filter(|z| in_base_polytope(&m, z).unwrap()).count();
    assert!(inside > 20 && inside < pts.len(), "{inside}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn schubert_polytopes_are_base_polytopes(seed in any::<u64>(), n in 1usize..=6) {
        let mut r = rng(seed);
        let (chain, a) = random_schubert_data(&mut r, n);
        let lower = Matroid::schubert_lower(&chain, &a).unwrap();
        let upper = Matroid::schubert_upper(&chain, &a).unwrap();
        for z in sample_points(&lower, 30, seed) {
            prop_assert_eq!(in_schubert_lower(&chain, &a, &z).unwrap(), in_base_polytope(&lower, &z).unwrap());
        }
        for z in sample_points(&upper, 30, seed) {
            prop_assert_eq!(in_schubert_upper(&chain, &a, &z).unwrap(), in_base_polytope(&upper, &z).unwrap());
        }
        for &b in lower.bases() {
            prop_assert!(in_schubert_lower(&chain, &a, &RationalPoint::indicator(n, b)).unwrap());
        }
    }
}
