use matroid_core::{
    order_data_from_profile, profile_from_order, Matroid, SetChain, SubsetMask,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Rank of the columns `cols` of `mat` over GF(p).
fn gf_rank(mat: &[Vec<u32>], cols: SubsetMask, p: u32) -> usize {
    let mut rows: Vec<Vec<u32>> = mat
        .iter()
        .map(|row| cols.iter().map(|c| row[c]).collect())
        .collect();
    let width = cols.len();
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][col] % p != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = (1..p).find(|&x| rows[rank][col] * x % p == 1).unwrap();
        for v in rows[rank].iter_mut() {
            *v = *v * inv % p;
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][col] != 0 {
                let f = rows[i][col];
                for j in 0..width {
                    rows[i][j] = (rows[i][j] + p * p - f * rows[rank][j] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn random_linear(seed: u64, n: usize, r: usize, p: u32) -> Matroid {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mat: Vec<Vec<u32>> = (0..r)
        .map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect())
        .collect();
    let full = gf_rank(&mat, SubsetMask::full(n), p);
    let bases: Vec<SubsetMask> = (0u32..1 << n)
        .map(SubsetMask)
        .filter(|s| s.len() == full && gf_rank(&mat, *s, p) == full)
        .collect();
    Matroid::from_bases(n, bases).unwrap()
}

fn random_schubert_data(seed: u64, n: usize) -> (SetChain, Vec<usize>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut sizes: Vec<usize> = (1..n).filter(|_| rng.gen_bool(0.3)).collect();
    sizes.insert(0, 0);
    sizes.push(n);
    let chain = SetChain::initial_segments(&order, &sizes).unwrap();
    let mut a = vec![0];
    for w in sizes.windows(2) {
        let prev = *a.last().unwrap();
        a.push(prev + rng.gen_range(0..=w[1] - w[0]));
    }
    (chain, a)
}

fn arb_matroid() -> impl Strategy<Value = Matroid> {
    prop_oneof![
        (any::<u64>(), 1usize..=7, 0usize..=4, prop::sample::select(vec![2u32, 3, 5]))
            .prop_map(|(seed, n, r, p)| random_linear(seed, n, r.min(n), p)),
        (any::<u64>(), 1usize..=8).prop_map(|(seed, n)| {
            let (c, a) = random_schubert_data(seed, n);
            Matroid::schubert_lower(&c, &a).unwrap()
        }),
    ]
}

fn subsets(n: usize) -> impl Iterator<Item = SubsetMask> {
    (0u32..1 << n).map(SubsetMask)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_axioms(m in arb_matroid()) {
        let n = m.ground_size();
        prop_assert_eq!(m.rank_of(SubsetMask::EMPTY), 0);
        prop_assert_eq!(m.rank_of(m.ground().difference(m.loops())), m.rank());
        for s in subsets(n) {
            for e in s.complement(n).iter() {
                let d = m.rank_of(s.with(e)) - m.rank_of(s);
                prop_assert!(d <= 1);
            }
        }
        for s in subsets(n).step_by(3) {
            for t in subsets(n).step_by(5) {
                prop_assert!(
                    m.rank_of(s.union(t)) + m.rank_of(s.intersection(t))
                        <= m.rank_of(s) + m.rank_of(t)
                );
            }
        }
    }

    #[test]
    fn precomputed_table_agrees_with_lazy_rank(m in arb_matroid()) {
        let lazy: Vec<usize> = subsets(m.ground_size()).map(|s| m.rank_of(s)).collect();
        let fresh = Matroid::from_bases(m.ground_size(), m.bases().to_vec()).unwrap();
        fresh.precompute_rank_table();
        let full: Vec<usize> = subsets(m.ground_size()).map(|s| fresh.rank_of(s)).collect();
        prop_assert_eq!(lazy, full);
    }

    #[test]
    fn dual_is_an_involution_and_swaps_loops(m in arb_matroid()) {
        let d = m.dual();
        prop_assert_eq!(&d.dual(), &m);
        prop_assert_eq!(d.loops(), m.coloops());
        for s in subsets(m.ground_size()) {
            let c = s.complement(m.ground_size());
            prop_assert_eq!(d.rank_of(s), s.len() + m.rank_of(c) - m.rank());
        }
    }

    #[test]
    fn direct_sum_multiplies_bases(a in arb_matroid(), b in arb_matroid()) {
        prop_assume!(a.ground_size() + b.ground_size() <= 16);
        let s = a.direct_sum(&b).unwrap();
        prop_assert_eq!(s.bases().len(), a.bases().len() * b.bases().len());
        prop_assert_eq!(
            s.connected_components().len(),
            a.connected_components().len() + b.connected_components().len()
        );
    }

    #[test]
    fn minors_follow_rank_formulas(m in arb_matroid(), bits in any::<u32>()) {
        let n = m.ground_size();
        let t = SubsetMask(bits).intersection(m.ground());
        prop_assume!(!t.is_empty() && t != m.ground());
        let rest = t.complement(n);
        let del = m.delete(t).unwrap();
        let con = m.contract(t).unwrap();
        for x in subsets(rest.len()) {
            let orig: SubsetMask = SubsetMask::from_elements(
                rest.iter().enumerate().filter(|(j, _)| x.contains(*j)).map(|(_, e)| e),
            );
            prop_assert_eq!(del.rank_of(x), m.rank_of(orig));
            prop_assert_eq!(con.rank_of(x), m.rank_of(orig.union(t)) - m.rank_of(t));
        }
    }

    #[test]
    fn components_match_the_separator_test(m in arb_matroid()) {
        let n = m.ground_size();
        let comps = m.connected_components();
        let union_of_components = |t: SubsetMask| {
            comps.iter().all(|c| c.is_subset_of(t) || c.intersection(t).is_empty())
        };
        for t in subsets(n) {
            let separator = m.rank_of(t) + m.rank_of(t.complement(n)) == m.rank();
            prop_assert_eq!(separator, union_of_components(t));
        }
        prop_assert_eq!(m.component_count(m.ground()), comps.len());
    }

    #[test]
    fn components_of_a_subset_match_the_restriction(m in arb_matroid(), bits in any::<u32>()) {
        let s = SubsetMask(bits).intersection(m.ground());
        prop_assume!(!s.is_empty());
        let via_restriction: Vec<SubsetMask> = m
            .restrict(s)
            .unwrap()
            .connected_components()
            .into_iter()
            .map(|c| {
                SubsetMask::from_elements(
                    s.iter().enumerate().filter(|(j, _)| c.contains(*j)).map(|(_, e)| e),
                )
            })
            .collect();
        prop_assert_eq!(m.components_of(s), via_restriction);
    }

    #[test]
    fn flats_are_closed_and_meet_closed(m in arb_matroid()) {
        let l = m.flat_lattice();
        let oracle: Vec<SubsetMask> = subsets(m.ground_size()).filter(|&s| m.is_flat(s)).collect();
        let mut got = l.flats().to_vec();
        got.sort();
        prop_assert_eq!(got, oracle);
        for &f in l.flats() {
            for &g in l.flats() {
                prop_assert!(m.is_flat(f.intersection(g)));
            }
        }
    }

    #[test]
    fn mobius_rows_sum_to_zero(m in arb_matroid()) {
        let l = m.flat_lattice();
        for i in 0..l.len() {
            prop_assert_eq!(l.mobius(i, i), Some(1));
            for j in l.strict_uppers(i) {
                let g = l.flat(j);
                let sum: i64 = l
                    .mobius_row(i)
                    .iter()
                    .filter(|&&(h, _)| l.flat(h).is_subset_of(g))
                    .map(|&(_, v)| v)
                    .sum();
                prop_assert_eq!(sum, 0);
            }
        }
    }

    #[test]
    fn schubert_indexings_coincide(seed in any::<u64>(), n in 1usize..=9) {
        let (chain, a) = random_schubert_data(seed, n);
        let lower = Matroid::schubert_lower(&chain, &a).unwrap();
        let (order, set) = order_data_from_profile(&chain, &a).unwrap();
        prop_assert_eq!(&Matroid::schubert_from_order(&order, set).unwrap(), &lower);
        let (c2, a2) = profile_from_order(&order, set).unwrap();
        prop_assert_eq!(&Matroid::schubert_lower(&c2, &a2).unwrap(), &lower);
        // Gale dominance checked directly
        let pos: Vec<usize> = {
            let mut p = vec![0; n];
            for (i, &e) in order.iter().enumerate() { p[e] = i; }
            p
        };
        let sorted = |s: SubsetMask| { let mut v: Vec<usize> = s.iter().map(|e| pos[e]).collect(); v.sort(); v };
        let sa = sorted(set);
        let gale: Vec<SubsetMask> = subsets(n)
            .filter(|&b| b.len() == set.len() && sorted(b).iter().zip(&sa).all(|(x, y)| x >= y))
            .collect();
        prop_assert_eq!(lower.bases(), &gale[..]);
    }

    #[test]
    fn schubert_upper_is_dual_of_lower_on_the_same_chain(seed in any::<u64>(), n in 1usize..=9) {
        let (chain, a) = random_schubert_data(seed, n);
        let lower = Matroid::schubert_lower(&chain, &a).unwrap();
        let sizes: Vec<usize> = chain.sets().iter().map(|s| s.len()).collect();
        let co: Vec<usize> = sizes.iter().zip(&a).map(|(s, ai)| s - ai).collect();
        prop_assert_eq!(lower.dual(), Matroid::schubert_upper(&chain, &co).unwrap());
        // direct check of the upper definition
        let upper = Matroid::schubert_upper(&chain, &a).unwrap();
        let r = *a.last().unwrap();
        let direct: Vec<SubsetMask> = subsets(n)
            .filter(|b| b.len() == r && chain.sets().iter().zip(&a).all(|(s, &ai)| b.intersection(*s).len() >= ai))
            .collect();
        prop_assert_eq!(upper.bases(), &direct[..]);
    }
}

/// Exchange-axiom oracle: the definition checked literally.
fn exchange_holds(n: usize, bases: &[SubsetMask]) -> bool {
    bases.iter().all(|&b1| {
        bases.iter().all(|&b2| {
            b1.difference(b2).iter().all(|e| {
                b2.difference(b1)
                    .iter()
                    .any(|f| bases.contains(&b1.without(e).with(f)))
            })
        })
    }) && n > 0
}

#[test]
fn from_bases_accepts_exactly_the_exchange_systems_on_four_elements() {
    let n = 4;
    for r in 0..=n {
        let candidates: Vec<SubsetMask> = subsets(n).filter(|s| s.len() == r).collect();
        for pick in 1u32..1 << candidates.len() {
            let bases: Vec<SubsetMask> = candidates
                .iter()
                .enumerate()
                .filter(|(i, _)| pick >> i & 1 == 1)
                .map(|(_, &b)| b)
                .collect();
            assert_eq!(
                Matroid::from_bases(n, bases.clone()).is_ok(),
                exchange_holds(n, &bases),
                "{bases:?}"
            );
        }
    }
}

#[test]
fn k4_has_seven_rank_two_flats() {
    // edges 01 02 03 12 13 23 as elements 0..6; bases are spanning trees
    let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let is_tree = |s: SubsetMask| {
        let mut parent: Vec<usize> = (0..4).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] == x { x } else { let r = find(p, p[x]); p[x] = r; r }
        }
        for e in s.iter() {
            let (a, b) = edges[e];
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    };
    let bases: Vec<SubsetMask> = subsets(6).filter(|&s| s.len() == 3 && is_tree(s)).collect();
    assert_eq!(bases.len(), 16);
    let m = Matroid::from_bases(6, bases).unwrap();
    let l = m.flat_lattice();
    let rank2 = l.flats_of_rank(2);
    assert_eq!(rank2.len(), 7);
    assert_eq!(rank2.iter().filter(|f| f.len() == 3).count(), 4);
    assert_eq!(rank2.iter().filter(|f| f.len() == 2).count(), 3);
}

#[test]
fn example_schubert_rank_of_first_seven() {
    let order: Vec<usize> = (0..10).collect();
    let chain = SetChain::initial_segments(&order, &[0, 2, 7, 10]).unwrap();
    let m = Matroid::schubert_lower(&chain, &[0, 1, 3, 4]).unwrap();
    let oracle = m
        .bases()
        .iter()
        .map(|b| b.intersection(SubsetMask::full(7)).len())
        .max()
        .unwrap();
    assert_eq!(oracle, 3);
    assert_eq!(m.rank_of(SubsetMask::full(7)), 3);
}
