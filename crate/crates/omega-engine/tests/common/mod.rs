#![allow(dead_code)]

use matroid_core::{Matroid, SetChain, SubsetMask};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Rank of the columns `cols` of `mat` over GF(p).
pub fn gf_rank(mat: &[Vec<u32>], cols: SubsetMask, p: u32) -> usize {
    let mut rows: Vec<Vec<u32>> = mat.iter().map(|row| cols.iter().map(|c| row[c]).collect()).collect();
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

pub fn from_matrix(mat: &[Vec<u32>], n: usize, p: u32) -> Matroid {
    let full = gf_rank(mat, SubsetMask::full(n), p);
    let bases: Vec<SubsetMask> = (0u32..1 << n)
        .map(SubsetMask)
        .filter(|s| s.len() == full && gf_rank(mat, *s, p) == full)
        .collect();
    Matroid::from_bases(n, bases).unwrap()
}

pub fn random_linear(rng: &mut ChaCha8Rng, n: usize, r: usize, p: u32) -> Matroid {
    let mat: Vec<Vec<u32>> = (0..r).map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect()).collect();
    from_matrix(&mat, n, p)
}

pub fn random_schubert_data(rng: &mut ChaCha8Rng, n: usize) -> (SetChain, Vec<usize>) {
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut sizes: Vec<usize> = (1..n).filter(|_| rng.gen_bool(0.35)).collect();
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

/// Ranks that give nonzero values most often for a ground set of size `n`.
pub fn middle_rank(rng: &mut ChaCha8Rng, n: usize) -> usize {
    let hi = (n / 2).max(1);
    rng.gen_range(1..=hi).min(n)
}

/// A random matroid on at most `max_n` elements, drawn from a mix of
/// linear and Schubert matroids, their duals, minors, direct sums and
/// parallel extensions.
pub fn random_matroid(rng: &mut ChaCha8Rng, max_n: usize) -> Matroid {
    let base = |rng: &mut ChaCha8Rng, n: usize| -> Matroid {
        if rng.gen_bool(0.5) {
            let r = middle_rank(rng, n);
            let p = [2u32, 3, 5][rng.gen_range(0..3)];
            random_linear(rng, n, r, p)
        } else {
            let (c, a) = random_schubert_data(rng, n);
            Matroid::schubert_lower(&c, &a).unwrap()
        }
    };
    match rng.gen_range(0..5) {
        0 => {
            let n = rng.gen_range(2..=max_n);
            base(rng, n).dual()
        }
        1 if max_n >= 4 => {
            let n = rng.gen_range(4..=max_n.min(11));
            let m = base(rng, n);
            let e = rng.gen_range(0..n);
            if rng.gen_bool(0.5) {
                m.delete(SubsetMask::singleton(e)).unwrap()
            } else {
                m.contract(SubsetMask::singleton(e)).unwrap()
            }
        }
        2 if max_n >= 4 => {
            let n1 = rng.gen_range(2..=max_n - 2);
            let n2 = rng.gen_range(2..=max_n - n1);
            base(rng, n1).direct_sum(&base(rng, n2)).unwrap()
        }
        3 if max_n >= 3 => {
            let n = rng.gen_range(2..max_n);
            let m = base(rng, n);
            let e = rng.gen_range(0..n);
            m.parallel_extension(e).unwrap()
        }
        _ => {
            let n = rng.gen_range(2..=max_n);
            base(rng, n)
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
