//! Seeded generators for corpora of matroid specs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use matroid_core::spec::{MatroidSpec, SpecBody};
use matroid_core::SubsetMask;

use crate::args::Family;

/// Rank of the columns `cols` of `mat` over GF(p).
fn gf_rank(mat: &[Vec<u32>], cols: SubsetMask, p: u32) -> usize {
    let mut rows: Vec<Vec<u32>> = mat.iter().map(|row| cols.iter().map(|c| row[c]).collect()).collect();
    let width = cols.len();
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = (1..p).find(|&x| rows[rank][col] * x % p == 1).expect("p is prime");
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

/// The column matroid of a random `r × n` matrix over GF(p), as a basis list.
pub fn linear_spec(rng: &mut ChaCha8Rng, n: usize, r: usize, p: u32) -> MatroidSpec {
    let mat: Vec<Vec<u32>> = (0..r).map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect()).collect();
    let full = gf_rank(&mat, SubsetMask::full(n), p);
    let bases = (0u32..1 << n)
        .map(SubsetMask)
        .filter(|s| s.len() == full && gf_rank(&mat, *s, p) == full)
        .map(|s| s.to_elements())
        .collect();
    MatroidSpec::new(SpecBody::Bases { bases }).with_n(n)
}

/// A lower Schubert matroid of rank `r` on `n` elements: a chain of
/// `k` steps with `k` uniform in `[1, min(r, n-r) + 1]`, strictly increasing
/// random sizes on a random order, and a random valid profile.
pub fn schubert_spec(rng: &mut ChaCha8Rng, n: usize, r: usize) -> MatroidSpec {
    let r = r.min(n);
    let k = rng.gen_range(1..=r.min(n - r) + 1).min(n.max(1));
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut cuts: Vec<usize> = (1..n).collect();
    for i in (1..cuts.len()).rev() {
        cuts.swap(i, rng.gen_range(0..=i));
    }
    let mut sizes: Vec<usize> = cuts.into_iter().take(k - 1).collect();
    sizes.sort_unstable();
    sizes.insert(0, 0);
    sizes.push(n);
    let room: Vec<usize> = sizes.windows(2).map(|w| w[1] - w[0]).collect();
    let mut steps = vec![0usize; room.len()];
    for _ in 0..r {
        let open: Vec<usize> = (0..room.len()).filter(|&i| steps[i] < room[i]).collect();
        steps[open[rng.gen_range(0..open.len())]] += 1;
    }
    let mut a = vec![0];
    for s in steps {
        a.push(a[a.len() - 1] + s);
    }
    let chain = sizes.iter().map(|&s| {
        let mut set = order[..s].to_vec();
        set.sort_unstable();
        set
    });
    MatroidSpec::new(SpecBody::SchubertLower { chain: chain.collect(), a }).with_n(n)
}

fn random_rank(rng: &mut ChaCha8Rng, n: usize) -> usize {
    rng.gen_range(1..=n.div_ceil(2).max(1))
}

fn size(spec: &MatroidSpec) -> usize {
    spec.build().expect("generated specs are valid").ground_size()
}

fn base_spec(rng: &mut ChaCha8Rng, n: usize) -> MatroidSpec {
    let r = random_rank(rng, n);
    if rng.gen_bool(0.5) {
        schubert_spec(rng, n, r)
    } else {
        let p = [2u32, 3, 5][rng.gen_range(0..3)];
        linear_spec(rng, n, r, p)
    }
}

/// A dual, minor, direct sum or parallel extension of random Schubert and
/// linear matroids, on at most `max_n >= 2` elements.
pub fn closure_spec(rng: &mut ChaCha8Rng, max_n: usize) -> MatroidSpec {
    let max_n = max_n.max(2);
    match rng.gen_range(0..5) {
        0 => {
            let n = rng.gen_range(2..=max_n);
            MatroidSpec::dual(base_spec(rng, n))
        }
        1 if max_n >= 3 => {
            let n = rng.gen_range(3..=(max_n + 1).min(12));
            let of = base_spec(rng, n);
            let e = vec![rng.gen_range(0..n)];
            if rng.gen_bool(0.5) {
                MatroidSpec::delete(of, e)
            } else {
                MatroidSpec::contract(of, e)
            }
        }
        2 if max_n >= 4 => {
            let n1 = rng.gen_range(2..=max_n - 2);
            let n2 = rng.gen_range(2..=max_n - n1);
            MatroidSpec::direct_sum(vec![base_spec(rng, n1), base_spec(rng, n2)])
        }
        3 if max_n >= 3 => {
            let n = rng.gen_range(2..max_n);
            let of = base_spec(rng, n);
            let e = rng.gen_range(0..size(&of));
            MatroidSpec::parallel_extension(of, e)
        }
        _ => {
            let n = rng.gen_range(2..=max_n);
            base_spec(rng, n)
        }
    }
}

/// `count` named specs from `family`, fully determined by `seed`.
pub fn generate(family: Family, n: usize, r: Option<usize>, count: usize, seed: u64) -> Vec<MatroidSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tag = match family {
        Family::Schubert => "schubert",
        Family::Linear => "linear",
        Family::Closure => "closure",
    };
    (0..count)
        .map(|i| {
            let spec = match family {
                Family::Schubert => {
                    let r = r.unwrap_or_else(|| random_rank(&mut rng, n));
                    schubert_spec(&mut rng, n, r)
                }
                Family::Linear => {
                    let r = r.unwrap_or_else(|| random_rank(&mut rng, n));
                    let p = [2u32, 3, 5][rng.gen_range(0..3)];
                    linear_spec(&mut rng, n, r, p)
                }
                Family::Closure => closure_spec(&mut rng, n),
            };
            spec.named(format!("{tag}-{seed}-{i}"))
        })
        .collect()
}
