//! Reproducible exact sample points on the hyperplane `Σ z = r`.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use matroid_core::{Matroid, SubsetMask};

use crate::tautological::z_max_basis;
use crate::RationalPoint;

/// Largest denominator used by [`sample_points`].
pub const MAX_DENOMINATOR: i64 = 64;

/// All 0/1 vertices of `Δ(r, n)`.
pub fn hypersimplex_vertices(n: usize, r: usize) -> Vec<RationalPoint> {
    (0u32..1 << n)
        .map(SubsetMask)
        .filter(|s| s.len() == r)
        .map(|s| RationalPoint::indicator(n, s))
        .collect()
}

fn frac(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

fn random_vertex(rng: &mut ChaCha8Rng, n: usize, r: usize) -> SubsetMask {
    let mut elems: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        elems.swap(i, rng.gen_range(0..=i));
    }
    SubsetMask::from_elements(elems[..r].iter().copied())
}

/// A point on a face of `Δ(M)`: a rational average of the bases that
/// maximize a random small weight vector.
fn face_point(rng: &mut ChaCha8Rng, m: &Matroid) -> RationalPoint {
    let n = m.ground_size();
    let w = RationalPoint::from_integers(&(0..n).map(|_| rng.gen_range(0..3)).collect::<Vec<_>>());
    let best = z_max_basis(m, &w).expect("lengths match");
    let score = |b: SubsetMask| w.sum_over(b);
    let top = score(best);
    let face: Vec<SubsetMask> = m.bases().iter().copied().filter(|&b| score(b) == top).collect();
    let weights: Vec<i64> = face.iter().map(|_| rng.gen_range(0..4)).collect();
    let total: i64 = weights.iter().sum();
    if total == 0 {
        return RationalPoint::indicator(n, face[0]);
    }
    let coords = (0..n)
        .map(|i| {
            let num: i64 = face.iter().zip(&weights).filter(|(b, _)| b.contains(i)).map(|(_, w)| w).sum();
            frac(num, total)
        })
        .collect();
    RationalPoint::new(coords)
}

/// Move `z` by `eps (e_i - e_j)`, staying on the hyperplane.
fn nudge(rng: &mut ChaCha8Rng, z: &RationalPoint) -> RationalPoint {
    let n = z.len();
    let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
    let eps = frac(if rng.gen_bool(0.5) { 1 } else { -1 }, MAX_DENOMINATOR * rng.gen_range(1..=4));
    let mut c = z.coords().to_vec();
    c[i] += &eps;
    c[j] -= &eps;
    RationalPoint::new(c)
}

/// A point with denominator at most [`MAX_DENOMINATOR`], coordinates
/// mostly in `[-1/8, 9/8]`, on `Σ z = r`.
fn scattered(rng: &mut ChaCha8Rng, n: usize, r: usize) -> RationalPoint {
    let d = rng.gen_range(1..=MAX_DENOMINATOR);
    let lo = -(d / 8);
    let hi = d + d / 8;
    let mut nums: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(lo..=hi)).collect();
    nums.push(r as i64 * d - nums.iter().sum::<i64>());
    RationalPoint::new(nums.into_iter().map(|p| frac(p, d)).collect())
}

/// Every vertex of `Δ(r, n)` followed by `count` pseudorandom points on
/// `Σ z = r`: midpoints of vertex pairs, points on faces of `Δ(M)`, such
/// points nudged by tiny offsets, and scattered points.
pub fn sample_points(m: &Matroid, count: usize, seed: u64) -> Vec<RationalPoint> {
    let (n, r) = (m.ground_size(), m.rank());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = hypersimplex_vertices(n, r);
    if n == 0 {
        return out;
    }
    for k in 0..count {
        let z = match k % 4 {
            0 => {
                let a = RationalPoint::indicator(n, random_vertex(&mut rng, n, r));
                let b = RationalPoint::indicator(n, random_vertex(&mut rng, n, r));
                let half = frac(1, 2);
                RationalPoint::new(a.coords().iter().zip(b.coords()).map(|(x, y)| (x + y) * &half).collect())
            }
            1 => face_point(&mut rng, m),
            2 => {
                let f = face_point(&mut rng, m);
                nudge(&mut rng, &f)
            }
            _ => scattered(&mut rng, n, r),
        };
        out.push(z);
    }
    out
}

/// Every point on `Σ z = r` whose first `n - 1` coordinates are fractions
/// with denominator at most `max_den` in `[lo, hi]`, or `None` when there
/// would be more than `limit` of them.
pub fn grid_points(n: usize, r: usize, max_den: i64, lo: i64, hi: i64, limit: usize) -> Option<Vec<RationalPoint>> {
    if n == 0 || max_den < 1 || lo > hi {
        return Some(Vec::new());
    }
    let mut values: Vec<BigRational> = (1..=max_den)
        .flat_map(|q| (lo * q..=hi * q).map(move |p| frac(p, q)))
        .collect();
    values.sort();
    values.dedup();
    let total = values.len().checked_pow(n as u32 - 1)?;
    if total > limit {
        return None;
    }
    let target = BigRational::from_integer(r.into());
    let mut out = Vec::with_capacity(total);
    let mut idx = vec![0usize; n - 1];
    loop {
        let mut coords: Vec<BigRational> = idx.iter().map(|&i| values[i].clone()).collect();
        let rest = coords.iter().fold(target.clone(), |acc, c| acc - c);
        coords.push(rest);
        out.push(RationalPoint::new(coords));
        let Some(pos) = (0..n - 1).rev().find(|&k| idx[k] + 1 < values.len()) else {
            break;
        };
        idx[pos] += 1;
        for k in idx.iter_mut().skip(pos + 1) {
            *k = 0;
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_lie_on_the_hyperplane() {
        let m = Matroid::uniform(2, 5).unwrap();
        let pts = sample_points(&m, 200, 42);
        assert_eq!(pts.len(), 10 + 200);
        let two = BigRational::from_integer(2.into());
        assert!(pts.iter().all(|p| p.sum() == two));
        assert_eq!(pts, sample_points(&m, 200, 42));
        assert_ne!(pts, sample_points(&m, 200, 43));
    }

    #[test]
    fn grid_on_a_segment() {
        // fractions in [0, 1] with denominator at most 3: 0, 1/3, 1/2, 2/3, 1
        let pts = grid_points(2, 1, 3, 0, 1, 100).unwrap();
        assert_eq!(pts.len(), 5);
        assert!(pts.iter().all(|p| p.sum() == BigRational::from_integer(1.into())));
        assert!(grid_points(4, 2, 8, -1, 2, 1000).is_none());
    }

    #[test]
    fn face_points_are_in_the_polytope() {
        let m = Matroid::uniform(2, 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let z = face_point(&mut rng, &m);
            assert!(crate::in_base_polytope(&m, &z).unwrap(), "{z}");
        }
    }
}
