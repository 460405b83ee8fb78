//! The functions `x_p` and `y_q` behind the tautological classes, evaluated
//! at rational points.

use num_rational::BigRational;

use matroid_core::{Matroid, SubsetMask};

use crate::{RationalPoint, Result};

/// The greedy basis maximizing `Σ_{b∈B} z(b)`, ties broken by index.
pub fn z_max_basis(m: &Matroid, z: &RationalPoint) -> Result<SubsetMask> {
    z.check_len(m.ground_size())?;
    let mut order: Vec<usize> = (0..m.ground_size()).collect();
    order.sort_by(|&i, &j| z.coord(j).cmp(z.coord(i)).then(i.cmp(&j)));
    let mut basis = SubsetMask::EMPTY;
    for e in order {
        if m.is_independent(basis.with(e)) {
            basis = basis.with(e);
        }
    }
    Ok(basis)
}

/// Distinct coordinate values, largest first.
fn levels(z: &RationalPoint) -> Vec<BigRational> {
    let mut v = z.coords().to_vec();
    v.sort_by(|a, b| b.cmp(a));
    v.dedup();
    v
}

/// `x_p(z) = max { t : rank {e : z(e) >= t} >= p }` for `p = 1..=r`.
pub fn x_values(m: &Matroid, z: &RationalPoint) -> Result<Vec<BigRational>> {
    z.check_len(m.ground_size())?;
    let at_least = |t: &BigRational| {
        SubsetMask::from_elements((0..z.len()).filter(|&i| z.coord(i) >= t))
    };
    let lv = levels(z);
    Ok((1..=m.rank())
        .map(|p| {
            lv.iter()
                .find(|t| m.rank_of(at_least(t)) >= p)
                .expect("the whole ground set has rank r")
                .clone()
        })
        .collect())
}

/// `y_q(z) = max { t : rank^⊥ {e : z(e) <= -t} >= q }` for `q = 1..=n-r`,
/// where `rank^⊥(S) = |S| - r + rank(E \ S)`. This is `-z(c_q)` for the
/// cobasis complementary to a `z`-maximal basis, sorted by increasing `z`.
pub fn y_values(m: &Matroid, z: &RationalPoint) -> Result<Vec<BigRational>> {
    let n = m.ground_size();
    z.check_len(n)?;
    let r = m.rank();
    let dual_rank = |s: SubsetMask| s.len() + m.rank_of(s.complement(n)) - r;
    let at_most = |t: &BigRational| {
        SubsetMask::from_elements((0..n).filter(|&i| *z.coord(i) <= -t))
    };
    let mut lv: Vec<BigRational> = levels(z).into_iter().map(|v| -v).collect();
    lv.reverse();
    Ok((1..=n - r)
        .map(|q| {
            lv.iter()
                .find(|t| dual_rank(at_most(t)) >= q)
                .expect("the whole ground set has dual rank n - r")
                .clone()
        })
        .collect())
}
