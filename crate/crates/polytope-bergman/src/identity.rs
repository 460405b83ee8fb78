//! Pointwise evaluation of the four decompositions of the indicator function
//! of a matroid polytope into Schubert pieces.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use matroid_core::{Matroid, SubsetMask};

use crate::membership::{in_base_polytope, in_hypersimplex};
use crate::{PolytopeError, RationalPoint, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    /// Closed lower Schubert polytopes over all chains of sets, sign
    /// `(-1)^(n-k)`.
    InwardSets,
    /// Half-open polytopes over all chains of sets, sign `(-1)^(k-1)`.
    OutwardSets,
    /// Half-open polytopes over chains of flats, sign `(-1)^(k-1)`.
    OuterFlats,
    /// Closed polytopes over chains of flats, weight `(-1)^k μ(F_•)`.
    InnerFlats,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 4] = [
        IdentityKind::InwardSets,
        IdentityKind::OutwardSets,
        IdentityKind::OuterFlats,
        IdentityKind::InnerFlats,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::InwardSets => "inward-sets",
            IdentityKind::OutwardSets => "outward-sets",
            IdentityKind::OuterFlats => "outer-flats",
            IdentityKind::InnerFlats => "inner-flats",
        }
    }

    pub fn uses_flats(self) -> bool {
        matches!(self, IdentityKind::OuterFlats | IdentityKind::InnerFlats)
    }

    /// Half-open pieces use strict inequalities.
    fn strict(self) -> bool {
        matches!(self, IdentityKind::OutwardSets | IdentityKind::OuterFlats)
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        IdentityKind::ALL
            .into_iter()
            .find(|k| k.name() == key)
            .ok_or_else(|| format!("unknown identity `{s}`"))
    }
}

/// Both sides of an identity at one point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityCheck {
    /// Indicator of `Δ(M)`.
    pub lhs: i64,
    /// Signed sum of the pieces' indicators.
    pub rhs: i64,
}

impl IdentityCheck {
    pub fn holds(self) -> bool {
        self.lhs == self.rhs
    }
}

fn parity(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Both sides of `kind` at `z`. The chain sum is a dynamic programme over
/// the members above each set, so no chain is listed explicitly.
pub fn check_identity(m: &Matroid, kind: IdentityKind, z: &RationalPoint) -> Result<IdentityCheck> {
    let n = m.ground_size();
    z.check_len(n)?;
    if kind.uses_flats() && m.has_loops() {
        return Err(PolytopeError::LoopsPresent);
    }
    let lhs = in_base_polytope(m, z)? as i64;
    if !in_hypersimplex(m.rank(), z) {
        return Ok(IdentityCheck { lhs, rhs: 0 });
    }

    let (d, ints) = z.scaled();
    let strict = kind.strict();
    let inside = |s: SubsetMask| {
        let lhs: BigInt = s.iter().map(|i| &ints[i]).sum();
        let rhs = &d * m.rank_of(s);
        if strict {
            lhs > rhs
        } else {
            lhs <= rhs
        }
    };

    let full = m.ground();
    let (members, weight): (Vec<SubsetMask>, Box<dyn Fn(usize, usize) -> i64 + '_>) = if kind.uses_flats() {
        let lattice = m.flat_lattice();
        let flats = lattice.flats().to_vec();
        let w: Box<dyn Fn(usize, usize) -> i64> = if kind == IdentityKind::InnerFlats {
            Box::new(move |i, j| -lattice.mobius(i, j).unwrap_or(0))
        } else {
            Box::new(|_, _| -1)
        };
        (flats, w)
    } else {
        ((0u32..1 << n).map(SubsetMask).collect(), Box::new(|_, _| -1))
    };

    // tail[i]: signed count of chains from members[i] up to E, each interior
    // set weighted by its indicator
    let mut order: Vec<usize> = (0..members.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(members[i].len()));
    let mut tail = vec![0i64; members.len()];
    for &i in &order {
        let s = members[i];
        if s == full {
            tail[i] = 1;
            continue;
        }
        let mut acc = 0i64;
        for (j, &t) in members.iter().enumerate() {
            if !s.is_proper_subset_of(t) {
                continue;
            }
            let through = if t == full {
                1
            } else if tail[j] != 0 && inside(t) {
                tail[j]
            } else {
                0
            };
            if through != 0 {
                acc += weight(i, j) * through;
            }
        }
        tail[i] = acc;
    }
    let bottom = members.iter().position(|s| s.is_empty()).expect("∅ is always a member");
    let global = match kind {
        IdentityKind::InwardSets => parity(n),
        IdentityKind::OutwardSets | IdentityKind::OuterFlats => -1,
        IdentityKind::InnerFlats => 1,
    };
    Ok(IdentityCheck { lhs, rhs: global * tail[bottom] })
}

/// [`check_identity`] over a batch of points, in parallel.
pub fn check_batch(m: &Matroid, kind: IdentityKind, points: &[RationalPoint]) -> Result<Vec<IdentityCheck>> {
    m.precompute_rank_table();
    points.par_iter().map(|z| check_identity(m, kind, z)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segment_midpoint() {
        let m = Matroid::uniform(1, 2).unwrap();
        let z = RationalPoint::from_fractions(&[(1, 2), (1, 2)]).unwrap();
        for k in IdentityKind::ALL {
            assert_eq!(check_identity(&m, k, &z).unwrap(), IdentityCheck { lhs: 1, rhs: 1 }, "{k}");
        }
    }

    #[test]
    fn off_the_hyperplane_is_zero() {
        let m = Matroid::uniform(2, 4).unwrap();
        let z = RationalPoint::from_fractions(&[(1, 2), (1, 2), (1, 2), (1, 3)]).unwrap();
        let far = RationalPoint::from_integers(&[2, 1, 0, -1]);
        for k in IdentityKind::ALL {
            assert_eq!(check_identity(&m, k, &z).unwrap(), IdentityCheck { lhs: 0, rhs: 0 });
            assert_eq!(check_identity(&m, k, &far).unwrap(), IdentityCheck { lhs: 0, rhs: 0 });
        }
    }

    #[test]
    fn flats_need_loop_free() {
        let m = Matroid::uniform(0, 1).unwrap().direct_sum(&Matroid::uniform(1, 1).unwrap()).unwrap();
        let z = RationalPoint::from_integers(&[0, 1]);
        assert_eq!(check_identity(&m, IdentityKind::OuterFlats, &z), Err(PolytopeError::LoopsPresent));
        assert!(check_identity(&m, IdentityKind::OutwardSets, &z).unwrap().holds());
    }

    #[test]
    fn kind_names_round_trip() {
        for k in IdentityKind::ALL {
            assert_eq!(k.name().parse::<IdentityKind>().unwrap(), k);
        }
    }
}
