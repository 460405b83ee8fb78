//! The ten chain-sum formulas for `ω°(M)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use ferroni_paths::{PathKernel, PathMode};
use matroid_core::{FlatLattice, Matroid, SubsetMask};

use crate::chains::{ChainFamily, ChainSum, Evaluator};
use crate::crowding::{record_table, stress_table, zy_split};
use crate::{OmegaError, Result};

/// Enumerating every chain of subsets is only attempted up to this size.
pub const ALL_SETS_CAP: usize = 12;

/// Rank tables are filled eagerly up to this size before a chain sum.
pub const PRECOMPUTE_CAP: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChainVariant {
    /// All chains of subsets, sign `(-1)^(n - k)`, paths strictly below.
    InwardSets,
    /// All chains of subsets, sign `(-1)^(k - 1)`, paths weakly above.
    OutwardSets,
    /// All chains of flats, weight `(-1)^k μ(F_•)`, paths strictly below.
    InwardFlats,
    /// All chains of flats, sign `(-1)^(k - 1)`, paths weakly above.
    OutwardFlats,
    /// Chains of crowded sets.
    CrowdedSets,
    /// Chains of crowded flats.
    CrowdedFlats,
    /// Chains of crowding records.
    RecordSets,
    /// Chains of flats that are crowding records.
    RecordFlats,
    /// Chains of records with strictly increasing crowding from zero and
    /// decreasing `Z` parts.
    FinalSets,
    /// As `FinalSets`, through flats only.
    FinalFlats,
}

impl ChainVariant {
    pub const ALL: [ChainVariant; 10] = [
        ChainVariant::InwardSets,
        ChainVariant::OutwardSets,
        ChainVariant::InwardFlats,
        ChainVariant::OutwardFlats,
        ChainVariant::CrowdedSets,
        ChainVariant::CrowdedFlats,
        ChainVariant::RecordSets,
        ChainVariant::RecordFlats,
        ChainVariant::FinalSets,
        ChainVariant::FinalFlats,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ChainVariant::InwardSets => "inward-sets",
            ChainVariant::OutwardSets => "outward-sets",
            ChainVariant::InwardFlats => "inward-flats",
            ChainVariant::OutwardFlats => "outward-flats",
            ChainVariant::CrowdedSets => "crowded-sets",
            ChainVariant::CrowdedFlats => "crowded-flats",
            ChainVariant::RecordSets => "record-sets",
            ChainVariant::RecordFlats => "record-flats",
            ChainVariant::FinalSets => "final-sets",
            ChainVariant::FinalFlats => "final-flats",
        }
    }

    pub fn uses_flats(self) -> bool {
        matches!(
            self,
            ChainVariant::InwardFlats
                | ChainVariant::OutwardFlats
                | ChainVariant::CrowdedFlats
                | ChainVariant::RecordFlats
                | ChainVariant::FinalFlats
        )
    }

    /// Largest ground set this variant will attempt.
    pub fn cap(self) -> usize {
        match self {
            ChainVariant::InwardSets | ChainVariant::OutwardSets => ALL_SETS_CAP,
            _ => matroid_core::MAX_GROUND_SET,
        }
    }

    /// Flats variants enumerate by DFS, set variants by transfer.
    pub fn default_evaluator(self) -> Evaluator {
        if self.uses_flats() {
            Evaluator::Dfs
        } else {
            Evaluator::Transfer
        }
    }
}

impl fmt::Display for ChainVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ChainVariant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        ChainVariant::ALL
            .into_iter()
            .find(|v| v.name() == key)
            .ok_or_else(|| format!("unknown chain variant `{s}`"))
    }
}

/// A chain sum together with its bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSumReport {
    pub variant: ChainVariant,
    pub evaluator: Evaluator,
    /// `ω°(M)`.
    pub omega_circ: BigInt,
    pub chains: u128,
    pub visited: u64,
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn family(m: &Matroid, variant: ChainVariant, lattice: Option<&FlatLattice>) -> Option<ChainFamily> {
    let n = m.ground_size();
    let full = m.ground();
    let flats = || -> Vec<SubsetMask> { lattice.expect("flats variant needs a lattice").flats().to_vec() };
    let all_sets = || -> Vec<SubsetMask> { (0u32..1 << n).map(SubsetMask).collect() };
    let from_bottom = |s: SubsetMask| s.is_empty().then_some(1);
    use ChainVariant::*;
    Some(match variant {
        InwardSets => ChainFamily::new(m, all_sets(), from_bottom, |_, _| Some(-1), PathMode::StrictlyBelow, sign(n)),
        OutwardSets => ChainFamily::new(m, all_sets(), from_bottom, |_, _| Some(-1), PathMode::WeaklyAbove, -1),
        InwardFlats => {
            let l = lattice.expect("flats variant needs a lattice");
            ChainFamily::new(
                m,
                flats(),
                from_bottom,
                |f, g| {
                    let (i, j) = (l.index_of(f)?, l.index_of(g)?);
                    Some(-l.mobius(i, j)?)
                },
                PathMode::StrictlyBelow,
                1,
            )
        }
        OutwardFlats => ChainFamily::new(m, flats(), from_bottom, |_, _| Some(-1), PathMode::WeaklyAbove, -1),
        CrowdedSets | CrowdedFlats => {
            let pool = if variant == CrowdedSets { all_sets() } else { flats() };
            let members = pool.into_iter().filter(|&s| crate::stress(m, s) >= 0).collect();
            ChainFamily::new(m, members, from_bottom, |_, _| Some(-1), PathMode::WeaklyAbove, -1)
        }
        RecordSets | RecordFlats | FinalSets | FinalFlats => {
            let stresses = stress_table(m);
            let records = record_table(m, &stresses);
            if !records[full.index()] {
                return None;
            }
            let pool = if matches!(variant, RecordSets | FinalSets) { all_sets() } else { flats() };
            let members: Vec<SubsetMask> = pool.into_iter().filter(|s| records[s.index()]).collect();
            if matches!(variant, RecordSets | RecordFlats) {
                ChainFamily::new(m, members, from_bottom, |_, _| Some(-1), PathMode::WeaklyAbove, -1)
            } else {
                let z: std::collections::HashMap<SubsetMask, SubsetMask> =
                    members.iter().map(|&s| (s, zy_split(m, s).z_part)).collect();
                let st = |s: SubsetMask| stresses[s.index()];
                ChainFamily::new(
                    m,
                    members,
                    |h| (st(h) == 0).then(|| sign(m.component_count(h))),
                    |s, t| (st(s) < st(t) && z[&t].is_subset_of(z[&s])).then_some(-1),
                    PathMode::WeaklyAbove,
                    -1,
                )
            }
        }
    })
}

/// `ω°(M)` by one chain-sum formula, with the variant's default evaluator.
pub fn omega_chain_sum(m: &Matroid, variant: ChainVariant) -> Result<ChainSumReport> {
    omega_chain_sum_with(m, variant, variant.default_evaluator())
}

/// `ω°(M)` by one chain-sum formula and a chosen evaluator.
pub fn omega_chain_sum_with(
    m: &Matroid,
    variant: ChainVariant,
    evaluator: Evaluator,
) -> Result<ChainSumReport> {
    let n = m.ground_size();
    if n > variant.cap() {
        return Err(OmegaError::Infeasible { variant, n, cap: variant.cap() });
    }
    if variant.uses_flats() && m.has_loops() {
        return Err(OmegaError::VariantInapplicable {
            variant,
            reason: "chains of flats require a loop-free matroid".into(),
        });
    }
    let zero = ChainSumReport { variant, evaluator, omega_circ: BigInt::from(0), chains: 0, visited: 0 };
    let Some(kernel) = PathKernel::new(n, m.rank()) else {
        return Ok(zero);
    };
    if n <= PRECOMPUTE_CAP {
        m.precompute_rank_table();
    }
    let lattice = variant.uses_flats().then(|| m.flat_lattice());
    let Some(family) = family(m, variant, lattice.as_ref()) else {
        return Ok(zero);
    };
    let ChainSum { value, chains, visited } = family.evaluate(&kernel, evaluator);
    Ok(ChainSumReport { variant, evaluator, omega_circ: BigInt::from(value), chains, visited })
}

/// `(-1)^(c(M) - 1)`, converting between `ω` and `ω°`.
pub fn component_sign(m: &Matroid) -> i64 {
    sign(m.connected_components().len() + 1)
}

/// `ω(M)` by one chain-sum formula. Flats variants on matroids with loops
/// return 0 without summing.
pub fn omega_by_variant(m: &Matroid, variant: ChainVariant) -> Result<BigInt> {
    if variant.uses_flats() && m.has_loops() {
        return Ok(BigInt::from(0));
    }
    let report = omega_chain_sum(m, variant)?;
    Ok(report.omega_circ * component_sign(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u12_is_one_everywhere() {
        let m = Matroid::uniform(1, 2).unwrap();
        for v in ChainVariant::ALL {
            for e in [Evaluator::Transfer, Evaluator::Dfs] {
                assert_eq!(omega_chain_sum_with(&m, v, e).unwrap().omega_circ, 1.into(), "{v}");
            }
        }
    }

    #[test]
    fn u25_is_two_everywhere() {
        let m = Matroid::uniform(2, 5).unwrap();
        for v in ChainVariant::ALL {
            assert_eq!(omega_by_variant(&m, v).unwrap(), 2.into(), "{v}");
        }
    }

    #[test]
    fn coloop_gives_zero() {
        let m = Matroid::uniform(1, 2).unwrap().direct_sum(&Matroid::uniform(1, 1).unwrap()).unwrap();
        for v in ChainVariant::ALL {
            assert_eq!(omega_by_variant(&m, v).unwrap(), 0.into(), "{v}");
        }
    }

    #[test]
    fn caps_and_loops_are_reported() {
        let big = Matroid::uniform(2, 13).unwrap();
        assert!(matches!(
            omega_chain_sum(&big, ChainVariant::InwardSets),
            Err(OmegaError::Infeasible { cap: 12, .. })
        ));
        let looped = Matroid::uniform(0, 1).unwrap().direct_sum(&Matroid::uniform(1, 2).unwrap()).unwrap();
        assert!(matches!(
            omega_chain_sum(&looped, ChainVariant::FinalFlats),
            Err(OmegaError::VariantInapplicable { .. })
        ));
        assert_eq!(omega_by_variant(&looped, ChainVariant::FinalFlats).unwrap(), 0.into());
        assert_eq!(omega_by_variant(&looped, ChainVariant::FinalSets).unwrap(), 0.into());
    }

    #[test]
    fn variant_names_round_trip() {
        for v in ChainVariant::ALL {
            assert_eq!(v.name().parse::<ChainVariant>().unwrap(), v);
        }
        assert_eq!("FINAL_FLATS".parse::<ChainVariant>().unwrap(), ChainVariant::FinalFlats);
    }
}
