//! Matroids on ground sets of at most [`MAX_GROUND_SET`] elements, stored as
//! explicit basis lists over bitmask subsets.
//!
//! Everything here is exact and deterministic. Rank queries go through a
//! memo table that is filled lazily (or all at once by
//! [`Matroid::precompute_rank_table`]) and is safe to share across threads.

mod chain;
mod error;
mod flats;
mod matroid;
mod ops;
mod schubert;
pub mod spec;
mod subset;

pub use chain::SetChain;
pub use error::MatroidError;
pub use flats::FlatLattice;
pub use matroid::Matroid;
pub use ops::Simplification;
pub use schubert::{check_profile, order_data_from_profile, profile_from_order, upper_as_lower};
pub use subset::{Submasks, SubsetMask};

/// Largest supported ground set.
pub const MAX_GROUND_SET: usize = 16;

pub type Result<T> = std::result::Result<T, MatroidError>;

/// Binomial coefficient as `u128`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
