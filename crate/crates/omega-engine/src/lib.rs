//! The top g-coefficient `ω(M)` of a matroid, computed by several
//! independent routes so that they can be checked against one another:
//!
//! * Schubert matroids: a single constrained Ferroni path count.
//! * Ten chain-sum formulas over sets or flats, from the plain
//!   Brianchon–Gram style sums down to the fully cancelled sum over chains
//!   of crowding records.
//! * Closed forms for small rank, `n ∈ {2r, 2r+1}`, and several vanishing
//!   criteria.
//!
//! Chain sums produce the covaluative twin `ω° = (-1)^(c(M)-1) ω`.

mod chains;
pub mod closed_form;
pub mod crowding;
mod error;
mod report;
mod schubert;
mod variants;

pub use chains::{ChainSum, Evaluator};
pub use closed_form::{omega_closed_form, ClosedForm, ClosedFormRule};
pub use crowding::{
    crowd_hull, is_crowding_record, is_overcrowded_in, minimal_crowd_hull, minimal_crowded_sets,
    stress, zy_split, CrowdingProfile, ZYSplit,
};
pub use error::{OmegaError, Result};
pub use report::{omega, omega_report, Method, MethodResult, OmegaReport};
pub use schubert::omega_schubert;
pub use variants::{
    component_sign, omega_by_variant, omega_chain_sum, omega_chain_sum_with, ChainSumReport,
    ChainVariant, ALL_SETS_CAP, PRECOMPUTE_CAP,
};
