//! Exact rational geometry around matroid polytopes.
//!
//! Membership in base, Schubert and half-open Schubert polytopes; both sides
//! of the four indicator-function decompositions of `Δ(M)` at a point; the
//! `x`/`y` tautological functions; and membership in the Bergman fan and its
//! thickenings through the associated graded matroid.
//!
//! Everything is exact: points have [`BigRational`](num_rational::BigRational)
//! coordinates and no floating point is used.

mod bergman;
mod error;
mod identity;
mod membership;
mod point;
mod sample;
mod tautological;

pub use bergman::{bergman_contains, graded_matroid, level_flag, thickened_bergman_contains};
pub use error::{PolytopeError, Result};
pub use identity::{check_batch, check_identity, IdentityCheck, IdentityKind};
pub use membership::{in_base_polytope, in_halfopen, in_hypersimplex, in_schubert_lower, in_schubert_upper};
pub use point::{points_from_json, points_to_json, RationalPoint};
pub use sample::{grid_points, hypersimplex_vertices, sample_points, MAX_DENOMINATOR};
pub use tautological::{x_values, y_values, z_max_basis};
