//! Small models of wedges of spheres, their homotopy groups, k-invariants
//! and the comparison with suspensions.

mod homotopy;
mod wedge;

pub use homotopy::{circle_comparison, homotopy_groups, k_invariant, suspension_comparison, Comparison, HomotopyGroups, KInvariant};
pub use wedge::wedge_model;
