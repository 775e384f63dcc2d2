//! Tracks: Hopf invariants of tracks between maps of wedges of spheres, and
//! 2-morphisms of crossed and quadratic modules.

mod hopf;
mod two;

pub use hopf::{
    ab_of, boundary_linear, level_one_track_exists, nil_track_between, tracks_between, HopfTrack, TrackTorsor,
    CLASSICAL_HOPF_SIGN,
};
pub use two::{interchange_check, interchange_sides, TwoMorphism};
