//! Automorphism groups, arc-transitivity and vertex-stabiliser profiles.

pub mod arcs;
pub mod automorphisms;
pub mod profile;

pub use arcs::{
    is_arc_transitive, s_arc_count, s_transitivity, s_transitivity_degree, STransitivity,
    ARC_ORBIT_LIMIT, MAX_S,
};
pub use automorphisms::{automorphism_group, verify_automorphisms};
pub use profile::{
    admissible_orders, match_types, profile_of_group, stabilizer_profile, StabilizerProfile,
    StabilizerType, STABILIZER_BOUND, STABILIZER_TYPES,
};
