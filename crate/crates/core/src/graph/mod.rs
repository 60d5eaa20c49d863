//! Graphs and the constructions that produce them.

pub mod adjacency;
pub mod cayley;
pub mod cd;
pub mod coset_graph;
pub mod iso;
pub mod named;
pub mod quotient;
pub mod recipe;

pub use adjacency::Graph;
pub use cayley::{cayley, CayleyGraph};
pub use cd::{cd_exponents, cd_family, cyclotomic_roots, CdGraph};
pub use coset_graph::{coset_graph, coset_graph_in, CosetGraph};
pub use iso::{find_isomorphism, is_isomorphic, ISO_MAX_VERTICES};
pub use named::{icosahedron, is_stretch, named, NamedGraph, NAMES, STRETCH_NAMES};
pub use quotient::{
    double_cover, induced_action, quotient, quotient_by_blocks, DoubleCover, QuotientResult,
};
pub use recipe::{GroupSpec, PermSpec, Recipe};
