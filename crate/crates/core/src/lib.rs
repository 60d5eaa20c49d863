//! Permutation groups, graph constructions and symmetry analysis for
//! arc-transitive pentavalent graphs.

pub mod atlas;
pub mod census;
pub mod config;
pub mod error;
pub mod graph;
pub mod perm;
pub mod symmetry;

pub use config::Config;
pub use error::{Error, ParseError, Result};
