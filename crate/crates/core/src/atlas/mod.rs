//! Concrete groups: classical families, finitely presented groups realised by
//! coset enumeration, coset spaces, and subgroup searches.

pub mod classical;
pub mod coset;
pub mod field;
pub mod presentation;
pub mod search;
pub mod todd_coxeter;

pub use classical::{
    alternating, cyclic, dihedral, direct_product, elementary_abelian_2, projective_linear,
    projective_linear_order, psl34_with_duality, symmetric, Dihedral, PlaneWithPolarity,
    ProjectiveKind,
};
pub use coset::{double_coset_ratio_by_counting, CosetSpace};
pub use field::Field;
pub use presentation::{Letter, Presentation, Word};
pub use search::{
    find_double_coset_element, find_subgroup, sylow_normalizer, sylow_subgroup, DoubleCosetSpec,
    DoubleCosetWitness, SubgroupSpec,
};
pub use todd_coxeter::{coset_enumeration, CosetStatus, CosetTable};
