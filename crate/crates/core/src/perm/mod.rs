//! Permutations and permutation groups.
//!
//! Composition is apply-left-then-right throughout: `p.then(q)` maps `i` to
//! `q(p(i))`, conjugation is `x^y = y⁻¹xy` and commutators are `[x,y] = x⁻¹y⁻¹xy`.

mod blocks;
mod chain;
mod group;
mod normal;
mod order;
mod permutation;

pub use chain::StabChain;
pub use group::{PermGroup, RANDOMIZED_DEGREE};
pub use normal::{prime_order_powers, subgroup_from_elements, MinimalNormal};
pub use order::{factorize, is_prime, FactoredOrder};
pub use permutation::Permutation;
