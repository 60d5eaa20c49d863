//! Vertex-stabiliser profiles matched against the pentavalent stabiliser list.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::{FactoredOrder, PermGroup};

/// `2^9 · 3^2 · 5`: every arc-transitive vertex stabiliser order divides it.
pub const STABILIZER_BOUND: u128 = 23_040;

/// Histograms are computed only for stabilisers up to this order.
pub const HISTOGRAM_BOUND: u128 = 100_000;

/// A possible vertex stabiliser of a connected pentavalent `(G, s)`-transitive
/// graph, with invariants that tell same-order candidates apart.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StabilizerType {
    pub name: &'static str,
    pub s: u32,
    pub order: u128,
    pub involutions: Option<u64>,
    pub derived_order: Option<u128>,
}

const fn t(
    name: &'static str,
    s: u32,
    order: u128,
    involutions: Option<u64>,
    derived_order: Option<u128>,
) -> StabilizerType {
    StabilizerType {
        name,
        s,
        order,
        involutions,
        derived_order,
    }
}

pub const STABILIZER_TYPES: &[StabilizerType] = &[
    t("Z5", 1, 5, Some(0), Some(1)),
    t("D5", 1, 10, Some(5), Some(5)),
    t("D10", 1, 20, Some(11), Some(5)),
    t("F20", 2, 20, Some(5), Some(5)),
    t("F20×Z2", 2, 40, Some(11), Some(5)),
    t("A5", 2, 60, Some(15), Some(60)),
    t("S5", 2, 120, Some(25), Some(60)),
    t("F20×Z4", 3, 80, Some(11), Some(5)),
    t("A4×A5", 3, 720, Some(63), Some(240)),
    t("S4×S5", 3, 2880, Some(259), Some(720)),
    t("(A4×A5)⋊Z2", 3, 1440, None, Some(720)),
    t("ASL(2,4)", 4, 960, None, Some(960)),
    t("AGL(2,4)", 4, 2880, None, Some(960)),
    t("AΣL(2,4)", 4, 1920, None, Some(960)),
    t("AΓL(2,4)", 4, 5760, None, Some(2880)),
    t("Z2^6⋊ΓL(2,4)", 5, 23_040, None, None),
];

/// Orders admitted for each `s`.
pub fn admissible_orders(s: u32) -> Vec<u128> {
    let mut v: Vec<u128> = STABILIZER_TYPES
        .iter()
        .filter(|t| t.s == s)
        .map(|t| t.order)
        .collect();
    v.sort_unstable();
    v.dedup();
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizerProfile {
    pub vertex: usize,
    pub order: u128,
    pub factored: String,
    /// Element order → count, when the stabiliser is small enough to list.
    pub element_order_histogram: Option<BTreeMap<u64, u64>>,
    pub is_abelian: bool,
    pub derived_order: u128,
    /// Names from the stabiliser list consistent with these invariants.
    pub matched_types: Vec<String>,
}

impl StabilizerProfile {
    pub fn divides_bound(&self) -> bool {
        STABILIZER_BOUND.is_multiple_of(self.order)
    }

    pub fn involutions(&self) -> Option<u64> {
        self.element_order_histogram
            .as_ref()
            .map(|h| h.get(&2).copied().unwrap_or(0))
    }
}

/// Profile of the stabiliser `g_v`; `s`, when known, restricts the match.
pub fn stabilizer_profile(
    graph: &Graph,
    g: &PermGroup,
    v: usize,
    s: Option<u32>,
    config: &Config,
) -> Result<StabilizerProfile> {
    if g.degree() != graph.vertex_count() {
        return Err(Error::DegreeMismatch(graph.vertex_count(), g.degree()));
    }
    let stab = g.stabilizer(v)?;
    profile_of_group(&stab, v, s, config)
}

pub fn profile_of_group(
    stab: &PermGroup,
    vertex: usize,
    s: Option<u32>,
    config: &Config,
) -> Result<StabilizerProfile> {
    let order = stab.order_u128();
    let factored = FactoredOrder::product_of(stab.chain().orbit_lengths().iter().copied())?;
    let histogram = if order <= HISTOGRAM_BOUND.min(config.enum_bound) {
        Some(
            stab.element_order_histogram(config.enum_bound)?
                .into_iter()
                .collect(),
        )
    } else {
        None
    };
    let mut profile = StabilizerProfile {
        vertex,
        order,
        factored: factored.to_string(),
        element_order_histogram: histogram,
        is_abelian: stab.is_abelian(),
        derived_order: stab.derived_subgroup().order_u128(),
        matched_types: Vec::new(),
    };
    profile.matched_types = match_types(&profile, s);
    Ok(profile)
}

/// Every listed type whose recorded invariants agree with the profile.
pub fn match_types(profile: &StabilizerProfile, s: Option<u32>) -> Vec<String> {
    STABILIZER_TYPES
        .iter()
        .filter(|t| s.is_none_or(|s| s == t.s))
        .filter(|t| t.order == profile.order)
        .filter(|t| t.derived_order.is_none_or(|d| d == profile.derived_order))
        .filter(|t| match (t.involutions, profile.involutions()) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        })
        .map(|t| t.name.to_string())
        .collect()
}
