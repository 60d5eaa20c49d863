//! Basicness: whether some nontrivial normal subgroup has at least three orbits.
//!
//! Two independent routes. Orbits of a normal subgroup are unions of orbits
//! of any normal subgroup it contains, so it is enough to look at minimal
//! normal subgroups. Separately, the orbits of a normal subgroup of a
//! transitive group form a block system whose kernel contains it, so such a
//! subgroup exists iff the group acts unfaithfully on some block system with
//! at least three blocks.

use serde::Serialize;

use crate::config::Config;
use crate::error::Result;
use crate::graph::quotient::{induced_action, quotient, quotient_by_blocks, QuotientEdge};
use crate::graph::Graph;
use crate::perm::PermGroup;

/// Random elements drawn when the group is too big to list its classes.
pub const CLASS_SAMPLES: usize = 200;

/// Cap on the number of block systems enumerated.
pub const BLOCK_SYSTEM_LIMIT: usize = 10_000;

#[derive(Clone, Debug)]
pub struct QuotientWitness {
    /// Order of the normal subgroup whose orbits are the blocks.
    pub subgroup_order: u128,
    pub orbits: usize,
    pub quotient: Graph,
    pub is_normal_cover: bool,
}

#[derive(Clone, Debug)]
pub struct BlockRoute {
    pub basic: bool,
    pub systems: usize,
    pub witness: Option<QuotientWitness>,
}

#[derive(Clone, Debug)]
pub struct Basicness {
    pub basic: bool,
    /// True when the group was the full automorphism group; otherwise a
    /// "basic" answer only holds relative to the given group.
    pub full_group: bool,
    /// True when minimal normal subgroups were found by sampling.
    pub sampled: bool,
    /// Minimal normal subgroups with their orbit counts.
    pub minimal: Vec<(PermGroup, usize)>,
    /// Answer of the block-system route, when it ran.
    pub block_route: Option<BlockRoute>,
    pub witness: Option<QuotientWitness>,
}

impl Basicness {
    /// The answer is exact for the given group.
    pub fn exact(&self) -> bool {
        !self.basic || !self.sampled || self.block_route.is_some()
    }

    /// The answer holds for the graph itself, not just for the given group.
    pub fn certain(&self) -> bool {
        !self.basic || (self.full_group && self.exact())
    }

    /// Whether both routes ran and agree.
    pub fn routes_agree(&self) -> Option<bool> {
        let blocks = self.block_route.as_ref()?;
        if self.sampled && self.minimal_says_basic() {
            return None;
        }
        Some(blocks.basic == self.minimal_says_basic())
    }

    fn minimal_says_basic(&self) -> bool {
        self.minimal.iter().all(|(_, k)| *k < 3)
    }

    pub fn label(&self) -> &'static str {
        match (self.basic, self.certain()) {
            (false, _) => "non-basic",
            (true, true) => "basic",
            (true, false) => "basic relative to verified group",
        }
    }

    pub fn minimal_normal_summary(&self) -> Vec<(u128, usize)> {
        self.minimal
            .iter()
            .map(|(n, k)| (n.order_u128(), *k))
            .collect()
    }
}

/// Minimal normal subgroups of `g` with their orbit counts on the vertices.
pub fn minimal_normal_with_orbits(
    g: &PermGroup,
    config: &Config,
) -> Result<(Vec<(PermGroup, usize)>, bool)> {
    let mut rng = config.rng();
    let found = g.minimal_normal_subgroups(config.min_normal_bound, &mut rng, CLASS_SAMPLES)?;
    let list = found
        .subgroups
        .into_iter()
        .map(|n| {
            let k = n.orbits().len();
            (n, k)
        })
        .collect();
    Ok((list, found.sampled))
}

/// The block-system route; `group` must be transitive.
pub fn basic_by_blocks(graph: &Graph, group: &PermGroup) -> Result<BlockRoute> {
    let systems = group.block_systems(BLOCK_SYSTEM_LIMIT)?;
    let count = systems.len();
    for map in systems {
        let blocks = map.iter().max().map_or(0, |&b| b + 1);
        if blocks < 3 || blocks == map.len() {
            continue;
        }
        let induced = induced_action(group, &map)?;
        let kernel = group.order_u128() / induced.order_u128();
        if kernel > 1 {
            let q = quotient_by_blocks(graph, map);
            return Ok(BlockRoute {
                basic: false,
                systems: count,
                witness: Some(QuotientWitness {
                    subgroup_order: kernel,
                    orbits: blocks,
                    quotient: q.quotient,
                    is_normal_cover: q.is_normal_cover,
                }),
            });
        }
    }
    Ok(BlockRoute {
        basic: true,
        systems: count,
        witness: None,
    })
}

/// Decides basicness of `graph` relative to `group`, by both routes when the
/// group is transitive.
pub fn is_basic(
    graph: &Graph,
    group: &PermGroup,
    full_group: bool,
    config: &Config,
) -> Result<Basicness> {
    let (minimal, sampled) = minimal_normal_with_orbits(group, config)?;
    let block_route = if group.is_transitive() {
        Some(basic_by_blocks(graph, group)?)
    } else {
        None
    };
    let mut witness = None;
    if let Some((n, k)) = minimal.iter().find(|(_, k)| *k >= 3) {
        let q = quotient(graph, n)?;
        witness = Some(QuotientWitness {
            subgroup_order: n.order_u128(),
            orbits: *k,
            quotient: q.quotient,
            is_normal_cover: q.is_normal_cover,
        });
    }
    let witness = witness.or_else(|| block_route.as_ref().and_then(|b| b.witness.clone()));
    // An exact route decides; a sampled "basic" defers to the block route.
    let basic = match (&block_route, sampled) {
        (Some(b), true) if witness.is_none() => b.basic,
        _ => witness.is_none(),
    };
    Ok(Basicness {
        basic,
        full_group,
        sampled,
        minimal,
        block_route,
        witness,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientNode {
    pub vertices: usize,
    pub valency: Option<usize>,
    pub group_order: u128,
    pub children: Vec<QuotientChild>,
    /// Set when this node was not expanded: depth exhausted or a bound hit.
    pub truncated: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientChild {
    pub subgroup_order: u128,
    pub orbits: usize,
    pub edge: QuotientEdge,
    pub node: QuotientNode,
}

/// Quotients by minimal normal subgroups with at least three orbits, repeated
/// on each quotient with the induced group, down to `depth` levels.
pub fn normal_quotient_tree(
    graph: &Graph,
    group: &PermGroup,
    depth: usize,
    config: &Config,
) -> QuotientNode {
    let mut node = QuotientNode {
        vertices: graph.vertex_count(),
        valency: graph.valency(),
        group_order: group.order_u128(),
        children: Vec::new(),
        truncated: None,
    };
    let list = match minimal_normal_with_orbits(group, config) {
        Ok((list, _)) => list,
        Err(e) => {
            node.truncated = Some(e.to_string());
            return node;
        }
    };
    let list: Vec<_> = list.into_iter().filter(|(_, k)| *k >= 3).collect();
    if list.is_empty() {
        return node;
    }
    if depth == 0 {
        node.truncated = Some("depth exhausted".into());
        return node;
    }
    for (n, k) in list {
        let child = quotient(graph, &n).and_then(|q| {
            let induced = induced_action(group, &q.block_map)?;
            Ok((q, induced))
        });
        match child {
            Ok((q, induced)) => node.children.push(QuotientChild {
                subgroup_order: n.order_u128(),
                orbits: k,
                edge: if q.is_normal_cover {
                    QuotientEdge::NormalCover
                } else {
                    QuotientEdge::ValencyDrop
                },
                node: normal_quotient_tree(&q.quotient, &induced, depth - 1, config),
            }),
            Err(e) => {
                node.truncated = Some(e.to_string());
            }
        }
    }
    node
}
