//! Normal quotients and standard double covers.

use std::collections::BTreeSet;

use serde::Serialize;

use super::adjacency::Graph;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

#[derive(Clone, Debug)]
pub struct QuotientResult {
    pub quotient: Graph,
    /// Block (orbit) index of each vertex, blocks ordered by least vertex.
    pub block_map: Vec<usize>,
    /// True iff each vertex has as many neighbouring blocks as neighbours.
    pub is_normal_cover: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuotientEdge {
    NormalCover,
    ValencyDrop,
}

/// The quotient of `graph` by the orbits of `n`.
///
/// Fails if `n` does not act by automorphisms or has at most two orbits.
pub fn quotient(graph: &Graph, n: &PermGroup) -> Result<QuotientResult> {
    if n.degree() != graph.vertex_count() {
        return Err(Error::DegreeMismatch(graph.vertex_count(), n.degree()));
    }
    if !graph.preserved_by(n) {
        return Err(Error::NotAutomorphisms);
    }
    let block_map = n.orbit_map();
    let blocks = block_map.iter().max().map_or(0, |&b| b + 1);
    if blocks <= 2 {
        return Err(Error::Precondition(format!(
            "quotient by a group with {blocks} orbits is degenerate"
        )));
    }
    Ok(quotient_by_blocks(graph, block_map))
}

/// Quotient by an arbitrary vertex partition given as a block map.
pub fn quotient_by_blocks(graph: &Graph, block_map: Vec<usize>) -> QuotientResult {
    let blocks = block_map.iter().max().map_or(0, |&b| b + 1);
    let edges: BTreeSet<(usize, usize)> = graph
        .edges()
        .map(|(u, v)| (block_map[u], block_map[v]))
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    let quotient = Graph::from_edges(blocks, edges).expect("block indices in range");
    let is_normal_cover =
        (0..graph.vertex_count()).all(|v| quotient.degree(block_map[v]) == graph.degree(v));
    QuotientResult {
        quotient,
        block_map,
        is_normal_cover,
    }
}

/// The action induced by `g` on the blocks, if the blocks form a system of imprimitivity.
pub fn induced_action(g: &PermGroup, block_map: &[usize]) -> Result<PermGroup> {
    let blocks = block_map.iter().max().map_or(0, |&b| b + 1);
    let mut gens = Vec::new();
    for p in g.generators() {
        let mut images = vec![usize::MAX; blocks];
        for (v, &b) in block_map.iter().enumerate() {
            let image = block_map[p.apply(v)];
            if images[b] == usize::MAX {
                images[b] = image;
            } else if images[b] != image {
                return Err(Error::Precondition("blocks are not preserved".into()));
            }
        }
        gens.push(Permutation::from_images(images)?);
    }
    PermGroup::generated_by(blocks, gens)
}

#[derive(Clone, Debug)]
pub struct DoubleCover {
    pub graph: Graph,
    /// Set when the source is bipartite, so the cover splits into two copies.
    pub disconnected: bool,
}

/// Standard double cover: `(u, i) ~ (v, 1 - i)` for each edge `uv`;
/// vertex `(u, i)` is numbered `u + n·i`.
pub fn double_cover(graph: &Graph) -> DoubleCover {
    let n = graph.vertex_count();
    let g = Graph::from_edges(
        2 * n,
        graph.edges().flat_map(|(u, v)| [(u, v + n), (v, u + n)]),
    )
    .expect("valid edges");
    let disconnected = !g.is_connected();
    DoubleCover {
        graph: g,
        disconnected,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon_by_half_turn() {
        let c6 = Graph::cycle(6);
        let half = PermGroup::new(vec![
            Permutation::parse_cycles("(0 3)(1 4)(2 5)", Some(6)).unwrap()
        ])
        .unwrap();
        let q = quotient(&c6, &half).unwrap();
        assert_eq!(q.quotient.vertex_count(), 3);
        assert!(q.is_normal_cover);
        assert_eq!(q.block_map, vec![0, 1, 2, 0, 1, 2]);
    }

    #[test]
    fn trivial_group_gives_same_graph() {
        let k5 = Graph::complete(5);
        let q = quotient(&k5, &PermGroup::trivial(5)).unwrap();
        assert_eq!(q.quotient, k5);
        assert!(q.is_normal_cover);
    }

    #[test]
    fn degenerate_and_invalid() {
        let c6 = Graph::cycle(6);
        let rot = PermGroup::new(vec![
            Permutation::parse_cycles("(0 2 4)(1 3 5)", Some(6)).unwrap()
        ])
        .unwrap();
        assert!(matches!(quotient(&c6, &rot), Err(Error::Precondition(_))));
        let bad =
            PermGroup::new(vec![Permutation::parse_cycles("(0 1)", Some(6)).unwrap()]).unwrap();
        assert_eq!(quotient(&c6, &bad).unwrap_err(), Error::NotAutomorphisms);
    }

    #[test]
    fn double_covers() {
        let dc = double_cover(&Graph::cycle(5));
        assert!(!dc.disconnected);
        assert_eq!(dc.graph.vertex_count(), 10);
        assert_eq!(dc.graph.components().len(), 1);
        let dc = double_cover(&Graph::cycle(6));
        assert!(dc.disconnected);
        assert_eq!(dc.graph.components().len(), 2);
    }
}
