//! Arc-transitivity and s-arc transitivity.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::PermGroup;

/// Largest `s` measured; no pentavalent graph is 6-arc-transitive.
pub const MAX_S: u32 = 5;

/// Default cap on the number of s-arcs held in one orbit computation.
pub const ARC_ORBIT_LIMIT: usize = 4_000_000;

/// True iff `g` is transitive on the arcs of `graph`.
pub fn is_arc_transitive(graph: &Graph, g: &PermGroup) -> Result<bool> {
    if g.degree() != graph.vertex_count() {
        return Err(Error::DegreeMismatch(graph.vertex_count(), g.degree()));
    }
    if !graph.preserved_by(g) {
        return Err(Error::NotAutomorphisms);
    }
    let arcs = 2 * graph.edge_count();
    if arcs == 0 {
        return Ok(false);
    }
    Ok(s_arc_orbit(graph, g, 1, arcs).map(|o| o == arcs) == Some(true))
}

/// Number of s-arcs of `graph`: walks `v0 … vs` with `v(i-1) ≠ v(i+1)`.
pub fn s_arc_count(graph: &Graph, s: u32) -> u128 {
    let n = graph.vertex_count();
    if s == 0 {
        return n as u128;
    }
    let mut ways: Vec<Vec<u128>> = (0..n).map(|v| vec![1; graph.degree(v)]).collect();
    // ways[v][i]: number of ways to extend the arc (v, adj[v][i]) by s-1 steps.
    for _ in 1..s {
        let next = (0..n)
            .map(|v| {
                graph
                    .neighbors(v)
                    .iter()
                    .map(|&u| {
                        graph
                            .neighbors(u)
                            .iter()
                            .enumerate()
                            .filter(|&(_, &x)| x != v)
                            .map(|(j, _)| ways[u][j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        ways = next;
    }
    ways.iter().flatten().sum()
}

/// Size of the orbit of the lexicographically first s-arc, or `None` once it
/// exceeds `limit`.
fn s_arc_orbit(graph: &Graph, g: &PermGroup, s: u32, limit: usize) -> Option<usize> {
    let seed = first_s_arc(graph, s)?;
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    seen.insert(seed.clone());
    let mut queue = vec![seed];
    while let Some(arc) = queue.pop() {
        for p in g.generators() {
            let image: Vec<u32> = arc.iter().map(|&v| p.apply(v as usize) as u32).collect();
            if !seen.contains(&image) {
                if seen.len() >= limit {
                    return None;
                }
                seen.insert(image.clone());
                queue.push(image);
            }
        }
    }
    Some(seen.len())
}

fn first_s_arc(graph: &Graph, s: u32) -> Option<Vec<u32>> {
    let mut arc = vec![0u32];
    for i in 0..s as usize {
        let v = arc[i] as usize;
        let prev = (i > 0).then(|| arc[i - 1] as usize);
        let next = graph.neighbors(v).iter().find(|&&u| Some(u) != prev)?;
        arc.push(*next as u32);
    }
    Some(arc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct STransitivity {
    pub s: u32,
    /// False when an orbit hit the size cap, so only `s` itself is certified.
    pub exact: bool,
}

/// The largest `s ≤ MAX_S` such that `g` is transitive on s-arcs.
///
/// Requires `g` to act by automorphisms and, for a meaningful answer,
/// a connected vertex-transitive graph.
pub fn s_transitivity(graph: &Graph, g: &PermGroup, limit: usize) -> Result<STransitivity> {
    if !is_arc_transitive(graph, g)? {
        return Err(Error::NotArcTransitive);
    }
    let order = g.order_u128();
    let mut s = 1;
    while s < MAX_S {
        let count = s_arc_count(graph, s + 1);
        if count == 0 || count > order {
            return Ok(STransitivity { s, exact: true });
        }
        match s_arc_orbit(graph, g, s + 1, limit) {
            Some(size) if size as u128 == count => s += 1,
            Some(_) => return Ok(STransitivity { s, exact: true }),
            None => return Ok(STransitivity { s, exact: false }),
        }
    }
    Ok(STransitivity { s, exact: true })
}

/// `s_transitivity` with the default orbit cap.
pub fn s_transitivity_degree(graph: &Graph, g: &PermGroup) -> Result<u32> {
    Ok(s_transitivity(graph, g, ARC_ORBIT_LIMIT)?.s)
}
