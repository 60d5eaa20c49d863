//! Full automorphism groups by individualisation and refinement.
//!
//! Colours are positions: a vertex's colour is the number of vertices in
//! strictly earlier cells, so equal cell-size sequences mean equal colours on
//! singletons. The first path down the search tree fixes a base; then, level
//! by level from the bottom, every vertex of the target cell outside the
//! current base-point orbit is tried as an image of the base point.

use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::{PermGroup, Permutation};

/// One refined node of the search tree.
#[derive(Clone, Debug)]
struct Node {
    colors: Vec<usize>,
    /// Colour of the target cell, or `None` when the colouring is discrete.
    target: Option<usize>,
}

struct Refiner<'a> {
    graph: &'a Graph,
}

impl Refiner<'_> {
    /// Equitable refinement: split cells by the multiset of neighbour colours
    /// until nothing changes.
    fn refine(&self, colors: &mut [usize]) {
        let n = colors.len();
        let mut distinct = count_distinct(colors);
        let mut keys: Vec<(usize, Vec<usize>, usize)> = Vec::with_capacity(n);
        loop {
            keys.clear();
            for v in 0..n {
                let mut nc: Vec<usize> =
                    self.graph.neighbors(v).iter().map(|&u| colors[u]).collect();
                nc.sort_unstable();
                keys.push((colors[v], nc, v));
            }
            keys.sort_unstable();
            let mut start = 0;
            for k in 0..n {
                if k > 0 && (keys[k].0 != keys[k - 1].0 || keys[k].1 != keys[k - 1].1) {
                    start = k;
                }
                colors[keys[k].2] = start;
            }
            let now = count_distinct(colors);
            if now == distinct {
                return;
            }
            distinct = now;
        }
    }

    fn node(&self, mut colors: Vec<usize>) -> Node {
        self.refine(&mut colors);
        let target = target_cell(&colors);
        Node { colors, target }
    }

    fn individualize(&self, node: &Node, v: usize) -> Node {
        let c = node.colors[v];
        let colors = node
            .colors
            .iter()
            .enumerate()
            .map(|(u, &cu)| if cu == c && u != v { c + 1 } else { cu })
            .collect();
        self.node(colors)
    }
}

fn count_distinct(colors: &[usize]) -> usize {
    let mut seen = vec![false; colors.len()];
    colors
        .iter()
        .filter(|&&c| !std::mem::replace(&mut seen[c], true))
        .count()
}

/// First smallest non-singleton cell.
fn target_cell(colors: &[usize]) -> Option<usize> {
    let mut size = vec![0usize; colors.len()];
    for &c in colors {
        size[c] += 1;
    }
    (0..colors.len())
        .filter(|&c| size[c] > 1)
        .min_by_key(|&c| (size[c], c))
}

fn cell(colors: &[usize], c: usize) -> Vec<usize> {
    (0..colors.len()).filter(|&v| colors[v] == c).collect()
}

/// Sorted colours; equal for two nodes iff their cell-size sequences agree.
fn trace(colors: &[usize]) -> Vec<usize> {
    let mut t = colors.to_vec();
    t.sort_unstable();
    t
}

/// Generators of `Aut(graph)`, with a stabiliser chain along the search base.
pub fn automorphism_group(graph: &Graph, config: &Config) -> Result<PermGroup> {
    let n = graph.vertex_count();
    if n > config.ir_max_vertices {
        return Err(Error::BoundExceeded {
            what: "automorphism search",
            size: n as u128,
            bound: config.ir_max_vertices as u128,
        });
    }
    if n <= 1 {
        return Ok(PermGroup::trivial(n.max(1)));
    }
    let refiner = Refiner { graph };
    let mut degrees: Vec<usize> = (0..n).map(|v| graph.degree(v)).collect();
    // Position colours from degrees.
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| degrees[v]);
    let mut start = 0;
    let mut colors = vec![0; n];
    for k in 0..n {
        if k > 0 && degrees[by_degree[k]] != degrees[by_degree[k - 1]] {
            start = k;
        }
        colors[by_degree[k]] = start;
    }
    degrees.clear();

    let mut path = vec![refiner.node(colors)];
    let mut base = Vec::new();
    while let Some(c) = path.last().unwrap().target {
        let v = cell(&path.last().unwrap().colors, c)[0];
        base.push(v);
        let next = refiner.individualize(path.last().unwrap(), v);
        path.push(next);
    }
    let traces: Vec<Vec<usize>> = path.iter().map(|node| trace(&node.colors)).collect();
    let leaf = &path.last().unwrap().colors;

    let mut gens: Vec<Permutation> = Vec::new();
    let mut expected: u128 = 1;
    for level in (0..base.len()).rev() {
        let node = &path[level];
        let candidates = cell(&node.colors, node.target.expect("not a leaf"));
        let mut orbit = orbit_of(base[level], &gens, n);
        for &w in &candidates {
            if orbit[w] {
                continue;
            }
            let search = Search {
                refiner: &refiner,
                traces: &traces,
                leaf,
                fixed: &base[..level],
            };
            if let Some(gamma) = search.find(node, w, level) {
                gens.push(gamma);
                orbit = orbit_of(base[level], &gens, n);
            }
        }
        expected = expected
            .checked_mul(orbit.iter().filter(|&&b| b).count() as u128)
            .ok_or(Error::OrderOverflow)?;
    }
    let group = PermGroup::generated_by(n, gens)?;
    let group = PermGroup::with_chain(n, group.generators().to_vec(), group.chain_with_base(&base));
    if group.order_u128() != expected {
        return Err(Error::Precondition(format!(
            "automorphism search inconsistent: orbit product {expected}, group order {}",
            group.order_u128()
        )));
    }
    Ok(group)
}

fn orbit_of(point: usize, gens: &[Permutation], n: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[point] = true;
    let mut stack = vec![point];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

struct Search<'a> {
    refiner: &'a Refiner<'a>,
    traces: &'a [Vec<usize>],
    leaf: &'a [usize],
    fixed: &'a [usize],
}

impl Search<'_> {
    /// An automorphism fixing `fixed` whose leaf lies below `node` with `w` individualised.
    fn find(&self, node: &Node, w: usize, level: usize) -> Option<Permutation> {
        let child = self.refiner.individualize(node, w);
        if trace(&child.colors) != self.traces[level + 1] {
            return None;
        }
        match child.target {
            None => self.leaf_map(&child.colors),
            Some(c) => {
                if level + 1 >= self.traces.len() - 1 {
                    return None;
                }
                cell(&child.colors, c)
                    .into_iter()
                    .find_map(|u| self.find(&child, u, level + 1))
            }
        }
    }

    fn leaf_map(&self, colors: &[usize]) -> Option<Permutation> {
        let n = colors.len();
        let mut at = vec![0; n];
        for (v, &c) in colors.iter().enumerate() {
            at[c] = v;
        }
        let images: Vec<usize> = (0..n).map(|v| at[self.leaf[v]]).collect();
        let gamma = Permutation::from_images(images).ok()?;
        let ok = self.fixed.iter().all(|&b| gamma.apply(b) == b)
            && self.refiner.graph.is_automorphism(&gamma);
        ok.then_some(gamma)
    }
}

/// True iff every generator of `g` preserves adjacency.
pub fn verify_automorphisms(graph: &Graph, g: &PermGroup) -> Result<bool> {
    if g.degree() != graph.vertex_count() {
        return Err(Error::DegreeMismatch(graph.vertex_count(), g.degree()));
    }
    Ok(graph.preserved_by(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aut_order(g: &Graph) -> u128 {
        automorphism_group(g, &Config::default())
            .unwrap()
            .order_u128()
    }

    #[test]
    fn small_families() {
        assert_eq!(aut_order(&Graph::complete(6)), 720);
        assert_eq!(aut_order(&Graph::cycle(7)), 14);
        assert_eq!(aut_order(&Graph::path(5)), 2);
        assert_eq!(aut_order(&Graph::complete_bipartite(5, 5)), 28800);
        assert_eq!(aut_order(&Graph::empty(4)), 24);
    }

    #[test]
    fn petersen() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        let p = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        let aut = automorphism_group(&p, &Config::default()).unwrap();
        assert_eq!(aut.order_u128(), 120);
        assert!(verify_automorphisms(&p, &aut).unwrap());
    }

    #[test]
    fn bound_enforced() {
        let config = Config {
            ir_max_vertices: 5,
            ..Config::default()
        };
        assert!(automorphism_group(&Graph::cycle(6), &config).is_err());
    }
}
