//! Graph isomorphism by backtracking over vertex invariants.
//!
//! Deliberately independent of the refinement code in `symmetry`, so the two
//! can check each other.

use std::collections::HashMap;

use super::adjacency::Graph;
use crate::error::{Error, Result};

pub const ISO_MAX_VERTICES: usize = 200;

/// Per-vertex invariant: degree, sorted neighbour degrees, triangle count and
/// the number of vertices at each distance.
fn invariants(g: &Graph) -> Vec<(usize, Vec<usize>, usize, Vec<usize>)> {
    (0..g.vertex_count())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&u| g.degree(u)).collect();
            nd.sort_unstable();
            let nbrs = g.neighbors(v);
            let mut triangles = 0;
            for (i, &a) in nbrs.iter().enumerate() {
                for &b in &nbrs[i + 1..] {
                    if g.adjacent(a, b) {
                        triangles += 1;
                    }
                }
            }
            let mut profile = Vec::new();
            for d in g.distances_from(v) {
                let d = if d == usize::MAX { 0 } else { d + 1 };
                if profile.len() <= d {
                    profile.resize(d + 1, 0);
                }
                profile[d] += 1;
            }
            (g.degree(v), nd, triangles, profile)
        })
        .collect()
}

/// True iff some bijection maps the edges of `a` onto the edges of `b`.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(find_isomorphism(a, b)?.is_some())
}

/// An isomorphism `a → b` as a vertex map, if one exists.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Result<Option<Vec<usize>>> {
    let n = a.vertex_count();
    for g in [a, b] {
        if g.vertex_count() > ISO_MAX_VERTICES {
            return Err(Error::BoundExceeded {
                what: "isomorphism test",
                size: g.vertex_count() as u128,
                bound: ISO_MAX_VERTICES as u128,
            });
        }
    }
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let ia = invariants(a);
    let ib = invariants(b);
    let mut classes: HashMap<&_, usize> = HashMap::new();
    for x in &ia {
        let next = classes.len();
        classes.entry(x).or_insert(next);
    }
    let class_a: Vec<usize> = ia.iter().map(|x| classes[x]).collect();
    let mut class_b = Vec::with_capacity(n);
    for x in &ib {
        match classes.get(x) {
            Some(&c) => class_b.push(c),
            None => return Ok(None),
        }
    }
    let mut count = vec![0i64; classes.len()];
    for (&ca, &cb) in class_a.iter().zip(&class_b) {
        count[ca] += 1;
        count[cb] -= 1;
    }
    if count.iter().any(|&c| c != 0) {
        return Ok(None);
    }

    // Map vertices of `a` in BFS order, so later vertices usually have an
    // already-mapped neighbour whose image restricts the candidates.
    let mut order = Vec::with_capacity(n);
    let mut anchor = vec![None; n];
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let start = order.len();
        order.push(s);
        let mut k = start;
        while k < order.len() {
            let v = order[k];
            for &u in a.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    anchor[u] = Some(v);
                    order.push(u);
                }
            }
            k += 1;
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut search = Search {
        a,
        b,
        class_a: &class_a,
        class_b: &class_b,
        order: &order,
        anchor: &anchor,
        map: &mut map,
        used: &mut used,
    };
    Ok(search.extend(0).then_some(map))
}

struct Search<'a> {
    a: &'a Graph,
    b: &'a Graph,
    class_a: &'a [usize],
    class_b: &'a [usize],
    order: &'a [usize],
    anchor: &'a [Option<usize>],
    map: &'a mut Vec<usize>,
    used: &'a mut Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let candidates: Vec<usize> = match self.anchor[v] {
            Some(p) => self.b.neighbors(self.map[p]).to_vec(),
            None => (0..self.b.vertex_count()).collect(),
        };
        for w in candidates {
            if self.used[w] || self.class_b[w] != self.class_a[v] || !self.consistent(depth, v, w) {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[w] = false;
            self.map[v] = usize::MAX;
        }
        false
    }

    fn consistent(&self, depth: usize, v: usize, w: usize) -> bool {
        self.order[..depth]
            .iter()
            .all(|&u| self.a.adjacent(u, v) == self.b.adjacent(self.map[u], w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    #[test]
    fn basics() {
        assert!(is_isomorphic(&Graph::complete(6), &Graph::complete(6)).unwrap());
        assert!(!is_isomorphic(&Graph::complete(6), &Graph::cycle(6)).unwrap());
        assert!(!is_isomorphic(&Graph::cycle(6), &Graph::path(6)).unwrap());
        let two_triangles =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!is_isomorphic(&Graph::cycle(6), &two_triangles).unwrap());
    }

    #[test]
    fn relabelled_petersen() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        let p = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        let sigma = Permutation::parse_cycles("(0 7 3)(1 9)(2 5 8 4)", Some(10)).unwrap();
        let q = p.relabel(&sigma).unwrap();
        let f = find_isomorphism(&p, &q).unwrap().unwrap();
        for (u, v) in p.edges() {
            assert!(q.adjacent(f[u], f[v]));
        }
    }

    #[test]
    fn size_bound() {
        let big = Graph::cycle(201);
        assert!(is_isomorphic(&big, &big).is_err());
    }
}
