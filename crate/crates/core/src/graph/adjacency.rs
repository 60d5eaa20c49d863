//! Simple undirected graphs as sorted adjacency lists, with the JSON and
//! edge-list exchange formats.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::perm::{PermGroup, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    recipe: Option<String>,
    labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    recipe: Option<String>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            recipe: None,
            labels: None,
        }
    }

    /// Builds a graph from an edge list; repeated edges collapse, loops are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::PointOutOfRange {
                        point: x,
                        degree: n,
                    });
                }
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph {
            adj,
            recipe: None,
            labels: None,
        })
    }

    /// Builds a graph from per-vertex neighbour lists, which must be symmetric.
    pub fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Result<Self> {
        let n = adj.len();
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            if list.binary_search(&v).is_ok() {
                return Err(Error::InvalidArgument(format!("loop at vertex {v}")));
            }
            if let Some(&x) = list.iter().find(|&&x| x >= n) {
                return Err(Error::PointOutOfRange {
                    point: x,
                    degree: n,
                });
            }
        }
        let g = Graph {
            adj,
            recipe: None,
            labels: None,
        };
        for u in 0..n {
            for &v in &g.adj[u] {
                if !g.adjacent(v, u) {
                    return Err(Error::InvalidArgument(format!(
                        "adjacency is not symmetric at {u}-{v}"
                    )));
                }
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            .expect("valid edges")
    }

    pub fn cycle(n: usize) -> Self {
        Graph::from_edges(n, (0..n).map(|u| (u, (u + 1) % n))).expect("valid edges")
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|u| (u - 1, u))).expect("valid edges")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
            .expect("valid edges")
    }

    pub fn with_recipe(mut self, recipe: impl Into<String>) -> Self {
        self.recipe = Some(recipe.into());
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.vertex_count());
        self.labels = Some(labels);
        self
    }

    pub fn recipe(&self) -> Option<&str> {
        self.recipe.as_deref()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// The common degree if the graph is regular (`Some(0)` for the empty graph).
    pub fn valency(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    /// Connected components as vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                for &w in &self.adj[comp[i]] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.components().len() == 1
    }

    /// Distances from `s`; unreachable vertices get `usize::MAX`.
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.vertex_count()];
        for s in 0..self.vertex_count() {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True iff `p` maps edges to edges (and so, being a bijection, is an automorphism).
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.degree() == self.vertex_count()
            && self
                .edges()
                .all(|(u, v)| self.adjacent(p.apply(u), p.apply(v)))
    }

    /// True iff every generator of `g` is an automorphism.
    pub fn preserved_by(&self, g: &PermGroup) -> bool {
        g.degree() == self.vertex_count() && g.generators().iter().all(|p| self.is_automorphism(p))
    }

    /// The image graph with vertex `v` renamed `p(v)`.
    pub fn relabel(&self, p: &Permutation) -> Result<Graph> {
        if p.degree() != self.vertex_count() {
            return Err(Error::DegreeMismatch(self.vertex_count(), p.degree()));
        }
        Graph::from_edges(
            self.vertex_count(),
            self.edges().map(|(u, v)| (p.apply(u), p.apply(v))),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson {
            n: self.vertex_count(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
            recipe: self.recipe.clone(),
        })
        .expect("graph serializes")
    }

    /// Parses `{"n": int, "edges": [[u, v], ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: GraphJson = serde_json::from_str(text)
            .map_err(|e| ParseError::new(e.column().saturating_sub(1), e.to_string()))?;
        if raw.n > 1 << 24 {
            return Err(Error::InvalidArgument(format!(
                "vertex count {} too large",
                raw.n
            )));
        }
        let g = Graph::from_edges(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v)))?;
        Ok(match raw.recipe {
            Some(r) => g.with_recipe(r),
            None => g,
        })
    }

    /// One `u v` pair per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").expect("writing to a string");
        }
        out
    }

    /// Parses an edge list; blank lines and `#` comments are ignored. The vertex
    /// count is `n` if given, else one more than the largest vertex mentioned.
    pub fn from_edge_list(text: &str, n: Option<usize>) -> Result<Self> {
        let mut edges = Vec::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let content = line.split('#').next().unwrap_or("");
            let fields: Vec<&str> = content.split_whitespace().collect();
            match fields.as_slice() {
                [] => {}
                [a, b] => {
                    let parse = |s: &str| {
                        s.parse::<usize>()
                            .ok()
                            .filter(|&x| x < 1 << 24)
                            .ok_or_else(|| ParseError::new(offset, format!("bad vertex '{s}'")))
                    };
                    edges.push((parse(a)?, parse(b)?));
                }
                _ => {
                    return Err(ParseError::new(offset, "expected two vertices per line").into());
                }
            }
            offset += line.len();
        }
        let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
        Graph::from_edges(n, edges)
    }
}
