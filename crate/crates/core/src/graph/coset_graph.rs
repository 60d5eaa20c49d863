//! Coset graphs `Cos(G, H, HdH ∪ Hd⁻¹H)`.

use super::adjacency::Graph;
use crate::atlas::CosetSpace;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

#[derive(Clone, Debug)]
pub struct CosetGraph {
    pub graph: Graph,
    /// The action of `G` on the cosets; arc-transitive on the graph.
    pub action: PermGroup,
    /// `|HdH ∪ Hd⁻¹H| / |H|`, the number of neighbours of the base coset.
    pub valency: usize,
}

/// Vertices are the right cosets `Hx` in discovery order (`H` itself is 0);
/// `Hx ~ Hdx` for every `d` in `HdH ∪ Hd⁻¹H`.
pub fn coset_graph(g: &PermGroup, h: &PermGroup, d: &Permutation) -> Result<CosetGraph> {
    let space = CosetSpace::new(g, h)?;
    coset_graph_in(&space, std::slice::from_ref(d))
}

/// The coset graph for the union of the double cosets of every element of `ds`
/// and their inverses.
pub fn coset_graph_in(space: &CosetSpace, ds: &[Permutation]) -> Result<CosetGraph> {
    let h = space.subgroup();
    let mut base = vec![false; space.index()];
    for d in ds {
        if !space.group().contains(d) {
            return Err(Error::NotAMember);
        }
        if h.contains(d) {
            return Err(Error::InvalidArgument(
                "double coset representative lies in the subgroup".into(),
            ));
        }
        for x in [d.clone(), d.inverse()] {
            for c in space.orbit_under(&x, h.generators(), usize::MAX) {
                base[c] = true;
            }
        }
    }
    let base: Vec<usize> = (0..space.index()).filter(|&c| base[c]).collect();
    // Neighbours of Hx·s are the images under s of the neighbours of Hx.
    let action = space.action_generators();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); space.index()];
    adj[0] = base.clone();
    for i in 1..space.index() {
        let (p, k) = space.discovery(i).expect("nonzero coset");
        adj[i] = adj[p].iter().map(|&c| action[k].apply(c)).collect();
    }
    let graph = Graph::from_adjacency(adj)?;
    Ok(CosetGraph {
        valency: base.len(),
        graph,
        action: space.action_group(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::{cyclic, symmetric};

    #[test]
    fn k2_from_z2() {
        let z2 = cyclic(2);
        let h = PermGroup::trivial(2);
        let cg = coset_graph(&z2, &h, &z2.generators()[0]).unwrap();
        assert_eq!(cg.graph.vertex_count(), 2);
        assert_eq!(cg.graph.edge_count(), 1);
    }

    #[test]
    fn complete_graph_from_point_stabilizer() {
        let s5 = symmetric(5);
        let h = s5.stabilizer(0).unwrap();
        let d = Permutation::parse_cycles("(0 1)", Some(5)).unwrap();
        let cg = coset_graph(&s5, &h, &d).unwrap();
        assert_eq!(cg.graph.vertex_count(), 5);
        assert_eq!(cg.graph.valency(), Some(4));
        assert!(cg.graph.preserved_by(&cg.action));
        assert!(coset_graph(
            &s5,
            &h,
            &Permutation::parse_cycles("(1 2)", Some(5)).unwrap()
        )
        .is_err());
    }
}
