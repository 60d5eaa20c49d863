//! Cayley graphs on regular permutation groups.

use std::collections::HashSet;

use super::adjacency::Graph;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

#[derive(Clone, Debug)]
pub struct CayleyGraph {
    pub graph: Graph,
    /// False when the connection set does not generate the group.
    pub connected: bool,
}

/// `Cay(G, S)` with `x ~ sx`, for `G` acting regularly on its points.
///
/// Vertex `v` is the unique element sending point 0 to `v`. The group's own
/// permutations then act on the vertices by right multiplication, which
/// preserves `x ~ sx`.
pub fn cayley(g: &PermGroup, s: &[Permutation]) -> Result<CayleyGraph> {
    if !g.is_regular() {
        return Err(Error::Precondition(
            "Cayley graphs need a regular permutation group".into(),
        ));
    }
    let set: HashSet<&Permutation> = s.iter().collect();
    for x in s {
        if x.degree() != g.degree() {
            return Err(Error::DegreeMismatch(g.degree(), x.degree()));
        }
        if !g.contains(x) {
            return Err(Error::NotAMember);
        }
        if x.is_identity() {
            return Err(Error::InvalidArgument("identity in connection set".into()));
        }
        if !set.contains(&x.inverse()) {
            return Err(Error::InvalidArgument(format!(
                "connection set is not closed under inverses: {x}"
            )));
        }
    }
    let n = g.degree();
    let chain = g.chain_with_base(&[0]);
    let points: Vec<usize> = set.iter().map(|x| x.apply(0)).collect();
    let adj = (0..n)
        .map(|v| {
            let rho = chain.transversal(0, v);
            points.iter().map(|&p| rho.apply(p)).collect()
        })
        .collect();
    let graph = Graph::from_adjacency(adj)?;
    let connected = graph.is_connected();
    Ok(CayleyGraph { graph, connected })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::{cyclic, elementary_abelian_2};

    #[test]
    fn hypercube() {
        let g = elementary_abelian_2(3);
        let c = cayley(&g, g.generators()).unwrap();
        assert!(c.connected);
        assert_eq!(c.graph.valency(), Some(3));
        assert!(c.graph.is_bipartite());
        assert!(c.graph.preserved_by(&g));
    }

    #[test]
    fn cycle_from_cyclic_group() {
        let z = cyclic(7);
        let a = z.generators()[0].clone();
        let c = cayley(&z, &[a.clone(), a.inverse()]).unwrap();
        assert_eq!(c.graph.valency(), Some(2));
        assert!(c.connected);
        assert!(cayley(&z, std::slice::from_ref(&a)).is_err());
        assert!(cayley(&z, &[Permutation::identity(7)]).is_err());
        let c = cayley(&cyclic(8), &[]).unwrap();
        assert!(!c.connected);
    }
}
