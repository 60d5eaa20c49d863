//! Checks of the stabiliser taxonomy and of the normal-quotient property.

use serde::Serialize;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::quotient::{induced_action, quotient};
use crate::graph::Graph;
use crate::perm::PermGroup;
use crate::symmetry::{
    admissible_orders, is_arc_transitive, s_transitivity, stabilizer_profile, StabilizerProfile,
    ARC_ORBIT_LIMIT, MAX_S, STABILIZER_BOUND,
};

#[derive(Clone, Debug, Serialize)]
pub struct TaxonomyCheck {
    pub s: u32,
    pub s_exact: bool,
    pub stabilizer: StabilizerProfile,
    pub divides_bound: bool,
    /// The stabiliser order is one of those listed for this `s`.
    pub admissible: bool,
    pub pass: bool,
}

fn require_pentavalent(graph: &Graph) -> Result<()> {
    if graph.valency() != Some(5) {
        return Err(Error::Precondition("graph is not pentavalent".into()));
    }
    Ok(())
}

/// `s ≤ 5`, `|G_v|` divides `2^9·3^2·5`, and `(s, |G_v|)` is a listed pair.
pub fn check_stabilizer_taxonomy(
    graph: &Graph,
    g: &PermGroup,
    config: &Config,
) -> Result<TaxonomyCheck> {
    require_pentavalent(graph)?;
    let st = s_transitivity(graph, g, ARC_ORBIT_LIMIT)?;
    let stabilizer = stabilizer_profile(graph, g, 0, Some(st.s), config)?;
    let divides_bound = STABILIZER_BOUND.is_multiple_of(stabilizer.order);
    let admissible = admissible_orders(st.s).contains(&stabilizer.order);
    let pass = st.s <= MAX_S
        && divides_bound
        && admissible
        && !stabilizer.matched_types.is_empty()
        && g.order_u128() == graph.vertex_count() as u128 * stabilizer.order;
    Ok(TaxonomyCheck {
        s: st.s,
        s_exact: st.exact,
        stabilizer,
        divides_bound,
        admissible,
        pass,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalQuotientCheck {
    pub orbits: usize,
    pub semiregular: bool,
    pub quotient_vertices: usize,
    pub quotient_connected: bool,
    pub quotient_pentavalent: bool,
    pub quotient_arc_transitive: bool,
    pub is_normal_cover: bool,
    pub pass: bool,
}

/// For `n ⊴ g` with at least three orbits: `n` is semiregular and the
/// quotient is connected, pentavalent and arc-transitive under `g/n`.
pub fn check_normal_quotient(
    graph: &Graph,
    g: &PermGroup,
    n: &PermGroup,
) -> Result<NormalQuotientCheck> {
    require_pentavalent(graph)?;
    if !is_arc_transitive(graph, g)? {
        return Err(Error::NotArcTransitive);
    }
    if !g.is_normal(n)? {
        return Err(Error::Precondition("subgroup is not normal".into()));
    }
    let orbits = n.orbits().len();
    if orbits < 3 {
        return Err(Error::Precondition(format!(
            "normal subgroup has {orbits} orbits, fewer than three"
        )));
    }
    let q = quotient(graph, n)?;
    let induced = induced_action(g, &q.block_map)?;
    let semiregular = n.is_semiregular();
    let quotient_connected = q.quotient.is_connected();
    let quotient_pentavalent = q.quotient.valency() == Some(5);
    let quotient_arc_transitive = is_arc_transitive(&q.quotient, &induced)?;
    Ok(NormalQuotientCheck {
        orbits,
        semiregular,
        quotient_vertices: q.quotient.vertex_count(),
        quotient_connected,
        quotient_pentavalent,
        quotient_arc_transitive,
        is_normal_cover: q.is_normal_cover,
        pass: semiregular && quotient_connected && quotient_pentavalent && quotient_arc_transitive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::symmetric;

    #[test]
    fn k6_taxonomy() {
        let c = check_stabilizer_taxonomy(&Graph::complete(6), &symmetric(6), &Config::default())
            .unwrap();
        assert_eq!(c.s, 2);
        assert_eq!(c.stabilizer.order, 120);
        assert!(c.pass);
    }

    #[test]
    fn non_pentavalent_rejected() {
        let c5 = Graph::complete(5);
        assert!(matches!(
            check_stabilizer_taxonomy(&c5, &symmetric(5), &Config::default()),
            Err(Error::Precondition(_))
        ));
    }
}
