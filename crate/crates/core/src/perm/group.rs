use std::collections::HashSet;
use std::fmt;
use std::ops::ControlFlow;
use std::sync::OnceLock;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::chain::StabChain;
use super::order::FactoredOrder;
use super::permutation::Permutation;
use crate::error::{Error, ParseError, Result};

/// Above this degree the chain is seeded with random sifted elements before
/// the exhaustive Schreier generator pass.
pub const RANDOMIZED_DEGREE: usize = 1000;

/// A permutation group given by generators, with a lazily built stabilizer chain.
///
/// The chain is built at most once; concurrent readers either wait for it or
/// see the finished chain.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain,
        }
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    /// A group from a nonempty list of generators of equal degree.
    pub fn new(generators: Vec<Permutation>) -> Result<Self> {
        let degree = generators.first().ok_or(Error::NoGenerators)?.degree();
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(vec![Permutation::identity(degree)]).expect("identity generator")
    }

    /// Generators plus a chain that is already known to describe them.
    pub(crate) fn with_chain(
        degree: usize,
        generators: Vec<Permutation>,
        chain: StabChain,
    ) -> Self {
        let generators = if generators.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            generators
        };
        let lock = OnceLock::new();
        let _ = lock.set(chain);
        PermGroup {
            degree,
            generators,
            chain: lock,
        }
    }

    /// Subgroup generated by `gens`, which may be empty (the trivial group).
    pub fn generated_by(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        if gens.is_empty() {
            Ok(PermGroup::trivial(degree))
        } else {
            if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
            PermGroup::new(gens)
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Generators with identities removed.
    pub fn nontrivial_generators(&self) -> Vec<Permutation> {
        self.generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect()
    }

    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| self.build_chain(&[]))
    }

    fn build_chain(&self, prefix: &[usize]) -> StabChain {
        if self.degree > RANDOMIZED_DEGREE {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
            let mut chain = StabChain::with_base(self.degree, &[], prefix);
            chain.insert_randomized(&self.nontrivial_generators(), &mut rng, 8);
            chain
        } else {
            StabChain::with_base(self.degree, &self.nontrivial_generators(), prefix)
        }
    }

    /// A chain with the given base prefix (not cached).
    pub fn chain_with_base(&self, prefix: &[usize]) -> StabChain {
        match self.chain.get() {
            Some(c) if c.base().starts_with(prefix) => c.clone(),
            _ => self.build_chain(prefix),
        }
    }

    pub fn order(&self) -> FactoredOrder {
        self.chain()
            .order()
            .expect("group orders handled here fit in u128")
    }

    pub fn order_u128(&self) -> u128 {
        self.chain().order_u128()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(|g| g.is_identity())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.chain().contains(g)
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut orbit = vec![point];
        seen[point] = true;
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit
    }

    /// Orbits on `0..degree`, each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if seen[p] {
                continue;
            }
            let mut orb = self.orbit(p);
            for &x in &orb {
                seen[x] = true;
            }
            orb.sort_unstable();
            out.push(orb);
        }
        out
    }

    /// Orbit index of each point, matching [`PermGroup::orbits`].
    pub fn orbit_map(&self) -> Vec<usize> {
        let mut map = vec![0; self.degree];
        for (k, orb) in self.orbits().iter().enumerate() {
            for &x in orb {
                map[x] = k;
            }
        }
        map
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    /// Point stabilizer, reusing the chain when `point` is in the first basic orbit.
    pub fn stabilizer(&self, point: usize) -> Result<PermGroup> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        let chain = self.chain();
        if chain.depth() == 0 {
            return Ok(PermGroup::trivial(self.degree));
        }
        let b0 = chain.base()[0];
        if b0 == point {
            let tail = chain.tail(1);
            return Ok(PermGroup::with_chain(
                self.degree,
                chain.level_generators(1),
                tail,
            ));
        }
        if chain.orbit_contains(0, point) {
            let u = chain.transversal(0, point);
            let tail = chain.tail(1).conjugate(&u);
            let gens = chain
                .level_generators(1)
                .iter()
                .map(|g| g.conjugate_by(&u))
                .collect();
            return Ok(PermGroup::with_chain(self.degree, gens, tail));
        }
        let fresh = self.build_chain(&[point]);
        let tail = fresh.tail(1);
        Ok(PermGroup::with_chain(
            self.degree,
            fresh.level_generators(1),
            tail,
        ))
    }

    /// Pointwise stabilizer of a sequence of points.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> PermGroup {
        let chain = self.build_chain(points);
        let tail = chain.tail(points.len());
        PermGroup::with_chain(self.degree, chain.level_generators(points.len()), tail)
    }

    /// True iff every point stabilizer is trivial.
    pub fn is_semiregular(&self) -> bool {
        if self.is_trivial() {
            return true;
        }
        // All stabilizers in one orbit are conjugate, so one point per orbit suffices.
        self.orbits().iter().all(|orb| {
            self.stabilizer(orb[0])
                .map(|s| s.order_u128() == 1)
                .unwrap_or(false)
        })
    }

    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.order_u128() == self.degree as u128
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// Equality by order and mutual generator membership.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && self.order_u128() == other.order_u128()
            && self.is_subgroup_of(other)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].commutes_with(&g[j])))
    }

    /// The group generated by this group and `extra`.
    pub fn join(&self, extra: &[Permutation]) -> PermGroup {
        let mut gens = self.nontrivial_generators();
        gens.extend(extra.iter().filter(|g| !g.is_identity()).cloned());
        PermGroup::generated_by(self.degree, gens).expect("same degree")
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Permutation {
        self.chain().random_element(rng)
    }

    /// Visits every element; stops on `Break`.
    pub fn for_each_element<B>(
        &self,
        visit: impl FnMut(&Permutation) -> ControlFlow<B>,
    ) -> Option<B> {
        self.chain().for_each_element(visit)
    }

    /// All elements, if the order is at most `bound`.
    pub fn elements(&self, bound: u128) -> Result<Vec<Permutation>> {
        let order = self.order_u128();
        if order > bound {
            return Err(Error::BoundExceeded {
                what: "element enumeration",
                size: order,
                bound,
            });
        }
        let mut out = Vec::with_capacity(order as usize);
        self.for_each_element(|g| {
            out.push(g.clone());
            ControlFlow::<()>::Continue(())
        });
        Ok(out)
    }

    /// Elements as a hash set, for exhaustive oracles.
    pub fn element_set(&self, bound: u128) -> Result<HashSet<Permutation>> {
        Ok(self.elements(bound)?.into_iter().collect())
    }

    /// Reduces the generating list to a shorter one generating the same group.
    pub fn with_fewer_generators(&self) -> PermGroup {
        let mut chain = StabChain::new(self.degree, &[]);
        let mut kept = Vec::new();
        for g in &self.generators {
            if chain.insert(g) {
                kept.push(g.clone());
            }
        }
        PermGroup::with_chain(self.degree, kept, chain)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GroupJson {
            degree: self.degree,
            generators: self.generators.clone(),
        })
        .expect("group serializes")
    }

    /// Parses `{"degree": n, "generators": [{"degree": n, "images": [...]}, ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: GroupJson = serde_json::from_str(text).map_err(|e| {
            Error::Parse(ParseError::new(e.column().saturating_sub(1), e.to_string()))
        })?;
        if raw.generators.is_empty() {
            return Ok(PermGroup::trivial(raw.degree));
        }
        if let Some(g) = raw.generators.iter().find(|g| g.degree() != raw.degree) {
            return Err(Error::DegreeMismatch(raw.degree, g.degree()));
        }
        PermGroup::new(raw.generators)
    }
}

#[derive(Serialize, Deserialize)]
struct GroupJson {
    degree: usize,
    generators: Vec<Permutation>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, Some(n)).unwrap()
    }

    fn sym(n: usize) -> PermGroup {
        PermGroup::new(vec![
            Permutation::from_cycles(n, &[(0..n).collect()]).unwrap(),
            p("(0 1)", n),
        ])
        .unwrap()
    }

    #[test]
    fn empty_generator_list_rejected() {
        assert_eq!(PermGroup::new(vec![]).unwrap_err(), Error::NoGenerators);
        assert!(PermGroup::trivial(0).is_trivial());
        assert_eq!(PermGroup::trivial(5).order_u128(), 1);
    }

    #[test]
    fn orbits_and_transitivity() {
        let s6 = sym(6);
        assert_eq!(s6.orbits(), vec![vec![0, 1, 2, 3, 4, 5]]);
        let triv = PermGroup::trivial(5);
        assert_eq!(triv.orbits().len(), 5);
        assert!(triv.orbits().iter().all(|o| o.len() == 1));
    }

    #[test]
    fn stabilizers_every_point() {
        let s6 = sym(6);
        for v in 0..6 {
            let st = s6.stabilizer(v).unwrap();
            assert_eq!(st.order_u128(), 120);
            assert!(st.generators().iter().all(|g| g.apply(v) == v));
        }
        let g = PermGroup::new(vec![p("(0 1 2)(3 4)", 6)]).unwrap();
        let st = g.stabilizer(5).unwrap();
        assert_eq!(st.order_u128(), 6);
        assert_eq!(g.stabilizer(0).unwrap().order_u128(), 2);
        assert!(g.stabilizer(9).is_err());
    }

    #[test]
    fn semiregularity() {
        let s6 = sym(6);
        assert!(!s6.is_semiregular());
        let z = PermGroup::new(vec![p("(0 1)(2 3)(4 5)", 6)]).unwrap();
        assert!(z.is_semiregular());
        assert!(!z.is_regular());
    }

    #[test]
    fn group_json_round_trip() {
        let g = sym(4);
        let back = PermGroup::from_json(&g.to_json()).unwrap();
        assert!(back.same_group(&g));
        assert!(
            PermGroup::from_json(r#"{"degree":3,"generators":[{"degree":2,"images":[1,0]}]}"#)
                .is_err()
        );
    }

    #[test]
    fn fewer_generators() {
        let mut gens = sym(5).generators().to_vec();
        gens.push(p("(0 2)", 5));
        gens.push(p("(1 2 3)", 5));
        let g = PermGroup::new(gens).unwrap().with_fewer_generators();
        assert!(g.generators().len() <= 4);
        assert_eq!(g.order_u128(), 120);
    }
}
