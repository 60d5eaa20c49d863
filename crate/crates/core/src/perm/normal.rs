//! Normal-subgroup queries: closures, derived subgroup, cores, minimal normal
//! subgroups, and the small enumeration-based searches built on them.

use std::collections::{HashMap, HashSet};
use std::ops::ControlFlow;

use rand::Rng;

use super::chain::StabChain;
use super::group::PermGroup;
use super::order::is_prime;
use super::permutation::Permutation;
use crate::error::{Error, Result};

/// Result of [`PermGroup::minimal_normal_subgroups`].
#[derive(Clone, Debug)]
pub struct MinimalNormal {
    pub subgroups: Vec<PermGroup>,
    /// True when conjugacy classes were sampled rather than enumerated, so the
    /// list may be incomplete.
    pub sampled: bool,
}

/// Above this many stored image entries (order × degree) classes are sampled.
const ENUMERATION_CELLS: u128 = 60_000_000;

impl PermGroup {
    fn require_member(&self, g: &Permutation) -> Result<()> {
        if g.degree() != self.degree() {
            return Err(Error::DegreeMismatch(self.degree(), g.degree()));
        }
        if !self.contains(g) {
            return Err(Error::NotAMember);
        }
        Ok(())
    }

    fn require_subgroup(&self, h: &PermGroup) -> Result<()> {
        if h.degree() != self.degree() {
            return Err(Error::DegreeMismatch(self.degree(), h.degree()));
        }
        if !h.is_subgroup_of(self) {
            return Err(Error::NotASubgroup);
        }
        Ok(())
    }

    /// True iff `n` is normal in this group; `n` must be a subgroup.
    pub fn is_normal(&self, n: &PermGroup) -> Result<bool> {
        self.require_subgroup(n)?;
        Ok(n.generators().iter().all(|x| {
            self.generators()
                .iter()
                .all(|g| n.contains(&x.conjugate_by(g)))
        }))
    }

    /// Smallest normal subgroup containing `seed`.
    pub fn normal_closure(&self, seed: &Permutation) -> Result<PermGroup> {
        self.normal_closure_of(std::slice::from_ref(seed))
    }

    /// Smallest normal subgroup containing every seed.
    pub fn normal_closure_of(&self, seeds: &[Permutation]) -> Result<PermGroup> {
        for s in seeds {
            self.require_member(s)?;
        }
        let mut chain = StabChain::new(self.degree(), &[]);
        let mut gens: Vec<Permutation> = Vec::new();
        let mut queue: Vec<Permutation> = Vec::new();
        for s in seeds {
            if chain.insert(s) {
                gens.push(s.clone());
                queue.push(s.clone());
            }
        }
        // The generator list ends up closed under conjugation by G's generators.
        while let Some(x) = queue.pop() {
            for g in self.generators() {
                let c = x.conjugate_by(g);
                if chain.insert(&c) {
                    gens.push(c.clone());
                    queue.push(c);
                }
            }
        }
        Ok(PermGroup::with_chain(self.degree(), gens, chain))
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        let g = self.generators();
        let mut comms = Vec::new();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let c = g[i].commutator(&g[j]);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure_of(&comms)
            .expect("commutators of generators are members")
    }

    /// Largest normal subgroup of this group contained in `h`.
    ///
    /// Repeatedly intersects with conjugates by the generators; the fixed
    /// point is normal and contains the core, hence equals it.
    pub fn core(&self, h: &PermGroup, enum_bound: u128) -> Result<PermGroup> {
        self.require_subgroup(h)?;
        let mut k = h.clone();
        loop {
            let mut changed = false;
            for g in self.generators() {
                let gi = g.inverse();
                if k.generators()
                    .iter()
                    .all(|x| k.contains(&x.conjugate_by(g)))
                {
                    continue;
                }
                // K ∩ K^{g}: elements whose conjugate by g⁻¹ stays in K.
                let kept: Vec<Permutation> = k
                    .elements(enum_bound)?
                    .into_iter()
                    .filter(|x| k.contains(&x.conjugate_by(&gi)))
                    .collect();
                k = subgroup_from_elements(self.degree(), kept.iter());
                changed = true;
            }
            if !changed {
                return Ok(k);
            }
        }
    }

    /// Up to `limit` distinct elements of exact order `k`.
    ///
    /// Enumerates when the group order is within `enum_bound`; otherwise
    /// samples `samples` random elements when an rng is supplied.
    pub fn elements_of_order<R: Rng>(
        &self,
        k: u64,
        limit: usize,
        enum_bound: u128,
        fallback: Option<(&mut R, usize)>,
    ) -> Result<Vec<Permutation>> {
        if limit == 0 {
            return Ok(Vec::new());
        }
        if k == 1 {
            return Ok(vec![Permutation::identity(self.degree())]);
        }
        if !self.order_u128().is_multiple_of(k as u128) {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        if self.order_u128() <= enum_bound {
            self.for_each_element(|x| {
                if x.order() == k {
                    out.push(x.clone());
                    if out.len() >= limit {
                        return ControlFlow::Break(());
                    }
                }
                ControlFlow::Continue(())
            });
            return Ok(out);
        }
        let Some((rng, samples)) = fallback else {
            return Err(Error::BoundExceeded {
                what: "element enumeration",
                size: self.order_u128(),
                bound: enum_bound,
            });
        };
        let mut seen = HashSet::new();
        for _ in 0..samples {
            let x = self.random_element(rng);
            let o = x.order();
            if o.is_multiple_of(k) {
                let y = x.pow((o / k) as i64);
                if seen.insert(y.clone()) {
                    out.push(y);
                    if out.len() >= limit {
                        break;
                    }
                }
            }
        }
        Ok(out)
    }

    /// All elements commuting with `x`, by enumeration.
    pub fn centralizer_of_element(&self, x: &Permutation, enum_bound: u128) -> Result<PermGroup> {
        self.require_member(x)?;
        if x.is_identity() {
            return Ok(self.clone());
        }
        if self.generators().iter().all(|g| g.commutes_with(x)) {
            return Ok(self.clone());
        }
        self.subgroup_where(enum_bound, |g| g.commutes_with(x))
    }

    /// Normalizer of a subgroup, by enumeration.
    pub fn normalizer(&self, h: &PermGroup, enum_bound: u128) -> Result<PermGroup> {
        self.require_subgroup(h)?;
        self.subgroup_where(enum_bound, |g| {
            h.generators()
                .iter()
                .all(|x| h.contains(&x.conjugate_by(g)))
        })
    }

    /// The subgroup of elements satisfying `keep`; the predicate must define a subgroup.
    pub fn subgroup_where(
        &self,
        enum_bound: u128,
        mut keep: impl FnMut(&Permutation) -> bool,
    ) -> Result<PermGroup> {
        let order = self.order_u128();
        if order > enum_bound {
            return Err(Error::BoundExceeded {
                what: "element enumeration",
                size: order,
                bound: enum_bound,
            });
        }
        let mut chain = StabChain::new(self.degree(), &[]);
        let mut gens = Vec::new();
        self.for_each_element(|g| {
            if keep(g) && chain.insert(g) {
                gens.push(g.clone());
            }
            ControlFlow::<()>::Continue(())
        });
        Ok(PermGroup::with_chain(self.degree(), gens, chain))
    }

    /// Minimal normal subgroups, as the minimal members among normal closures
    /// of prime-order class representatives.
    ///
    /// Every minimal normal subgroup is the normal closure of each of its
    /// elements of prime order, so the candidates cover them all. Classes are
    /// enumerated by conjugation orbits when the group is small enough;
    /// otherwise `samples` random elements are used and the result is flagged.
    pub fn minimal_normal_subgroups<R: Rng>(
        &self,
        bound: u128,
        rng: &mut R,
        samples: usize,
    ) -> Result<MinimalNormal> {
        let order = self.order_u128();
        if order > bound {
            return Err(Error::BoundExceeded {
                what: "minimal normal subgroup search",
                size: order,
                bound,
            });
        }
        if order == 1 {
            return Ok(MinimalNormal {
                subgroups: Vec::new(),
                sampled: false,
            });
        }
        let exact = order <= 1_000_000 && order * self.degree() as u128 <= ENUMERATION_CELLS;
        let reps = if exact {
            self.prime_order_class_representatives()
        } else {
            // Conjugates share a cycle type, so one element per cycle type
            // stands in for its class; distinct classes with equal cycle
            // types may be missed, which the `sampled` flag already admits.
            let mut reps = Vec::new();
            let mut seen = HashSet::new();
            for _ in 0..samples {
                let x = self.random_element(rng);
                for y in prime_order_powers(&x) {
                    if seen.insert(cycle_type(&y)) {
                        reps.push(y);
                    }
                }
            }
            reps
        };
        let mut closures: Vec<PermGroup> = Vec::new();
        for x in &reps {
            if closures
                .iter()
                .any(|c| c.contains(x) && c.is_minimal_hint())
            {
                continue;
            }
            let c = self.normal_closure(x)?;
            if !closures.iter().any(|d| d.same_group(&c)) {
                closures.push(c);
            }
        }
        let mut minimal: Vec<PermGroup> = Vec::new();
        for (i, c) in closures.iter().enumerate() {
            let has_smaller = closures
                .iter()
                .enumerate()
                .any(|(j, d)| j != i && d.order_u128() < c.order_u128() && d.is_subgroup_of(c));
            if !has_smaller {
                minimal.push(c.clone());
            }
        }
        minimal.sort_by_key(|m| m.order_u128());
        Ok(MinimalNormal {
            subgroups: minimal,
            sampled: !exact,
        })
    }

    fn is_minimal_hint(&self) -> bool {
        // Closures of prime order are necessarily minimal; anything else may
        // still contain a smaller closure, so it never short-circuits a seed.
        self.order_u128() < u64::MAX as u128 && is_prime(self.order_u128() as u64)
    }

    /// One representative per conjugacy class of elements of prime order.
    pub fn prime_order_class_representatives(&self) -> Vec<Permutation> {
        let mut pending: HashSet<Permutation> = HashSet::new();
        let mut ordered = Vec::new();
        self.for_each_element(|x| {
            if is_prime(x.order()) {
                pending.insert(x.clone());
                ordered.push(x.clone());
            }
            ControlFlow::<()>::Continue(())
        });
        let mut reps = Vec::new();
        for x in ordered {
            if !pending.contains(&x) {
                continue;
            }
            // Conjugation orbit of x under the generators.
            let mut stack = vec![x.clone()];
            pending.remove(&x);
            while let Some(y) = stack.pop() {
                for g in self.generators() {
                    let z = y.conjugate_by(g);
                    if pending.remove(&z) {
                        stack.push(z);
                    }
                }
            }
            reps.push(x);
        }
        reps
    }

    /// Histogram of element orders, by enumeration.
    pub fn element_order_histogram(&self, enum_bound: u128) -> Result<HashMap<u64, u64>> {
        let order = self.order_u128();
        if order > enum_bound {
            return Err(Error::BoundExceeded {
                what: "element enumeration",
                size: order,
                bound: enum_bound,
            });
        }
        let mut hist = HashMap::new();
        self.for_each_element(|x| {
            *hist.entry(x.order()).or_insert(0) += 1;
            ControlFlow::<()>::Continue(())
        });
        Ok(hist)
    }
}

/// The distinct prime-order powers `x^(o/p)` for primes `p` dividing `o = |x|`.
fn cycle_type(x: &Permutation) -> Vec<usize> {
    let mut t: Vec<usize> = x.cycles().iter().map(|c| c.len()).collect();
    t.sort_unstable();
    t
}

pub fn prime_order_powers(x: &Permutation) -> Vec<Permutation> {
    let o = x.order();
    super::order::factorize(o)
        .into_iter()
        .map(|(p, _)| x.pow((o / p) as i64))
        .collect()
}

/// The group generated by a set of elements, keeping only generators that grow it.
pub fn subgroup_from_elements<'a>(
    degree: usize,
    elements: impl IntoIterator<Item = &'a Permutation>,
) -> PermGroup {
    let mut chain = StabChain::new(degree, &[]);
    let mut gens = Vec::new();
    for x in elements {
        if chain.insert(x) {
            gens.push(x.clone());
        }
    }
    PermGroup::with_chain(degree, gens, chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

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
    fn closure_of_three_cycle_in_s6() {
        let s6 = sym(6);
        let n = s6.normal_closure(&p("(0 1 2)", 6)).unwrap();
        assert_eq!(n.order_u128(), 360);
        assert!(s6.is_normal(&n).unwrap());
        assert_eq!(
            s6.normal_closure(&Permutation::identity(6))
                .unwrap()
                .order_u128(),
            1
        );
    }

    #[test]
    fn non_member_seed_rejected() {
        let g = PermGroup::new(vec![p("(0 1 2)", 4)]).unwrap();
        assert_eq!(
            g.normal_closure(&p("(0 1)", 4)).unwrap_err(),
            Error::NotAMember
        );
        let h = PermGroup::new(vec![p("(2 3)", 4)]).unwrap();
        assert_eq!(g.is_normal(&h).unwrap_err(), Error::NotASubgroup);
    }

    #[test]
    fn derived_subgroups() {
        assert_eq!(sym(6).derived_subgroup().order_u128(), 360);
        let z = PermGroup::new(vec![p("(0 1 2 3 4)", 5)]).unwrap();
        assert_eq!(z.derived_subgroup().order_u128(), 1);
    }

    #[test]
    fn point_stabilizer_not_normal() {
        let s6 = sym(6);
        let st = s6.stabilizer(0).unwrap();
        assert!(!s6.is_normal(&st).unwrap());
    }

    #[test]
    fn minimal_normal_of_s6_and_s4() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let m = sym(6)
            .minimal_normal_subgroups(1 << 30, &mut rng, 0)
            .unwrap();
        assert!(!m.sampled);
        assert_eq!(m.subgroups.len(), 1);
        assert_eq!(m.subgroups[0].order_u128(), 360);
        let m = sym(4)
            .minimal_normal_subgroups(1 << 30, &mut rng, 0)
            .unwrap();
        assert_eq!(m.subgroups.len(), 1);
        assert_eq!(m.subgroups[0].order_u128(), 4);
    }

    #[test]
    fn core_of_stabilizer_in_s4() {
        let s4 = sym(4);
        let st = s4.stabilizer(0).unwrap();
        assert_eq!(s4.core(&st, 1 << 20).unwrap().order_u128(), 1);
        assert_eq!(s4.core(&s4, 1 << 20).unwrap().order_u128(), 24);
    }

    #[test]
    fn order_four_elements_of_a6() {
        let a6 = PermGroup::new(vec![p("(0 1 2)", 6), p("(1 2 3 4 5)", 6)]).unwrap();
        assert_eq!(a6.order_u128(), 360);
        let four = a6
            .elements_of_order::<ChaCha8Rng>(4, 1000, 1 << 20, None)
            .unwrap();
        assert_eq!(four.len(), 90);
        assert!(four.iter().all(|x| x.order() == 4));
        let none = a6
            .elements_of_order::<ChaCha8Rng>(7, 10, 1 << 20, None)
            .unwrap();
        assert!(none.is_empty());
    }
}
