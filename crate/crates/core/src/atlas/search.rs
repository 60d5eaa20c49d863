//! Searches for the subgroups and double-coset representatives used by the
//! coset-graph constructions. Every result is re-verified before it is returned.

use std::ops::ControlFlow;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::coset::CosetSpace;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::perm::{factorize, PermGroup, Permutation};

/// Subgroup shapes that [`find_subgroup`] can look for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SubgroupSpec {
    /// `⟨x, y⟩` with `|x| = 2`, `|y| = 3`, `|xy| = 5`; such a pair always generates A5.
    A5,
    /// Dihedral group of order `2k`: `⟨r, s⟩` with `|r| = k`, `|s| = 2`, `r^s = r⁻¹`.
    Dihedral(u64),
    /// Normalizer of a Sylow `p`-subgroup.
    SylowNormalizer(u64),
}

const RANDOM_ATTEMPTS: usize = 20_000;

/// Finds a subgroup of `g` of the requested shape.
pub fn find_subgroup(g: &PermGroup, spec: SubgroupSpec, config: &Config) -> Result<PermGroup> {
    let mut rng = config.rng();
    let found = match spec {
        SubgroupSpec::A5 => find_a5(g, &mut rng, config)?,
        SubgroupSpec::Dihedral(k) => find_dihedral(g, k, &mut rng, config)?,
        SubgroupSpec::SylowNormalizer(p) => sylow_normalizer(g, p, config)?,
    };
    verify_spec(g, &found, spec)?;
    Ok(found)
}

fn verify_spec(g: &PermGroup, h: &PermGroup, spec: SubgroupSpec) -> Result<()> {
    let fail = |what: &str| {
        Err(Error::Precondition(format!(
            "search result fails check: {what}"
        )))
    };
    if !h.is_subgroup_of(g) {
        return fail("not a subgroup");
    }
    match spec {
        SubgroupSpec::A5 => {
            let gens = h.generators();
            if gens.len() != 2
                || gens[0].order() != 2
                || gens[1].order() != 3
                || gens[0].then(&gens[1]).order() != 5
                || h.order_u128() != 60
            {
                return fail("A5 relations");
            }
        }
        SubgroupSpec::Dihedral(k) => {
            let gens = h.generators();
            if gens.len() != 2
                || gens[0].order() != k
                || gens[1].order() != 2
                || gens[0].conjugate_by(&gens[1]) != gens[0].inverse()
                || h.order_u128() != 2 * k as u128
            {
                return fail("dihedral relations");
            }
        }
        SubgroupSpec::SylowNormalizer(_) => {}
    }
    Ok(())
}

/// A random element of order exactly `k`, as a power of a random element.
fn random_of_order<R: Rng>(g: &PermGroup, k: u64, rng: &mut R) -> Option<Permutation> {
    let x = g.random_element(rng);
    let o = x.order();
    o.is_multiple_of(k).then(|| x.pow((o / k) as i64))
}

fn find_a5<R: Rng>(g: &PermGroup, rng: &mut R, config: &Config) -> Result<PermGroup> {
    if g.order_u128().is_multiple_of(60) {
        let mut x = None;
        for _ in 0..RANDOM_ATTEMPTS {
            if x.is_none() {
                x = random_of_order(g, 2, rng);
                continue;
            }
            let Some(y) = random_of_order(g, 3, rng) else {
                continue;
            };
            let xv = x.as_ref().expect("set above");
            if xv.then(&y).order() == 5 {
                let h = PermGroup::new(vec![xv.clone(), y])?;
                if h.order_u128() == 60 {
                    return Ok(h);
                }
            }
        }
    }
    // Deterministic fallback: lowest-index pair in enumeration order.
    let none: Option<(&mut R, usize)> = None;
    let twos = g.elements_of_order(2, 5_000, config.enum_bound, none)?;
    let none: Option<(&mut R, usize)> = None;
    let threes = g.elements_of_order(3, 5_000, config.enum_bound, none)?;
    let mut tried = 0u64;
    for x in &twos {
        for y in &threes {
            tried += 1;
            if x.then(y).order() == 5 {
                return PermGroup::new(vec![x.clone(), y.clone()]);
            }
        }
    }
    Err(Error::NotFound {
        what: "A5 generated by (2,3,5) pair".into(),
        tried,
    })
}

fn find_dihedral<R: Rng>(g: &PermGroup, k: u64, rng: &mut R, config: &Config) -> Result<PermGroup> {
    if k < 2 {
        return Err(Error::InvalidArgument(
            "dihedral subgroup needs k >= 2".into(),
        ));
    }
    if g.order_u128().is_multiple_of(2 * k as u128) {
        for _ in 0..RANDOM_ATTEMPTS / 100 {
            let Some(r) = random_of_order(g, k, rng) else {
                continue;
            };
            let rinv = r.inverse();
            for _ in 0..100 {
                if let Some(s) = random_of_order(g, 2, rng) {
                    if r.conjugate_by(&s) == rinv {
                        return PermGroup::new(vec![r, s]);
                    }
                }
            }
        }
    }
    let none: Option<(&mut R, usize)> = None;
    let rs = g.elements_of_order(k, 200, config.enum_bound, none)?;
    let none: Option<(&mut R, usize)> = None;
    let twos = g.elements_of_order(2, usize::MAX, config.enum_bound, none)?;
    let mut tried = 0;
    for r in &rs {
        let rinv = r.inverse();
        for s in &twos {
            tried += 1;
            if r.conjugate_by(s) == rinv {
                return PermGroup::new(vec![r.clone(), s.clone()]);
            }
        }
    }
    Err(Error::NotFound {
        what: format!("dihedral subgroup of order {}", 2 * k),
        tried,
    })
}

/// `p^a` exactly dividing `n`.
fn p_part(n: u128, p: u64) -> u128 {
    let mut part = 1;
    let mut m = n;
    while m.is_multiple_of(p as u128) {
        m /= p as u128;
        part *= p as u128;
    }
    part
}

fn is_p_power(n: u64, p: u64) -> bool {
    n == 1 || factorize(n).iter().all(|&(q, _)| q == p)
}

/// A Sylow `p`-subgroup, grown one `p`-element of the normalizer at a time.
pub fn sylow_subgroup(g: &PermGroup, p: u64, config: &Config) -> Result<PermGroup> {
    if factorize(p) != [(p, 1)] {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let target = p_part(g.order_u128(), p);
    let mut sylow = PermGroup::trivial(g.degree());
    while sylow.order_u128() < target {
        let n = g.normalizer(&sylow, config.enum_bound)?;
        // N_G(P)/P has order divisible by p while P is not Sylow.
        let y = n.for_each_element(|y| {
            if !y.is_identity() && is_p_power(y.order(), p) && !sylow.contains(y) {
                ControlFlow::Break(y.clone())
            } else {
                ControlFlow::Continue(())
            }
        });
        let y = y.ok_or_else(|| Error::NotFound {
            what: format!("p-element normalizing a {p}-subgroup"),
            tried: n.order_u128() as u64,
        })?;
        sylow = sylow.join(&[y]);
    }
    Ok(sylow)
}

pub fn sylow_normalizer(g: &PermGroup, p: u64, config: &Config) -> Result<PermGroup> {
    let sylow = sylow_subgroup(g, p, config)?;
    g.normalizer(&sylow, config.enum_bound)
}

/// Constraints on a double-coset representative `x` for `H` in `G`.
#[derive(Clone, Debug)]
pub struct DoubleCosetSpec {
    pub element_order: u64,
    /// Required `|HxH| / |H|`.
    pub ratio: usize,
    /// Require `⟨H, x⟩ = G`.
    pub generates: bool,
    /// Restrict candidates to this subgroup of `G`.
    pub within: Option<PermGroup>,
}

impl Default for DoubleCosetSpec {
    fn default() -> Self {
        DoubleCosetSpec {
            element_order: 2,
            ratio: 5,
            generates: true,
            within: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct DoubleCosetWitness {
    pub element: Permutation,
    pub ratio: usize,
    /// Candidates examined up to and including the witness.
    pub tried: u64,
}

/// The first element, in enumeration order, meeting the constraints.
///
/// The ratio is the length of the orbit of the coset `Hx` under `H`.
pub fn find_double_coset_element(
    space: &CosetSpace,
    spec: &DoubleCosetSpec,
    config: &Config,
) -> Result<DoubleCosetWitness> {
    let g = space.group();
    let h = space.subgroup();
    let pool = spec.within.as_ref().unwrap_or(g);
    if !pool.is_subgroup_of(g) {
        return Err(Error::NotASubgroup);
    }
    if pool.order_u128() > config.enum_bound {
        return Err(Error::BoundExceeded {
            what: "double coset candidate enumeration",
            size: pool.order_u128(),
            bound: config.enum_bound,
        });
    }
    let mut tried = 0u64;
    let found = pool.for_each_element(|x| {
        tried += 1;
        if x.order() != spec.element_order || h.contains(x) {
            return ControlFlow::Continue(());
        }
        let ratio = space.double_coset_ratio(x, spec.ratio);
        if ratio != spec.ratio {
            return ControlFlow::Continue(());
        }
        if spec.generates && h.join(std::slice::from_ref(x)).order_u128() != g.order_u128() {
            return ControlFlow::Continue(());
        }
        ControlFlow::Break(x.clone())
    });
    match found {
        Some(element) => Ok(DoubleCosetWitness {
            element,
            ratio: spec.ratio,
            tried,
        }),
        None => Err(Error::NotFound {
            what: format!(
                "element of order {} with double coset ratio {}",
                spec.element_order, spec.ratio
            ),
            tried,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::classical::{alternating, projective_linear, ProjectiveKind};

    #[test]
    fn dihedral_in_psl2_11() {
        let g = projective_linear(11, ProjectiveKind::Psl).unwrap();
        let h = find_subgroup(&g, SubgroupSpec::Dihedral(5), &Config::default()).unwrap();
        assert_eq!(h.order_u128(), 10);
    }

    #[test]
    fn a5_in_pgl2_19() {
        let g = projective_linear(19, ProjectiveKind::Pgl).unwrap();
        let h = find_subgroup(&g, SubgroupSpec::A5, &Config::default()).unwrap();
        assert_eq!(h.order_u128(), 60);
    }

    #[test]
    fn sylow5_normalizer_in_a6() {
        let g = alternating(6);
        let h = find_subgroup(&g, SubgroupSpec::SylowNormalizer(5), &Config::default()).unwrap();
        assert_eq!(h.order_u128(), 10);
        let hist = h.element_order_histogram(100).unwrap();
        assert_eq!(hist.get(&2), Some(&5));
        assert_eq!(hist.get(&5), Some(&4));
        let s2 = sylow_subgroup(&g, 2, &Config::default()).unwrap();
        assert_eq!(s2.order_u128(), 8);
    }

    #[test]
    fn involution_with_ratio_five() {
        let config = Config::default();
        let g = projective_linear(11, ProjectiveKind::Psl).unwrap();
        let h = find_subgroup(&g, SubgroupSpec::Dihedral(5), &config).unwrap();
        let space = CosetSpace::new(&g, &h).unwrap();
        let w = find_double_coset_element(&space, &DoubleCosetSpec::default(), &config).unwrap();
        assert_eq!(w.element.order(), 2);
        assert!(!h.contains(&w.element));
        assert_eq!(
            super::super::coset::double_coset_ratio_by_counting(&h, &w.element, 1 << 20).unwrap(),
            5
        );
    }

    #[test]
    fn whole_group_has_no_witness() {
        let config = Config::default();
        let g = alternating(5);
        let space = CosetSpace::new(&g, &g).unwrap();
        let err =
            find_double_coset_element(&space, &DoubleCosetSpec::default(), &config).unwrap_err();
        assert!(matches!(err, Error::NotFound { tried: 60, .. }));
    }
}
