//! Right cosets `Hg` of a subgroup, identified by canonical keys.
//!
//! The subgroup chain is built along the group's base, so the greedy
//! lexicographically least base image over a coset is a well-defined key:
//! level by level, pick the orbit point whose image is smallest and fold the
//! matching transversal element into the representative.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation, StabChain};

#[derive(Clone, Debug)]
pub struct CosetSpace {
    group: PermGroup,
    subgroup: PermGroup,
    base: Vec<usize>,
    hchain: StabChain,
    /// Per level: orbit points with their transversal elements.
    transversals: Vec<Vec<(usize, Vec<u32>)>>,
    reps: Vec<Permutation>,
    keys: HashMap<Vec<u32>, usize>,
    action: Vec<Permutation>,
    /// Discovery tree: coset `i > 0` is `parent.0 · generator parent.1`.
    parent: Vec<(usize, usize)>,
}

impl CosetSpace {
    /// Enumerates the right cosets of `subgroup` in `group`.
    pub fn new(group: &PermGroup, subgroup: &PermGroup) -> Result<Self> {
        if group.degree() != subgroup.degree() {
            return Err(Error::DegreeMismatch(group.degree(), subgroup.degree()));
        }
        if !subgroup.is_subgroup_of(group) {
            return Err(Error::NotASubgroup);
        }
        let base = group.chain().base();
        let hchain = StabChain::with_base(group.degree(), &subgroup.nontrivial_generators(), &base);
        let transversals = (0..hchain.depth())
            .map(|l| {
                hchain
                    .orbit(l)
                    .into_iter()
                    .map(|x| (x, hchain.transversal(l, x).images().to_vec()))
                    .collect()
            })
            .collect();
        let index = group.order_u128() / subgroup.order_u128();
        let mut space = CosetSpace {
            group: group.clone(),
            subgroup: subgroup.clone(),
            base,
            hchain,
            transversals,
            reps: Vec::new(),
            keys: HashMap::new(),
            action: Vec::new(),
            parent: Vec::new(),
        };
        let gens = group.generators().to_vec();
        let id = Permutation::identity(group.degree());
        space.keys.insert(space.key(&id), 0);
        space.reps.push(id);
        space.parent.push((0, usize::MAX));
        let mut images: Vec<Vec<usize>> = vec![Vec::new(); gens.len()];
        let mut i = 0;
        while i < space.reps.len() {
            for (k, s) in gens.iter().enumerate() {
                let y = space.reps[i].then(s);
                let key = space.key(&y);
                let next = space.reps.len();
                let j = *space.keys.entry(key).or_insert(next);
                if j == next {
                    space.reps.push(y);
                    space.parent.push((i, k));
                }
                images[k].push(j);
            }
            i += 1;
        }
        debug_assert_eq!(space.reps.len() as u128, index);
        space.action = images
            .into_iter()
            .map(Permutation::from_images)
            .collect::<Result<_>>()?;
        Ok(space)
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn subgroup(&self) -> &PermGroup {
        &self.subgroup
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    /// A representative `g` of coset `i`, so the coset is `Hg`.
    pub fn representative(&self, i: usize) -> &Permutation {
        &self.reps[i]
    }

    /// Which generator step discovered coset `i` (`None` for coset 0).
    pub fn discovery(&self, i: usize) -> Option<(usize, usize)> {
        (i > 0).then(|| self.parent[i])
    }

    /// Canonical key of the coset `Hg`.
    pub fn key(&self, g: &Permutation) -> Vec<u32> {
        let mut c = g.images().to_vec();
        for level in &self.transversals {
            if level.len() <= 1 {
                continue;
            }
            let (_, u) = level
                .iter()
                .min_by_key(|(x, _)| c[*x])
                .expect("orbit is nonempty");
            c = u.iter().map(|&x| c[x as usize]).collect();
        }
        self.base.iter().map(|&b| c[b]).collect()
    }

    /// Index of the coset `Hg`, or `None` if `g` is not in the group.
    pub fn coset_of(&self, g: &Permutation) -> Option<usize> {
        self.keys.get(&self.key(g)).copied()
    }

    /// Action of each group generator on the cosets, by right multiplication.
    pub fn action_generators(&self) -> &[Permutation] {
        &self.action
    }

    pub fn action_group(&self) -> PermGroup {
        PermGroup::generated_by(self.index(), self.action.clone()).expect("degrees agree")
    }

    /// The permutation of the cosets induced by an arbitrary group element.
    pub fn element_action(&self, g: &Permutation) -> Result<Permutation> {
        let images = (0..self.index())
            .map(|i| {
                self.coset_of(&self.reps[i].then(g))
                    .ok_or(Error::NotAMember)
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }

    /// Orbit of coset `Hg` under right multiplication by `gens`; stops early
    /// (returning what was found) once it exceeds `limit`.
    pub fn orbit_under(&self, g: &Permutation, gens: &[Permutation], limit: usize) -> Vec<usize> {
        let start = match self.coset_of(g) {
            Some(i) => i,
            None => return Vec::new(),
        };
        let mut seen = vec![false; self.index()];
        seen[start] = true;
        let mut orbit = vec![start];
        let mut elems = vec![self.reps[start].clone()];
        let mut k = 0;
        while k < orbit.len() && orbit.len() <= limit {
            for s in gens {
                let y = elems[k].then(s);
                let j = self.coset_of(&y).expect("closed under the subgroup");
                if !std::mem::replace(&mut seen[j], true) {
                    orbit.push(j);
                    elems.push(self.reps[j].clone());
                }
            }
            k += 1;
        }
        orbit
    }

    /// `|HgH| / |H|`, as the length of the orbit of `Hg` under `H`.
    pub fn double_coset_ratio(&self, g: &Permutation, limit: usize) -> usize {
        self.orbit_under(g, self.subgroup.generators(), limit).len()
    }

    pub fn subgroup_chain(&self) -> &StabChain {
        &self.hchain
    }
}

/// `|HgH| / |H| = |H| / |H ∩ H^(g⁻¹)|`, by counting elements of `H`.
pub fn double_coset_ratio_by_counting(
    h: &PermGroup,
    g: &Permutation,
    enum_bound: u128,
) -> Result<u128> {
    let elements = h.elements(enum_bound)?;
    let gi = g.inverse();
    let stay = elements
        .iter()
        .filter(|x| h.contains(&x.conjugate_by(&gi)))
        .count() as u128;
    Ok(h.order_u128() / stay)
}
