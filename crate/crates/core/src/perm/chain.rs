//! Base and strong generating sets built by incremental Schreier–Sims.
//!
//! Every level stores its basic orbit as a Schreier tree (parent pointer plus
//! the strong generator labelling the edge). Transversal elements are traced
//! on demand, which keeps memory linear in the degree per level; this matters
//! for coset actions of degree several thousand.
//!
//! Schreier generators are processed exactly once: each orbit point remembers
//! how many of its level's generators it has already been paired with. Orbits
//! and generator lists only ever grow, and Schreier trees are only appended to,
//! so a pair that sifted before still sifts after the chain grows.

use std::ops::ControlFlow;

use rand::Rng;

use super::order::FactoredOrder;
use super::permutation::Permutation;
use crate::error::Result;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    gen_ids: Vec<usize>,
    orbit: Vec<u32>,
    /// `parent[x]` for `x` in the orbit, `NONE` otherwise; the root is its own parent.
    parent: Vec<u32>,
    /// Strong generator mapping `parent[x]` to `x`.
    via: Vec<u32>,
    /// Per orbit index: how many of `gen_ids` have been paired into Schreier generators.
    processed: Vec<u32>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        let mut parent = vec![NONE; degree];
        parent[point] = point as u32;
        Level {
            point,
            gen_ids: Vec::new(),
            orbit: vec![point as u32],
            parent,
            via: vec![NONE; degree],
            processed: vec![0],
        }
    }

    #[inline]
    fn contains(&self, x: usize) -> bool {
        self.parent[x] != NONE
    }
}

/// A stabilizer chain `G = G⁽⁰⁾ ≥ G⁽¹⁾ ≥ … ≥ 1` along a base.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    gens: Vec<Vec<u32>>,
    inv: Vec<Vec<u32>>,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        Self::with_base(degree, generators, &[])
    }

    /// Builds a chain whose base starts with `prefix` (levels may be trivial).
    pub fn with_base(degree: usize, generators: &[Permutation], prefix: &[usize]) -> Self {
        let mut chain = StabChain {
            degree,
            gens: Vec::new(),
            inv: Vec::new(),
            levels: prefix.iter().map(|&p| Level::new(p, degree)).collect(),
        };
        for g in generators {
            chain.insert(g);
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn orbit_lengths(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.orbit.len() as u64).collect()
    }

    pub fn order(&self) -> Result<FactoredOrder> {
        FactoredOrder::product_of(self.orbit_lengths())
    }

    /// Order as a plain integer; panics on overflow.
    pub fn order_u128(&self) -> u128 {
        self.orbit_lengths()
            .iter()
            .try_fold(1u128, |acc, &l| acc.checked_mul(l as u128))
            .expect("group order overflows u128")
    }

    /// Basic orbit of the base point at `level`.
    pub fn orbit(&self, level: usize) -> Vec<usize> {
        self.levels[level]
            .orbit
            .iter()
            .map(|&x| x as usize)
            .collect()
    }

    pub fn orbit_contains(&self, level: usize, point: usize) -> bool {
        self.levels[level].contains(point)
    }

    /// Strong generators of `G⁽ˡᵉᵛᵉˡ⁾`, the pointwise stabilizer of the first `level` base points.
    pub fn level_generators(&self, level: usize) -> Vec<Permutation> {
        match self.levels.get(level) {
            Some(l) => l
                .gen_ids
                .iter()
                .map(|&g| Permutation::from_raw(self.gens[g].clone()))
                .collect(),
            None => Vec::new(),
        }
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.gens
            .iter()
            .map(|g| Permutation::from_raw(g.clone()))
            .collect()
    }

    /// Sifts `g`; returns true if `g` lies in the group.
    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let mut h = g.images().to_vec();
        let j = self.sift(&mut h, 0);
        j == self.levels.len() && is_identity(&h)
    }

    /// Coset representative at `level` mapping the base point to `point`.
    pub fn transversal(&self, level: usize, point: usize) -> Permutation {
        Permutation::from_raw(self.trace(level, point))
    }

    /// Adds `g` to the group, extending the chain. Returns false if `g` was already a member.
    pub fn insert(&mut self, g: &Permutation) -> bool {
        assert_eq!(g.degree(), self.degree, "degree mismatch");
        let mut h = g.images().to_vec();
        let j = self.sift(&mut h, 0);
        if j == self.levels.len() && is_identity(&h) {
            return false;
        }
        self.add_strong(h, 0, j);
        self.complete(j);
        true
    }

    /// Sifts random elements until `patience` consecutive ones sift through,
    /// then completes deterministically. Used to seed large chains with
    /// well-spread strong generators before the exhaustive pass.
    pub fn insert_randomized<R: Rng>(
        &mut self,
        generators: &[Permutation],
        rng: &mut R,
        patience: usize,
    ) {
        let mut pool: Vec<Vec<u32>> = generators.iter().map(|g| g.images().to_vec()).collect();
        if pool.is_empty() {
            return;
        }
        while pool.len() < 10 {
            let k = pool.len() % generators.len();
            pool.push(generators[k].images().to_vec());
        }
        let mut acc = vec_identity(self.degree);
        let mut quiet = 0;
        let mut rounds = 0;
        while quiet < patience && rounds < 100_000 {
            rounds += 1;
            // product replacement
            let a = rng.random_range(0..pool.len());
            let mut b = rng.random_range(0..pool.len());
            while b == a {
                b = rng.random_range(0..pool.len());
            }
            let prod = mul_raw(&pool[a], &pool[b]);
            pool[a] = prod;
            acc = mul_raw(&acc, &pool[a]);
            if rounds < 50 {
                continue;
            }
            let mut h = acc.clone();
            let j = self.sift(&mut h, 0);
            if j == self.levels.len() && is_identity(&h) {
                quiet += 1;
            } else {
                quiet = 0;
                // Add without completing; the deterministic pass below finishes the job.
                self.add_strong(h, 0, j);
            }
        }
        for g in generators {
            let mut h = g.images().to_vec();
            let j = self.sift(&mut h, 0);
            if !(j == self.levels.len() && is_identity(&h)) {
                self.add_strong(h, 0, j);
            }
        }
        if !self.levels.is_empty() {
            self.complete(self.levels.len() - 1);
        }
    }

    /// Uniformly random element, as a product of random transversal elements.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Permutation {
        let mut acc = vec_identity(self.degree);
        for l in (0..self.levels.len()).rev() {
            let orbit = &self.levels[l].orbit;
            let beta = orbit[rng.random_range(0..orbit.len())] as usize;
            let u = self.trace(l, beta);
            acc = mul_raw(&acc, &u);
        }
        Permutation::from_raw(acc)
    }

    /// Visits every element once; stops early on `ControlFlow::Break`.
    pub fn for_each_element<B>(
        &self,
        mut visit: impl FnMut(&Permutation) -> ControlFlow<B>,
    ) -> Option<B> {
        let transversals: Vec<Vec<Vec<u32>>> = (0..self.levels.len())
            .map(|l| {
                self.levels[l]
                    .orbit
                    .iter()
                    .map(|&b| self.trace(l, b as usize))
                    .collect()
            })
            .collect();
        // Elements are u_k ⋯ u_1 u_0 with the deepest level leftmost.
        fn walk<B>(
            level: usize,
            acc: &[u32],
            transversals: &[Vec<Vec<u32>>],
            visit: &mut impl FnMut(&Permutation) -> ControlFlow<B>,
        ) -> ControlFlow<B> {
            if level == 0 {
                for u in &transversals[0] {
                    let p = Permutation::from_raw(mul_raw(acc, u));
                    visit(&p)?;
                }
                return ControlFlow::Continue(());
            }
            for u in &transversals[level] {
                let next = mul_raw(acc, u);
                walk(level - 1, &next, transversals, visit)?;
            }
            ControlFlow::Continue(())
        }
        if self.levels.is_empty() {
            return match visit(&Permutation::identity(self.degree)) {
                ControlFlow::Break(b) => Some(b),
                ControlFlow::Continue(()) => None,
            };
        }
        let start = vec_identity(self.degree);
        match walk(self.levels.len() - 1, &start, &transversals, &mut visit) {
            ControlFlow::Break(b) => Some(b),
            ControlFlow::Continue(()) => None,
        }
    }

    /// The chain of `G⁽ᶠʳᵒᵐ⁾`, i.e. the stabilizer of the first `from` base points.
    pub fn tail(&self, from: usize) -> StabChain {
        let mut used: Vec<usize> = self.levels[from.min(self.levels.len())..]
            .iter()
            .flat_map(|l| l.gen_ids.iter().copied())
            .collect();
        used.sort_unstable();
        used.dedup();
        let mut remap = vec![usize::MAX; self.gens.len()];
        for (new, &old) in used.iter().enumerate() {
            remap[old] = new;
        }
        let levels = self.levels[from.min(self.levels.len())..]
            .iter()
            .map(|l| {
                let mut l = l.clone();
                for g in &mut l.gen_ids {
                    *g = remap[*g];
                }
                for v in &mut l.via {
                    if *v != NONE {
                        *v = remap[*v as usize] as u32;
                    }
                }
                l
            })
            .collect();
        StabChain {
            degree: self.degree,
            gens: used.iter().map(|&g| self.gens[g].clone()).collect(),
            inv: used.iter().map(|&g| self.inv[g].clone()).collect(),
            levels,
        }
    }

    /// The chain of `u⁻¹ G u`, relabelling every point `x` as `x^u`.
    pub fn conjugate(&self, u: &Permutation) -> StabChain {
        let conj = |g: &Vec<u32>| {
            Permutation::from_raw(g.clone())
                .conjugate_by(u)
                .images()
                .to_vec()
        };
        let map = |x: u32| u.images()[x as usize];
        let levels = self
            .levels
            .iter()
            .map(|l| {
                let mut parent = vec![NONE; self.degree];
                let mut via = vec![NONE; self.degree];
                for &x in &l.orbit {
                    parent[map(x) as usize] = map(l.parent[x as usize]);
                    via[map(x) as usize] = l.via[x as usize];
                }
                Level {
                    point: u.apply(l.point),
                    gen_ids: l.gen_ids.clone(),
                    orbit: l.orbit.iter().map(|&x| map(x)).collect(),
                    parent,
                    via,
                    processed: l.processed.clone(),
                }
            })
            .collect();
        StabChain {
            degree: self.degree,
            gens: self.gens.iter().map(conj).collect(),
            inv: self.inv.iter().map(conj).collect(),
            levels,
        }
    }

    fn trace(&self, level: usize, point: usize) -> Vec<u32> {
        let l = &self.levels[level];
        debug_assert!(l.contains(point));
        let mut path = Vec::new();
        let mut b = point;
        while b != l.point {
            path.push(l.via[b] as usize);
            b = l.parent[b] as usize;
        }
        let mut u = vec_identity(self.degree);
        for &g in path.iter().rev() {
            let gi = &self.gens[g];
            for x in u.iter_mut() {
                *x = gi[*x as usize];
            }
        }
        u
    }

    /// Replaces `h` by `h · u_β⁻¹` where `β` is in the orbit at `level`.
    fn strip(&self, level: usize, h: &mut [u32], beta: usize) {
        let l = &self.levels[level];
        let mut b = beta;
        while b != l.point {
            let gi = &self.inv[l.via[b] as usize];
            for x in h.iter_mut() {
                *x = gi[*x as usize];
            }
            b = l.parent[b] as usize;
        }
    }

    /// Sifts `h` in place from `start`; returns the level where it dropped out
    /// (`depth()` if it passed every level).
    fn sift(&self, h: &mut [u32], start: usize) -> usize {
        for l in start..self.levels.len() {
            let beta = h[self.levels[l].point] as usize;
            if !self.levels[l].contains(beta) {
                return l;
            }
            self.strip(l, h, beta);
        }
        self.levels.len()
    }

    /// Adds `h` as a strong generator on levels `from..=to`, creating a level if needed.
    fn add_strong(&mut self, h: Vec<u32>, from: usize, to: usize) {
        debug_assert!(!is_identity(&h));
        let id = self.gens.len();
        let mut inv = vec![0u32; self.degree];
        for (i, &x) in h.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        if to == self.levels.len() {
            let point = new_base_point(&h);
            self.levels.push(Level::new(point, self.degree));
        }
        self.gens.push(h);
        self.inv.push(inv);
        for l in from..=to {
            self.levels[l].gen_ids.push(id);
            self.extend_orbit(l);
        }
    }

    fn extend_orbit(&mut self, level: usize) {
        let StabChain { gens, levels, .. } = self;
        let l = &mut levels[level];
        let mut idx = 0;
        while idx < l.orbit.len() {
            let b = l.orbit[idx] as usize;
            for &g in &l.gen_ids {
                let c = gens[g][b] as usize;
                if l.parent[c] == NONE {
                    l.parent[c] = b as u32;
                    l.via[c] = g as u32;
                    l.orbit.push(c as u32);
                    l.processed.push(0);
                }
            }
            idx += 1;
        }
    }

    fn complete(&mut self, from_level: usize) {
        let mut i = from_level as isize;
        while i >= 0 {
            match self.next_failing_schreier_generator(i as usize) {
                Some((h, j)) => {
                    self.add_strong(h, i as usize + 1, j);
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
    }

    /// Finds an unprocessed Schreier generator at `level` that does not sift
    /// through the levels below; returns its residue and the failing level.
    fn next_failing_schreier_generator(&mut self, level: usize) -> Option<(Vec<u32>, usize)> {
        let mut idx = 0;
        while idx < self.levels[level].orbit.len() {
            let ngen = self.levels[level].gen_ids.len();
            let done = self.levels[level].processed[idx] as usize;
            if done < ngen {
                let beta = self.levels[level].orbit[idx] as usize;
                let u_beta = self.trace(level, beta);
                for k in done..ngen {
                    self.levels[level].processed[idx] = (k + 1) as u32;
                    let s = self.levels[level].gen_ids[k];
                    let gamma = self.gens[s][beta] as usize;
                    // Tree edges give trivial Schreier generators.
                    if self.levels[level].parent[gamma] == beta as u32
                        && self.levels[level].via[gamma] == s as u32
                    {
                        continue;
                    }
                    let mut h = mul_raw(&u_beta, &self.gens[s]);
                    self.strip(level, &mut h, gamma);
                    if is_identity(&h) {
                        continue;
                    }
                    let j = self.sift(&mut h, level + 1);
                    if j < self.levels.len() || !is_identity(&h) {
                        return Some((h, j));
                    }
                }
            }
            idx += 1;
        }
        None
    }
}

/// First point of a longest cycle of `h`.
fn new_base_point(h: &[u32]) -> usize {
    let n = h.len();
    let mut seen = vec![false; n];
    let mut best = (0usize, usize::MAX);
    for start in 0..n {
        if seen[start] || h[start] as usize == start {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = h[x] as usize;
            len += 1;
        }
        if len > best.0 {
            best = (len, start);
        }
    }
    best.1
}

#[inline]
pub(crate) fn is_identity(h: &[u32]) -> bool {
    h.iter().enumerate().all(|(i, &x)| i as u32 == x)
}

#[inline]
pub(crate) fn vec_identity(n: usize) -> Vec<u32> {
    (0..n as u32).collect()
}

/// `a` then `b`.
#[inline]
pub(crate) fn mul_raw(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().map(|&x| b[x as usize]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, Some(n)).unwrap()
    }

    fn closure(gens: &[Permutation], n: usize) -> HashSet<Permutation> {
        let mut seen = HashSet::new();
        let mut stack = vec![Permutation::identity(n)];
        seen.insert(Permutation::identity(n));
        while let Some(x) = stack.pop() {
            for g in gens {
                let y = x.then(g);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=8 {
            let gens = vec![
                Permutation::from_cycles(n, &[(0..n).collect()]).unwrap(),
                p("(0 1)", n),
            ];
            let chain = StabChain::new(n, &gens);
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(chain.order_u128(), fact, "S_{n}");
        }
    }

    #[test]
    fn membership_matches_closure() {
        let gens = vec![p("(0 1 2 3)(4 5)", 7), p("(1 3)(2 6)", 7)];
        let chain = StabChain::new(7, &gens);
        let all = closure(&gens, 7);
        assert_eq!(chain.order_u128(), all.len() as u128);
        for x in &all {
            assert!(chain.contains(x));
        }
        assert!(!chain.contains(&p("(0 1)", 7)) || all.contains(&p("(0 1)", 7)));
        let mut count = 0;
        chain.for_each_element(|e| {
            assert!(all.contains(e));
            count += 1;
            ControlFlow::<()>::Continue(())
        });
        assert_eq!(count, all.len());
    }

    #[test]
    fn base_prefix_is_respected() {
        let gens = vec![p("(0 1 2 3 4)", 5), p("(0 1)", 5)];
        let chain = StabChain::with_base(5, &gens, &[3, 1]);
        assert_eq!(&chain.base()[..2], &[3, 1]);
        assert_eq!(chain.order_u128(), 120);
        let stab = chain.tail(1);
        assert_eq!(stab.order_u128(), 24);
        assert!(stab.strong_generators().iter().all(|g| g.apply(3) == 3));
    }

    #[test]
    fn conjugate_chain_is_consistent() {
        let gens = vec![p("(0 1 2 3 4 5)", 6), p("(0 1)", 6)];
        let chain = StabChain::new(6, &gens);
        let u = p("(0 4 2)(1 5)", 6);
        let c = chain.conjugate(&u);
        assert_eq!(c.order_u128(), 720);
        let x = p("(1 2 3)", 6);
        assert!(c.contains(&x.conjugate_by(&u)));
        for l in 0..c.depth() {
            for b in c.orbit(l) {
                let t = c.transversal(l, b);
                assert_eq!(t.apply(c.base()[l]), b);
            }
        }
    }

    #[test]
    fn randomized_seeding_gives_exact_order() {
        let n = 12;
        let gens = vec![
            Permutation::from_cycles(n, &[(0..n).collect()]).unwrap(),
            p("(0 1)", n),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut chain = StabChain::with_base(n, &[], &[]);
        chain.insert_randomized(&gens, &mut rng, 10);
        assert_eq!(chain.order_u128(), 479_001_600);
    }

    #[test]
    fn random_elements_are_members() {
        let gens = vec![p("(0 1 2)(3 4 5 6)", 8), p("(0 7)(2 5)", 8)];
        let chain = StabChain::new(8, &gens);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            assert!(chain.contains(&chain.random_element(&mut rng)));
        }
    }
}
