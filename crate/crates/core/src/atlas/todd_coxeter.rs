//! Coset enumeration (Todd–Coxeter, HLT strategy with lookahead).
//!
//! Columns `2k` and `2k + 1` hold the action of generator `k` and its inverse.
//! Coincidences are merged through a union-find forest and processed from a
//! queue, following the standard HLT formulation.

use serde::Serialize;

use super::presentation::{Letter, Presentation, Word};
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CosetStatus {
    Complete,
    /// Complete with a single coset: the subgroup is the whole group.
    Collapsed,
    BoundExceeded,
}

/// A coset table; rows are cosets with row 0 the subgroup itself.
#[derive(Clone, Debug)]
pub struct CosetTable {
    pub presentation: Presentation,
    pub subgroup_words: Vec<Word>,
    pub status: CosetStatus,
    /// `table[c][col]`; complete rows only when the status is not `BoundExceeded`.
    pub table: Vec<Vec<u32>>,
}

impl CosetTable {
    pub fn coset_count(&self) -> usize {
        self.table.len()
    }

    pub fn is_complete(&self) -> bool {
        self.status != CosetStatus::BoundExceeded
    }

    /// Action of each generator on the cosets (`c ↦ c·g`).
    pub fn generator_permutations(&self) -> Result<Vec<Permutation>> {
        if !self.is_complete() {
            return Err(Error::CosetBoundExceeded(self.table.len()));
        }
        (0..self.presentation.generator_count())
            .map(|k| {
                Permutation::from_images(self.table.iter().map(|row| row[2 * k] as usize).collect())
            })
            .collect()
    }

    /// The permutation group generated by the generator actions.
    pub fn group(&self) -> Result<PermGroup> {
        let gens = self.generator_permutations()?;
        PermGroup::generated_by(self.coset_count(), gens)
    }

    /// Coset reached from coset 0 by reading `w`.
    pub fn trace(&self, w: &[Letter]) -> usize {
        w.iter()
            .fold(0usize, |c, &l| self.table[c][column(l)] as usize)
    }

    /// The permutation induced by a word.
    pub fn word_permutation(&self, w: &[Letter]) -> Result<Permutation> {
        let gens = self.generator_permutations()?;
        let n = self.coset_count();
        let mut acc = Permutation::identity(n);
        for &l in w {
            let g = &gens[l.unsigned_abs() as usize - 1];
            acc = if l > 0 {
                acc.then(g)
            } else {
                acc.then(&g.inverse())
            };
        }
        Ok(acc)
    }
}

#[inline]
fn column(l: Letter) -> usize {
    let k = l.unsigned_abs() as usize - 1;
    2 * k + usize::from(l < 0)
}

struct Enumerator {
    width: usize,
    rows: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    queue: Vec<u32>,
    bound: usize,
}

impl Enumerator {
    fn get(&self, c: u32, col: usize) -> u32 {
        self.rows[c as usize * self.width + col]
    }

    fn set(&mut self, c: u32, col: usize, v: u32) {
        self.rows[c as usize * self.width + col] = v;
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut x = c;
        while self.parent[x as usize] != r {
            let next = self.parent[x as usize];
            self.parent[x as usize] = r;
            x = next;
        }
        r
    }

    /// Defines a new coset `c·col`. Returns false if the bound is reached.
    fn define(&mut self, c: u32, col: usize) -> bool {
        if self.live >= self.bound {
            return false;
        }
        let new = self.parent.len() as u32;
        self.parent.push(new);
        self.rows.extend(std::iter::repeat_n(NONE, self.width));
        self.live += 1;
        self.set(c, col, new);
        self.set(new, col ^ 1, c);
        true
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (x, y) = (self.rep(a), self.rep(b));
        if x == y {
            return;
        }
        let (lo, hi) = if x < y { (x, y) } else { (y, x) };
        self.parent[hi as usize] = lo;
        self.live -= 1;
        self.queue.push(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for col in 0..self.width {
                let d = self.get(g, col);
                if d == NONE {
                    continue;
                }
                if self.get(d, col ^ 1) == g {
                    self.set(d, col ^ 1, NONE);
                }
                let mu = self.rep(g);
                let nu = self.rep(d);
                let m_col = self.get(mu, col);
                if m_col != NONE {
                    let t = self.rep(m_col);
                    self.merge(nu, t);
                } else if self.get(nu, col ^ 1) != NONE {
                    let t = self.rep(self.get(nu, col ^ 1));
                    self.merge(mu, t);
                } else {
                    self.set(mu, col, nu);
                    self.set(nu, col ^ 1, mu);
                }
            }
        }
    }

    /// Scans `c` under `w`, defining cosets when `fill` is set.
    /// Returns false if a definition was needed but the bound was hit.
    fn scan(&mut self, c: u32, w: &[usize], fill: bool) -> bool {
        // Invariants: c·w[..i] = f and b·w[j..] = c.
        let (mut f, mut i) = (c, 0usize);
        let (mut b, mut j) = (c, w.len());
        loop {
            while i < j && self.get(f, w[i]) != NONE {
                f = self.get(f, w[i]);
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return true;
            }
            while j > i && self.get(b, w[j - 1] ^ 1) != NONE {
                b = self.get(b, w[j - 1] ^ 1);
                j -= 1;
            }
            if i == j {
                self.coincidence(f, b);
                return true;
            }
            if j == i + 1 {
                self.set(f, w[i], b);
                self.set(b, w[i] ^ 1, f);
                return true;
            }
            if !fill {
                return true;
            }
            if !self.define(f, w[i]) {
                return false;
            }
        }
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup_words`.
///
/// With no subgroup words this is the regular representation and the number
/// of cosets is the group order. Stops with `BoundExceeded` once `bound` live
/// cosets would be needed and a lookahead pass cannot free any.
pub fn coset_enumeration(
    presentation: &Presentation,
    subgroup_words: &[Word],
    bound: usize,
) -> CosetTable {
    let width = 2 * presentation.generator_count();
    let to_cols = |w: &Word| -> Vec<usize> { w.iter().map(|&l| column(l)).collect() };
    let relators: Vec<Vec<usize>> = presentation.relators().iter().map(to_cols).collect();
    let subgroup: Vec<Vec<usize>> = subgroup_words.iter().map(to_cols).collect();
    let mut e = Enumerator {
        width,
        rows: vec![NONE; width],
        parent: vec![0],
        live: 1,
        queue: Vec::new(),
        bound: bound.max(1),
    };
    let exceeded = |presentation: &Presentation| CosetTable {
        presentation: presentation.clone(),
        subgroup_words: subgroup_words.to_vec(),
        status: CosetStatus::BoundExceeded,
        table: Vec::new(),
    };

    for w in &subgroup {
        while !e.scan(0, w, true) {
            if !lookahead(&mut e, &relators) {
                return exceeded(presentation);
            }
        }
    }
    let mut c = 0u32;
    while (c as usize) < e.parent.len() {
        for r in &relators {
            if !e.is_live(c) {
                break;
            }
            while !e.scan(c, r, true) {
                if !lookahead(&mut e, &relators) {
                    return exceeded(presentation);
                }
                if !e.is_live(c) {
                    break;
                }
            }
        }
        for col in 0..width {
            if !e.is_live(c) {
                break;
            }
            while e.get(c, col) == NONE && !e.define(c, col) {
                if !lookahead(&mut e, &relators) {
                    return exceeded(presentation);
                }
                if !e.is_live(c) {
                    break;
                }
            }
        }
        c += 1;
    }

    // Compact live cosets in order.
    let n = e.parent.len();
    let mut index = vec![NONE; n];
    let mut next = 0u32;
    for c in 0..n as u32 {
        if e.is_live(c) {
            index[c as usize] = next;
            next += 1;
        }
    }
    let mut table = Vec::with_capacity(next as usize);
    for c in 0..n as u32 {
        if e.is_live(c) {
            let row = (0..width)
                .map(|col| {
                    let d = e.get(c, col);
                    assert!(d != NONE, "complete coset table has no gaps");
                    let r = e.rep(d);
                    index[r as usize]
                })
                .collect();
            table.push(row);
        }
    }
    let status = if table.len() == 1 {
        CosetStatus::Collapsed
    } else {
        CosetStatus::Complete
    };
    CosetTable {
        presentation: presentation.clone(),
        subgroup_words: subgroup_words.to_vec(),
        status,
        table,
    }
}

/// Scans every live coset under every relator without defining new cosets.
/// Returns true if some coset was freed.
fn lookahead(e: &mut Enumerator, relators: &[Vec<usize>]) -> bool {
    let before = e.live;
    let mut c = 0u32;
    while (c as usize) < e.parent.len() {
        for r in relators {
            if !e.is_live(c) {
                break;
            }
            e.scan(c, r, false);
        }
        c += 1;
    }
    e.live < before
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(text: &str) -> usize {
        let p = Presentation::parse(text).unwrap();
        let t = coset_enumeration(&p, &[], 100_000);
        assert!(t.is_complete());
        t.coset_count()
    }

    #[test]
    fn small_groups() {
        assert_eq!(order("gens: a b; rels: a^5, b^2, a^b = a^-1"), 10);
        assert_eq!(order("gens: a; rels: a^7"), 7);
        assert_eq!(order("gens: a b; rels: a^2, b^3, (a b)^5"), 60);
        assert_eq!(order("gens: a b; rels: a^2, b^3, (a b)^4"), 24);
        assert_eq!(order("gens: a b; rels: a^4, b^4, a^2 = b^2, a^b = a^-1"), 8);
        assert_eq!(order("gens: a b; rels: a, b"), 1);
    }

    #[test]
    fn regular_action_is_a_group_of_the_right_order() {
        let p = Presentation::parse("gens: a b; rels: a^2, b^3, (a b)^5").unwrap();
        let t = coset_enumeration(&p, &[], 1000);
        let g = t.group().unwrap();
        assert_eq!(g.order_u128(), 60);
        assert!(g.is_regular());
        for r in p.relators() {
            assert!(t.word_permutation(r).unwrap().is_identity());
        }
    }

    #[test]
    fn subgroup_index() {
        let p = Presentation::parse("gens: a b; rels: a^2, b^3, (a b)^5").unwrap();
        let t = coset_enumeration(&p, &[vec![2]], 1000);
        assert_eq!(t.coset_count(), 20);
        let t = coset_enumeration(&p, &[vec![1], vec![2]], 1000);
        assert_eq!(t.status, CosetStatus::Collapsed);
    }

    #[test]
    fn bound_is_reported() {
        let p = Presentation::parse("gens: a b; rels: a^2, b^3").unwrap();
        let t = coset_enumeration(&p, &[], 500);
        assert_eq!(t.status, CosetStatus::BoundExceeded);
        assert!(t.group().is_err());
        let p = Presentation::parse("gens: a b; rels: a^2, b^3, (a b)^7").unwrap();
        let t = coset_enumeration(&p, &[], 50);
        assert_eq!(t.status, CosetStatus::BoundExceeded);
    }
}
