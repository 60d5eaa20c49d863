//! Block systems (invariant partitions) of permutation groups.

use std::collections::HashSet;

use super::group::PermGroup;
use crate::error::{Error, Result};

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes; false if they were already one.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }
}

/// Blocks numbered in order of their least point.
fn canonical(uf: &mut UnionFind) -> Vec<usize> {
    let n = uf.parent.len();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    (0..n)
        .map(|x| {
            let r = uf.find(x);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            label[r]
        })
        .collect()
}

impl PermGroup {
    /// The finest invariant partition that is coarser than `start` (a block
    /// map, or singletons) and puts each pair in `pairs` into one block.
    pub fn minimal_block_system(
        &self,
        start: Option<&[usize]>,
        pairs: &[(usize, usize)],
    ) -> Vec<usize> {
        let n = self.degree();
        let mut uf = UnionFind::new(n);
        if let Some(map) = start {
            let mut first = vec![usize::MAX; n];
            for (x, &b) in map.iter().enumerate() {
                if first[b] == usize::MAX {
                    first[b] = x;
                } else {
                    uf.union(first[b], x);
                }
            }
        }
        let mut queue = Vec::new();
        for &(a, b) in pairs {
            if uf.union(a, b) {
                queue.push((a, b));
            }
        }
        // Each merged pair must stay merged under every generator.
        while let Some((a, b)) = queue.pop() {
            for g in self.generators() {
                let (c, d) = (g.apply(a), g.apply(b));
                if uf.union(c, d) {
                    queue.push((c, d));
                }
            }
        }
        canonical(&mut uf)
    }

    /// Every block system of a transitive group, trivial ones included, as
    /// canonical block maps. Fails past `limit` systems.
    pub fn block_systems(&self, limit: usize) -> Result<Vec<Vec<usize>>> {
        if !self.is_transitive() {
            return Err(Error::Precondition(
                "block systems need a transitive group".into(),
            ));
        }
        let n = self.degree();
        let singletons: Vec<usize> = (0..n).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(singletons.clone());
        let mut out = vec![singletons];
        let mut k = 0;
        // Every block containing 0 is a join of minimal blocks of pairs {0, x},
        // so joining one point at a time reaches every system.
        while k < out.len() {
            let system = out[k].clone();
            let mut reps = vec![usize::MAX; n];
            for (x, &b) in system.iter().enumerate() {
                if reps[b] == usize::MAX {
                    reps[b] = x;
                }
            }
            for &x in reps.iter().filter(|&&x| x != usize::MAX) {
                if system[x] == system[0] {
                    continue;
                }
                let joined = self.minimal_block_system(Some(&system), &[(0, x)]);
                if seen.insert(joined.clone()) {
                    if out.len() >= limit {
                        return Err(Error::BoundExceeded {
                            what: "block system enumeration",
                            size: out.len() as u128 + 1,
                            bound: limit as u128,
                        });
                    }
                    out.push(joined);
                }
            }
            k += 1;
        }
        out.sort_by_key(|m| std::cmp::Reverse(m.iter().max().map_or(0, |&b| b + 1)));
        Ok(out)
    }

    /// Transitive with no block systems besides the trivial ones.
    pub fn is_primitive(&self) -> bool {
        let n = self.degree();
        self.is_transitive()
            && (1..n).all(|x| {
                let m = self.minimal_block_system(None, &[(0, x)]);
                m.iter().all(|&b| b == 0)
            })
    }
}

#[cfg(test)]
mod tests {
    use crate::atlas::{cyclic, elementary_abelian_2, symmetric};

    #[test]
    fn cyclic_blocks_are_divisors() {
        let z12 = cyclic(12);
        assert_eq!(z12.block_systems(100).unwrap().len(), 6);
        let z7 = cyclic(7);
        assert!(z7.is_primitive());
        assert!(symmetric(5).is_primitive());
        assert!(!z12.is_primitive());
    }

    #[test]
    fn minimal_block_of_a_pair() {
        let z12 = cyclic(12);
        let m = z12.minimal_block_system(None, &[(0, 4)]);
        assert_eq!(m.iter().max(), Some(&3));
        assert_eq!(m[0], m[8]);
        assert_ne!(m[0], m[2]);
    }

    #[test]
    fn elementary_abelian_subgroup_count() {
        // Block systems of a regular group are its subgroups: Z2^3 has 16.
        assert_eq!(
            elementary_abelian_2(3).block_systems(100).unwrap().len(),
            16
        );
    }
}
