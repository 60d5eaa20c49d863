//! Finite fields `F_q` for prime powers `q ≤ 128`, via log/antilog tables.
//!
//! Elements are the integers `0..q`: the base-`p` digits of an element are the
//! coefficients of its polynomial in the defining root. `0` and `1` are the
//! additive and multiplicative identities.

use crate::error::{Error, Result};
use crate::perm::factorize;

pub const MAX_FIELD_ORDER: u32 = 128;

#[derive(Clone, Debug)]
pub struct Field {
    q: u32,
    p: u32,
    k: u32,
    add: Vec<u8>,
    neg: Vec<u8>,
    /// `exp[i] = ω^i` for `i < q - 1`.
    exp: Vec<u8>,
    /// `log[a]` for `a ≠ 0`.
    log: Vec<u32>,
}

impl Field {
    pub fn new(q: u32) -> Result<Self> {
        if !(2..=MAX_FIELD_ORDER).contains(&q) {
            return Err(Error::InvalidArgument(format!(
                "field order {q} outside 2..={MAX_FIELD_ORDER}"
            )));
        }
        let f = factorize(q as u64);
        if f.len() != 1 {
            return Err(Error::InvalidArgument(format!("{q} is not a prime power")));
        }
        let (p, k) = (f[0].0 as u32, f[0].1);
        let digits = |x: u32| -> Vec<u32> { (0..k).map(|i| (x / p.pow(i)) % p).collect() };
        let undigits = |d: &[u32]| -> u32 { d.iter().rev().fold(0, |acc, &c| acc * p + c) };

        let mut add = vec![0u8; (q * q) as usize];
        let mut neg = vec![0u8; q as usize];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&s) as u8;
            }
            let n: Vec<u32> = da.iter().map(|x| (p - x) % p).collect();
            neg[a as usize] = undigits(&n) as u8;
        }

        // Multiply by the root `t` modulo a monic polynomial of degree k;
        // `tail` holds the low coefficients c_0..c_{k-1} of t^k = -(c_0 + ...).
        let times_root = |x: u32, tail: &[u32]| -> u32 {
            let mut d = digits(x);
            let top = d[k as usize - 1];
            for i in (1..k as usize).rev() {
                d[i] = d[i - 1];
            }
            d[0] = 0;
            for i in 0..k as usize {
                d[i] = (d[i] + (p - tail[i]) * top) % p;
            }
            undigits(&d)
        };

        // Search for a monic polynomial whose root has multiplicative order q - 1.
        let (root, tail) = if k == 1 {
            let g = (1..p)
                .find(|&g| {
                    let mut x = g;
                    let mut ord = 1;
                    while x != 1 {
                        x = x * g % p;
                        ord += 1;
                    }
                    ord == p - 1
                })
                .expect("prime fields have primitive roots");
            (g, Vec::new())
        } else {
            let mut found = None;
            for code in 0..q {
                let tail = digits(code);
                if tail[0] == 0 {
                    continue;
                }
                let mut x = 1u32;
                let mut ord = 0;
                loop {
                    x = times_root(x, &tail);
                    ord += 1;
                    if x == 1 || ord > q {
                        break;
                    }
                }
                if x == 1 && ord == q - 1 {
                    found = Some(tail);
                    break;
                }
            }
            // The root t has digits (0, 1, 0, ..), i.e. the integer p.
            (p, found.expect("a primitive polynomial exists"))
        };

        let mut exp = vec![0u8; (q - 1) as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..q - 1 {
            exp[i as usize] = x as u8;
            log[x as usize] = i;
            x = if k == 1 {
                x * root % p
            } else {
                times_root(x, &tail)
            };
        }
        debug_assert_eq!(x, 1);
        Ok(Field {
            q,
            p,
            k,
            add,
            neg,
            exp,
            log,
        })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// A generator of the multiplicative group.
    pub fn primitive(&self) -> u32 {
        self.exp[1 % self.exp.len()] as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize] as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize] as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let e = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.exp[e as usize] as u32
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "zero has no inverse");
        let e = (self.q - 1 - self.log[a as usize]) % (self.q - 1);
        self.exp[e as usize] as u32
    }

    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = (self.log[a as usize] as u64 * e) % (self.q as u64 - 1);
        self.exp[l as usize] as u32
    }

    /// `ω^e` for the primitive element `ω`.
    pub fn exp(&self, e: u64) -> u32 {
        self.exp[(e % (self.q as u64 - 1)) as usize] as u32
    }

    pub fn is_square(&self, a: u32) -> bool {
        a == 0 || self.p == 2 || self.log[a as usize].is_multiple_of(2)
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(f: &Field) {
        let q = f.order();
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in (0..q).step_by(((q / 7) as usize).max(1)) {
                    assert_eq!(
                        f.mul(a, f.add(b, c)),
                        f.add(f.mul(a, b), f.mul(a, c)),
                        "distributivity in F_{q}"
                    );
                }
            }
        }
        let w = f.primitive();
        let mut x = 1;
        let mut seen = std::collections::HashSet::new();
        for _ in 0..q - 1 {
            assert!(seen.insert(x));
            x = f.mul(x, w);
        }
        assert_eq!(x, 1);
    }

    #[test]
    fn small_fields_satisfy_axioms() {
        for q in [
            2, 3, 4, 5, 7, 8, 9, 11, 16, 19, 25, 27, 32, 49, 61, 64, 81, 121, 125, 128,
        ] {
            check_axioms(&Field::new(q).unwrap());
        }
    }

    #[test]
    fn prime_field_is_modular_arithmetic() {
        let f = Field::new(11).unwrap();
        for a in 0..11 {
            for b in 0..11 {
                assert_eq!(f.add(a, b), (a + b) % 11);
                assert_eq!(f.mul(a, b), (a * b) % 11);
            }
        }
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert!(Field::new(6).is_err());
        assert!(Field::new(1).is_err());
        assert!(Field::new(131).is_err());
    }
}
