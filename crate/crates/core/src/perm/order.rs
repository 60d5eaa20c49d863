use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A positive integer together with its prime factorisation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FactoredOrder {
    value: u128,
    factors: Vec<(u64, u32)>,
}

impl FactoredOrder {
    pub fn one() -> Self {
        FactoredOrder {
            value: 1,
            factors: Vec::new(),
        }
    }

    pub fn from_u64(n: u64) -> Self {
        assert!(n > 0, "orders are positive");
        FactoredOrder {
            value: n as u128,
            factors: factorize(n),
        }
    }

    /// Product of the given positive integers, factored termwise.
    pub fn product_of(parts: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut map: BTreeMap<u64, u32> = BTreeMap::new();
        let mut value: u128 = 1;
        for part in parts {
            assert!(part > 0, "orders are positive");
            value = value
                .checked_mul(part as u128)
                .ok_or(Error::OrderOverflow)?;
            for (p, e) in factorize(part) {
                *map.entry(p).or_default() += e;
            }
        }
        Ok(FactoredOrder {
            value,
            factors: map.into_iter().collect(),
        })
    }

    pub fn value(&self) -> u128 {
        self.value
    }

    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// The set of prime divisors.
    pub fn primes(&self) -> Vec<u64> {
        self.factors.iter().map(|&(p, _)| p).collect()
    }

    pub fn divides(&self, n: u128) -> bool {
        n.is_multiple_of(self.value)
    }
}

impl fmt::Display for FactoredOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, &(p, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("·")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}
