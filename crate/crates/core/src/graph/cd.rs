//! The dihedral Cayley family `CD_m`.

use super::cayley::{cayley, CayleyGraph};
use crate::atlas::Dihedral;
use crate::error::{Error, Result};

/// All `r` in `Z_m` with `r^4 + r^3 + r^2 + r + 1 ≡ 0 (mod m)`.
pub fn cyclotomic_roots(m: u64) -> Vec<u64> {
    if m < 2 {
        return Vec::new();
    }
    let m128 = m as u128;
    (0..m)
        .filter(|&r| {
            let r = r as u128;
            // Horner, reducing at each step.
            let v = [1u128, 1, 1, 1]
                .iter()
                .fold(1u128, |acc, &c| (acc * r + c) % m128);
            v == 0
        })
        .collect()
}

/// Exponents `k` of the connection elements `a^k b` for root `r`:
/// `0, 1, r + 1, r² + r + 1, r³ + r² + r + 1`, reduced mod `m`.
pub fn cd_exponents(m: u64, r: u64) -> [u64; 5] {
    let mut out = [0u64; 5];
    let mut sum = 0u64;
    let mut power = 1u64;
    for k in out.iter_mut().skip(1) {
        sum = (sum + power) % m;
        *k = sum;
        power = power * r % m;
    }
    out
}

#[derive(Clone, Debug)]
pub struct CdGraph {
    pub m: u64,
    pub root: u64,
    /// Every root of the quartic mod `m`, smallest first.
    pub roots: Vec<u64>,
    pub dihedral: Dihedral,
    pub cayley: CayleyGraph,
}

/// `CD_m = Cay(D_m, {a^k b})` for the exponents of [`cd_exponents`].
///
/// Uses the smallest root unless `root` is given.
pub fn cd_family(m: u64, root: Option<u64>) -> Result<CdGraph> {
    let roots = cyclotomic_roots(m);
    let root = match root {
        Some(r) if roots.contains(&(r % m.max(1))) => r % m,
        Some(r) => {
            return Err(Error::InvalidArgument(format!(
                "{r} is not a root of x^4 + x^3 + x^2 + x + 1 mod {m}"
            )))
        }
        None => *roots.first().ok_or_else(|| {
            Error::InvalidArgument(format!("x^4 + x^3 + x^2 + x + 1 has no root mod {m}"))
        })?,
    };
    let dihedral = Dihedral::new(m as usize)?;
    let s: Vec<_> = cd_exponents(m, root)
        .iter()
        .map(|&k| dihedral.element(k as i64, 1))
        .collect();
    let cayley = cayley(dihedral.group(), &s)?;
    Ok(CdGraph {
        m,
        root,
        roots,
        dihedral,
        cayley,
    })
}
