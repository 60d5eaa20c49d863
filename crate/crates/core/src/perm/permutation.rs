//! Permutations of `{0, .., n-1}` stored as image tables.
//!
//! Products are written left to right: `p.then(q)` (also `&p * &q`) applies
//! `p` first and `q` second, so `i` maps to `q[p[i]]`. Conjugation follows
//! the same right-action convention: `x^y = y⁻¹ x y`.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image table, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::PointOutOfRange {
                    point: x,
                    degree: n,
                });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAPermutation(format!("{x} appears twice")));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Image table that is known to be a bijection.
    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i as u32 == x)
        });
        Permutation { images }
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(Error::PointOutOfRange { point: a, degree });
                }
                if std::mem::replace(&mut touched[a], true) {
                    return Err(Error::NotAPermutation(format!(
                        "point {a} occurs in more than one cycle"
                    )));
                }
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    /// Parses cycle notation such as `(0 1 2)(3 4)`; `()` is the identity.
    ///
    /// Points may be separated by spaces or commas. Without an explicit degree
    /// the degree is one more than the largest point mentioned.
    pub fn parse_cycles(text: &str, degree: Option<usize>) -> Result<Self> {
        let cycles = parse_cycle_list(text)?;
        let needed = cycles.iter().flatten().map(|&p| p + 1).max().unwrap_or(0);
        let degree = match degree {
            Some(d) if d < needed => {
                return Err(Error::PointOutOfRange {
                    point: needed - 1,
                    degree: d,
                })
            }
            Some(d) => d,
            None => needed,
        };
        Permutation::from_cycles(degree, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in product");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    /// Checked product, apply `self` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.then(other))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, exp: i64) -> Permutation {
        let base = if exp < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        acc
    }

    /// `y⁻¹ self y`.
    pub fn conjugate_by(&self, y: &Permutation) -> Permutation {
        let mut out = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            out[y.images[i] as usize] = y.images[x as usize];
        }
        Permutation { images: out }
    }

    /// `[self, y] = self⁻¹ y⁻¹ self y`.
    pub fn commutator(&self, y: &Permutation) -> Permutation {
        self.inverse().then(&self.conjugate_by(y))
    }

    pub fn commutes_with(&self, y: &Permutation) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| y.images[x as usize] == self.images[y.images[i] as usize])
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut acc = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            acc = lcm(acc, len);
        }
        acc
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i as u32 == x)
            .count()
    }

    /// The permutation acting on `0..self.degree() + extra` that fixes the new points.
    pub fn extend(&self, degree: usize) -> Permutation {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..degree as u32);
        Permutation { images }
    }

    /// Shifts this permutation onto the points `offset..offset + degree` of a larger set.
    pub fn shifted(&self, offset: usize, degree: usize) -> Permutation {
        assert!(offset + self.degree() <= degree);
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + x;
        }
        Permutation { images }
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

#[derive(Serialize, Deserialize)]
struct PermutationJson {
    degree: usize,
    images: Vec<usize>,
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PermutationJson {
            degree: self.degree(),
            images: self.images.iter().map(|&x| x as usize).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PermutationJson::deserialize(d)?;
        if raw.images.len() != raw.degree {
            return Err(serde::de::Error::custom(format!(
                "degree {} but {} images",
                raw.degree,
                raw.images.len()
            )));
        }
        Permutation::from_images(raw.images).map_err(serde::de::Error::custom)
    }
}

impl Permutation {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("permutation serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::Parse(ParseError::new(e.column().saturating_sub(1), e.to_string())))
    }
}

fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>, ParseError> {
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut cycles = Vec::new();
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    loop {
        skip_ws(&mut i);
        if i == bytes.len() {
            break;
        }
        if bytes[i] != b'(' {
            return Err(ParseError::new(i, "expected '('"));
        }
        i += 1;
        let mut cycle = Vec::new();
        loop {
            skip_ws(&mut i);
            match bytes.get(i) {
                None => return Err(ParseError::new(i, "unterminated cycle")),
                Some(b')') => {
                    i += 1;
                    break;
                }
                Some(b',') if !cycle.is_empty() => i += 1,
                Some(c) if c.is_ascii_digit() => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let value: usize = text[start..i]
                        .parse()
                        .ok()
                        .filter(|&v: &usize| v < (1 << 24))
                        .ok_or_else(|| ParseError::new(start, "point too large"))?;
                    cycle.push(value);
                }
                Some(_) => return Err(ParseError::new(i, "unexpected character in cycle")),
            }
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        } else if cycle.len() == 1 {
            // A 1-cycle is a fixed point; it still fixes the degree.
            cycles.push(cycle);
        }
    }
    Ok(cycles)
}
