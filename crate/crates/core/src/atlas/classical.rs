//! Concrete permutation groups: symmetric, alternating, cyclic and dihedral
//! groups, the projective groups on the projective line, PSL(3,4) extended by
//! a polarity, and direct products.

use serde::{Deserialize, Serialize};

use super::field::Field;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

pub fn symmetric(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(n);
    }
    let cycle = Permutation::from_cycles(n, &[(0..n).collect()]).expect("valid cycle");
    let swap = Permutation::from_cycles(n, &[vec![0, 1]]).expect("valid cycle");
    PermGroup::new(vec![cycle, swap]).expect("nonempty")
}

pub fn alternating(n: usize) -> PermGroup {
    if n < 3 {
        return PermGroup::trivial(n);
    }
    // 3-cycles (0 1 k) generate A_n.
    let gens = (2..n)
        .map(|k| Permutation::from_cycles(n, &[vec![0, 1, k]]).expect("valid cycle"))
        .collect();
    PermGroup::new(gens).expect("nonempty")
}

/// The regular cyclic group of order `n`.
pub fn cyclic(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(n);
    }
    PermGroup::new(vec![
        Permutation::from_cycles(n, &[(0..n).collect()]).expect("valid cycle")
    ])
    .expect("nonempty")
}

/// The regular representation of `D_m = ⟨a, b | a^m = b^2 = 1, a^b = a^-1⟩`.
///
/// Point `i + m·j` is the element `a^i b^j`, and each element acts by right
/// multiplication, so the permutation of `x` sends the identity point to the
/// point of `x`.
#[derive(Clone, Debug)]
pub struct Dihedral {
    m: usize,
    group: PermGroup,
}

impl Dihedral {
    pub fn new(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidArgument(format!(
                "dihedral group needs m >= 3, got {m}"
            )));
        }
        let a = Self::right_mult(m, 1, 0);
        let b = Self::right_mult(m, 0, 1);
        Ok(Dihedral {
            m,
            group: PermGroup::new(vec![a, b])?,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn into_group(self) -> PermGroup {
        self.group
    }

    /// Point labelling `a^i b^j`.
    pub fn point(&self, i: i64, j: usize) -> usize {
        i.rem_euclid(self.m as i64) as usize + self.m * (j % 2)
    }

    /// The permutation of `a^i b^j`.
    pub fn element(&self, i: i64, j: usize) -> Permutation {
        Self::right_mult(self.m, i.rem_euclid(self.m as i64) as usize, j % 2)
    }

    pub fn a(&self) -> Permutation {
        self.element(1, 0)
    }

    pub fn b(&self) -> Permutation {
        self.element(0, 1)
    }

    // a^i b^j · a^k b^l = a^(i + (-1)^j k) b^(j + l)
    fn right_mult(m: usize, k: usize, l: usize) -> Permutation {
        let mut images = vec![0; 2 * m];
        for j in 0..2 {
            for i in 0..m {
                let i2 = if j == 0 { (i + k) % m } else { (i + m - k) % m };
                images[i + m * j] = i2 + m * ((j + l) % 2);
            }
        }
        Permutation::from_images(images).expect("right multiplication is a bijection")
    }
}

pub fn dihedral(m: usize) -> Result<PermGroup> {
    Ok(Dihedral::new(m)?.into_group())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProjectiveKind {
    Psl,
    Pgl,
}

/// PSL(2,q) or PGL(2,q) acting on the `q + 1` points of the projective line.
///
/// Field elements are points `0..q` and `∞` is point `q`. The generators are
/// `x ↦ x + 1`, `x ↦ ω²x`, `x ↦ -1/x`, plus `x ↦ ωx` for PGL.
pub fn projective_linear(q: u32, kind: ProjectiveKind) -> Result<PermGroup> {
    let f = Field::new(q)?;
    let w = f.primitive();
    let mobius = |a: u32, b: u32, c: u32, d: u32| -> Permutation {
        // x ↦ (ax + b) / (cx + d)
        let inf = q as usize;
        let images = (0..=q)
            .map(|x| {
                if x == q {
                    if c == 0 {
                        inf
                    } else {
                        f.div(a, c) as usize
                    }
                } else {
                    let num = f.add(f.mul(a, x), b);
                    let den = f.add(f.mul(c, x), d);
                    if den == 0 {
                        inf
                    } else {
                        f.div(num, den) as usize
                    }
                }
            })
            .collect();
        Permutation::from_images(images).expect("Möbius maps are bijections")
    };
    let mut gens = vec![
        mobius(1, 1, 0, 1),
        mobius(f.mul(w, w), 0, 0, 1),
        mobius(0, f.neg(1), 1, 0),
    ];
    if kind == ProjectiveKind::Pgl {
        gens.push(mobius(w, 0, 0, 1));
    }
    let gens = gens
        .into_iter()
        .filter(|g| !g.is_identity())
        .collect::<Vec<_>>();
    PermGroup::new(gens)
}

/// `q(q² - 1)`, divided by `gcd(2, q - 1)` for PSL.
pub fn projective_linear_order(q: u64, kind: ProjectiveKind) -> u64 {
    let full = q * (q * q - 1);
    match kind {
        ProjectiveKind::Pgl => full,
        ProjectiveKind::Psl if q % 2 == 1 => full / 2,
        ProjectiveKind::Psl => full,
    }
}

/// PG(2,4) with PSL(3,4) acting on points and lines, extended by a polarity.
#[derive(Clone, Debug)]
pub struct PlaneWithPolarity {
    /// Normalised coordinate vectors; point `i` and line `21 + i` share vector `i`.
    pub vectors: Vec<[u32; 3]>,
    pub group: PermGroup,
}

impl PlaneWithPolarity {
    pub fn points(&self) -> std::ops::Range<usize> {
        0..self.vectors.len()
    }

    pub fn lines(&self) -> std::ops::Range<usize> {
        self.vectors.len()..2 * self.vectors.len()
    }

    /// Point-line incidence: `x · L = 0`.
    pub fn incident(&self, point: usize, line: usize) -> bool {
        let f = Field::new(4).expect("F_4");
        let x = self.vectors[point];
        let l = self.vectors[line - self.vectors.len()];
        (0..3).fold(0, |acc, i| f.add(acc, f.mul(x[i], l[i]))) == 0
    }
}

/// PSL(3,4) acting on the 21 points and 21 lines of PG(2,4), together with the
/// polarity swapping the point and the line with the same coordinate vector.
///
/// Points are row vectors acted on by `x ↦ xM`; lines are column vectors
/// acted on by `L ↦ M⁻¹L`, which preserves `x · L`. The polarity conjugates
/// `M` to its inverse transpose, so it normalises the action. The group has
/// order 40320 and is transitive on all 42 objects.
pub fn psl34_with_duality() -> PlaneWithPolarity {
    let f = Field::new(4).expect("F_4");
    let normalise = |v: [u32; 3]| -> [u32; 3] {
        let lead = *v.iter().find(|&&c| c != 0).expect("nonzero vector");
        let inv = f.inv(lead);
        [f.mul(v[0], inv), f.mul(v[1], inv), f.mul(v[2], inv)]
    };
    let mut vectors = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                let v = [a, b, c];
                if v != [0, 0, 0] && normalise(v) == v {
                    vectors.push(v);
                }
            }
        }
    }
    let n = vectors.len();
    debug_assert_eq!(n, 21);
    let index = |v: [u32; 3]| {
        vectors
            .iter()
            .position(|&w| w == normalise(v))
            .expect("point")
    };

    type Mat = [[u32; 3]; 3];
    let row_times = |x: [u32; 3], m: &Mat| -> [u32; 3] {
        let mut out = [0; 3];
        for (j, o) in out.iter_mut().enumerate() {
            for i in 0..3 {
                *o = f.add(*o, f.mul(x[i], m[i][j]));
            }
        }
        out
    };
    let times_col = |m: &Mat, l: [u32; 3]| -> [u32; 3] {
        let mut out = [0; 3];
        for (i, o) in out.iter_mut().enumerate() {
            for j in 0..3 {
                *o = f.add(*o, f.mul(m[i][j], l[j]));
            }
        }
        out
    };
    // Elementary transvection I + λE_ij; its inverse is I + λE_ij as well in
    // characteristic 2.
    let transvection = |i: usize, j: usize, lambda: u32| -> Mat {
        let mut m = [[0; 3]; 3];
        for (k, row) in m.iter_mut().enumerate() {
            row[k] = 1;
        }
        m[i][j] = lambda;
        m
    };
    let act = |m: &Mat, minv: &Mat| -> Permutation {
        let mut images = vec![0; 2 * n];
        for (k, &v) in vectors.iter().enumerate() {
            images[k] = index(row_times(v, m));
            images[n + k] = n + index(times_col(minv, v));
        }
        Permutation::from_images(images).expect("collineation")
    };
    let mut gens = Vec::new();
    for &(i, j) in &[(0, 1), (1, 2), (2, 0), (1, 0)] {
        for lambda in [1, f.primitive()] {
            let m = transvection(i, j, lambda);
            gens.push(act(&m, &m));
        }
    }
    let polarity =
        Permutation::from_images((0..2 * n).map(|k| (k + n) % (2 * n)).collect()).expect("swap");
    gens.push(polarity);
    PlaneWithPolarity {
        vectors,
        group: PermGroup::new(gens).expect("nonempty"),
    }
}

/// `a × b` acting on the disjoint union of their point sets.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let n = a.degree() + b.degree();
    let mut gens: Vec<Permutation> = a
        .nontrivial_generators()
        .iter()
        .map(|g| g.extend(n))
        .collect();
    gens.extend(
        b.nontrivial_generators()
            .iter()
            .map(|g| g.shifted(a.degree(), n)),
    );
    PermGroup::generated_by(n, gens).expect("degrees agree")
}

/// Regular elementary abelian 2-group of rank `r` on `2^r` points, as XOR by basis vectors.
pub fn elementary_abelian_2(r: u32) -> PermGroup {
    let n = 1usize << r;
    let gens = (0..r)
        .map(|k| {
            Permutation::from_images((0..n).map(|x| x ^ (1 << k)).collect()).expect("involution")
        })
        .collect::<Vec<_>>();
    PermGroup::generated_by(n, gens).expect("degrees agree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        assert_eq!(symmetric(6).order_u128(), 720);
        assert_eq!(alternating(6).order_u128(), 360);
        assert_eq!(alternating(5).order_u128(), 60);
        assert_eq!(cyclic(7).order_u128(), 7);
        assert_eq!(symmetric(1).order_u128(), 1);
    }

    #[test]
    fn dihedral_labels() {
        let d = Dihedral::new(5).unwrap();
        assert_eq!(d.group().order_u128(), 10);
        assert!(d.group().is_regular());
        let (a, b) = (d.a(), d.b());
        assert_eq!(a.conjugate_by(&b), a.inverse());
        for i in 0..5 {
            for j in 0..2 {
                let x = d.element(i, j);
                assert_eq!(x.apply(0), d.point(i, j));
                assert_eq!(x, a.pow(i).then(&b.pow(j as i64)));
            }
        }
        assert!(Dihedral::new(2).is_err());
    }

    #[test]
    fn projective_orders() {
        for (q, kind) in [
            (4, ProjectiveKind::Psl),
            (5, ProjectiveKind::Psl),
            (11, ProjectiveKind::Psl),
            (11, ProjectiveKind::Pgl),
            (19, ProjectiveKind::Pgl),
            (8, ProjectiveKind::Pgl),
            (9, ProjectiveKind::Psl),
        ] {
            let g = projective_linear(q, kind).unwrap();
            assert_eq!(g.degree(), q as usize + 1);
            assert!(g.is_transitive());
            assert_eq!(
                g.order_u128(),
                projective_linear_order(q as u64, kind) as u128,
                "q = {q}, {kind:?}"
            );
        }
        assert!(projective_linear(6, ProjectiveKind::Psl).is_err());
    }

    #[test]
    fn plane_with_polarity() {
        let plane = psl34_with_duality();
        let g = &plane.group;
        assert_eq!(g.degree(), 42);
        assert_eq!(g.order_u128(), 40320);
        assert!(g.is_transitive());
        assert_eq!(g.stabilizer(0).unwrap().order_u128(), 960);
        let through_first: usize = plane.lines().filter(|&l| plane.incident(0, l)).count();
        assert_eq!(through_first, 5);
        // Every generator preserves incidence.
        for x in g.generators() {
            for p in plane.points() {
                for l in plane.lines() {
                    let (a, b) = (x.apply(p), x.apply(l));
                    let image = if a < 21 {
                        plane.incident(a, b)
                    } else {
                        plane.incident(b, a)
                    };
                    assert_eq!(plane.incident(p, l), image);
                }
            }
        }
    }

    #[test]
    fn products() {
        let z2 = cyclic(2);
        assert_eq!(direct_product(&z2, &z2).order_u128(), 4);
        let a5z2 = direct_product(&alternating(5), &z2);
        assert_eq!(a5z2.order_u128(), 120);
        let s5s5 = direct_product(&symmetric(5), &symmetric(5));
        assert_eq!(s5s5.order_u128(), 14400);
        assert_eq!(elementary_abelian_2(5).order_u128(), 32);
    }
}
