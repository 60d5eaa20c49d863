//! Expected values for every constructible graph, each with the claim it rests on.

use serde::{Deserialize, Serialize};

use crate::atlas::{projective_linear_order, ProjectiveKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerificationLevel {
    /// The full automorphism group is computed and compared.
    FullAut,
    /// Only the constructed group is verified; maximality is not claimed.
    ContainmentOnly,
}

/// Graphs up to this order get a full automorphism computation.
pub const FULL_AUT_MAX_VERTICES: usize = 170;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub name: String,
    pub expected_order: usize,
    pub expected_valency: usize,
    pub expected_s: Option<u32>,
    pub expected_aut_order: Option<u128>,
    pub expected_basic: Option<bool>,
    pub level: VerificationLevel,
    pub stretch: bool,
    /// The known result behind the expected values.
    pub citation: String,
}

fn entry(
    name: &str,
    n: usize,
    aut: u128,
    s: Option<u32>,
    basic: Option<bool>,
    citation: &str,
) -> CensusEntry {
    CensusEntry {
        name: name.to_string(),
        expected_order: n,
        expected_valency: 5,
        expected_s: s,
        expected_aut_order: Some(aut),
        expected_basic: basic,
        level: if n <= FULL_AUT_MAX_VERTICES {
            VerificationLevel::FullAut
        } else {
            VerificationLevel::ContainmentOnly
        },
        stretch: false,
        citation: citation.to_string(),
    }
}

fn pgl(q: u64) -> u128 {
    projective_linear_order(q, ProjectiveKind::Pgl) as u128
}

fn psl(q: u64) -> u128 {
    projective_linear_order(q, ProjectiveKind::Psl) as u128
}

/// All entries, stretch ones included (they are skipped unless enabled).
pub fn default_entries() -> Vec<CensusEntry> {
    let mut v = vec![
        entry(
            "K6",
            6,
            720,
            Some(2),
            Some(true),
            "Aut(K6) ≅ S6; K6 is basic",
        ),
        entry(
            "K55",
            10,
            28_800,
            Some(3),
            Some(true),
            "Aut(K5,5) ≅ (S5×S5)⋊Z2; K5,5 is basic",
        ),
        entry(
            "CD_11",
            22,
            1320,
            None,
            Some(true),
            "Aut(CD_11) ≅ PGL(2,11); CD_q is basic",
        ),
        entry(
            "CD_31",
            62,
            310,
            None,
            Some(true),
            "Aut(CD_m) ≅ D_m⋊Z5 for m ≥ 31; CD_q is basic",
        ),
        entry(
            "CD_41",
            82,
            410,
            None,
            Some(true),
            "Aut(CD_m) ≅ D_m⋊Z5 for m ≥ 31; CD_q is basic",
        ),
        entry(
            "K66_minus_matching",
            12,
            1440,
            None,
            Some(false),
            "Aut(K6,6−6K2) ≅ S6×Z2; not basic",
        ),
        entry(
            "I12",
            12,
            120,
            Some(1),
            Some(false),
            "Aut(I12) ≅ A5×Z2; not basic",
        ),
        entry(
            "G36",
            36,
            1440,
            Some(2),
            Some(true),
            "G36 is 2-transitive with Aut(G36) ≅ Aut(A6); basic",
        ),
        entry(
            "G42",
            42,
            42 * 5760,
            Some(4),
            Some(true),
            "G42 is 4-transitive with Aut(G42) ≅ Aut(PSL(3,4)), order 42·5760; basic",
        ),
        entry(
            "G66",
            66,
            pgl(11),
            Some(1),
            Some(true),
            "Cos(PSL(2,11), D5, HgH) is 1-transitive with Aut ≅ PGL(2,11); basic",
        ),
        entry(
            "G114",
            114,
            pgl(19),
            Some(2),
            Some(true),
            "Cos(PGL(2,19), A5, HgH) is 2-transitive with Aut ≅ PGL(2,19); basic",
        ),
        entry(
            "G406",
            406,
            pgl(29),
            Some(2),
            None,
            "Cos(PGL(2,29), A5, HgH) is 2-transitive with Aut ≅ PGL(2,29)",
        ),
        entry(
            "G574",
            574,
            psl(41),
            Some(2),
            None,
            "Cos(PSL(2,41), A5, HgH) is 2-transitive with Aut ≅ PSL(2,41)",
        ),
        entry(
            "G3422",
            3422,
            pgl(59),
            Some(2),
            None,
            "Cos(PGL(2,59), A5, HgH) is 2-transitive with Aut ≅ PGL(2,59)",
        ),
        entry(
            "G3782",
            3782,
            pgl(61),
            Some(2),
            None,
            "Cos(PGL(2,61), A5, HgH) is 2-transitive with Aut ≅ PGL(2,61)",
        ),
        entry("Q5", 32, 3840, None, None, "Aut(Q5) ≅ Z2^5⋊S5"),
        entry("FQ4", 16, 1920, None, None, "Aut(FQ4) ≅ Z2^4⋊S5"),
        entry(
            "G32",
            32,
            1920,
            Some(2),
            None,
            "G32 is 2-transitive with Aut(G32) ≅ G32⋊A5",
        ),
        entry("G64_1", 64, 7680, None, None, "Aut(G64_1) ≅ G64_1⋊S5"),
        entry("G64_2", 64, 640, None, None, "Aut(G64_2) ≅ G64_2⋊D5"),
        entry(
            "I12_double",
            24,
            480,
            Some(2),
            None,
            "the standard double cover of I12 is 2-transitive with Aut ≅ A5⋊D4",
        ),
    ];
    let mut g108 = entry(
        "G108",
        108,
        4320,
        Some(2),
        None,
        "G108 is 2-transitive with Aut(G108) ≅ Z3.Aut(A6)",
    );
    g108.stretch = true;
    // |Aut(PSp(4,4))| = 4·|PSp(4,4)| = 4 · 4^4 (4^2 − 1)(4^4 − 1).
    let mut g170 = entry(
        "G170",
        170,
        4 * 256 * 15 * 255,
        Some(5),
        Some(true),
        "G170 is 5-transitive with Aut(G170) ≅ Aut(PSp(4,4)); basic",
    );
    g170.stretch = true;
    v.push(g108);
    v.push(g170);
    v
}
