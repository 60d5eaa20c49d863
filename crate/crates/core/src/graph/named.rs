//! The named pentavalent graphs, each built through the generic constructions.

use std::collections::BTreeMap;

use super::adjacency::Graph;
use super::cayley::cayley;
use super::cd::cd_family;
use super::coset_graph::coset_graph_in;
use super::quotient::double_cover;
use crate::atlas::{
    coset_enumeration, elementary_abelian_2, find_double_coset_element, find_subgroup,
    projective_linear, psl34_with_duality, symmetric, CosetSpace, DoubleCosetSpec, Field,
    Presentation, ProjectiveKind, SubgroupSpec,
};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// Names accepted by [`named`] without the stretch switch.
pub const NAMES: &[&str] = &[
    "K6",
    "K55",
    "K66_minus_matching",
    "I12",
    "I12_double",
    "Q5",
    "FQ4",
    "G32",
    "G64_1",
    "G64_2",
    "G36",
    "G42",
    "G66",
    "G114",
    "G406",
    "G574",
    "G3422",
    "G3782",
    "CD_11",
    "CD_31",
    "CD_41",
];

pub const STRETCH_NAMES: &[&str] = &["G108", "G170"];

#[derive(Clone, Debug)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
    /// A group that acts by automorphisms because of how the graph was built.
    pub group: Option<PermGroup>,
    /// Whether `group` is arc-transitive by construction.
    pub arc_transitive: bool,
    /// Choices made during construction (roots, witnesses, subgroup orders).
    pub metadata: BTreeMap<String, String>,
}

impl NamedGraph {
    pub fn new(name: &str, graph: Graph, recipe: impl Into<String>) -> Self {
        NamedGraph {
            name: name.to_string(),
            graph: graph.with_recipe(recipe),
            group: None,
            arc_transitive: false,
            metadata: BTreeMap::new(),
        }
    }

    pub fn with_group(mut self, group: PermGroup, arc_transitive: bool) -> Self {
        self.group = Some(group);
        self.arc_transitive = arc_transitive;
        self
    }

    pub fn note(mut self, key: &str, value: impl ToString) -> Self {
        self.metadata.insert(key.to_string(), value.to_string());
        self
    }

    pub fn recipe(&self) -> &str {
        self.graph.recipe().unwrap_or("")
    }
}

pub fn is_stretch(name: &str) -> bool {
    STRETCH_NAMES.contains(&name)
}

/// Builds a named graph. `CD_m` (or `CD:m`) is accepted for any `m` with a root.
pub fn named(name: &str, config: &Config) -> Result<NamedGraph> {
    if is_stretch(name) && !config.stretch_graphs {
        return Err(Error::StretchDisabled(name.to_string()));
    }
    if let Some(m) = name
        .strip_prefix("CD_")
        .or_else(|| name.strip_prefix("CD:"))
    {
        let m: u64 = m
            .parse()
            .map_err(|_| Error::UnknownGraph(name.to_string()))?;
        return cd(&format!("CD_{m}"), m, None);
    }
    let g = match name {
        "K6" => NamedGraph::new(name, Graph::complete(6), "complete graph on 6 vertices")
            .with_group(symmetric(6), true),
        "K55" => NamedGraph::new(
            name,
            Graph::complete_bipartite(5, 5),
            "complete bipartite graph K_{5,5}",
        ),
        "K66_minus_matching" => k66_minus_matching(name),
        "I12" => NamedGraph::new(name, icosahedron(), "icosahedron"),
        "I12_double" => {
            let dc = double_cover(&icosahedron());
            NamedGraph::new(name, dc.graph, "standard double cover of the icosahedron")
        }
        "Q5" => {
            let z = elementary_abelian_2(5);
            let c = cayley(&z, z.generators())?;
            NamedGraph::new(name, c.graph, "Cay(Z2^5, {a1, a2, a3, a4, a5})").with_group(z, false)
        }
        "FQ4" => {
            let z = elementary_abelian_2(4);
            let mut s = z.generators().to_vec();
            let all = s
                .iter()
                .fold(Permutation::identity(16), |acc, x| acc.then(x));
            s.push(all);
            let c = cayley(&z, &s)?;
            NamedGraph::new(name, c.graph, "Cay(Z2^4, {a1, a2, a3, a4, a1a2a3a4})")
                .with_group(z, false)
        }
        "G32" => presented_cayley(name, G32, &["b", "ba", "c", "d", "cda"], config)?,
        "G64_1" => presented_cayley(name, G64_1, &["b", "c", "d", "ab", "acde"], config)?,
        "G64_2" => presented_cayley(name, G64_2, &["b", "c", "d", "e", "abcde"], config)?,
        "G36" => g36(name, config)?,
        "G42" => g42(name, config)?,
        "G66" => projective_coset_graph(
            name,
            11,
            ProjectiveKind::Psl,
            SubgroupSpec::Dihedral(5),
            config,
        )?,
        "G114" => projective_coset_graph(name, 19, ProjectiveKind::Pgl, SubgroupSpec::A5, config)?,
        "G406" => projective_coset_graph(name, 29, ProjectiveKind::Pgl, SubgroupSpec::A5, config)?,
        "G574" => projective_coset_graph(name, 41, ProjectiveKind::Psl, SubgroupSpec::A5, config)?,
        "G3422" => projective_coset_graph(name, 59, ProjectiveKind::Pgl, SubgroupSpec::A5, config)?,
        "G3782" => projective_coset_graph(name, 61, ProjectiveKind::Pgl, SubgroupSpec::A5, config)?,
        "G108" => g108(name, config)?,
        "G170" => g170(name),
        _ => return Err(Error::UnknownGraph(name.to_string())),
    };
    check_pentavalent(&g)?;
    Ok(g)
}

fn check_pentavalent(g: &NamedGraph) -> Result<()> {
    if g.graph.valency() != Some(5) {
        return Err(Error::Precondition(format!(
            "{} is not pentavalent",
            g.name
        )));
    }
    if !g.graph.is_connected() {
        return Err(Error::Precondition(format!("{} is not connected", g.name)));
    }
    Ok(())
}

/// `CD_m` with the given root (the smallest by default).
pub fn cd(name: &str, m: u64, root: Option<u64>) -> Result<NamedGraph> {
    let cd = cd_family(m, root)?;
    let roots: Vec<String> = cd.roots.iter().map(|r| r.to_string()).collect();
    let g = NamedGraph::new(
        name,
        cd.cayley.graph,
        format!(
            "Cay(D_{m}, {{b, ab, a^(r+1)b, a^(r^2+r+1)b, a^(r^3+r^2+r+1)b}}) with r = {}",
            cd.root
        ),
    )
    .with_group(cd.dihedral.into_group(), false)
    .note("root", cd.root)
    .note("roots", roots.join(","));
    check_pentavalent(&g)?;
    Ok(g)
}

fn k66_minus_matching(name: &str) -> NamedGraph {
    let edges = (0..6).flat_map(|i| (0..6).filter(move |&j| j != i).map(move |j| (i, 6 + j)));
    let graph = Graph::from_edges(12, edges).expect("valid edges");
    NamedGraph::new(name, graph, "K_{6,6} minus a perfect matching")
}

/// Apex 0, upper ring 1..=5, lower ring 6..=10, apex 11; upper `i` sits over
/// lower `5 + i` and `5 + i + 1`.
pub fn icosahedron() -> Graph {
    let ring = |base: usize| (0..5).map(move |i| (base + i, base + (i + 1) % 5));
    let edges = (1..=5)
        .map(|i| (0, i))
        .chain((6..=10).map(|i| (11, i)))
        .chain(ring(1))
        .chain(ring(6))
        .chain((0..5).flat_map(|i| [(1 + i, 6 + i), (1 + i, 6 + (i + 1) % 5)]));
    Graph::from_edges(12, edges).expect("valid edges")
}

pub const G32: &str = "gens: a b c d; \
    rels: a^4 = b^2 = c^2 = d^2 = [a,c] = [a,d] = 1, a^b = a^-1, b^c = b^d = b a^2, c^d = c a^2";

pub const G64_1: &str = "gens: a b c d e; \
    rels: a^4 = b^2 = c^2 = d^2 = e^2 = [a,c] = [a,d] = [a,e] = [b,e] = [c,e] = [d,e] = 1, \
    a^b = a^-1, b^c = b^d = b a^2, c^d = c a^2";

pub const G64_2: &str = "gens: a b c d e; \
    rels: a^4 = b^2 = c^2 = d^2 = e^2 = [a,b] = [a,c] = [a,d] = [a,e] = [b,c] = [c,e] = [d,e] = 1, \
    b^d = b^e = b a^2, c^d = c a^2";

/// Cayley graph of a finitely presented group, realised regularly by coset
/// enumeration over the trivial subgroup.
pub fn presented_cayley(name: &str, text: &str, s: &[&str], config: &Config) -> Result<NamedGraph> {
    let p = Presentation::parse(text)?;
    let table = coset_enumeration(&p, &[], config.coset_bound);
    let group = table.group()?;
    let s_perms = s
        .iter()
        .map(|w| table.word_permutation(&p.parse_word(w)?))
        .collect::<Result<Vec<_>>>()?;
    let c = cayley(&group, &s_perms)?;
    Ok(
        NamedGraph::new(name, c.graph, format!("Cay(<{p}>, {{{}}})", s.join(", ")))
            .with_group(group, false)
            .note("group_order", table.coset_count()),
    )
}

fn witness_coset_graph(
    name: &str,
    space: &CosetSpace,
    spec: &DoubleCosetSpec,
    recipe: String,
    config: &Config,
) -> Result<NamedGraph> {
    let w = find_double_coset_element(space, spec, config)?;
    let cg = coset_graph_in(space, std::slice::from_ref(&w.element))?;
    Ok(NamedGraph::new(name, cg.graph, recipe)
        .with_group(cg.action, true)
        .note("group_order", space.group().order_u128())
        .note("subgroup_order", space.subgroup().order_u128())
        .note("witness", &w.element)
        .note("witness_rank", w.tried))
}

/// `Cos(G, H, HgH)` for `G = PSL(2,q)` or `PGL(2,q)` with `g` the first
/// involution found with `|HgH|/|H| = 5` and `⟨H, g⟩ = G`.
fn projective_coset_graph(
    name: &str,
    q: u32,
    kind: ProjectiveKind,
    h_spec: SubgroupSpec,
    config: &Config,
) -> Result<NamedGraph> {
    let g = projective_linear(q, kind)?;
    let h = find_subgroup(&g, h_spec, config)?;
    let space = CosetSpace::new(&g, &h)?;
    let group_name = match kind {
        ProjectiveKind::Psl => format!("PSL(2,{q})"),
        ProjectiveKind::Pgl => format!("PGL(2,{q})"),
    };
    let h_name = match h_spec {
        SubgroupSpec::A5 => "A5".to_string(),
        SubgroupSpec::Dihedral(k) => format!("D{k}"),
        SubgroupSpec::SylowNormalizer(p) => format!("N(Sylow {p})"),
    };
    let recipe = format!("Cos({group_name}, {h_name}, HgH) with g an involution, |HgH|/|H| = 5");
    witness_coset_graph(name, &space, &DoubleCosetSpec::default(), recipe, config)
}

/// `Cos(A6, N(P), HgH)` for a Sylow 5-subgroup `P` and `g` of order 4
/// centralising an involution `x` of `H`.
fn g36(name: &str, config: &Config) -> Result<NamedGraph> {
    let g = crate::atlas::alternating(6);
    let h = find_subgroup(&g, SubgroupSpec::SylowNormalizer(5), config)?;
    order_four_in_centraliser(name, &g, &h, "A6", config)
}

fn order_four_in_centraliser(
    name: &str,
    g: &PermGroup,
    h: &PermGroup,
    group_name: &str,
    config: &Config,
) -> Result<NamedGraph> {
    let mut rng = config.rng();
    let x = h
        .elements_of_order(2, 1, config.enum_bound, Some((&mut rng, 1000)))?
        .pop()
        .ok_or_else(|| Error::NotFound {
            what: "involution in H".into(),
            tried: h.order_u128() as u64,
        })?;
    let c = g.centralizer_of_element(&x, config.enum_bound)?;
    let space = CosetSpace::new(g, h)?;
    let spec = DoubleCosetSpec {
        element_order: 4,
        within: Some(c.clone()),
        ..DoubleCosetSpec::default()
    };
    let recipe = format!(
        "Cos({group_name}, H, HgH) with H of order {} and g of order 4 centralising an involution of H",
        h.order_u128()
    );
    Ok(witness_coset_graph(name, &space, &spec, recipe, config)?
        .note("involution", &x)
        .note("centraliser_order", c.order_u128()))
}

/// PSL(3,4) extended by a polarity, acting on points and lines of PG(2,4);
/// `H` is a point stabiliser and `g` an involution outside PSL(3,4).
fn g42(name: &str, config: &Config) -> Result<NamedGraph> {
    let plane = psl34_with_duality();
    let h = plane.group.stabilizer(0)?;
    let space = CosetSpace::new(&plane.group, &h)?;
    let recipe =
        "Cos(PSL(3,4).2, Z2^4:A5, HgH) with g an involution fusing the two classes of Z2^4:A5"
            .to_string();
    witness_coset_graph(name, &space, &DoubleCosetSpec::default(), recipe, config)
}

/// The triple cover of A6 realised as the preimage in SL(3,4) of a hyperoval
/// stabiliser, acting on the 63 nonzero vectors of F_4^3.
pub fn triple_cover_a6() -> PermGroup {
    let f = Field::new(4).expect("F_4");
    let index = |v: [u32; 3]| (v[0] + 4 * v[1] + 16 * v[2]) as usize - 1;
    let vectors: Vec<[u32; 3]> = (1..64u32).map(|k| [k % 4, (k / 4) % 4, k / 16]).collect();
    let mut gens = Vec::new();
    for &(i, j) in &[(0usize, 1usize), (1, 2), (2, 0), (1, 0)] {
        for lambda in [1, f.primitive()] {
            let images = vectors
                .iter()
                .map(|&x| {
                    let mut y = x;
                    y[j] = f.add(y[j], f.mul(lambda, x[i]));
                    index(y)
                })
                .collect();
            gens.push(Permutation::from_images(images).expect("linear bijection"));
        }
    }
    let sl = PermGroup::new(gens).expect("nonempty");
    // Conic x0 x2 = x1^2 with its nucleus (0,1,0).
    let mut oval = [false; 63];
    for v in &vectors {
        let on_conic = f.mul(v[0], v[2]) == f.mul(v[1], v[1]);
        if on_conic || (v[0] == 0 && v[2] == 0) {
            oval[index(*v)] = true;
        }
    }
    sl.subgroup_where(u128::MAX, |m| {
        (0..63).filter(|&k| oval[k]).all(|k| oval[m.apply(k)])
    })
    .expect("SL(3,4) is small")
}

fn g108(name: &str, config: &Config) -> Result<NamedGraph> {
    let t = triple_cover_a6();
    let h = find_subgroup(&t, SubgroupSpec::Dihedral(5), config)?;
    order_four_in_centraliser(name, &t, &h, "3.A6", config)
}

/// Point-line incidence graph of the symplectic quadrangle W(4): points of
/// PG(3,4) and the lines totally isotropic for `x0y1 + x1y0 + x2y3 + x3y2`.
fn g170(name: &str) -> NamedGraph {
    let f = Field::new(4).expect("F_4");
    let mut points: Vec<[u32; 4]> = Vec::new();
    for k in 1..256u32 {
        let v = [k % 4, (k / 4) % 4, (k / 16) % 4, k / 64];
        if v.iter().find(|&&c| c != 0) == Some(&1) {
            points.push(v);
        }
    }
    let form = |x: &[u32; 4], y: &[u32; 4]| {
        let t = [
            f.mul(x[0], y[1]),
            f.mul(x[1], y[0]),
            f.mul(x[2], y[3]),
            f.mul(x[3], y[2]),
        ];
        t.iter().fold(0, |acc, &c| f.add(acc, c))
    };
    let index = |v: [u32; 4]| -> usize {
        let lead = *v.iter().find(|&&c| c != 0).expect("nonzero");
        let inv = f.inv(lead);
        let n = v.map(|c| f.mul(c, inv));
        points.iter().position(|p| *p == n).expect("point")
    };
    let mut lines: Vec<Vec<usize>> = Vec::new();
    for (i, p) in points.iter().enumerate() {
        for (j, q) in points.iter().enumerate().skip(i + 1) {
            if form(p, q) != 0 {
                continue;
            }
            let mut line = vec![i, j];
            for lambda in 1..4 {
                let v = [0, 1, 2, 3].map(|k| f.add(p[k], f.mul(lambda, q[k])));
                line.push(index(v));
            }
            line.sort_unstable();
            line.dedup();
            if line[0] == i && line[1] == j {
                lines.push(line);
            }
        }
    }
    let n = points.len();
    let edges: Vec<(usize, usize)> = lines
        .iter()
        .enumerate()
        .flat_map(|(l, pts)| pts.iter().map(move |&p| (p, n + l)))
        .collect();
    let graph = Graph::from_edges(n + lines.len(), edges).expect("valid edges");
    NamedGraph::new(
        name,
        graph,
        "point-line incidence graph of the symplectic quadrangle W(4)",
    )
}
