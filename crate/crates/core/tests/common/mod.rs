//! Brute-force oracles: element closures, conjugation, path enumeration.
//! None of these touch the stabiliser chain.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;
use symgraph::graph::Graph;
use symgraph::perm::{PermGroup, Permutation};

pub type ElementSet = BTreeSet<Vec<u32>>;

pub fn key(p: &Permutation) -> Vec<u32> {
    p.images().to_vec()
}

/// All products of the generators, by breadth-first search.
pub fn closure(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    out
}

pub fn element_set(elems: &[Permutation]) -> ElementSet {
    elems.iter().map(key).collect()
}

pub fn orbit(elems: &[Permutation], point: usize) -> BTreeSet<usize> {
    elems.iter().map(|g| g.apply(point)).collect()
}

/// Closure of the conjugacy class of `x` under multiplication.
pub fn normal_closure(elems: &[Permutation], x: &Permutation) -> ElementSet {
    let class: Vec<Permutation> = elems
        .iter()
        .map(|g| g.inverse().then(x).then(g))
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    element_set(&closure(x.degree(), &class))
}

/// Minimal elements, by inclusion, among the normal closures of non-identity
/// elements; these are exactly the minimal normal subgroups.
pub fn minimal_normal(elems: &[Permutation]) -> Vec<ElementSet> {
    let mut done: HashSet<Vec<u32>> = HashSet::new();
    let mut closures: Vec<ElementSet> = Vec::new();
    for x in elems.iter().filter(|x| !x.is_identity()) {
        if done.contains(&key(x)) {
            continue;
        }
        for g in elems {
            done.insert(key(&g.inverse().then(x).then(g)));
        }
        let n = normal_closure(elems, x);
        if !closures.contains(&n) {
            closures.push(n);
        }
    }
    closures
        .iter()
        .filter(|n| !closures.iter().any(|m| m.len() < n.len() && m.is_subset(n)))
        .cloned()
        .collect()
}

/// Every `s`-arc: walks of length `s` that never immediately backtrack.
pub fn s_arcs(graph: &Graph, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut walk = Vec::new();
    for v in 0..graph.vertex_count() {
        walk.push(v);
        extend(graph, s, &mut walk, &mut out);
        walk.pop();
    }
    out
}

fn extend(graph: &Graph, s: usize, walk: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if walk.len() == s + 1 {
        out.push(walk.clone());
        return;
    }
    let last = walk[walk.len() - 1];
    let back = (walk.len() >= 2).then(|| walk[walk.len() - 2]);
    for &w in graph.neighbors(last) {
        if Some(w) != back {
            walk.push(w);
            extend(graph, s, walk, out);
            walk.pop();
        }
    }
}

/// Whether `elems` is transitive on `s`-arcs, checked element by element.
pub fn s_arc_transitive_by_elements(graph: &Graph, elems: &[Permutation], s: usize) -> bool {
    let arcs = s_arcs(graph, s);
    let Some(first) = arcs.first() else {
        return true;
    };
    let images: HashSet<Vec<usize>> = elems
        .iter()
        .map(|g| first.iter().map(|&v| g.apply(v)).collect())
        .collect();
    images.len() == arcs.len()
}

/// Same question by orbit–stabiliser: the orbit of an `s`-arc has size
/// `|G| / |G_(v0,...,vs)|`.
pub fn s_arc_transitive_by_stabilizer(graph: &Graph, g: &PermGroup, s: usize) -> bool {
    let arcs = s_arcs(graph, s);
    let Some(first) = arcs.first() else {
        return true;
    };
    let mut points: Vec<usize> = Vec::new();
    for &v in first {
        if !points.contains(&v) {
            points.push(v);
        }
    }
    let stab = g.pointwise_stabilizer(&points);
    g.order_u128() / stab.order_u128() == arcs.len() as u128
}

/// Largest `s ≤ cap` for which `g` is `s`-arc-transitive.
pub fn s_by_brute_force(graph: &Graph, g: &PermGroup, cap: usize) -> usize {
    let elems = (g.order_u128() <= 30_000).then(|| closure(g.degree(), g.generators()));
    let mut best = 0;
    for s in 1..=cap {
        let ok = match &elems {
            Some(e) => s_arc_transitive_by_elements(graph, e, s),
            None => s_arc_transitive_by_stabilizer(graph, g, s),
        };
        if !ok {
            break;
        }
        best = s;
    }
    best
}

pub fn random_permutation<R: Rng>(rng: &mut R, degree: usize) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

/// A random subgroup of a product of small symmetric groups: each generator
/// is a random permutation, or the identity, on each block of points.
pub fn random_group<R: Rng>(rng: &mut R) -> PermGroup {
    let parts: Vec<usize> = (0..rng.random_range(1..=3))
        .map(|_| rng.random_range(2..=4))
        .collect();
    let degree: usize = parts.iter().sum();
    let gens = (0..rng.random_range(1..=3))
        .map(|_| {
            let mut images = Vec::with_capacity(degree);
            let mut offset = 0;
            for &p in &parts {
                let mut block: Vec<usize> = (offset..offset + p).collect();
                if rng.random_bool(0.75) {
                    block.shuffle(rng);
                }
                images.extend(block);
                offset += p;
            }
            Permutation::from_images(images).unwrap()
        })
        .collect();
    PermGroup::new(gens).unwrap()
}

/// Orbit–stabiliser at `point`, using the library for the orbit and the
/// stabiliser and the oracle for the order.
pub fn check_orbit_stabilizer(g: &PermGroup, point: usize) -> Result<(), String> {
    let elems = closure(g.degree(), g.generators());
    let lib_orbit: BTreeSet<usize> = g.orbit(point).into_iter().collect();
    if lib_orbit != orbit(&elems, point) {
        return Err(format!("orbit of {point} differs"));
    }
    let stab = g.stabilizer(point).map_err(|e| e.to_string())?;
    let fixing = elems.iter().filter(|x| x.apply(point) == point).count() as u128;
    if stab.order_u128() != fixing {
        return Err(format!(
            "stabiliser order {} but {fixing} elements fix {point}",
            stab.order_u128()
        ));
    }
    if elems.len() as u128 != lib_orbit.len() as u128 * stab.order_u128() {
        return Err("orbit-stabilizer fails".into());
    }
    Ok(())
}

/// Order and membership of the stabiliser chain against the closure.
pub fn check_bsgs<R: Rng>(g: &PermGroup, rng: &mut R) -> Result<(), String> {
    let elems = closure(g.degree(), g.generators());
    if g.order_u128() != elems.len() as u128 {
        return Err(format!(
            "order {} but closure has {}",
            g.order_u128(),
            elems.len()
        ));
    }
    if let Some(x) = elems.iter().find(|x| !g.contains(x)) {
        return Err(format!("{x} rejected"));
    }
    let set = element_set(&elems);
    for _ in 0..50 {
        let x = random_permutation(rng, g.degree());
        if g.contains(&x) != set.contains(&key(&x)) {
            return Err(format!("membership of {x} disagrees"));
        }
    }
    let semiregular = elems
        .iter()
        .all(|x| x.is_identity() || (0..g.degree()).all(|p| x.apply(p) != p));
    if g.is_semiregular() != semiregular {
        return Err("semiregularity disagrees".into());
    }
    Ok(())
}

/// Normal closures and minimal normal subgroups against brute force.
pub fn check_minimal_normal<R: Rng>(g: &PermGroup, rng: &mut R) -> Result<(), String> {
    let elems = closure(g.degree(), g.generators());
    let x = &elems[rng.random_range(0..elems.len())];
    let n = g.normal_closure(x).map_err(|e| e.to_string())?;
    let lib = element_set(&n.elements(1 << 20).map_err(|e| e.to_string())?);
    if lib != normal_closure(&elems, x) {
        return Err(format!("normal closure of {x} differs"));
    }
    let found = g
        .minimal_normal_subgroups(1 << 20, rng, 50)
        .map_err(|e| e.to_string())?;
    if found.sampled {
        return Err("small group was sampled".into());
    }
    let mut lib: Vec<ElementSet> = found
        .subgroups
        .iter()
        .map(|n| element_set(&n.elements(1 << 20).unwrap()))
        .collect();
    let mut oracle = minimal_normal(&elems);
    lib.sort();
    oracle.sort();
    if lib != oracle {
        return Err(format!(
            "{} minimal normal subgroups, oracle finds {}",
            lib.len(),
            oracle.len()
        ));
    }
    Ok(())
}

/// Valency, vertex count and connectivity of `Cos(G, H, HgH)` against the
/// element-level definitions.
pub fn check_coset_graph(
    g: &PermGroup,
    h_gen: &Permutation,
    d: &Permutation,
) -> Result<(), String> {
    let h = PermGroup::new(vec![h_gen.clone()]).unwrap();
    let elems = closure(g.degree(), g.generators());
    let h_elems = closure(g.degree(), std::slice::from_ref(h_gen));
    let h_set = element_set(&h_elems);
    if h_set.contains(&key(d)) {
        return Err("d lies in H".into());
    }
    let mut double: ElementSet = ElementSet::new();
    for a in &h_elems {
        for b in &h_elems {
            double.insert(key(&a.then(d).then(b)));
            double.insert(key(&a.then(&d.inverse()).then(b)));
        }
    }
    let index = elems.len() / h_elems.len();
    let valency = double.len() / h_elems.len();
    let mut gens = vec![h_gen.clone(), d.clone()];
    gens.retain(|x| !x.is_identity());
    let connected = closure(g.degree(), &gens).len() == elems.len();
    let cg = symgraph::graph::coset_graph(g, &h, d).map_err(|e| e.to_string())?;
    let graph = &cg.graph;
    if graph.vertex_count() != index {
        return Err(format!("{} vertices, index {index}", graph.vertex_count()));
    }
    if graph.valency() != Some(valency) {
        return Err(format!("valency {:?}, expected {valency}", graph.valency()));
    }
    if graph.is_connected() != connected {
        return Err(format!(
            "connected {}, expected {connected}",
            graph.is_connected()
        ));
    }
    if !cg
        .action
        .generators()
        .iter()
        .all(|x| graph.is_automorphism(x))
    {
        return Err("action does not preserve edges".into());
    }
    Ok(())
}
