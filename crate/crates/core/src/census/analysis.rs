//! Symmetry analysis of a single graph, with or without a supplied group.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::census::basic::is_basic;
use crate::census::report::WitnessSummary;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::PermGroup;
use crate::symmetry::{
    automorphism_group, is_arc_transitive, s_transitivity, stabilizer_profile,
    verify_automorphisms, StabilizerProfile, ARC_ORBIT_LIMIT,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AnalysisMode {
    /// The full automorphism group was computed.
    FullAut,
    /// Only a supplied group was verified to act.
    Containment,
}

#[derive(Clone, Debug, Serialize)]
pub struct Analysis {
    pub mode: AnalysisMode,
    pub vertices: usize,
    pub edges: usize,
    pub valency: Option<usize>,
    pub connected: bool,
    pub group_order: u128,
    pub arc_transitive: bool,
    pub s: Option<u32>,
    pub s_exact: Option<bool>,
    pub stabilizer: Option<StabilizerProfile>,
    pub basicness: Option<String>,
    pub minimal_normal: Vec<(u128, usize)>,
    pub witness: Option<WitnessSummary>,
    /// Steps that could not be completed, with the reason.
    pub skipped: BTreeMap<String, String>,
}

/// Computes `Aut(graph)`, or verifies `group` when supplied, then the
/// arc-transitivity degree, the vertex stabiliser and basicness.
pub fn analyze(graph: &Graph, group: Option<&PermGroup>, config: &Config) -> Result<Analysis> {
    let (mode, group) = match group {
        Some(g) => {
            if !verify_automorphisms(graph, g)? {
                return Err(Error::NotAutomorphisms);
            }
            (AnalysisMode::Containment, g.clone())
        }
        None => (AnalysisMode::FullAut, automorphism_group(graph, config)?),
    };
    let mut out = Analysis {
        mode,
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        valency: graph.valency(),
        connected: graph.is_connected(),
        group_order: group.order_u128(),
        arc_transitive: is_arc_transitive(graph, &group)?,
        s: None,
        s_exact: None,
        stabilizer: None,
        basicness: None,
        minimal_normal: Vec::new(),
        witness: None,
        skipped: BTreeMap::new(),
    };
    if out.arc_transitive && graph.edge_count() > 0 {
        match s_transitivity(graph, &group, ARC_ORBIT_LIMIT) {
            Ok(st) => {
                out.s = Some(st.s);
                out.s_exact = Some(st.exact);
            }
            Err(e) => {
                out.skipped.insert("s".into(), e.to_string());
            }
        }
    }
    if graph.vertex_count() > 0 {
        match stabilizer_profile(graph, &group, 0, out.s, config) {
            Ok(p) => out.stabilizer = Some(p),
            Err(e) => {
                out.skipped.insert("stabilizer".into(), e.to_string());
            }
        }
    }
    match is_basic(graph, &group, mode == AnalysisMode::FullAut, config) {
        Ok(b) => {
            out.basicness = Some(b.label().to_string());
            out.minimal_normal = b.minimal_normal_summary();
            out.witness = b.witness.as_ref().map(WitnessSummary::from);
        }
        Err(e) => {
            out.skipped.insert("basicness".into(), e.to_string());
        }
    }
    Ok(out)
}
