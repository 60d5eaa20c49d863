//! The census harness: expected values for every constructible graph checked
//! against what is computed.

pub mod analysis;
pub mod basic;
pub mod checks;
pub mod entries;
pub mod report;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

pub use analysis::{analyze, Analysis, AnalysisMode};
pub use basic::{
    basic_by_blocks, is_basic, minimal_normal_with_orbits, normal_quotient_tree, Basicness,
    BlockRoute, QuotientChild, QuotientNode, QuotientWitness,
};
pub use checks::{
    check_normal_quotient, check_stabilizer_taxonomy, NormalQuotientCheck, TaxonomyCheck,
};
pub use entries::{default_entries, CensusEntry, VerificationLevel, FULL_AUT_MAX_VERTICES};
pub use report::{Check, Computed, EntryReport, EntryStatus, Report, Summary, WitnessSummary};

use crate::config::Config;
use crate::graph::named;
use crate::perm::PermGroup;
use crate::symmetry::{
    automorphism_group, is_arc_transitive, s_transitivity, verify_automorphisms, ARC_ORBIT_LIMIT,
};

#[derive(Clone, Debug)]
pub struct CensusOptions {
    pub config: Config,
    /// Record wall-clock timings; off for byte-identical reports.
    pub timings: bool,
    /// Worker threads; entries are independent.
    pub jobs: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            config: Config::default(),
            timings: true,
            jobs: 1,
        }
    }
}

/// Runs every entry, isolating failures (including panics) per entry.
pub fn run_census(entries: &[CensusEntry], options: &CensusOptions) -> Report {
    let start = Instant::now();
    let slots: Vec<Mutex<Option<EntryReport>>> = entries.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let worker = || loop {
        let i = next.fetch_add(1, Ordering::SeqCst);
        if i >= entries.len() {
            break;
        }
        let report = run_entry(&entries[i], options);
        *slots[i].lock().expect("slot") = Some(report);
    };
    let jobs = options.jobs.clamp(1, entries.len().max(1));
    if jobs == 1 {
        worker();
    } else {
        std::thread::scope(|scope| {
            for _ in 0..jobs {
                scope.spawn(worker);
            }
        });
    }
    let reports = slots
        .into_iter()
        .map(|s| s.into_inner().expect("slot").expect("every entry ran"))
        .collect();
    let elapsed = options.timings.then(|| start.elapsed().as_millis() as u64);
    Report::new(options.config.seed, reports, elapsed)
}

/// Verifies a single entry.
pub fn run_entry(entry: &CensusEntry, options: &CensusOptions) -> EntryReport {
    let mut report = EntryReport::new(&entry.name, entry.level, &entry.citation);
    if entry.stretch && !options.config.stretch_graphs {
        report.status = EntryStatus::Skipped;
        return report;
    }
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(|| {
        evaluate(entry, &options.config, &mut report)
    }));
    if outcome.is_err() {
        report.error("internal", "verification panicked");
    }
    if options.timings {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    report
}

fn evaluate(entry: &CensusEntry, config: &Config, report: &mut EntryReport) {
    let built = match named(&entry.name, config) {
        Ok(g) => g,
        Err(e) => return report.error("construction", e),
    };
    let graph = &built.graph;
    report.recipe = graph.recipe().map(str::to_string);
    report.computed.metadata = built.metadata.clone();
    let c = &mut report.computed;
    c.vertices = Some(graph.vertex_count());
    c.valency = graph.valency();
    c.connected = Some(graph.is_connected());
    c.construction_group_order = built.group.as_ref().map(|g| g.order_u128());
    report.check(
        "order",
        entry.expected_order,
        graph.vertex_count(),
        graph.vertex_count() == entry.expected_order,
    );
    report.check(
        "valency",
        entry.expected_valency,
        graph.valency(),
        graph.valency() == Some(entry.expected_valency),
    );
    report.check(
        "connected",
        true,
        graph.is_connected(),
        graph.is_connected(),
    );

    let group: PermGroup = match entry.level {
        VerificationLevel::FullAut => {
            let aut = match automorphism_group(graph, config) {
                Ok(a) => a,
                Err(e) => return report.error("automorphism group", e),
            };
            if let Some(expected) = entry.expected_aut_order {
                report.check(
                    "aut_order",
                    expected,
                    aut.order_u128(),
                    aut.order_u128() == expected,
                );
            }
            if let Some(g) = &built.group {
                let acts =
                    verify_automorphisms(graph, g).unwrap_or(false) && g.is_subgroup_of(&aut);
                report.check("construction_group_in_aut", true, acts, acts);
            }
            aut
        }
        VerificationLevel::ContainmentOnly => {
            let Some(g) = built.group.clone() else {
                return report.error("containment", "construction provides no group");
            };
            let acts = verify_automorphisms(graph, &g).unwrap_or(false);
            report.check("construction_group_acts", true, acts, acts);
            if let Some(expected) = entry.expected_aut_order {
                report.check(
                    "group_order",
                    expected,
                    g.order_u128(),
                    g.order_u128() == expected,
                );
            }
            g
        }
    };
    report.computed.group_order = Some(group.order_u128());

    match is_arc_transitive(graph, &group) {
        Ok(t) => report.check("arc_transitive", true, t, t),
        Err(e) => return report.error("arc transitivity", e),
    }

    match check_stabilizer_taxonomy(graph, &group, config) {
        Ok(tax) => {
            report.computed.s = Some(tax.s);
            report.computed.s_exact = Some(tax.s_exact);
            if let Some(s) = entry.expected_s {
                report.check("s", s, tax.s, s == tax.s);
            }
            report.check(
                "stabilizer_divides_23040",
                true,
                tax.stabilizer.order,
                tax.divides_bound,
            );
            report.check(
                "stabilizer_taxonomy",
                true,
                &tax.stabilizer.matched_types,
                tax.pass,
            );
            report.computed.stabilizer = Some(tax.stabilizer);
        }
        Err(e) => report.error("stabilizer taxonomy", e),
    }

    // The constructed action can only be less transitive than the full group.
    if entry.level == VerificationLevel::FullAut && built.arc_transitive {
        if let Some(g) = &built.group {
            if let Ok(st) = s_transitivity(graph, g, ARC_ORBIT_LIMIT) {
                report.computed.construction_s = Some(st.s);
                if let Some(s) = report.computed.s {
                    report.check("construction_s_at_most_full_s", s, st.s, st.s <= s);
                }
            }
        }
    }

    let full = entry.level == VerificationLevel::FullAut;
    let b = match is_basic(graph, &group, full, config) {
        Ok(b) => b,
        Err(e) => {
            if full && entry.expected_basic.is_some() {
                report.error("basicness", e);
            } else {
                report.computed.basicness = Some(format!("undecided: {e}"));
            }
            return;
        }
    };
    let c = &mut report.computed;
    c.basic = Some(b.basic);
    c.minimal_normal = b.minimal_normal_summary();
    c.block_systems = b.block_route.as_ref().map(|r| r.systems);
    c.basicness = Some(b.label().to_string());
    c.witness = b.witness.as_ref().map(WitnessSummary::from);
    if let Some(agree) = b.routes_agree() {
        report.check("basic_routes_agree", true, agree, agree);
    }
    if full {
        if let Some(expected) = entry.expected_basic {
            report.check(
                "basic",
                expected,
                b.basic,
                b.basic == expected && b.certain(),
            );
        }
    }

    // Every minimal normal subgroup with at least three orbits must give a
    // semiregular action and a pentavalent arc-transitive quotient.
    for (n, k) in &b.minimal {
        if *k < 3 {
            continue;
        }
        match check_normal_quotient(graph, &group, n) {
            Ok(q) => {
                report.check("normal_quotient", true, q.pass, q.pass);
                report.computed.normal_quotients.push(q);
            }
            Err(e) => report.error("normal quotient", e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stretch_entries_are_skipped() {
        let entries: Vec<_> = default_entries()
            .into_iter()
            .filter(|e| e.stretch)
            .collect();
        let report = run_census(&entries, &CensusOptions::default());
        assert_eq!(report.summary.skipped, entries.len());
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn corrupted_entry_fails_alone() {
        let mut entries: Vec<_> = default_entries()
            .into_iter()
            .filter(|e| ["K6", "I12"].contains(&e.name.as_str()))
            .collect();
        entries[0].expected_aut_order = Some(721);
        let options = CensusOptions {
            timings: false,
            ..CensusOptions::default()
        };
        let report = run_census(&entries, &options);
        assert_eq!(report.entry("K6").unwrap().status, EntryStatus::Fail);
        assert_eq!(report.entry("I12").unwrap().status, EntryStatus::Pass);
        assert_eq!(report.exit_code(), 1);
        assert!(
            !report
                .entry("K6")
                .unwrap()
                .check_by("aut_order")
                .unwrap()
                .pass
        );
    }
}
