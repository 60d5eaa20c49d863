//! Census report: per-entry checks, computed values and a summary.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

use super::basic::QuotientWitness;
use super::checks::NormalQuotientCheck;
use super::entries::VerificationLevel;
use crate::symmetry::StabilizerProfile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EntryStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub property: String,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessSummary {
    pub subgroup_order: u128,
    pub orbits: usize,
    pub quotient_vertices: usize,
    pub quotient_valency: Option<usize>,
    pub is_normal_cover: bool,
}

impl From<&QuotientWitness> for WitnessSummary {
    fn from(w: &QuotientWitness) -> Self {
        WitnessSummary {
            subgroup_order: w.subgroup_order,
            orbits: w.orbits,
            quotient_vertices: w.quotient.vertex_count(),
            quotient_valency: w.quotient.valency(),
            is_normal_cover: w.is_normal_cover,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Computed {
    pub vertices: Option<usize>,
    pub valency: Option<usize>,
    pub connected: Option<bool>,
    /// Order of the group analysed: the full automorphism group, or the
    /// constructed group for containment-only entries.
    pub group_order: Option<u128>,
    pub construction_group_order: Option<u128>,
    pub s: Option<u32>,
    pub s_exact: Option<bool>,
    /// s measured with the constructed group, when it is arc-transitive.
    pub construction_s: Option<u32>,
    pub stabilizer: Option<StabilizerProfile>,
    pub basic: Option<bool>,
    pub basicness: Option<String>,
    pub minimal_normal: Vec<(u128, usize)>,
    pub block_systems: Option<usize>,
    pub witness: Option<WitnessSummary>,
    pub normal_quotients: Vec<NormalQuotientCheck>,
    pub metadata: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub status: EntryStatus,
    pub level: VerificationLevel,
    pub citation: String,
    pub recipe: Option<String>,
    pub checks: Vec<Check>,
    pub computed: Computed,
    pub errors: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl EntryReport {
    pub fn new(name: &str, level: VerificationLevel, citation: &str) -> Self {
        EntryReport {
            name: name.to_string(),
            status: EntryStatus::Pass,
            level,
            citation: citation.to_string(),
            recipe: None,
            checks: Vec::new(),
            computed: Computed::default(),
            errors: Vec::new(),
            elapsed_ms: None,
        }
    }

    /// Records a check; a failure is never undone by later checks.
    pub fn check(
        &mut self,
        property: &str,
        expected: impl Serialize,
        computed: impl Serialize,
        pass: bool,
    ) {
        self.checks.push(Check {
            property: property.to_string(),
            expected: serde_json::to_value(expected).unwrap_or(Value::Null),
            computed: serde_json::to_value(computed).unwrap_or(Value::Null),
            pass,
        });
        if !pass {
            self.status = EntryStatus::Fail;
        }
    }

    pub fn error(&mut self, context: &str, message: impl std::fmt::Display) {
        self.errors.push(format!("{context}: {message}"));
        self.status = EntryStatus::Fail;
    }

    pub fn check_by(&self, property: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.property == property)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub seed: u64,
    pub entries: Vec<EntryReport>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(seed: u64, entries: Vec<EntryReport>, elapsed_ms: Option<u64>) -> Self {
        let count = |s| entries.iter().filter(|e| e.status == s).count();
        let summary = Summary {
            total: entries.len(),
            passed: count(EntryStatus::Pass),
            failed: count(EntryStatus::Fail),
            skipped: count(EntryStatus::Skipped),
        };
        Report {
            seed,
            entries,
            summary,
            elapsed_ms,
        }
    }

    pub fn entry(&self, name: &str) -> Option<&EntryReport> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// 0 iff every entry that was not skipped passed.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<20} {:<8} {:>6} {:>10} {:>3}  {:<32} stabilizer",
            "graph", "status", "n", "|G|", "s", "basic"
        );
        for e in &self.entries {
            let c = &e.computed;
            let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
            let status = match e.status {
                EntryStatus::Pass => "pass",
                EntryStatus::Fail => "FAIL",
                EntryStatus::Skipped => "skipped",
            };
            let stab = c
                .stabilizer
                .as_ref()
                .map(|p| format!("{} {}", p.order, p.matched_types.join("/")));
            let _ = writeln!(
                out,
                "{:<20} {:<8} {:>6} {:>10} {:>3}  {:<32} {}",
                e.name,
                status,
                opt(c.vertices.map(|v| v.to_string())),
                opt(c.group_order.map(|v| v.to_string())),
                opt(c.s.map(|v| v.to_string())),
                opt(c.basicness.clone()),
                opt(stab),
            );
            for check in e.checks.iter().filter(|c| !c.pass) {
                let _ = writeln!(
                    out,
                    "    {} failed: expected {}, computed {}",
                    check.property, check.expected, check.computed
                );
            }
            for err in &e.errors {
                let _ = writeln!(out, "    error: {err}");
            }
            if let Some(ms) = e.elapsed_ms {
                let _ = writeln!(out, "    {ms} ms");
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{} entries: {} passed, {} failed, {} skipped",
            s.total, s.passed, s.failed, s.skipped
        );
        out
    }
}
