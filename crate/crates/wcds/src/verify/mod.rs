//! Cross-checking engine.
//!
//! Every suite compares a claimed value (an embedded reference table, a
//! closed form, a recurrence, a constructive family) against the exhaustive
//! oracle and records one [`CheckRecord`] per cell. A record passes iff the
//! two integers are equal; there is no tolerance anywhere.

mod exhaustive;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use wcds_core::{CountTable, OracleCap};

pub use exhaustive::{edge_deletion_report, structural_report};
pub use suites::{
    cross_check, extension_bases, family_table, join_instances, verify_formula_suite,
    verify_table1, verify_table2, CrossCheck, Method,
};

use crate::random::{DEFAULT_INSTANCES, DEFAULT_SEED};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    /// Graph or parameter tuple under test, e.g. `P_7` or `C_4(m=3) root 2`.
    pub subject: String,
    /// Cell within the subject, e.g. `i=3`.
    pub cell: String,
    /// Where the claimed value comes from.
    pub source: String,
    pub claimed: u64,
    pub oracle: u64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FindingKind {
    /// A failure the alternative reading of the claim accounts for.
    Interpretation,
    /// A failure no recorded reading accounts for.
    Unexplained,
    /// The constructive split hit the case with only the `G(m-1)` family non-empty.
    FirstOnlyCase,
    /// A structural counterexample.
    Counterexample,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub subject: String,
    pub kind: FindingKind,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    /// Instances outside the claim's hypothesis, not counted in `total`.
    pub skipped: usize,
}

/// One reproduced table row, e.g. `d_w(P_5, j)` and its oracle counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub label: String,
    pub counts: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Metadata {
    pub wall_time_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub summary: Summary,
    pub records: Vec<CheckRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub findings: Vec<Finding>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub table: Vec<TableRow>,
    pub metadata: Metadata,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn findings_of(&self, kind: FindingKind) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(move |f| f.kind == kind)
    }
}

pub(crate) struct ReportBuilder {
    suite: String,
    records: Vec<CheckRecord>,
    findings: Vec<Finding>,
    table: Vec<TableRow>,
    skipped: usize,
    started: Instant,
}

impl ReportBuilder {
    pub(crate) fn new(suite: impl Into<String>) -> Self {
        ReportBuilder {
            suite: suite.into(),
            records: Vec::new(),
            findings: Vec::new(),
            table: Vec::new(),
            skipped: 0,
            started: Instant::now(),
        }
    }

    pub(crate) fn check(
        &mut self,
        subject: &str,
        cell: impl Into<String>,
        source: &str,
        claimed: u64,
        oracle: u64,
    ) -> bool {
        let pass = claimed == oracle;
        self.records.push(CheckRecord {
            subject: subject.to_string(),
            cell: cell.into(),
            source: source.to_string(),
            claimed,
            oracle,
            pass,
            note: None,
        });
        pass
    }

    /// Attaches a note to the most recent record.
    pub(crate) fn note(&mut self, note: String) {
        if let Some(last) = self.records.last_mut() {
            last.note = Some(note);
        }
    }

    pub(crate) fn finding(&mut self, subject: &str, kind: FindingKind, detail: String) {
        self.findings.push(Finding {
            subject: subject.to_string(),
            kind,
            detail,
        });
    }

    pub(crate) fn skip(&mut self, count: usize) {
        self.skipped += count;
    }

    pub(crate) fn row(&mut self, label: String, table: &CountTable) {
        self.table.push(TableRow {
            label,
            counts: table.counts().to_vec(),
        });
    }

    pub(crate) fn finish(self) -> VerificationReport {
        let passed = self.records.iter().filter(|r| r.pass).count();
        VerificationReport {
            suite: self.suite,
            summary: Summary {
                total: self.records.len(),
                passed,
                failed: self.records.len() - passed,
                skipped: self.skipped,
            },
            records: self.records,
            findings: self.findings,
            table: self.table,
            metadata: Metadata {
                wall_time_ms: self.started.elapsed().as_secs_f64() * 1e3,
            },
        }
    }
}

/// Named verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Table1,
    Table2,
    Complete,
    Star,
    Wheel,
    Join,
    CoronaGamma,
    JoinGamma,
    GammaPathCycle,
    ExtensionRecurrence,
    ExtensionConstructive,
    ExtensionGamma,
    Boxes,
    EdgeDeletionBounds,
    Structural,
}

impl Suite {
    pub const ALL: [Suite; 15] = [
        Suite::Table1,
        Suite::Table2,
        Suite::Complete,
        Suite::Star,
        Suite::Wheel,
        Suite::Join,
        Suite::CoronaGamma,
        Suite::JoinGamma,
        Suite::GammaPathCycle,
        Suite::ExtensionRecurrence,
        Suite::ExtensionConstructive,
        Suite::ExtensionGamma,
        Suite::Boxes,
        Suite::EdgeDeletionBounds,
        Suite::Structural,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table1 => "table1",
            Suite::Table2 => "table2",
            Suite::Complete => "complete",
            Suite::Star => "star",
            Suite::Wheel => "wheel",
            Suite::Join => "join",
            Suite::CoronaGamma => "corona_gamma",
            Suite::JoinGamma => "join_gamma",
            Suite::GammaPathCycle => "gamma_path_cycle",
            Suite::ExtensionRecurrence => "extension_recurrence",
            Suite::ExtensionConstructive => "extension_constructive",
            Suite::ExtensionGamma => "extension_gamma",
            Suite::Boxes => "boxes",
            Suite::EdgeDeletionBounds => "edge_deletion_bounds",
            Suite::Structural => "structural",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Size bounds for a suite run; `None` picks the suite's default.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest family parameter (`n` of `P_n`, `K_n`, `W_n`, …).
    pub max_n: Option<usize>,
    /// Largest order of part / base graphs.
    pub max_order: Option<usize>,
    /// Largest pendant-path length for the extension suites.
    pub max_m: usize,
    /// Number of seeded random instances.
    pub instances: Option<usize>,
    pub seed: u64,
    pub cap: OracleCap,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: None,
            max_order: None,
            max_m: 6,
            instances: None,
            seed: DEFAULT_SEED,
            cap: OracleCap::default(),
        }
    }
}

impl Limits {
    pub(crate) fn max_n_or(&self, default: usize) -> usize {
        self.max_n.unwrap_or(default)
    }

    pub(crate) fn max_order_or(&self, default: usize) -> usize {
        self.max_order.unwrap_or(default)
    }

    pub(crate) fn instances_or(&self, default: usize) -> usize {
        self.instances.unwrap_or(default)
    }

    pub(crate) fn join_instances(&self) -> usize {
        self.instances_or(DEFAULT_INSTANCES)
    }
}

/// Runs one suite with the given limits.
pub fn run_suite(suite: Suite, limits: &Limits) -> crate::Result<VerificationReport> {
    match suite {
        Suite::Table1 => verify_table1(limits.max_n_or(10), limits.cap),
        Suite::Table2 => verify_table2(limits.max_n_or(14), limits.cap),
        Suite::EdgeDeletionBounds => Ok(edge_deletion_report(limits.max_order_or(7))),
        Suite::Structural => Ok(structural_report(limits.max_order_or(7))),
        other => verify_formula_suite(other, limits),
    }
}
