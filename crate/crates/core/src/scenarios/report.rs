//! The JSON report produced by every scenario.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::constructions::{HorizontalReport, LocalLinearityCertificate};
use crate::polyhedra::CoverageReport;
use crate::scalar::Rational;

pub const SCHEMA: &str = "tropcover/1";

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// One `covers(target, cover)` call.
#[derive(Clone, Debug, Serialize)]
pub struct CoverageEntry {
    pub label: String,
    pub target: String,
    pub cover: String,
    pub covered: bool,
    pub uncovered_cells: Vec<usize>,
    pub witnesses: Vec<Vec<Rational>>,
}

impl CoverageEntry {
    pub fn new(label: &str, target: &str, cover: &str, r: &CoverageReport) -> Self {
        CoverageEntry {
            label: label.into(),
            target: target.into(),
            cover: cover.into(),
            covered: r.covered,
            uncovered_cells: r.uncovered_cells(),
            witnesses: r.witnesses.clone(),
        }
    }
}

/// A place where the computation disagrees with a printed statement.
#[derive(Clone, Debug, Serialize)]
pub struct Discrepancy {
    pub id: String,
    pub printed: String,
    pub computed: String,
    pub note: String,
}

/// `im Trop(φ) ⊆ Trop(X)` at sampled points.
#[derive(Clone, Debug, Serialize)]
pub struct ContainmentCheck {
    pub map: String,
    pub variety: String,
    pub points: usize,
    pub failures: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NamedCertificate {
    pub label: String,
    pub certificate: LocalLinearityCertificate,
}

/// The linear projection used to draw a fan in the plane.
#[derive(Clone, Debug, Serialize)]
pub struct PlaneProjection {
    pub rows: Vec<Vec<i64>>,
    pub lineality: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub scenario: String,
    pub params: BTreeMap<String, String>,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<Check>,
    /// Facts computed along the way that are not verdicts.
    pub observations: Vec<Check>,
    pub coverage: Vec<CoverageEntry>,
    pub horizontal: Vec<HorizontalReport>,
    pub certificates: Vec<NamedCertificate>,
    pub containment: Vec<ContainmentCheck>,
    pub discrepancies: Vec<Discrepancy>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub projection: Option<PlaneProjection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u128>>,
}

impl Report {
    pub fn new(scenario: &str, params: &BTreeMap<String, String>, seed: u64) -> Self {
        Report {
            schema: SCHEMA,
            scenario: scenario.into(),
            params: params.clone(),
            seed,
            passed: true,
            checks: Vec::new(),
            observations: Vec::new(),
            coverage: Vec::new(),
            horizontal: Vec::new(),
            certificates: Vec::new(),
            containment: Vec::new(),
            discrepancies: Vec::new(),
            projection: None,
            timings_ms: None,
        }
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) -> bool {
        let detail = detail.into();
        if !passed {
            log::warn!("{}: check `{name}` failed: {detail}", self.scenario);
        }
        self.checks.push(Check { name: name.into(), passed, detail });
        passed
    }

    pub fn observe(&mut self, name: &str, holds: bool, detail: impl Into<String>) {
        self.observations.push(Check { name: name.into(), passed: holds, detail: detail.into() });
    }

    /// Records a coverage call and returns its verdict.
    pub fn coverage(&mut self, label: &str, target: &str, cover: &str, r: &CoverageReport) -> bool {
        self.coverage.push(CoverageEntry::new(label, target, cover, r));
        r.covered
    }

    pub fn discrepancy(&mut self, id: &str, printed: &str, computed: &str, note: &str) {
        self.discrepancies.push(Discrepancy { id: id.into(), printed: printed.into(), computed: computed.into(), note: note.into() });
    }

    pub fn find_check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn find_coverage(&self, label: &str) -> Option<&CoverageEntry> {
        self.coverage.iter().find(|c| c.label == label)
    }

    pub fn containment_failures(&self) -> usize {
        self.containment.iter().map(|c| c.failures.len()).sum()
    }

    pub(crate) fn finish(&mut self) {
        self.passed = self.checks.iter().all(|c| c.passed) && self.containment_failures() == 0;
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}
