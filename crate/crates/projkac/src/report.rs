//! Machine-readable residual reports.

use serde::{Deserialize, Serialize};

/// One pass/fail record: `value` against `tolerance`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub value: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckRecord {
    /// Passes when `value ≤ tolerance`.
    pub fn at_most(check: impl Into<String>, value: f64, tolerance: f64) -> Self {
        CheckRecord { check: check.into(), value, tolerance, pass: value <= tolerance }
    }

    /// Passes when `value ≥ tolerance`; the tolerance is a floor.
    pub fn at_least(check: impl Into<String>, value: f64, tolerance: f64) -> Self {
        CheckRecord { check: check.into(), value, tolerance, pass: value >= tolerance }
    }

    /// Passes when `value < tolerance`.
    pub fn below(check: impl Into<String>, value: f64, tolerance: f64) -> Self {
        CheckRecord { check: check.into(), value, tolerance, pass: value < tolerance }
    }
}

/// A list of records; passes iff every record does.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn push(&mut self, r: CheckRecord) {
        self.checks.push(r);
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| !c.pass)
    }
}
