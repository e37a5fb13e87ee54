//! Verification reports and their text and JSON forms.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Sampled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

/// One verified statement. `residual` is `"0"` exactly when it passed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Outcome {
    pub id: String,
    pub description: String,
    pub status: Status,
    pub residual: String,
}

impl Outcome {
    pub fn new(id: impl Into<String>, description: impl Into<String>, residual: Option<String>) -> Outcome {
        let (status, residual) = match residual {
            None => (Status::Pass, "0".to_string()),
            Some(r) => (Status::Fail, r),
        };
        Outcome { id: id.into(), description: description.into(), status, residual }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub mode: Mode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<usize>,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<Outcome>,
}

impl Report {
    pub fn new(suite: &str, mode: Mode, seed: Option<u64>, points: Option<usize>, checks: Vec<Outcome>) -> Report {
        let passed = checks.iter().filter(|c| c.passed()).count();
        Report { suite: suite.to_string(), mode, seed, points, passed, failed: checks.len() - passed, checks }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn check(&self, id: &str) -> Option<&Outcome> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mode = match self.mode {
            Mode::Exact => "exact".to_string(),
            Mode::Sampled => format!("sampled, {} points, seed {}", self.points.unwrap_or(0), self.seed.unwrap_or(0)),
        };
        writeln!(out, "suite {} ({mode})", self.suite).unwrap();
        for c in &self.checks {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(out, "{tag}  {}  {}", c.id, c.description).unwrap();
            if !c.passed() {
                writeln!(out, "      residual: {}", c.residual).unwrap();
            }
        }
        writeln!(out, "{} passed, {} failed", self.passed, self.failed).unwrap();
        out
    }
}
