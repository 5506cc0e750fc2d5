//! Verification reports and their JSON and text renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// Where two sides first disagree, or why a case could not be evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Flat index into the case's value list; `None` when the builder failed.
    pub index: Option<usize>,
    pub lhs: String,
    pub rhs: String,
    /// Evaluation point, `symbolic` or `s=1/2, t=-3, ...`.
    pub point: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail { witness: Witness },
    /// A printed form registered as wrong, with the witness that shows it.
    ExpectedFailure { witness: Witness },
    Skipped { reason: String },
}

impl Status {
    /// True for a pass or an expected failure of a printed form.
    pub fn ok(&self) -> bool {
        matches!(self, Status::Pass | Status::ExpectedFailure { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail { .. } => "FAIL",
            Status::ExpectedFailure { .. } => "XFAIL",
            Status::Skipped { .. } => "SKIP",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub id: String,
    pub reference: String,
    pub ring: String,
    pub expect: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
    #[serde(flatten)]
    pub status: Status,
    /// Whether a fully symbolic run took place.
    pub symbolic: bool,
    /// Number of random rational points evaluated.
    pub points: usize,
    pub millis: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub order: usize,
    pub seed: u64,
    pub cases: Vec<CaseReport>,
    pub millis: u64,
}

impl VerifyReport {
    pub fn all_ok(&self) -> bool {
        self.cases.iter().all(|c| c.status.ok())
    }

    pub fn count(&self, label: &str) -> usize {
        self.cases.iter().filter(|c| c.status.label() == label).count()
    }

    pub fn case(&self, id: &str) -> Option<&CaseReport> {
        self.cases.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let how = match (c.symbolic, c.points) {
                (true, 0) => "symbolic".to_string(),
                (true, n) => format!("symbolic + {n} points"),
                (false, n) => format!("{n} points"),
            };
            let _ = writeln!(out, "{:<5} {:<40} {:>8} ms  {}", c.status.label(), c.id, c.millis, how);
            match &c.status {
                Status::Fail { witness } | Status::ExpectedFailure { witness } => {
                    if let Some(m) = &witness.message {
                        let _ = writeln!(out, "        {m}");
                    }
                    if let Some(i) = witness.index {
                        let _ = writeln!(out, "        at index {i}, point {}", witness.point);
                        let _ = writeln!(out, "        lhs = {}", witness.lhs);
                        let _ = writeln!(out, "        rhs = {}", witness.rhs);
                    }
                    if !c.note.is_empty() {
                        let _ = writeln!(out, "        note: {}", c.note);
                    }
                }
                Status::Skipped { reason } => {
                    let _ = writeln!(out, "        {reason}");
                }
                Status::Pass => {}
            }
        }
        let _ = writeln!(
            out,
            "order {}, seed {}: {} pass, {} expected failures, {} fail, {} skipped ({} ms)",
            self.order,
            self.seed,
            self.count("PASS"),
            self.count("XFAIL"),
            self.count("FAIL"),
            self.count("SKIP"),
            self.millis
        );
        out
    }
}
