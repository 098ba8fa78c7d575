//! Verification reports: the machine-readable result shape every
//! verifier in this crate emits.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseStatus {
    Pass,
    Fail,
    Error,
}

/// One verified condition instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub name: String,
    pub status: CaseStatus,
    pub detail: String,
    pub elapsed_ms: u64,
}

impl Case {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Case {
            name: name.into(),
            status: CaseStatus::Pass,
            detail: detail.into(),
            elapsed_ms: 0,
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Case {
            name: name.into(),
            status: CaseStatus::Fail,
            detail: detail.into(),
            elapsed_ms: 0,
        }
    }

    pub fn error(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Case {
            name: name.into(),
            status: CaseStatus::Error,
            detail: detail.into(),
            elapsed_ms: 0,
        }
    }

    /// Pass/fail from a boolean, with one detail string per outcome.
    pub fn check(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Case::pass(name, detail)
        } else {
            Case::fail(name, detail)
        }
    }

    /// Runs `f`, recording wall-clock time on the produced case.
    pub fn timed(f: impl FnOnce() -> Case) -> Case {
        let start = Instant::now();
        let mut case = f();
        case.elapsed_ms = start.elapsed().as_millis() as u64;
        case
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Overall {
    Pass,
    Fail,
}

/// Report for one command: `overall` is `pass` iff every case passed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub command: String,
    pub cases: Vec<Case>,
    pub overall: Overall,
}

impl VerificationReport {
    pub fn new(command: impl Into<String>, cases: Vec<Case>) -> Self {
        let overall = if cases.iter().all(|c| c.status == CaseStatus::Pass) {
            Overall::Pass
        } else {
            Overall::Fail
        };
        VerificationReport {
            command: command.into(),
            cases,
            overall,
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == Overall::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {:?}", self.command, self.overall)?;
        for c in &self.cases {
            writeln!(f, "  [{:?}] {} - {}", c.status, c.name, c.detail)?;
        }
        Ok(())
    }
}
