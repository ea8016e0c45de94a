//! Uniform pass/fail reporting shared by the verification entry points and
//! the command-line surface.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "fail"),
            Status::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// One named finding of a verification run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Finding {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Finding {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Finding {
            name: name.into(),
            status: Status::Pass,
            detail: detail.into(),
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Finding {
            name: name.into(),
            status: Status::Fail,
            detail: detail.into(),
        }
    }

    pub fn of(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Self::pass(name, detail)
        } else {
            Self::fail(name, detail)
        }
    }
}

/// Aggregated verification outcome with an optional step-by-step trace.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub status: Status,
    pub findings: Vec<Finding>,
    pub trace: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Report {
            status: Status::Pass,
            findings: Vec::new(),
            trace: Vec::new(),
        }
    }

    pub fn push(&mut self, finding: Finding) {
        if finding.status == Status::Fail {
            self.status = Status::Fail;
        } else if finding.status == Status::Inconclusive && self.status == Status::Pass {
            self.status = Status::Inconclusive;
        }
        self.findings.push(finding);
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.trace.push(line.into());
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn first_failure(&self) -> Option<&Finding> {
        self.findings.iter().find(|f| f.status == Status::Fail)
    }

    pub fn merge(&mut self, other: Report) {
        for f in other.findings {
            self.push(f);
        }
        self.trace.extend(other.trace);
    }
}

impl Default for Report {
    fn default() -> Self {
        Self::new()
    }
}
