//! Verification reports: a list of named checks, each with its inputs, a
//! status and a witness explaining the outcome.

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Recorded evidence that is not part of the pass criterion.
    Info,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub inputs: Value,
    pub status: Status,
    pub witness: Value,
}

impl Check {
    pub fn new(name: impl Into<String>, inputs: Value, passed: bool, witness: Value) -> Self {
        Self {
            name: name.into(),
            inputs,
            status: if passed { Status::Pass } else { Status::Fail },
            witness,
        }
    }

    pub fn info(name: impl Into<String>, inputs: Value, witness: Value) -> Self {
        Self {
            name: name.into(),
            inputs,
            status: Status::Info,
            witness,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub scope: String,
    pub engine_version: u32,
    pub passed: usize,
    pub failed: usize,
    pub info: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(scope: impl Into<String>, checks: Vec<Check>) -> Self {
        let count = |s| checks.iter().filter(|c| c.status == s).count();
        Self {
            scope: scope.into(),
            engine_version: trace_poincare_core::molien::ENGINE_VERSION,
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            info: count(Status::Info),
            checks,
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// One line per check, then a summary line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Info => "info",
            };
            out.push_str(&format!("[{tag}] {} {}", c.name, c.inputs));
            if c.status != Status::Pass {
                out.push_str(&format!(" -> {}", c.witness));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "{}: {} passed, {} failed, {} informational\n",
            self.scope, self.passed, self.failed, self.info
        ));
        out
    }
}
