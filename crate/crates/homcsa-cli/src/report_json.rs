//! Run reports: the JSON schema emitted by `--json` and the human printer.

use homcsa::{CheckReport, Violation};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::formats::rational_string;

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub reports: Vec<AxiomJson>,
    pub verdict: bool,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomJson {
    pub axiom: String,
    pub passed: bool,
    pub violations: Vec<ViolationJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ViolationJson {
    pub indices: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

impl From<&Violation> for ViolationJson {
    fn from(v: &Violation) -> Self {
        ViolationJson {
            indices: v.indices.clone(),
            lhs: v.lhs.iter().map(rational_string).collect(),
            rhs: v.rhs.iter().map(rational_string).collect(),
        }
    }
}

/// Flattens a check into report rows, optionally prefixing axiom names with
/// an input label (used when one invocation covers several files).
pub fn rows_from_check(prefix: &str, report: &CheckReport) -> Vec<AxiomJson> {
    report
        .axioms
        .iter()
        .map(|axiom| AxiomJson {
            axiom: format!("{prefix}{}", axiom.axiom),
            passed: axiom.passed(),
            violations: axiom.violations.iter().map(ViolationJson::from).collect(),
        })
        .collect()
}

/// A row for a condition that is evaluated as a whole (no per-tuple
/// violations), such as one branch of the equivalence report.
pub fn verdict_row(axiom: impl Into<String>, passed: bool) -> AxiomJson {
    AxiomJson {
        axiom: axiom.into(),
        passed,
        violations: Vec::new(),
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

impl RunReport {
    pub fn new(command: String, inputs: Vec<InputDigest>, reports: Vec<AxiomJson>, elapsed_ms: u64) -> Self {
        let verdict = reports.iter().all(|r| r.passed);
        RunReport {
            command,
            inputs,
            reports,
            verdict,
            elapsed_ms,
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    /// One line per axiom, a verdict line last. Violations print their first
    /// few offending tuples; exact sides are available via `--json`.
    pub fn to_human(&self) -> String {
        let mut out = String::new();
        for row in &self.reports {
            if row.passed {
                out.push_str(&format!("ok    {}\n", row.axiom));
            } else if row.violations.is_empty() {
                out.push_str(&format!("FAIL  {}\n", row.axiom));
            } else {
                out.push_str(&format!(
                    "FAIL  {}  ({} violation{})\n",
                    row.axiom,
                    row.violations.len(),
                    if row.violations.len() == 1 { "" } else { "s" }
                ));
                for v in row.violations.iter().take(3) {
                    out.push_str(&format!(
                        "      at {:?}: lhs = [{}], rhs = [{}]\n",
                        v.indices,
                        v.lhs.join(", "),
                        v.rhs.join(", ")
                    ));
                }
                if row.violations.len() > 3 {
                    out.push_str(&format!(
                        "      ... {} more\n",
                        row.violations.len() - 3
                    ));
                }
            }
        }
        out.push_str(&format!(
            "verdict: {} ({} ms)\n",
            if self.verdict { "PASS" } else { "FAIL" },
            self.elapsed_ms
        ));
        out
    }
}
