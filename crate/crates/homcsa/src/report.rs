//! Violation-collecting reports shared by every axiom checker.

use crate::linalg::{LinearMap, Scalar};

/// One failing basis tuple: the tuple itself plus both evaluated sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub indices: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

/// Outcome of checking a single axiom family over all basis tuples.
///
/// `passed` is derived from `violations`, so the two can never disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: String,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn new(axiom: impl Into<String>) -> Self {
        AxiomReport {
            axiom: axiom.into(),
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records a violation when the two sides differ.
    pub fn expect_eq(&mut self, indices: &[usize], lhs: Vec<Scalar>, rhs: Vec<Scalar>) {
        if lhs != rhs {
            self.violations.push(Violation {
                indices: indices.to_vec(),
                lhs,
                rhs,
            });
        }
    }

    /// Matrix form of [`expect_eq`]; entries are recorded row-major.
    pub fn expect_map_eq(&mut self, indices: &[usize], lhs: &LinearMap, rhs: &LinearMap) {
        if lhs != rhs {
            self.violations.push(Violation {
                indices: indices.to_vec(),
                lhs: lhs.entries().to_vec(),
                rhs: rhs.entries().to_vec(),
            });
        }
    }
}

/// A bundle of axiom reports produced by one composite check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub axioms: Vec<AxiomReport>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport::default()
    }

    pub fn passed(&self) -> bool {
        self.axioms.iter().all(AxiomReport::passed)
    }

    pub fn push(&mut self, report: AxiomReport) {
        self.axioms.push(report);
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.axioms.extend(other.axioms);
    }

    /// Merges `other` with every axiom identifier prefixed, used to embed the
    /// report of an underlying structure (a base algebra, a pair member) into
    /// the report of the structure built on top of it.
    pub fn merge_prefixed(&mut self, prefix: &str, other: CheckReport) {
        for mut report in other.axioms {
            report.axiom = format!("{prefix}{}", report.axiom);
            self.axioms.push(report);
        }
    }

    pub fn violation_count(&self) -> usize {
        self.axioms.iter().map(|r| r.violations.len()).sum()
    }

    pub fn failed_axioms(&self) -> Vec<&str> {
        self.axioms
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.axiom.as_str())
            .collect()
    }
}

impl From<AxiomReport> for CheckReport {
    fn from(report: AxiomReport) -> Self {
        CheckReport {
            axioms: vec![report],
        }
    }
}
