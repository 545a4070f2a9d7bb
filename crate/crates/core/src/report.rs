//! Structured outcomes of identity-verification runs.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebras::AlgebraSpec;
use crate::gmatrix::GradedMatrix;

/// Counterexamples kept per report before truncation by the caller.
pub const RETAINED_COUNTEREXAMPLES: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// 1-based indices identifying the failing instance (basis positions,
    /// generator indices, or matrix entries depending on the check).
    pub indices: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signs: Option<Vec<i8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation: Option<String>,
    /// LHS − RHS of the failing identity.
    pub residual: GradedMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub spec: AlgebraSpec,
    pub total: u64,
    pub failed: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, spec: AlgebraSpec) -> Self {
        CheckReport { check: check.into(), spec, total: 0, failed: 0, counterexamples: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn record(&mut self, outcome: Option<Counterexample>) {
        self.total += 1;
        if let Some(cex) = outcome {
            self.failed += 1;
            if self.counterexamples.len() < RETAINED_COUNTEREXAMPLES {
                self.counterexamples.push(cex);
            }
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.total += other.total;
        self.failed += other.failed;
        for c in other.counterexamples {
            if self.counterexamples.len() < RETAINED_COUNTEREXAMPLES {
                self.counterexamples.push(c);
            }
        }
    }

    pub fn truncate_counterexamples(&mut self, max: usize) {
        self.counterexamples.truncate(max);
    }

    /// Evaluates `eval` on every instance (possibly in parallel) and records
    /// outcomes in input order, so the report does not depend on scheduling.
    pub fn run<I, F>(&mut self, instances: &[I], eval: F)
    where
        I: Sync,
        F: Fn(&I) -> Option<Counterexample> + Sync,
    {
        let outcomes: Vec<Option<Counterexample>> = instances.par_iter().map(&eval).collect();
        for o in outcomes {
            self.record(o);
        }
    }
}

/// `Some(counterexample)` when `residual` is nonzero.
pub fn nonzero_residual(indices: Vec<usize>, residual: GradedMatrix) -> Option<Counterexample> {
    if residual.is_zero() {
        None
    } else {
        Some(Counterexample { indices, signs: None, relation: None, residual })
    }
}
