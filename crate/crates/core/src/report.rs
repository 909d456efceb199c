//! Machine-readable run summaries.

use serde::{Deserialize, Serialize};

use crate::engine::{SolveResult, Stats};
use crate::error::SolveError;

/// One line of benchmark output. `valid` is absent when the run stopped on
/// a limit or an error; `outcome` then says which.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub instance: String,
    pub valid: Option<bool>,
    pub outcome: String,
    pub failures: u64,
    pub rule_applications: u64,
    pub table_hits: u64,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<i64>>,
}

impl RunReport {
    pub fn from_result(instance: impl Into<String>, result: &Result<SolveResult, SolveError>) -> Self {
        let instance = instance.into();
        match result {
            Ok(r) => Self::with_stats(instance, Some(r.valid), if r.valid { "valid" } else { "invalid" }, &r.stats)
                .witness(r.witness.clone()),
            Err(SolveError::LimitExceeded { limit, stats }) => Self::with_stats(instance, None, &limit.to_string(), stats),
            Err(e) => Self::with_stats(instance, None, &format!("error: {e}"), &Stats::default()),
        }
    }

    fn with_stats(instance: String, valid: Option<bool>, outcome: &str, stats: &Stats) -> Self {
        RunReport {
            instance,
            valid,
            outcome: outcome.to_string(),
            failures: stats.failures,
            rule_applications: stats.rule_applications,
            table_hits: stats.table_hits,
            elapsed_ms: stats.elapsed_ms.max(0.0),
            witness: None,
        }
    }

    fn witness(mut self, w: Option<Vec<i64>>) -> Self {
        self.witness = w;
        self
    }

    /// The report with its timing zeroed, for comparing runs.
    pub fn untimed(&self) -> Self {
        RunReport {
            elapsed_ms: 0.0,
            ..self.clone()
        }
    }
}
