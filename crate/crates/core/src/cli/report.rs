use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::verify::Verdict;

/// Machine-readable summary of one invocation. Everything except
/// `wall_time_ms` is a function of the inputs and the seed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub regime: Option<String>,
    pub engine: Option<String>,
    pub verdict: Option<String>,
    pub witness: Option<Value>,
    pub err_bound: Option<f64>,
    pub detail: Option<Value>,
    pub wall_time_ms: f64,
    pub seed: u64,
}

impl RunReport {
    pub fn new(command: &str, seed: u64) -> Self {
        RunReport {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            regime: None,
            engine: None,
            verdict: None,
            witness: None,
            err_bound: None,
            detail: None,
            wall_time_ms: 0.0,
            seed,
        }
    }

    pub fn param(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), v.into());
        self
    }

    /// Copies the outcome of a verifier into the report.
    pub fn with_verdict(mut self, v: &Verdict) -> Self {
        match v {
            Verdict::Holds { err_bound } => {
                self.verdict = Some("holds".into());
                self.err_bound = Some(*err_bound);
            }
            Verdict::Fails { witness } => {
                self.verdict = Some("fails".into());
                self.witness = witness.map(|w| Value::from(w.to_vec()));
            }
            Verdict::Reject { reason } => {
                self.verdict = Some("reject".into());
                self.detail = Some(Value::from(reason.clone()));
            }
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }
}
