//! Uniform result record produced by every verification suite.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub suite: String,
    pub check: String,
    /// Short description of the identity being checked.
    pub paper_ref: String,
    pub params: Value,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    pub fn new(
        suite: &str,
        check: &str,
        paper_ref: &str,
        params: Value,
        pass: bool,
        detail: impl Into<String>,
    ) -> Self {
        CheckResult {
            suite: suite.to_string(),
            check: check.to_string(),
            paper_ref: paper_ref.to_string(),
            params,
            pass,
            detail: detail.into(),
        }
    }

    pub fn text_line(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let params = match &self.params {
            Value::Object(map) if !map.is_empty() => {
                let parts: Vec<String> = map
                    .iter()
                    .map(|(k, v)| format!("{k}={}", plain(v)))
                    .collect();
                format!(" [{}]", parts.join(" "))
            }
            _ => String::new(),
        };
        let detail = if self.detail.is_empty() {
            String::new()
        } else {
            format!(" -- {}", self.detail)
        };
        format!(
            "{status} {}::{}{params} ({}){detail}",
            self.suite, self.check, self.paper_ref
        )
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Pass/fail summary of a batch of checks.
pub fn all_pass(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.pass)
}
