use serde::Serialize;
use serde_json::{Map, Value};
use std::fmt;

/// Outcome of a verification routine.
///
/// Serializes as `{"check": name, "params": {...}, "pass": bool,
/// "first_failure": optional detail}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub params: Map<String, Value>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl Report {
    pub fn new(check: impl Into<String>) -> Self {
        Report {
            check: check.into(),
            params: Map::new(),
            pass: true,
            first_failure: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    /// Records a failure. Only the first one is kept.
    pub fn fail(&mut self, detail: impl Into<String>) {
        if self.pass {
            self.pass = false;
            self.first_failure = Some(detail.into());
        }
    }

    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.fail(detail());
        }
    }

    /// Folds a sub-report into this one.
    pub fn absorb(&mut self, other: &Report) {
        if !other.pass {
            let detail = other.first_failure.clone().unwrap_or_default();
            self.fail(format!("{}: {}", other.check, detail));
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        write!(
            f,
            "{} [{}]: {}",
            self.check,
            params,
            if self.pass { "pass" } else { "FAIL" }
        )?;
        if let Some(detail) = &self.first_failure {
            write!(f, " ({detail})")?;
        }
        Ok(())
    }
}
