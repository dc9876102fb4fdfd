use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Known disagreement or open item; listed but does not fail the suite.
    Flagged,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub certificate: Value,
}

impl CheckRecord {
    pub fn new(
        name: &str,
        pass: bool,
        detail: impl Into<String>,
        certificate: Value,
    ) -> CheckRecord {
        CheckRecord {
            name: name.to_string(),
            status: if pass { Status::Pass } else { Status::Fail },
            detail: detail.into(),
            certificate,
        }
    }

    pub fn flagged(name: &str, detail: impl Into<String>, certificate: Value) -> CheckRecord {
        CheckRecord {
            name: name.to_string(),
            status: Status::Flagged,
            detail: detail.into(),
            certificate,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub flagged: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<CheckRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<Summary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    pub timing_ms: f64,
}

impl ReportDocument {
    pub fn new(command: &str, input: Value) -> ReportDocument {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            tool: "per4".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            input,
            checks: None,
            summary: None,
            result: None,
            timing_ms: 0.0,
        }
    }

    pub fn with_checks(mut self, mut checks: Vec<CheckRecord>) -> ReportDocument {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let mut s = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Flagged => s.flagged += 1,
            }
        }
        self.summary = Some(s);
        self.checks = Some(checks);
        self
    }

    pub fn with_result(mut self, result: Value) -> ReportDocument {
        self.result = Some(result);
        self
    }

    pub fn failed(&self) -> Vec<&str> {
        self.checks
            .iter()
            .flatten()
            .filter(|c| c.status == Status::Fail)
            .map(|c| c.name.as_str())
            .collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// The document with the timing field cleared, for comparisons.
    pub fn without_timing(&self) -> ReportDocument {
        ReportDocument {
            timing_ms: 0.0,
            ..self.clone()
        }
    }
}
