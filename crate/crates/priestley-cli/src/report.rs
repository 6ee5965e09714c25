//! The check report emitted by every suite: a schema-versioned JSON
//! document with one row per check, aggregate counts, and (only on
//! request) wall-clock timings. Field order is fixed by the struct and
//! the counts map is sorted, so identical inputs render byte-identical
//! reports — the property the golden tests pin down. Timings are opt-in
//! precisely because they would break that.

use std::collections::BTreeMap;

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub status: &'static str,
    /// Human-readable summary of what was verified, present on passes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// On failure: enough information to re-trigger the failure on its
    /// own (the offending triple, pair, filter, or family).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckRow {
    pub fn pass(name: &str, detail: String) -> CheckRow {
        CheckRow {
            name: name.to_string(),
            status: "pass",
            detail: Some(detail),
            witness: None,
        }
    }

    pub fn fail(name: &str, witness: String) -> CheckRow {
        CheckRow {
            name: name.to_string(),
            status: "fail",
            detail: None,
            witness: Some(witness),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckReport {
    pub schema_version: u32,
    pub suite: String,
    pub subject: String,
    pub checks: Vec<CheckRow>,
    pub counts: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u64>>,
}

impl CheckReport {
    pub fn new(suite: &str, subject: String) -> CheckReport {
        CheckReport {
            schema_version: SCHEMA_VERSION,
            suite: suite.to_string(),
            subject,
            checks: Vec::new(),
            counts: BTreeMap::new(),
            timings_ms: None,
        }
    }

    pub fn count(&mut self, key: &str, value: u64) {
        self.counts.insert(key.to_string(), value);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == "pass")
    }

    pub fn render(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }
}
