//! Machine-readable verification reports: one record per check, rendered as
//! stable text or JSON. Re-reading a JSON report and re-rendering the text
//! output is byte-identical.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Clone, Copy, PartialEq, Eq, Debug)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Status::Pass => write!(f, "PASS"),
            Status::Fail => write!(f, "FAIL"),
            Status::Skip => write!(f, "SKIP"),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct CheckRecord {
    /// Stable dotted identifier, e.g. "clifford.cl06-gamma.signature".
    pub id: String,
    /// Human-readable statement of the verified claim.
    pub claim: String,
    pub status: Status,
    /// Structured evidence: computed values, counterexamples on failure.
    #[serde(default, skip_serializing_if = "serde_json::Value::is_null")]
    pub witness: serde_json::Value,
}

impl CheckRecord {
    pub fn new(id: impl Into<String>, claim: impl Into<String>, ok: bool) -> CheckRecord {
        CheckRecord {
            id: id.into(),
            claim: claim.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: serde_json::Value::Null,
        }
    }

    pub fn with_witness(mut self, witness: serde_json::Value) -> CheckRecord {
        self.witness = witness;
        self
    }

    pub fn skip(id: impl Into<String>, claim: impl Into<String>, reason: &str) -> CheckRecord {
        CheckRecord {
            id: id.into(),
            claim: claim.into(),
            status: Status::Skip,
            witness: serde_json::json!({ "reason": reason }),
        }
    }

    /// An error while computing is a failure with the message as witness.
    pub fn error(id: impl Into<String>, claim: impl Into<String>, message: &str) -> CheckRecord {
        CheckRecord {
            id: id.into(),
            claim: claim.into(),
            status: Status::Fail,
            witness: serde_json::json!({ "error": message }),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct VerificationReport {
    pub suite: String,
    pub toolkit_version: String,
    pub seed: u64,
    /// SHA-256 of each input data file.
    pub input_hashes: BTreeMap<String, String>,
    pub duration_ms: u64,
    /// Sorted by id.
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn fail_count(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Fail).count()
    }

    pub fn pass_count(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Pass).count()
    }

    /// Deterministic text rendering (a pure function of the report data).
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite: {}\n", self.suite));
        for check in &self.checks {
            out.push_str(&format!("[{}] {} — {}\n", check.status, check.id, check.claim));
            if check.status == Status::Fail && !check.witness.is_null() {
                out.push_str(&format!("       witness: {}\n", check.witness));
            }
        }
        out.push_str(&format!(
            "summary: {} checks, {} passed, {} failed\n",
            self.checks.len(),
            self.pass_count(),
            self.fail_count()
        ));
        out
    }

    pub fn to_json(&self) -> Result<String, String> {
        serde_json::to_string_pretty(self).map_err(|e| e.to_string())
    }

    pub fn from_json(text: &str) -> Result<VerificationReport, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }
}

/// SHA-256 hex digest of a file's contents.
pub fn file_hash(path: &std::path::Path) -> Result<String, String> {
    use sha2::{Digest, Sha256};
    let bytes = std::fs::read(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let digest = Sha256::digest(&bytes);
    Ok(digest.iter().map(|b| format!("{b:02x}")).collect())
}
