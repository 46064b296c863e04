//! Deterministic JSON reports for the command line front end.
//!
//! A report is a command echo, a digest of the raw inputs, a list of
//! checks (each with a verdict and a certification flag), a command
//! specific payload, and the wall time. Everything except the wall time is
//! byte-identical across runs on the same inputs: maps are ordered and no
//! timestamps enter the payload.

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub verdict: String,
    pub certified: bool,
    pub payload: serde_json::Value,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn pass(check: impl Into<String>, certified: bool) -> CheckResult {
        CheckResult {
            check: check.into(),
            verdict: "pass".into(),
            certified,
            payload: serde_json::Value::Null,
        }
    }

    pub fn of(check: impl Into<String>, ok: bool, certified: bool) -> CheckResult {
        CheckResult {
            check: check.into(),
            verdict: if ok { "pass" } else { "fail" }.into(),
            certified,
            payload: serde_json::Value::Null,
        }
    }

    pub fn with_payload(mut self, payload: serde_json::Value) -> CheckResult {
        self.payload = payload;
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs_digest: String,
    pub checks: Vec<CheckResult>,
    pub payload: serde_json::Value,
    pub wall_time_ms: u64,
}

impl Report {
    pub fn new(command: impl Into<String>, inputs: &[&[u8]]) -> Report {
        let mut hasher = Sha256::new();
        for chunk in inputs {
            hasher.update(chunk);
        }
        Report {
            command: command.into(),
            inputs_digest: hex::encode(hasher.finalize()),
            checks: Vec::new(),
            payload: serde_json::Value::Null,
            wall_time_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    /// Plain-text table for `--pretty`.
    pub fn render_pretty(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("inputs:  sha256:{}\n", self.inputs_digest));
        if !self.checks.is_empty() {
            out.push_str("checks:\n");
            for c in &self.checks {
                out.push_str(&format!(
                    "  [{}] {}{}\n",
                    if c.passed() { "pass" } else { "FAIL" },
                    c.check,
                    if c.certified { "" } else { "  (heuristic)" },
                ));
                if !c.payload.is_null() {
                    out.push_str(&format!("        {}\n", c.payload));
                }
            }
        }
        if !self.payload.is_null() {
            out.push_str(&format!(
                "payload:\n{}\n",
                serde_json::to_string_pretty(&self.payload).expect("payload serialization")
            ));
        }
        out.push_str(&format!("wall time: {} ms\n", self.wall_time_ms));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_stable_and_checks_gate_passing() {
        let mut r1 = Report::new("demo", &[b"abc"]);
        let r2 = Report::new("demo", &[b"abc"]);
        assert_eq!(r1.inputs_digest, r2.inputs_digest);
        assert!(r1.passed());
        r1.checks.push(CheckResult::of("x", false, true));
        assert!(!r1.passed());
        assert!(r1.to_json().contains("\"verdict\": \"fail\""));
    }
}
