//! Deterministic JSON reports: no timestamps, fixed entry order.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const DEFAULT_CONVENTIONS: &str = "semiclass-conventions/1";

/// `SEMICLASS_CONVENTIONS` pins the convention string; otherwise the default.
pub fn conventions() -> String {
    std::env::var("SEMICLASS_CONVENTIONS").unwrap_or_else(|_| DEFAULT_CONVENTIONS.to_string())
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Entry {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_zero: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass: Option<bool>,
    pub value: Value,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Report {
    pub command: Vec<String>,
    pub inputs_digest: String,
    pub conventions: String,
    pub results: Vec<Entry>,
}

impl Report {
    /// `inputs` are the bytes the results depend on: preset names, file contents.
    pub fn new(command: Vec<String>, inputs: &[&[u8]]) -> Self {
        let mut h = Sha256::new();
        for chunk in inputs {
            h.update((chunk.len() as u64).to_le_bytes());
            h.update(chunk);
        }
        let digest: String = h.finalize().iter().map(|b| format!("{b:02x}")).collect();
        Report {
            command,
            inputs_digest: format!("sha256:{digest}"),
            conventions: conventions(),
            results: Vec::new(),
        }
    }

    /// A residual: `value` is the exact tensor or polynomial.
    pub fn residual(&mut self, name: impl Into<String>, is_zero: bool, value: Value) {
        self.results.push(Entry {
            name: name.into(),
            is_zero: Some(is_zero),
            pass: None,
            value,
        });
    }

    pub fn value(&mut self, name: impl Into<String>, value: Value) {
        self.results.push(Entry {
            name: name.into(),
            is_zero: None,
            pass: None,
            value,
        });
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, value: Value) {
        self.results.push(Entry {
            name: name.into(),
            is_zero: None,
            pass: Some(pass),
            value,
        });
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
