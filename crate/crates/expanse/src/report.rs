//! Machine-readable reports. A report is deterministic for a fixed input,
//! seed and tool version: wall-clock timing never enters the JSON body, only
//! deterministic work counters do.

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const TOOL_NAME: &str = "expanse";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: ToolInfo,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_digest: Option<String>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub params: Value,
    pub verdict: Value,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub witness: Value,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub details: Value,
    /// Deterministic work counters (S-pairs spent, instances run).
    #[serde(skip_serializing_if = "Value::is_null")]
    pub work: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            tool: ToolInfo { name: TOOL_NAME, version: TOOL_VERSION },
            command: command.into(),
            input_digest: None,
            params: Value::Null,
            verdict: Value::Null,
            witness: Value::Null,
            details: Value::Null,
            work: Value::Null,
        }
    }

    pub fn with_input(mut self, raw: &[u8]) -> Self {
        self.input_digest = Some(digest(raw));
        self
    }

    pub fn render_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} {}\n", TOOL_NAME, TOOL_VERSION));
        out.push_str(&format!("command: {}\n", self.command));
        if let Some(d) = &self.input_digest {
            out.push_str(&format!("input:   {d}\n"));
        }
        if !self.params.is_null() {
            out.push_str(&format!("params:  {}\n", compact(&self.params)));
        }
        out.push_str(&format!("verdict: {}\n", compact(&self.verdict)));
        if !self.witness.is_null() {
            out.push_str(&format!("witness: {}\n", compact(&self.witness)));
        }
        if !self.details.is_null() {
            out.push_str(&format!("details: {}\n", compact(&self.details)));
        }
        if !self.work.is_null() {
            out.push_str(&format!("work:    {}\n", compact(&self.work)));
        }
        out
    }
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("value serializes")
}

pub fn digest(raw: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(raw);
    format!("sha256:{}", hex_encode(&hasher.finalize()))
}

fn hex_encode(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Convenience for structured verdict values.
pub fn value_of<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

pub fn json_obj(pairs: &[(&str, Value)]) -> Value {
    let mut map = serde_json::Map::new();
    for (k, v) in pairs {
        map.insert((*k).into(), v.clone());
    }
    Value::Object(map)
}

#[allow(unused_imports)]
pub use serde_json::json as json_value;
