//! Structured command output.
//!
//! Every report has the keys `command`, `inputs`, `results` and `version`.
//! Objects are `serde_json::Map`, which keeps keys sorted, so the pretty
//! printed form is byte-stable.

use orbitcalc_core::Partition;
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
}

impl Report {
    pub fn new(command: &str, inputs: Value, results: Value) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            results,
        }
    }

    pub fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "version": env!("CARGO_PKG_VERSION"),
        })
    }

    pub fn to_json(&self) -> String {
        canonical_json(&self.to_value())
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn canonical_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn partition_value(p: &Partition) -> Value {
    Value::String(p.to_string())
}

pub fn partitions_value<'a, I: IntoIterator<Item = &'a Partition>>(ps: I) -> Value {
    Value::Array(ps.into_iter().map(partition_value).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_sorted_and_output_round_trips() {
        let r = Report::new(
            "orbit info",
            json!({"partition": "7,3,1", "group": "O11"}),
            json!({"rank": 8, "depth": 7, "om": [7, 3]}),
        );
        let text = r.to_json();
        let command = text.find("\"command\"").unwrap();
        let inputs = text.find("\"inputs\"").unwrap();
        let group = text.find("\"group\"").unwrap();
        let partition = text.find("\"partition\"").unwrap();
        assert!(command < inputs && group < partition);
        let reparsed: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(canonical_json(&reparsed), text);
    }
}
