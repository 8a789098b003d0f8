use serde::{Deserialize, Serialize};

/// Version tag carried by every envelope and CSV header.
pub const SCHEMA_VERSION: &str = "cicrit/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

impl Format {
    pub fn parse(text: &str) -> Option<Format> {
        match text {
            "json" => Some(Format::Json),
            "csv" => Some(Format::Csv),
            "plain" => Some(Format::Plain),
            _ => None,
        }
    }
}

/// The single JSON payload of a successful invocation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputEnvelope {
    pub schema_version: String,
    pub command: String,
    pub inputs: serde_json::Value,
    pub result: serde_json::Value,
    pub notes: Vec<String>,
}

impl OutputEnvelope {
    pub fn new(
        command: &str,
        inputs: serde_json::Value,
        result: serde_json::Value,
        notes: Vec<String>,
    ) -> Self {
        OutputEnvelope {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            inputs,
            result,
            notes,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("envelope serializes");
        text.push('\n');
        text
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn envelope_roundtrip() {
        let env = OutputEnvelope::new(
            "variety",
            serde_json::json!({"type": "A", "rank": 11, "node": 1}),
            serde_json::json!({"dim": 11}),
            vec!["note".into()],
        );
        let text = env.to_json();
        let back: OutputEnvelope = serde_json::from_str(&text).unwrap();
        assert_eq!(env, back);
    }
}
