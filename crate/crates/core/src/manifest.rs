use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Provenance block embedded in every emitted report. Two runs with equal
/// manifests produce byte-identical reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool_version: String,
    pub subcommand: String,
    /// Fully resolved settings, keys sorted.
    pub resolved_config: BTreeMap<String, serde_json::Value>,
    /// `sha256:<hex>` of the input bytes, when there is an input file.
    pub input_digest: Option<String>,
    pub seed: Option<u64>,
}

impl RunManifest {
    pub fn new(subcommand: &str) -> Self {
        RunManifest {
            tool_version: crate::VERSION.to_owned(),
            subcommand: subcommand.to_owned(),
            resolved_config: BTreeMap::new(),
            input_digest: None,
            seed: None,
        }
    }

    /// Records a setting. Values that fail to serialize are stored as null.
    pub fn set(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        let v = serde_json::to_value(value).unwrap_or(serde_json::Value::Null);
        self.resolved_config.insert(key.to_owned(), v);
        self
    }
}
