use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, CliResult};

pub const SCHEMA_VERSION: u32 = 1;

/// Every run writes one of these. Timing is deliberately absent so that
/// identical configurations give identical bytes.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub schema_version: u32,
    pub tool: String,
    pub version: String,
    pub command: String,
    /// The fully resolved configuration, defaults included.
    pub config: Value,
    pub result: Value,
}

impl Report {
    pub fn new(command: &str, config: Value, result: Value) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            config,
            result,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> CliResult<Self> {
        let r: Report =
            serde_json::from_str(text).map_err(|e| CliError::Usage(format!("report: {e}")))?;
        if r.schema_version != SCHEMA_VERSION {
            return Err(CliError::Usage(format!(
                "unsupported report schema {}",
                r.schema_version
            )));
        }
        Ok(r)
    }

    /// Result value at a `/`-separated JSON pointer below `result`.
    pub fn get(&self, pointer: &str) -> Option<&Value> {
        self.result.pointer(pointer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn round_trip_and_unknown_fields() {
        let r = Report::new("check", json!({"system": "x.json"}), json!({"value": 1.5}));
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
        let mut v: Value = serde_json::from_str(&r.to_json()).unwrap();
        v["elapsed"] = json!(0.1);
        assert!(Report::from_json(&v.to_string()).is_err());
        v.as_object_mut().unwrap().remove("elapsed");
        v["schema_version"] = json!(99);
        assert!(Report::from_json(&v.to_string()).is_err());
    }
}
