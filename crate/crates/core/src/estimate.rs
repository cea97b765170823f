//! The common result type of every dimension pipeline.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    PressureRoot,
    ZetaExponent,
    Lyapunov,
    Covering,
    BoxCount,
    EmpiricalEntropy,
}

/// A dimension value with a bracket and free-form diagnostics.
///
/// Non-finite numbers serialize as `null`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DimensionEstimate {
    pub value: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub depth: usize,
    pub method: Method,
    pub diagnostics: BTreeMap<String, Value>,
}

impl DimensionEstimate {
    /// Builds an estimate, widening the bracket if needed so that it
    /// contains `value`; a widening is recorded under `bracket_widened`.
    pub fn new(value: f64, lo: f64, hi: f64, depth: usize, method: Method) -> Self {
        let mut diagnostics = BTreeMap::new();
        let (mut blo, mut bhi) = (lo, hi);
        if value.is_finite() {
            if !(blo <= value) || !(value <= bhi) {
                diagnostics.insert("bracket_widened".into(), Value::Bool(true));
            }
            blo = if blo <= value { blo } else { value };
            bhi = if bhi >= value { bhi } else { value };
        }
        DimensionEstimate {
            value,
            bracket_lo: blo,
            bracket_hi: bhi,
            depth,
            method,
            diagnostics,
        }
    }

    pub fn with(mut self, key: &str, value: impl Serialize) -> Self {
        self.insert(key, value);
        self
    }

    pub fn insert(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).unwrap_or(Value::Null);
        self.diagnostics.insert(key.to_string(), v);
    }
}
