use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Number, Value};
use subcount::IntPolynomial;

/// `{"kind": ..., "inputs": {...}, "value": ..., "meta": {...}}`.
///
/// Counts are decimal strings; polynomials are ascending coefficient arrays.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub kind: String,
    pub inputs: Map<String, Value>,
    pub value: Value,
    pub meta: Map<String, Value>,
}

impl OutputRecord {
    pub fn new(kind: &str, inputs: Map<String, Value>, value: Value) -> Self {
        Self {
            kind: kind.to_owned(),
            inputs,
            value,
            meta: Map::new(),
        }
    }

    pub fn with_meta(mut self, key: &str, value: Value) -> Self {
        self.meta.insert(key.to_owned(), value);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }
}

pub fn count_value(c: &BigUint) -> Value {
    Value::String(c.to_string())
}

pub fn int_value(c: &BigInt) -> Value {
    Value::Number(
        c.to_string()
            .parse::<Number>()
            .expect("decimal integers are JSON numbers"),
    )
}

pub fn poly_value(p: &IntPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(int_value).collect())
}

/// Builds an `inputs` object from `(name, value)` pairs, skipping `None`s.
pub fn inputs<I>(pairs: I) -> Map<String, Value>
where
    I: IntoIterator<Item = (&'static str, Option<u64>)>,
{
    pairs
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k.to_owned(), Value::from(v))))
        .collect()
}
