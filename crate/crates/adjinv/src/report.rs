//! JSON report envelope shared by every subcommand: a fixed outer shape
//! plus an integer wrapper that never loses precision in transit.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact integer for JSON output. Values with |v| ≤ 2^53 are emitted as
/// JSON numbers; anything larger becomes a decimal string, so readers that
/// parse numbers as doubles never see a rounded value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactInt(pub BigInt);

const SAFE_BOUND: i64 = 1 << 53;

impl From<i64> for ExactInt {
    fn from(v: i64) -> Self {
        ExactInt(BigInt::from(v))
    }
}

impl From<BigInt> for ExactInt {
    fn from(v: BigInt) -> Self {
        ExactInt(v)
    }
}

impl Serialize for ExactInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) if (-SAFE_BOUND..=SAFE_BOUND).contains(&v) => serializer.serialize_i64(v),
            _ => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

struct ExactIntVisitor;

impl Visitor<'_> for ExactIntVisitor {
    type Value = ExactInt;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExactInt, E> {
        Ok(ExactInt(BigInt::from(v)))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExactInt, E> {
        Ok(ExactInt(BigInt::from(v)))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<ExactInt, E> {
        v.parse::<BigInt>()
            .map(ExactInt)
            .map_err(|_| E::custom(format!("not a decimal integer: {v:?}")))
    }
}

impl<'de> Deserialize<'de> for ExactInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(ExactIntVisitor)
    }
}

/// A `serde_json::Value` carrying an exact integer.
pub fn exact_value(v: &BigInt) -> serde_json::Value {
    serde_json::to_value(ExactInt(v.clone())).expect("integer serializes")
}

/// One named verification performed while answering a command.
#[derive(Clone, Serialize, Deserialize, Debug)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Outer shape of every `--json` response.
#[derive(Serialize, Deserialize, Debug)]
pub struct Report {
    pub command: String,
    pub algebra: String,
    pub inputs: serde_json::Value,
    pub result: serde_json::Value,
    pub checks: Vec<CheckLine>,
}

impl Report {
    pub fn new(command: &str, algebra: &str) -> Self {
        Report {
            command: command.to_string(),
            algebra: algebra.to_string(),
            inputs: serde_json::Value::Object(serde_json::Map::new()),
            result: serde_json::Value::Null,
            checks: Vec::new(),
        }
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckLine {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn as_json(v: &BigInt) -> serde_json::Value {
        exact_value(v)
    }

    #[test]
    fn small_integers_stay_numbers() {
        assert_eq!(as_json(&BigInt::from(0)), serde_json::json!(0));
        assert_eq!(as_json(&BigInt::from(-42)), serde_json::json!(-42));
        let bound = BigInt::from(1i64 << 53);
        assert_eq!(as_json(&bound), serde_json::json!(9007199254740992i64));
        assert_eq!(as_json(&-&bound), serde_json::json!(-9007199254740992i64));
    }

    #[test]
    fn large_integers_become_strings() {
        let over = BigInt::from((1i64 << 53) + 1);
        assert_eq!(as_json(&over), serde_json::json!("9007199254740993"));
        let huge: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(
            as_json(&huge),
            serde_json::json!("123456789012345678901234567890")
        );
    }

    #[test]
    fn round_trips_both_encodings() {
        for s in ["0", "-7", "9007199254740993", "-123456789012345678901"] {
            let v: BigInt = s.parse().unwrap();
            let json = as_json(&v);
            let back: ExactInt = serde_json::from_value(json).unwrap();
            assert_eq!(back.0, v);
        }
    }

    #[test]
    fn report_shape_and_checks() {
        let mut r = Report::new("invariants", "B3");
        r.inputs = serde_json::json!({"mu": [1, 0, 0]});
        r.result = serde_json::json!({"dim": 1});
        r.check("closed matches tensor route", true, "1 = 1");
        assert!(r.all_passed());
        r.check("conservation", false, "bad");
        assert!(!r.all_passed());

        let text = serde_json::to_string(&r).unwrap();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["command"], "invariants");
        assert_eq!(value["algebra"], "B3");
        assert_eq!(value["checks"][0]["passed"], true);
        assert_eq!(value["checks"][1]["passed"], false);
    }
}
