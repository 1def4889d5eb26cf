use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rat;
use crate::error::Error;

/// A rational point of the projective line, normalized as `[q:1]` or `[1:0]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ProjPoint {
    Finite(Rat),
    Infinity,
}

impl ProjPoint {
    pub fn finite(q: impl Into<Rat>) -> Self {
        ProjPoint::Finite(q.into())
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ProjPoint::Infinity)
    }
}

impl From<i64> for ProjPoint {
    fn from(n: i64) -> Self {
        ProjPoint::Finite(Rat::from_int(n))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Finite(q) => write!(f, "{q}"),
            ProjPoint::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for ProjPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(ProjPoint::Infinity),
            other => other.parse().map(ProjPoint::Finite),
        }
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ProjPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        // Plain JSON integers are accepted as well as strings.
        let v = serde_json::Value::deserialize(d)?;
        let text = match v {
            serde_json::Value::String(s) => s,
            serde_json::Value::Number(n) if n.is_i64() => n.to_string(),
            other => {
                return Err(serde::de::Error::custom(format!(
                    "expected a point literal, got {other}"
                )))
            }
        };
        text.parse().map_err(serde::de::Error::custom)
    }
}
