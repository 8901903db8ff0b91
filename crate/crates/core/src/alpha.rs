//! The order of a Rényi divergence.
//!
//! The limits `0`, `1` and `∞` are separate tags so that each closed form is
//! an explicit branch rather than a numerical edge case of the general one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite order in `(0, 1) ∪ (1, ∞)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Order(f64);

impl Order {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 && value != 1.0 {
            Ok(Order(value))
        } else {
            Err(Error::InvalidAlpha(value))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Alpha {
    /// Support overlap: `-log Q(supp P)`.
    Zero,
    Finite(Order),
    /// Kullback-Leibler.
    One,
    /// Max log-ratio.
    Infinity,
}

impl Alpha {
    /// Maps `0`, `1` and `+∞` to their tags and everything else positive to
    /// [`Alpha::Finite`].
    pub fn new(value: f64) -> Result<Self> {
        if value == 0.0 {
            Ok(Alpha::Zero)
        } else if value == 1.0 {
            Ok(Alpha::One)
        } else if value == f64::INFINITY {
            Ok(Alpha::Infinity)
        } else {
            Order::new(value).map(Alpha::Finite)
        }
    }

    pub fn value(self) -> f64 {
        match self {
            Alpha::Zero => 0.0,
            Alpha::Finite(o) => o.get(),
            Alpha::One => 1.0,
            Alpha::Infinity => f64::INFINITY,
        }
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alpha::Infinity => f.write_str("inf"),
            other => write!(f, "{}", other.value()),
        }
    }
}

impl FromStr for Alpha {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "+inf" | "∞" => return Ok(Alpha::Infinity),
            _ => {}
        }
        let value: f64 = s.parse().map_err(|_| Error::Parse {
            line: None,
            message: format!("cannot parse alpha from {s:?}"),
        })?;
        if value.is_nan() {
            return Err(Error::InvalidAlpha(value));
        }
        Alpha::new(value)
    }
}

impl Serialize for Alpha {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Alpha::Infinity => serializer.serialize_str("inf"),
            other => serializer.serialize_f64(other.value()),
        }
    }
}

impl<'de> Deserialize<'de> for Alpha {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
        }
        let parsed = match Raw::deserialize(deserializer)? {
            Raw::Num(v) => Alpha::new(v),
            Raw::Str(s) => s.parse(),
        };
        parsed.map_err(serde::de::Error::custom)
    }
}
