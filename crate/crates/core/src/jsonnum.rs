//! Exact numbers over the JSON boundary: integers stay JSON numbers while
//! they fit in i64, everything else is carried as a decimal or "num/den"
//! string, so nothing is ever rounded.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

/// Exact integer payload.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactInt(pub BigInt);

impl Serialize for ExactInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) => serializer.serialize_i64(v),
            Err(_) => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for ExactInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = ExactInt;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal integer string")
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
                    .map_err(|_| E::custom(format!("invalid integer literal: {v:?}")))
            }
        }
        deserializer.deserialize_any(V)
    }
}

/// Exact rational payload; integral values round-trip as integers,
/// non-integral ones as "num/den" strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactRat(pub BigRational);

impl Serialize for ExactRat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.0.denom().is_one() {
            ExactInt(self.0.numer().clone()).serialize(serializer)
        } else {
            serializer.serialize_str(&format!("{}/{}", self.0.numer(), self.0.denom()))
        }
    }
}

impl<'de> Deserialize<'de> for ExactRat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = ExactRat;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a \"num/den\" string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExactRat, E> {
                Ok(ExactRat(BigRational::from_integer(BigInt::from(v))))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExactRat, E> {
                Ok(ExactRat(BigRational::from_integer(BigInt::from(v))))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<ExactRat, E> {
                parse_rational(v)
                    .map(ExactRat)
                    .ok_or_else(|| E::custom(format!("invalid rational literal: {v:?}")))
            }
        }
        deserializer.deserialize_any(V)
    }
}

/// Parse "n" or "n/d" with nonzero denominator.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    match text.split_once('/') {
        None => text
            .trim()
            .parse::<BigInt>()
            .ok()
            .map(BigRational::from_integer),
        Some((num, den)) => {
            let num = num.trim().parse::<BigInt>().ok()?;
            let den = den.trim().parse::<BigInt>().ok()?;
            if den == BigInt::from(0) {
                None
            } else {
                Some(BigRational::new(num, den))
            }
        }
    }
}
