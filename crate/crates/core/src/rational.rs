//! Exact rational scalars: the universal number type of the crate.
//!
//! Every quantity that matters is a [`Rational`]; floating point never
//! decides a sign anywhere in this crate. `BigRational` keeps values in
//! canonical form (reduced, positive denominator) after every operation,
//! which is what makes bit-exact golden comparisons possible.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

pub type Rational = num_rational::BigRational;

/// Build a rational from small integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `"p/q"` or `"n"`; the canonical text form used in golden files.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let t = s.trim();
    let err = || ParseRationalError(s.to_owned());
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = t.parse().map_err(|_| err())?;
            Ok(Rational::from_integer(n))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal: {0:?}")]
pub struct ParseRationalError(pub String);

/// Exact integer power with negative exponents allowed (base must be nonzero
/// for negative exponents).
pub fn pow_i(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        num_traits::pow::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow::pow(base.clone(), (-exp) as usize)
            .recip()
    }
}

/// Sign of an exact value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(value: &Rational) -> Sign {
        if value.is_zero() {
            Sign::Zero
        } else if value.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Negative => write!(f, "-"),
            Sign::Zero => write!(f, "0"),
            Sign::Positive => write!(f, "+"),
        }
    }
}

/// A rational extended with the two infinities. Total order:
/// `NegInfinity < every Rational < PosInfinity`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtRational {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

impl ExtRational {
    pub fn finite(value: Rational) -> Self {
        ExtRational::Finite(value)
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            ExtRational::Finite(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRational::Finite(_))
    }
}

impl From<Rational> for ExtRational {
    fn from(value: Rational) -> Self {
        ExtRational::Finite(value)
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::NegInfinity => write!(f, "-inf"),
            ExtRational::Finite(r) => write!(f, "{r}"),
            ExtRational::PosInfinity => write!(f, "inf"),
        }
    }
}

impl FromStr for ExtRational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "+inf" => Ok(ExtRational::PosInfinity),
            "-inf" => Ok(ExtRational::NegInfinity),
            other => parse_rational(other).map(ExtRational::Finite),
        }
    }
}

/// Serde adapters writing rationals as exact fraction strings.
pub mod ratio_string {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Rational, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(de)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

pub mod ratio_string_opt {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Option<Rational>, ser: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(r) => ser.serialize_some(&r.to_string()),
            None => ser.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Option<Rational>, D::Error> {
        let s: Option<String> = Option::deserialize(de)?;
        s.map(|s| parse_rational(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

pub mod ext_string {
    use super::*;

    pub fn serialize<S: Serializer>(value: &ExtRational, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<ExtRational, D::Error> {
        let s = String::deserialize(de)?;
        ExtRational::from_str(&s).map_err(serde::de::Error::custom)
    }
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn zero() -> Rational {
    Rational::zero()
}

/// |value|.
pub fn abs(value: &Rational) -> Rational {
    value.abs()
}
