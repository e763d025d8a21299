//! Exact values of the form `pi * sqrt(q)` with `q` a nonnegative rational.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, parse_rational};
use crate::Rational;

/// `pi * sqrt(radicand)`. Equality and ordering compare radicands exactly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiSqrtValue {
    radicand: Rational,
}

impl PiSqrtValue {
    pub fn new(radicand: Rational) -> Result<Self> {
        if radicand.is_negative() {
            return Err(Error::NegativeRadicand(format_rational(&radicand)));
        }
        Ok(Self { radicand })
    }

    pub fn zero() -> Self {
        Self {
            radicand: Rational::zero(),
        }
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    /// Multiplies the radicand by `factor`, i.e. scales the value by `sqrt(factor)`.
    pub fn scale(&self, factor: &Rational) -> Result<Self> {
        if factor.is_negative() {
            return Err(Error::NegativeFactor(format_rational(factor)));
        }
        Ok(Self {
            radicand: &self.radicand * factor,
        })
    }

    /// Square of the value divided by `pi^2`; the same as the radicand.
    pub fn squared_over_pi_sq(&self) -> &Rational {
        &self.radicand
    }

    pub fn to_f64(&self) -> f64 {
        std::f64::consts::PI * self.radicand.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    /// Decimal rendering with 12 significant digits, ties to even.
    pub fn decimal(&self) -> String {
        format_significant(self.to_f64(), 12)
    }

    /// Exact form, e.g. `pi*sqrt(3/2)`.
    pub fn exact(&self) -> String {
        format!("pi*sqrt({})", format_rational(&self.radicand))
    }
}

/// Shorthand for the radicand-scaling operation on a value.
pub fn pi_sqrt_scale(v: &PiSqrtValue, factor: &Rational) -> Result<PiSqrtValue> {
    v.scale(factor)
}

impl PartialOrd for PiSqrtValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PiSqrtValue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.radicand.cmp(&other.radicand)
    }
}

impl fmt::Display for PiSqrtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ~ {}", self.exact(), self.decimal())
    }
}

#[derive(Serialize, Deserialize)]
struct PiSqrtRepr {
    radicand: String,
    decimal: String,
}

impl Serialize for PiSqrtValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PiSqrtRepr {
            radicand: format_rational(&self.radicand),
            decimal: self.decimal(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PiSqrtValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PiSqrtRepr::deserialize(d)?;
        let r = parse_rational(&repr.radicand).map_err(D::Error::custom)?;
        PiSqrtValue::new(r).map_err(D::Error::custom)
    }
}

/// Formats `x` in positional notation with `digits` significant digits.
///
/// Rounding is done by the standard formatter on the exact binary value,
/// which breaks exact ties to even.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", digits.saturating_sub(1), x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i32 = exp.parse().expect("exponent");
    let neg = mantissa.starts_with('-');
    let digits_only: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let point = exp + 1;
    let body = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), digits_only)
    } else if point as usize >= digits_only.len() {
        format!(
            "{}{}",
            digits_only,
            "0".repeat(point as usize - digits_only.len())
        )
    } else {
        let (a, b) = digits_only.split_at(point as usize);
        format!("{a}.{b}")
    };
    let body = if body.contains('.') {
        body.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        body
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}
