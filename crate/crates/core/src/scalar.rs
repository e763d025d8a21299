//! Scalar abstraction shared by the exact and floating-point paths.

use std::fmt::Debug;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// A field element usable by [`crate::Matrix`] and [`crate::Vector`].
///
/// Implemented for [`Rational`] (exact) and `f32`/`f64` (approximate).
pub trait Scalar: Clone + Debug + PartialOrd + Num + Signed + FromPrimitive + ToPrimitive {
    /// Whether values of this type carry rounding error.
    const EXACT: bool;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer fits scalar")
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;
}

impl Scalar for f64 {
    const EXACT: bool = false;
}

impl Scalar for f32 {
    const EXACT: bool = false;
}

/// `numer/denom` as a [`Rational`]. Panics if `denom` is zero.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Canonical text form: `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `p/q`, or a plain decimal such as `-0.25`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if t.contains('/') {
            return Err(Error::Parse(format!("malformed rational {t:?}")));
        }
        let neg = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        let numer = BigInt::from_str(if digits.is_empty() { "0" } else { &digits })
            .map_err(|_| Error::Parse(format!("malformed rational {t:?}")))?;
        let denom = num_traits::pow(BigInt::from(10), frac.len());
        let r = Rational::new(numer, denom);
        return Ok(if neg { -r } else { r });
    }
    let r = Rational::from_str(t).map_err(|_| Error::Parse(format!("malformed rational {t:?}")))?;
    Ok(r)
}

/// Parses a comma-separated list of rationals, e.g. `"0,1/2,-3"`.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

pub fn is_nonnegative(r: &Rational) -> bool {
    !r.is_negative() || r.is_zero()
}
