//! Exact rational helpers shared by every method.
//!
//! Ratings, matrix entries and damping factors are all [`Rational`]s. On the
//! wire they travel as `"num/den"` strings (integers as plain `"n"`), and user
//! input may also be a finite decimal such as `0.85`, which is converted
//! without rounding.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {input:?} as an exact rational")]
pub struct ParseRationalError {
    pub input: String,
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"17/20"`, `"-3"` or a plain decimal such as `"0.85"` (no exponent).
pub fn parse_rational(input: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError {
        input: input.to_string(),
    };
    let s = input.trim();
    if s.is_empty() {
        return Err(err());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(n, d));
    }
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(err());
    }
    if !whole.chars().all(|c| c.is_ascii_digit()) || !frac.chars().all(|c| c.is_ascii_digit()) {
        return Err(err());
    }
    let digits = format!("{whole}{frac}");
    let num: BigInt = digits.parse().map_err(|_| err())?;
    let den = num_traits::pow(BigInt::from(10), frac.len());
    let value = Rational::new(num, den);
    Ok(if negative { -value } else { value })
}

/// Canonical wire form: `"4/55"`, `"-2/55"`, `"0"`.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Fixed-point rendering for tables, e.g. `0.1142857`.
pub fn format_decimal(value: &Rational, places: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), places);
    let scaled = (value.abs() * Rational::from_integer(scale.clone())).round();
    let scaled = scaled.to_integer();
    let whole = &scaled / &scale;
    let frac = &scaled % &scale;
    let sign = if value.is_negative() && !scaled.is_zero() {
        "-"
    } else {
        ""
    };
    if places == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{frac:0>places$}")
    }
}

pub fn is_unit_interval(value: &Rational) -> bool {
    !value.is_negative() && *value <= Rational::one()
}
