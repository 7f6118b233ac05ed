//! Exact rational values and their text renderings.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Number of significant digits in decimal renderings.
pub const DECIMAL_DIGITS: u32 = 12;

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Renders `"p/q"` in lowest terms; integers keep an explicit `/1`.
pub fn to_fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`. The result is reduced.
pub fn parse_fraction(text: &str) -> Result<Rational> {
    let bad = || Error::Format(format!("not a rational: {text:?}"));
    let (numer, denom) = match text.split_once('/') {
        Some((p, q)) => (p, q),
        None => (text, "1"),
    };
    let numer = BigInt::from_str(numer.trim()).map_err(|_| bad())?;
    let denom = BigInt::from_str(denom.trim()).map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Decimal rendering with [`DECIMAL_DIGITS`] significant digits, rounded
/// half-to-even, trailing zeros trimmed, positional notation.
pub fn to_decimal_string(r: &Rational) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let negative = r.is_negative();
    let numer = r.numer().abs();
    let denom = r.denom().clone();

    // floor(log10 |r|), first estimated from digit counts and then corrected.
    let mut exp = numer.to_string().len() as i64 - denom.to_string().len() as i64;
    if scaled_cmp(&numer, &denom, exp) == std::cmp::Ordering::Less {
        exp -= 1;
    }

    let precision = DECIMAL_DIGITS as i64;
    let mut shift = precision - 1 - exp;
    let (mut digits, remainder, divisor) = scaled_div(&numer, &denom, shift);
    let twice = &remainder * 2u32;
    if twice > divisor || (twice == divisor && digits.is_odd()) {
        digits += 1u32;
    }
    if digits == BigInt::from(10u32).pow(DECIMAL_DIGITS) {
        digits /= 10u32;
        shift -= 1;
    }

    let digits = digits.to_string();
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if shift <= 0 {
        out.push_str(&digits);
        out.extend(std::iter::repeat_n('0', (-shift) as usize));
        return out;
    }
    let shift = shift as usize;
    let (int_part, frac_part) = if shift >= digits.len() {
        (
            "0".to_string(),
            "0".repeat(shift - digits.len()) + &digits,
        )
    } else {
        let split = digits.len() - shift;
        (digits[..split].to_string(), digits[split..].to_string())
    };
    out.push_str(&int_part);
    let frac = frac_part.trim_end_matches('0');
    if !frac.is_empty() {
        out.push('.');
        out.push_str(frac);
    }
    out
}

/// Compares `numer / denom` against `10^exp`.
fn scaled_cmp(numer: &BigInt, denom: &BigInt, exp: i64) -> std::cmp::Ordering {
    let ten = BigInt::from(10u32);
    if exp >= 0 {
        numer.cmp(&(denom * ten.pow(exp as u32)))
    } else {
        (numer * ten.pow((-exp) as u32)).cmp(denom)
    }
}

/// `floor(numer * 10^shift / denom)`, its remainder, and the divisor used.
fn scaled_div(numer: &BigInt, denom: &BigInt, shift: i64) -> (BigInt, BigInt, BigInt) {
    let ten = BigInt::from(10u32);
    let (num, den) = if shift >= 0 {
        (numer * ten.pow(shift as u32), denom.clone())
    } else {
        (numer.clone(), denom * ten.pow((-shift) as u32))
    };
    let (q, r) = num.div_rem(&den);
    (q, r, den)
}

/// Lossy conversion for display and timing output only.
pub fn to_f64(r: &Rational) -> f64 {
    to_decimal_string(r).parse().unwrap_or(f64::NAN)
}

#[cfg(test)]
pub(crate) fn is_unit_fraction_or_zero(r: &Rational) -> bool {
    use num_traits::One;
    r.is_zero() || (r.numer().is_one() && r.denom().is_positive())
}
