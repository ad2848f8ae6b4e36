use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Parses `"p"` or `"p/q"` with an optional leading sign. Decimal points and
/// exponents are rejected so that no floating-point value sneaks in.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let numerator = parse_integer(num)?;
    let denominator = match den {
        Some(d) => {
            if d.starts_with(['+', '-']) {
                return Err(Error::Parse(format!("signed denominator in {text:?}")));
            }
            parse_integer(d)?
        }
        None => BigInt::one(),
    };
    if denominator.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(numerator, denominator))
}

fn parse_integer(text: &str) -> Result<BigInt> {
    let digits = text.strip_prefix(['+', '-']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("not an exact rational literal: {text:?}")));
    }
    text.parse::<BigInt>().map_err(|e| Error::Parse(format!("{text:?}: {e}")))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        let sign = if value.is_negative() { "-" } else { "" };
        format!("{sign}{}/{}", value.numer().abs(), value.denom())
    }
}
