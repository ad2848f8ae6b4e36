//! Arrangement documents.
//!
//! ```json
//! {"lines": [{"a": "1", "b": "0", "c": "-1/2", "e": 2},
//!            {"a": {"re": "0", "im": "1"}, "b": "1", "c": "3"}]}
//! ```
//!
//! A coefficient is a rational string (`"p"` or `"p/q"`, optional sign), a
//! JSON integer, or an object `{"re": .., "im": ..}` whose parts are rational
//! strings or integers. Floating-point literals are rejected. The weight
//! `e` is optional and defaults to 1.

use serde::Deserialize;
use serde_json::Value;

use super::{Line, WeightedArrangement};
use crate::error::{Error, Result};
use crate::exact::{parse_rational, GaussianRational, Rational};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    lines: Vec<LineEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LineEntry {
    a: Value,
    b: Value,
    c: Value,
    #[serde(default)]
    e: Option<Value>,
}

fn rational_part(value: &Value, what: &str) -> Result<Rational> {
    match value {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Rational::from_integer(i.into())),
            None => Err(Error::Parse(format!("{what}: {n} is not an exact integer; use a \"p/q\" string"))),
        },
        other => Err(Error::Parse(format!("{what}: expected a rational, got {other}"))),
    }
}

fn coefficient(value: &Value, what: &str) -> Result<GaussianRational> {
    match value {
        Value::Object(map) => {
            if let Some(key) = map.keys().find(|k| *k != "re" && *k != "im") {
                return Err(Error::Parse(format!("{what}: unknown key {key:?}")));
            }
            let part = |key: &str| match map.get(key) {
                Some(v) => rational_part(v, what),
                None => Ok(Rational::from_integer(0.into())),
            };
            Ok(GaussianRational::new(part("re")?, part("im")?))
        }
        other => rational_part(other, what).map(GaussianRational::real),
    }
}

fn weight(value: Option<&Value>, index: usize) -> Result<u64> {
    let Some(value) = value else { return Ok(1) };
    let Value::Number(n) = value else {
        return Err(Error::Parse(format!("line {index}: weight must be an integer")));
    };
    if let Some(w) = n.as_u64() {
        if w == 0 {
            return Err(Error::BadWeight { index, weight: 0 });
        }
        return Ok(w);
    }
    match n.as_i64() {
        Some(w) => Err(Error::BadWeight { index, weight: w }),
        None => Err(Error::Parse(format!("line {index}: weight {n} is not an integer"))),
    }
}

/// Parses and validates an arrangement document.
pub fn parse_arrangement(document: &str) -> Result<WeightedArrangement> {
    let doc: Document = serde_json::from_str(document).map_err(|e| Error::Parse(e.to_string()))?;
    let mut lines = Vec::with_capacity(doc.lines.len());
    let mut weights = Vec::with_capacity(doc.lines.len());
    for (i, entry) in doc.lines.iter().enumerate() {
        let a = coefficient(&entry.a, &format!("line {i} a"))?;
        let b = coefficient(&entry.b, &format!("line {i} b"))?;
        let c = coefficient(&entry.c, &format!("line {i} c"))?;
        lines.push(Line::new(a, b, c).map_err(|_| Error::Parse(format!("line {i}: a and b both zero")))?);
        weights.push(weight(entry.e.as_ref(), i)?);
    }
    WeightedArrangement::new(lines, weights)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE: &str = r#"{"lines": [
        {"a": "1", "b": "0", "c": "0"},
        {"a": "0", "b": "1", "c": "0"},
        {"a": "1", "b": "1", "c": "-1"}]}"#;

    #[test]
    fn triangle_parses() {
        let arr = parse_arrangement(TRIANGLE).unwrap();
        assert_eq!(arr.len(), 3);
        assert_eq!(arr.weights(), &[1, 1, 1]);
    }

    #[test]
    fn duplicate_after_canonicalization() {
        let doc =
            r#"{"lines": [{"a": "1", "b": "0", "c": "0"}, {"a": "2", "b": "0", "c": "0"}, {"a":"0","b":"1","c":"0"}]}"#;
        assert_eq!(parse_arrangement(doc).unwrap_err(), Error::DuplicateLine { first: 0, second: 1 });
    }

    #[test]
    fn parallel_only_is_not_essential() {
        let doc = r#"{"lines": [{"a": "1", "b": "0", "c": "0"}, {"a": "1", "b": "0", "c": "-1"}]}"#;
        assert_eq!(parse_arrangement(doc).unwrap_err(), Error::NotEssential);
    }

    #[test]
    fn weights_are_validated() {
        let zero = r#"{"lines": [{"a":"1","b":"0","c":"0","e":0}, {"a":"0","b":"1","c":"0"}]}"#;
        assert_eq!(parse_arrangement(zero).unwrap_err(), Error::BadWeight { index: 0, weight: 0 });
        let neg = r#"{"lines": [{"a":"1","b":"0","c":"0"}, {"a":"0","b":"1","c":"0","e":-2}]}"#;
        assert_eq!(parse_arrangement(neg).unwrap_err(), Error::BadWeight { index: 1, weight: -2 });
        let gcd = r#"{"lines": [{"a":"1","b":"0","c":"0","e":2}, {"a":"0","b":"1","c":"0","e":4}]}"#;
        assert_eq!(parse_arrangement(gcd).unwrap_err(), Error::BadGcd(2));
        let float = r#"{"lines": [{"a":"1","b":"0","c":"0","e":1.5}, {"a":"0","b":"1","c":"0"}]}"#;
        assert_eq!(parse_arrangement(float).unwrap_err().code(), "ParseError");
    }

    #[test]
    fn rejects_floats_and_malformed_documents() {
        let float = r#"{"lines": [{"a": 1.5, "b": "0", "c": "0"}, {"a":"0","b":"1","c":"0"}]}"#;
        assert_eq!(parse_arrangement(float).unwrap_err().code(), "ParseError");
        let float_str = r#"{"lines": [{"a": "0.5", "b": "0", "c": "0"}, {"a":"0","b":"1","c":"0"}]}"#;
        assert_eq!(parse_arrangement(float_str).unwrap_err().code(), "ParseError");
        assert_eq!(parse_arrangement("not json").unwrap_err().code(), "ParseError");
        assert_eq!(parse_arrangement(r#"{"lines": [{"a":"1","b":"0"}]}"#).unwrap_err().code(), "ParseError");
        let degenerate = r#"{"lines": [{"a":"0","b":"0","c":"1"}, {"a":"0","b":"1","c":"0"}]}"#;
        assert_eq!(parse_arrangement(degenerate).unwrap_err().code(), "ParseError");
        let extra = r#"{"lines": [{"a":{"re":"1","x":"2"},"b":"0","c":"0"}, {"a":"0","b":"1","c":"0"}]}"#;
        assert_eq!(parse_arrangement(extra).unwrap_err().code(), "ParseError");
    }

    #[test]
    fn gaussian_and_integer_coefficients() {
        let doc = r#"{"lines": [
            {"a": {"re": "0", "im": "2"}, "b": 0, "c": {"re": "1/3"}},
            {"a": 0, "b": 3, "c": -3}]}"#;
        let arr = parse_arrangement(doc).unwrap();
        // 2i·x + 1/3 = 0  ->  x - i/6 = 0
        let l = &arr.lines()[0];
        assert_eq!(l.a, GaussianRational::one());
        assert_eq!(l.c, GaussianRational::new(Rational::from_integer(0.into()), Rational::new((-1).into(), 6.into())));
    }

    #[test]
    fn document_round_trip() {
        let arr = parse_arrangement(TRIANGLE).unwrap();
        let again = parse_arrangement(&arr.to_document().to_string()).unwrap();
        assert_eq!(arr, again);
    }
}
