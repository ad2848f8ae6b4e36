//! Weighted affine line arrangements and their combinatorics.

mod combinatorics;
mod line;
mod parse;

pub use combinatorics::{compute_combinatorics, CombinatorialSummary, DirectionClass, Vertex};
pub use line::{Line, Point};
pub use parse::parse_arrangement;

use num_integer::Integer;
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Distinct lines in ℂ² with positive integer weights `e_j`, not all
/// parallel, with `gcd(e_1, …, e_d) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedArrangement {
    lines: Vec<Line>,
    weights: Vec<u64>,
}

impl WeightedArrangement {
    pub fn new(lines: Vec<Line>, weights: Vec<u64>) -> Result<Self> {
        if lines.len() != weights.len() {
            return Err(Error::LengthMismatch { expected: lines.len(), got: weights.len() });
        }
        for (i, l) in lines.iter().enumerate() {
            if let Some(j) = lines[..i].iter().position(|k| k == l) {
                return Err(Error::DuplicateLine { first: j, second: i });
            }
        }
        if let Some(index) = weights.iter().position(|&w| w == 0) {
            return Err(Error::BadWeight { index, weight: 0 });
        }
        // p >= 2 also forces d >= 2
        let first = lines.first().ok_or(Error::NotEssential)?;
        if lines.iter().all(|l| l.is_parallel_to(first)) {
            return Err(Error::NotEssential);
        }
        let g = weights.iter().fold(0u64, |g, &w| g.gcd(&w));
        if g != 1 {
            return Err(Error::BadGcd(g));
        }
        Ok(Self { lines, weights })
    }

    /// All weights equal to 1.
    pub fn unweighted(lines: Vec<Line>) -> Result<Self> {
        let n = lines.len();
        Self::new(lines, vec![1; n])
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn is_unweighted(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn with_weights(&self, weights: Vec<u64>) -> Result<Self> {
        Self::new(self.lines.clone(), weights)
    }

    /// Document form accepted by [`parse_arrangement`].
    pub fn to_document(&self) -> Value {
        let lines: Vec<Value> =
            self.lines.iter().zip(&self.weights).map(|(l, &e)| json!({"a": l.a, "b": l.b, "c": l.c, "e": e})).collect();
        json!({ "lines": lines })
    }
}
