use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::GaussianRational;

/// The affine line `a·x + b·y + c = 0`, normalized so that the first nonzero
/// coefficient among `(a, b)` is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Line {
    pub a: GaussianRational,
    pub b: GaussianRational,
    pub c: GaussianRational,
}

/// A point of ℂ² with Gaussian-rational coordinates.
pub type Point = (GaussianRational, GaussianRational);

impl Line {
    pub fn new(a: GaussianRational, b: GaussianRational, c: GaussianRational) -> Result<Self> {
        let lead = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return Err(Error::Parse("line has a = b = 0".into()));
        };
        let inv = lead.inv().expect("nonzero leading coefficient");
        Ok(Self { a: &a * &inv, b: &b * &inv, c: &c * &inv })
    }

    /// Shorthand for integer coefficients.
    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new(
            GaussianRational::from_integer(a),
            GaussianRational::from_integer(b),
            GaussianRational::from_integer(c),
        )
    }

    /// Canonical `(a, b)`; two lines are parallel iff these agree.
    pub fn direction(&self) -> (GaussianRational, GaussianRational) {
        (self.a.clone(), self.b.clone())
    }

    pub fn is_parallel_to(&self, other: &Line) -> bool {
        self.a == other.a && self.b == other.b
    }

    pub fn evaluate(&self, point: &Point) -> GaussianRational {
        &(&(&self.a * &point.0) + &(&self.b * &point.1)) + &self.c
    }

    pub fn contains(&self, point: &Point) -> bool {
        self.evaluate(point).is_zero()
    }

    /// Unique common point, `None` for parallel lines.
    pub fn intersect(&self, other: &Line) -> Option<Point> {
        let det = &(&self.a * &other.b) - &(&other.a * &self.b);
        let inv = det.inv()?;
        let x = &(&(&other.c * &self.b) - &(&self.c * &other.b)) * &inv;
        let y = &(&(&self.c * &other.a) - &(&other.c * &self.a)) * &inv;
        Some((x, y))
    }

    /// Pulls the line back along the coordinate change
    /// `x = m00·x' + m01·y' + s0`, `y = m10·x' + m11·y' + s1`.
    pub fn pull_back(&self, m: &[[GaussianRational; 2]; 2], shift: &[GaussianRational; 2]) -> Result<Line> {
        let a = &(&self.a * &m[0][0]) + &(&self.b * &m[1][0]);
        let b = &(&self.a * &m[0][1]) + &(&self.b * &m[1][1]);
        let c = &(&(&self.a * &shift[0]) + &(&self.b * &shift[1])) + &self.c;
        Line::new(a, b, c)
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·x + {}·y + {} = 0", self.a, self.b, self.c)
    }
}
