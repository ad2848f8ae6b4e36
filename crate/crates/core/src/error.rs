use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("lines {first} and {second} coincide")]
    DuplicateLine { first: usize, second: usize },
    #[error("arrangement is not essential: all lines are parallel")]
    NotEssential,
    #[error("line {index} has weight {weight}; weights must be positive integers")]
    BadWeight { index: usize, weight: i64 },
    #[error("weights have gcd {0}, expected 1")]
    BadGcd(u64),
    #[error("exponent of (t^{m} - 1) is negative ({exponent})")]
    NegativeExponent { m: u64, exponent: i64 },
    #[error("not a polynomial: cyclotomic factor {n} has exponent {exponent}")]
    NotPolynomial { n: u64, exponent: i64 },
    #[error("genus formula requires all weights equal to 1")]
    WeightedNotSupported,
    #[error("monodromy around line {index} is trivial")]
    TrivialMonodromy { index: usize },
    #[error("monodromy around the line at infinity is trivial ({order} divides {weight_sum})")]
    InfinityMonodromyTrivial { order: u64, weight_sum: u64 },
    #[error("expected {expected} residues, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid local system: {0}")]
    BadLocalSystem(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable code used in CLI error reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "ParseError",
            Error::DuplicateLine { .. } => "DuplicateLine",
            Error::NotEssential => "NotEssential",
            Error::BadWeight { .. } => "BadWeight",
            Error::BadGcd(_) => "BadGcd",
            Error::NegativeExponent { .. } => "NegativeExponent",
            Error::NotPolynomial { .. } => "NotPolynomial",
            Error::WeightedNotSupported => "WeightedNotSupported",
            Error::TrivialMonodromy { .. } => "TrivialMonodromy",
            Error::InfinityMonodromyTrivial { .. } => "InfinityMonodromyTrivial",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::BadLocalSystem(_) => "BadLocalSystem",
            Error::Config(_) => "ConfigError",
            Error::Internal(_) => "InternalError",
        }
    }

    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
