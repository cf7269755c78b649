use std::fmt;

use crate::fuzzy::ValidityReport;

pub type Result<T> = std::result::Result<T, Error>;

/// Why a generalized difference or division has no fuzzy-number result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NotExistsReason {
    MixedCases,
    LowerNotMonotone,
    UpperNotMonotone,
    Crossing,
}

impl NotExistsReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            NotExistsReason::MixedCases => "mixed_cases",
            NotExistsReason::LowerNotMonotone => "lower_not_monotone",
            NotExistsReason::UpperNotMonotone => "upper_not_monotone",
            NotExistsReason::Crossing => "crossing",
        }
    }
}

impl fmt::Display for NotExistsReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("trapezoid parameters must satisfy a <= b <= c <= d, got ({a}, {b}, {c}, {d})")]
    Ordering { a: f64, b: f64, c: f64, d: f64 },

    #[error("invalid alpha grid: {0}")]
    InvalidGrid(String),

    #[error("operands are defined on different alpha grids")]
    GridMismatch,

    #[error("invalid interval [{lo}, {hi}]")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("endpoint sequences do not form a fuzzy number: {0}")]
    Validation(ValidityReport),

    #[error("envelope repair moved an endpoint by {change:e} (limit {limit:e})")]
    InvalidResult { change: f64, limit: f64 },

    #[error("box dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("result does not exist: {0}")]
    NotExists(NotExistsReason),

    #[error("weight at position {index} is not strictly positive ({value})")]
    NonpositiveWeight { index: usize, value: f64 },

    #[error("profile/symmetric pair is not valid: {0}")]
    InvalidPair(ValidityReport),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("gamma function pole at {0}")]
    Pole(f64),

    #[error("index {index} outside sample range 0..={last}")]
    Range { index: usize, last: usize },

    #[error("derivative is singular at the left end of the interval")]
    SingularAtOrigin,

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("time grid needs at least 3 samples, got {0}")]
    DegenerateGrid(usize),

    #[error("switching point at t = {0} inside the integration range")]
    SwitchingPoint(f64),

    #[error("domain violation at t = {t}: {what}")]
    DomainViolation { t: f64, what: String },

    #[error("Picard iteration diverges (change grew for {sweeps} consecutive sweeps)")]
    NonContraction { sweeps: usize },

    #[error("at alpha = {alpha}: {source}")]
    Level {
        alpha: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("parse error: {0}")]
    Parse(String),
}
