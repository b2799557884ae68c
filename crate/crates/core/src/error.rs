use thiserror::Error;

/// Errors raised by the estimators, generators and table readers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An axis has zero range (all values equal), so it cannot be scaled or
    /// correlated.
    #[error("degenerate axis `{axis}`: all values are equal")]
    DegenerateAxis { axis: &'static str },

    #[error("paired inputs differ in length: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },

    #[error("non-finite value {value} at index {index}")]
    NonFinite { index: usize, value: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A quantity that is non-negative in exact arithmetic came out
    /// negative by more than rounding can explain.
    #[error("internal consistency violated: {0}")]
    Inconsistent(String),

    #[error("table error: {0}")]
    Table(String),
}

pub type Result<T> = std::result::Result<T, Error>;
