use thiserror::Error;

/// Errors raised while evaluating enclosures.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by an interval containing zero: [{lo}, {hi}]")]
    DivisionByZero { lo: f64, hi: f64 },

    #[error("{op}: argument [{lo}, {hi}] lies outside the domain")]
    Domain { op: &'static str, lo: f64, hi: f64 },

    #[error("{op}: not differentiable on [{lo}, {hi}]")]
    NotDifferentiable { op: &'static str, lo: f64, hi: f64 },

    #[error("geometry: {0}")]
    Geometry(String),

    #[error("precision: {0}")]
    Precision(String),

    #[error("invalid decimal literal {0:?}")]
    Decimal(String),

    #[error("unknown case id {0:?}")]
    UnknownCase(String),
}

pub type Result<T> = std::result::Result<T, Error>;
