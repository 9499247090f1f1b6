use thiserror::Error;

/// Errors surfaced by the map primitives and the construction engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("point is not on the unit sphere: |norm^2 - 1| = {defect:e}")]
    NotUnitNorm { defect: f64 },

    #[error("invalid axis {axis} for dimension d = {d}")]
    InvalidAxis { axis: String, d: usize },

    #[error("invalid twist pairing: {0}")]
    InvalidPairing(String),

    #[error("invalid rational: {0}")]
    InvalidRational(String),

    #[error("evaluation overflow: |value| exceeded {limit:e}")]
    Overflow { limit: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("root finding did not converge after {steps} bisection steps (residual {residual:e})")]
    NoConvergence { steps: usize, residual: f64 },

    #[error("dichotomy integrity failure: no start case with margin eta = {eta:e}")]
    DichotomyIntegrity { eta: f64 },

    #[error("stage {slot} failed: {reason}")]
    StageFailure { slot: usize, reason: String },

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
