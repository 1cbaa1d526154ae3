use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("log-gamma pole at non-positive integer z = {0}")]
    GammaPole(f64),

    #[error(
        "argument outside the supported series domain: |zeta| = {magnitude:.3e} exceeds {cap}"
    )]
    DomainCapExceeded { magnitude: f64, cap: f64 },

    #[error("no sign-change bracket found for target {target} within the series domain")]
    BracketNotFound { target: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid weight parameters: {0}")]
    InvalidWeight(String),

    #[error("tridiagonal eigensolver failed to converge at row {0}")]
    EigenFailure(usize),

    #[error("quadrature did not converge: {0}")]
    QuadratureNonConvergence(String),

    #[error(
        "orthogonality lost: defect {defect:.3e} exceeds 1e-6 (n_max too large for the node count)"
    )]
    LossOfOrthogonality { defect: f64 },

    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    #[error("zero window exhausted: requested k = {k}, available {available} on that side")]
    WindowExhausted { k: i64, available: usize },

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
