use thiserror::Error;

use crate::cases::CaseLabel;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value for `{0}`")]
    NonFinite(&'static str),

    #[error("gamma ({gamma_re}, {gamma_im}) is not the conjugate of beta ({beta_re}, {beta_im})")]
    NonHermitian {
        beta_re: f64,
        beta_im: f64,
        gamma_re: f64,
        gamma_im: f64,
    },

    #[error("`{name}` must be strictly positive, got {value}")]
    NonPositiveScale { name: &'static str, value: f64 },

    #[error("overlap must lie strictly inside (0, 1), got {0}")]
    InvalidOverlap(f64),

    #[error("off-diagonal element vanishes; eigenvector coefficients are undefined")]
    DegenerateOffDiagonal,

    #[error("integration would need {steps} steps (limit {limit})")]
    StepUnderflow { steps: f64, limit: u64 },

    #[error("parameters classify as {actual:?}, not {requested:?}")]
    LabelMismatch { requested: CaseLabel, actual: CaseLabel },

    #[error("threshold must lie in [0, 1], got {0}")]
    InvalidThreshold(f64),

    #[error("invalid sampling grid: {0}")]
    InvalidGrid(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("quadrature did not converge: {0}")]
    QuadratureFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
