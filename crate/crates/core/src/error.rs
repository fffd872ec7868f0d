use thiserror::Error;

/// Errors raised by the numerical kernel and the bound pipeline.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not Hermitian (deviation {deviation:.3e} > {tolerance:.3e})")]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("matrix is not unitary (deviation {deviation:.3e} > {tolerance:.3e})")]
    NotUnitary { deviation: f64, tolerance: f64 },

    #[error("dense materialization of {entries} entries exceeds the cap of {cap}")]
    DimensionCap { entries: usize, cap: usize },

    #[error("operator has no nonzero spectral gap (multiple of the identity)")]
    NoGap,

    #[error("bound degenerates: {0}")]
    Degenerate(String),

    #[error("ill-conditioned solve: residual {residual:.3e} exceeds tolerance {tolerance:.3e}")]
    Conditioning { residual: f64, tolerance: f64 },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
