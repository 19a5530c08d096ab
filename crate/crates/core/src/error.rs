use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix has zero dimension")]
    EmptyMatrix,

    #[error("matrix contains NaN or infinite entries")]
    NonFinite,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not positive definite (min eigenvalue {min_eigenvalue:e})")]
    NotPositiveDefinite { min_eigenvalue: f64 },

    #[error("negative eigenvalue {value:e} beyond clamp tolerance")]
    NegativeEigenvalue { value: f64 },

    #[error("purification is singular (smallest singular value {sigma_min:e})")]
    Singular { sigma_min: f64 },

    #[error("not normalized (trace {trace})")]
    NotNormalized { trace: f64 },

    #[error("matrix is not a positive diagonal matrix")]
    NotDiagonal,

    #[error("no sample met the conditioning cap after {attempts} attempts")]
    ResampleLimitExceeded { attempts: usize },

    #[error("step too large ({step:e} > {limit:e})")]
    StepTooLarge { step: f64, limit: f64 },

    #[error("start point does not project onto the first curve point (deviation {deviation:e})")]
    BasePointMismatch { deviation: f64 },

    #[error("curve is empty")]
    EmptyCurve,

    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}

impl Error {
    /// Stable identifier of the variant, used in diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotSquare { .. } => "NotSquare",
            Error::EmptyMatrix => "EmptyMatrix",
            Error::NonFinite => "NonFinite",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotHermitian { .. } => "NotHermitian",
            Error::NotPositiveDefinite { .. } => "NotPositiveDefinite",
            Error::NegativeEigenvalue { .. } => "NegativeEigenvalue",
            Error::Singular { .. } => "Singular",
            Error::NotNormalized { .. } => "NotNormalized",
            Error::NotDiagonal => "NotDiagonal",
            Error::ResampleLimitExceeded { .. } => "ResampleLimitExceeded",
            Error::StepTooLarge { .. } => "StepTooLarge",
            Error::BasePointMismatch { .. } => "BasePointMismatch",
            Error::EmptyCurve => "EmptyCurve",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}
