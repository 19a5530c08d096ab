//! Default tolerances, collected in one place.

/// Entrywise absolute tolerance for hermiticity checks.
pub const TOL_HERM: f64 = 1e-12;
/// Positive-definiteness threshold, relative to the largest eigenvalue
/// (or singular value, for purifications).
pub const TOL_PD: f64 = 1e-12;
/// Absolute tolerance on `Tr D = 1` and `Tr WW∗ = 1`.
pub const TOL_TRACE: f64 = 1e-12;
/// Relative clamp for slightly negative eigenvalues in `matrix_sqrt`.
pub const TOL_SQRT_CLAMP: f64 = 1e-12;
/// Tolerance on `π(W0) = D0` at the start of a transport.
pub const TOL_BASE_POINT: f64 = 1e-10;
/// Maximum number of draws in `random_purification`.
pub const RESAMPLE_LIMIT: usize = 1000;
/// Default cap on the eigenvalue ratio of `D` for verification runs.
pub const DEFAULT_COND_CAP: f64 = 1e3;
/// Default relative Yang-Mills tolerance.
pub const DEFAULT_YM_TOL: f64 = 1e-8;
/// Default relative Yang-Mills tolerance for `n = 2`.
pub const DEFAULT_YM_TOL_DIM2: f64 = 1e-10;

/// Tolerance record used by the validating constructors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub herm: f64,
    pub pd: f64,
    pub trace: f64,
    pub sqrt_clamp: f64,
    pub base_point: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            herm: TOL_HERM,
            pd: TOL_PD,
            trace: TOL_TRACE,
            sqrt_clamp: TOL_SQRT_CLAMP,
            base_point: TOL_BASE_POINT,
        }
    }
}

/// Default Yang-Mills tolerance for dimension `n`.
pub fn default_ym_tolerance(n: usize) -> f64 {
    if n == 2 {
        DEFAULT_YM_TOL_DIM2
    } else {
        DEFAULT_YM_TOL
    }
}
