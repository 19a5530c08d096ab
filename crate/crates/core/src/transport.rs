//! Discrete parallel transport along a curve of density matrices.
//!
//! Each step moves `W` along the horizontal lift of `X_k = D_{k+1} − D_k`,
//! `W ← (𝟙 + G_k) W` with `D_k G_k + G_k D_k = X_k`, and then restores
//! `π(W) = D_{k+1}` exactly by the positive left correction
//! `D_{k+1}^{1/2} (WW∗)^{-1/2}`. The holonomy is first order in the step.

#[allow(unused_imports)]
use num_traits::Float;

use crate::bundle::project;
use crate::config::TOL_BASE_POINT;
use crate::error::{Error, Result};
use crate::matrix::{frobenius, identity, CMatrix, DensityMatrix, HermitianMatrix, Purification};
use crate::sylvester::solve_sylvester;

/// End point `W_m` of the transported purification.
pub fn transport(curve: &[DensityMatrix], w0: &Purification) -> Result<Purification> {
    let first = curve.first().ok_or(Error::EmptyCurve)?;
    let n = first.dim();
    if w0.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: w0.dim(),
        });
    }
    let start = w0.matrix() * w0.matrix().adjoint();
    let deviation = frobenius(&(start - first.matrix()));
    if deviation > TOL_BASE_POINT * frobenius(first.matrix()).max(1.0) {
        return Err(Error::BasePointMismatch { deviation });
    }

    let mut w = w0.matrix().clone();
    for pair in curve.windows(2) {
        let (here, next) = (&pair[0], &pair[1]);
        if next.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: next.dim(),
            });
        }
        let x = next.matrix() - here.matrix();
        let step = frobenius(&x);
        let limit = 0.5 * here.min_eigenvalue();
        if step > limit {
            return Err(Error::StepTooLarge { step, limit });
        }
        let g = solve_sylvester(here, &HermitianMatrix::from_hermitian_part(&x))?;
        w = (identity(n) + g.matrix()) * w;
        w = reproject(&w, next)?;
    }
    let last = curve.last().expect("nonempty curve");
    Purification::new(w, last.is_normalized())
}

/// `D^{1/2} (WW∗)^{-1/2} W`, the purification over `D` closest to `W`
/// along the positive left action.
fn reproject(w: &CMatrix, target: &DensityMatrix) -> Result<CMatrix> {
    let current = DensityMatrix::new(w * w.adjoint(), false)?;
    let inv_sqrt = current.spectral().map_eigenvalues(|d| 1.0 / d.sqrt());
    let sqrt_target = target.spectral().map_eigenvalues(f64::sqrt);
    Ok(sqrt_target * inv_sqrt * w)
}

/// The unitary `U = W0⁻¹ W_m` relating two purifications of one state.
pub fn holonomy(w0: &Purification, wm: &Purification) -> Result<CMatrix> {
    let d0 = project(w0)?;
    let dm = project(wm)?;
    let deviation = frobenius(&(d0.matrix() - dm.matrix()));
    if deviation > TOL_BASE_POINT * frobenius(d0.matrix()).max(1.0) {
        return Err(Error::BasePointMismatch { deviation });
    }
    let inv = w0
        .matrix()
        .clone()
        .try_inverse()
        .ok_or(Error::Singular { sigma_min: 0.0 })?;
    Ok(inv * wm.matrix())
}

/// Holonomy of a closed curve (`D_m = D_0`) starting at `w0`.
pub fn loop_holonomy(curve: &[DensityMatrix], w0: &Purification) -> Result<CMatrix> {
    let wm = transport(curve, w0)?;
    holonomy(w0, &wm)
}
