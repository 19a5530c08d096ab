//! Bures geometry on faithful density matrices.
//!
//! `g^B_D(X, Y) = ½ Tr X G` with `DG + GD = Y`. Evaluations are
//! coordinate-free pairings of tangent matrices; no chart on the state
//! space is ever built.

use alloc::vec::Vec;

use nalgebra::DMatrix;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::matrix::{check_dim, trace, CMatrix, DensityMatrix, HermitianMatrix};
use crate::spectral::matrix_sqrt;
use crate::sylvester::solve_sylvester;

pub fn bures_metric(d: &DensityMatrix, x: &HermitianMatrix, y: &HermitianMatrix) -> Result<f64> {
    check_dim(d.dim(), x.matrix())?;
    let g = solve_sylvester(d, y)?;
    Ok(0.5 * trace(&(x.matrix() * g.matrix())).re)
}

/// `Tr (ϱ^{1/2} μ ϱ^{1/2})^{1/2}`.
pub fn fidelity_root(rho: &DensityMatrix, mu: &DensityMatrix) -> Result<f64> {
    check_dim(rho.dim(), mu.matrix())?;
    let s = rho.spectral().map_eigenvalues(f64::sqrt);
    let inner = HermitianMatrix::from_hermitian_part(&(&s * mu.matrix() * &s));
    Ok(matrix_sqrt(&inner)?.trace())
}

/// `(2 − 2 Tr (ϱ^{1/2} μ ϱ^{1/2})^{1/2})^{1/2}`, clamped at zero.
pub fn bures_distance(rho: &DensityMatrix, mu: &DensityMatrix) -> Result<f64> {
    check_dim(rho.dim(), mu.matrix())?;
    if rho.matrix() == mu.matrix() {
        return Ok(0.0);
    }
    let f = fidelity_root(rho, mu)?;
    Ok((2.0 - 2.0 * f).max(0.0).sqrt())
}

/// Matrix of central second differences of `μ ↦ d(ϱ, μ)²` at `μ = ϱ`
/// along `basis`:
///
/// ```text
/// H_ab ≈ [f(+h_a +h_b) − f(+h_a −h_b) − f(−h_a +h_b) + f(−h_a −h_b)] / 4h²
/// ```
///
/// Half of it approximates the Gram matrix of `bures_metric` on the basis.
pub fn hessian_oracle(
    rho: &DensityMatrix,
    basis: &[HermitianMatrix],
    h: f64,
) -> Result<DMatrix<f64>> {
    if !(h > 0.0) {
        return Err(Error::InvalidArgument(
            "finite-difference step must be positive",
        ));
    }
    for x in basis {
        check_dim(rho.dim(), x.matrix())?;
    }
    let k = basis.len();
    let f = |a: (f64, usize), b: (f64, usize)| -> Result<f64> {
        let mu: CMatrix =
            rho.matrix() + basis[a.1].matrix().scale(a.0 * h) + basis[b.1].matrix().scale(b.0 * h);
        let mu = DensityMatrix::new(mu, false).map_err(|_| Error::StepTooLarge {
            step: h,
            limit: rho.min_eigenvalue(),
        })?;
        Ok(bures_distance(rho, &mu)?.powi(2))
    };
    let mut out = DMatrix::zeros(k, k);
    for a in 0..k {
        for b in a..k {
            let v = (f((1.0, a), (1.0, b))? - f((1.0, a), (-1.0, b))? - f((-1.0, a), (1.0, b))?
                + f((-1.0, a), (-1.0, b))?)
                / (4.0 * h * h);
            out[(a, b)] = v;
            out[(b, a)] = v;
        }
    }
    Ok(out)
}

/// Gram matrix `g^B(X_a, X_b)` of the Bures metric on `basis`.
pub fn bures_gram(rho: &DensityMatrix, basis: &[HermitianMatrix]) -> Result<DMatrix<f64>> {
    let k = basis.len();
    let mut out = DMatrix::zeros(k, k);
    for a in 0..k {
        for b in a..k {
            let v = bures_metric(rho, &basis[a], &basis[b])?;
            out[(a, b)] = v;
            out[(b, a)] = v;
        }
    }
    Ok(out)
}

/// Orthonormal (under `Tr XY`) basis of traceless hermitian `n × n`
/// matrices: symmetric and antisymmetric off-diagonal units over `√2`, then
/// the diagonal generalized Gell-Mann matrices.
pub fn traceless_hermitian_basis(n: usize) -> Vec<HermitianMatrix> {
    let inv_sqrt2 = core::f64::consts::FRAC_1_SQRT_2;
    let mut out = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in (i + 1)..n {
            out.push(HermitianMatrix::symmetric_unit(n, i, j).scale(inv_sqrt2));
            out.push(HermitianMatrix::antisymmetric_unit(n, i, j).scale(inv_sqrt2));
        }
    }
    for l in 1..n {
        let norm = 1.0 / ((l * (l + 1)) as f64).sqrt();
        let mut diag = alloc::vec![0.0; n];
        for v in diag.iter_mut().take(l) {
            *v = norm;
        }
        diag[l] = -(l as f64) * norm;
        out.push(HermitianMatrix::from_real_diagonal(&diag));
    }
    out
}
