//! Spectral calculus for superoperators built from left and right
//! multiplication by a positive matrix.
//!
//! If `D = U diag(d) U∗`, then every operator in the algebra generated by
//! `L` (left multiplication by `D`) and `R` (right multiplication) acts on
//! `T̂ = U∗ T U` as entrywise multiplication by a function `s(d_i, d_j)`.
//! Nothing here materializes an `n² × n²` matrix; one application costs
//! four `n × n` products.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::config::{TOL_PD, TOL_SQRT_CLAMP};
use crate::error::{Error, Result};
use crate::matrix::{check_dim, CMatrix, DensityMatrix, HermitianMatrix, Purification};

/// Eigenvalues (ascending) and the unitary matrix whose columns are the
/// corresponding eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralData {
    eigenvalues: Vec<f64>,
    eigenvectors: CMatrix,
}

impl SpectralData {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &CMatrix {
        &self.eigenvectors
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `U diag(f(d)) U∗`.
    pub fn map_eigenvalues(&self, f: impl Fn(f64) -> f64) -> CMatrix {
        let u = &self.eigenvectors;
        let mut scaled = u.clone();
        for (k, &d) in self.eigenvalues.iter().enumerate() {
            let fk = f(d);
            scaled.column_mut(k).scale_mut(fk);
        }
        scaled * u.adjoint()
    }

    pub fn reconstruct(&self) -> CMatrix {
        self.map_eigenvalues(|d| d)
    }

    /// Applies the pairwise multiplier `s(d_i, d_j)` in the eigenbasis:
    /// `U (s ∘ (U∗ T U)) U∗`.
    pub fn apply_pairwise(&self, t: &CMatrix, s: impl Fn(f64, f64) -> f64) -> Result<CMatrix> {
        check_dim(self.dim(), t)?;
        let u = &self.eigenvectors;
        let mut hat = u.adjoint() * t * u;
        let d = &self.eigenvalues;
        for j in 0..d.len() {
            for i in 0..d.len() {
                hat[(i, j)] *= s(d[i], d[j]);
            }
        }
        Ok(u * hat * u.adjoint())
    }
}

/// Eigendecomposition of a hermitian matrix. With `positive` set, fails
/// unless every eigenvalue exceeds `1e-12 ·` the largest one.
pub fn spectral_decompose(h: &HermitianMatrix, positive: bool) -> Result<SpectralData> {
    let eig = h.matrix().clone().symmetric_eigen();
    let n = h.dim();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));

    let eigenvalues: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let mut eigenvectors = CMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        eigenvectors.set_column(dst, &eig.eigenvectors.column(src));
    }

    if positive {
        let max = eigenvalues[n - 1];
        let min = eigenvalues[0];
        if !(max > 0.0) || !(min > TOL_PD * max) {
            return Err(Error::NotPositiveDefinite {
                min_eigenvalue: min,
            });
        }
    }
    Ok(SpectralData {
        eigenvalues,
        eigenvectors,
    })
}

/// Positive square root of a positive semidefinite hermitian matrix.
/// Eigenvalues down to `−1e-12 · max|d|` are clamped to zero.
pub fn matrix_sqrt(p: &HermitianMatrix) -> Result<HermitianMatrix> {
    let sd = spectral_decompose(p, false)?;
    let scale = sd.eigenvalues.iter().map(|d| d.abs()).fold(0.0, f64::max);
    if let Some(&min) = sd.eigenvalues.first() {
        if min < -TOL_SQRT_CLAMP * scale {
            return Err(Error::NegativeEigenvalue { value: min });
        }
    }
    let root = sd.map_eigenvalues(|d| d.max(0.0).sqrt());
    Ok(HermitianMatrix::from_hermitian_part(&root))
}

/// Which member of the superoperator family an instance represents.
#[derive(Debug, Clone, Copy)]
pub enum SuperopKind {
    /// `x = L R⁻¹ = Ad D`, with `D = WW∗`.
    X,
    /// `x̃ = Ad D̃`, with `D̃ = W∗W`.
    XTilde,
    /// `f(x)` for a real function `f` of the eigenvalue quotient.
    FuncOfX(fn(f64) -> f64),
    /// `(L + R)⁻¹`.
    InvLPlusR,
    /// `(L̃ + R̃)⁻¹`.
    InvLTildePlusRTilde,
}

impl SuperopKind {
    pub fn scalar(&self, di: f64, dj: f64) -> f64 {
        match self {
            SuperopKind::X | SuperopKind::XTilde => di / dj,
            SuperopKind::FuncOfX(f) => f(di / dj),
            SuperopKind::InvLPlusR | SuperopKind::InvLTildePlusRTilde => 1.0 / (di + dj),
        }
    }
}

/// A superoperator together with the spectral data it is built from.
#[derive(Debug, Clone)]
pub struct Superoperator {
    kind: SuperopKind,
    spectral: SpectralData,
}

impl Superoperator {
    pub fn new(kind: SuperopKind, spectral: SpectralData) -> Self {
        Superoperator { kind, spectral }
    }

    /// `x` at `W`, built from `D = WW∗`.
    pub fn x(w: &Purification) -> Result<Self> {
        Ok(Self::new(SuperopKind::X, left_spectral(w)?))
    }

    /// `x̃` at `W`, built from `D̃ = W∗W`.
    pub fn x_tilde(w: &Purification) -> Result<Self> {
        Ok(Self::new(SuperopKind::XTilde, right_spectral(w)?))
    }

    pub fn func_of_x(w: &Purification, f: fn(f64) -> f64) -> Result<Self> {
        Ok(Self::new(SuperopKind::FuncOfX(f), left_spectral(w)?))
    }

    pub fn inv_l_plus_r(d: &DensityMatrix) -> Self {
        Self::new(SuperopKind::InvLPlusR, d.spectral().clone())
    }

    pub fn inv_ltilde_plus_rtilde(w: &Purification) -> Result<Self> {
        Ok(Self::new(
            SuperopKind::InvLTildePlusRTilde,
            right_spectral(w)?,
        ))
    }

    pub fn kind(&self) -> SuperopKind {
        self.kind
    }

    pub fn spectral(&self) -> &SpectralData {
        &self.spectral
    }

    pub fn apply(&self, t: &CMatrix) -> Result<CMatrix> {
        let kind = self.kind;
        self.spectral.apply_pairwise(t, |a, b| kind.scalar(a, b))
    }
}

pub fn apply_superop(op: &Superoperator, t: &CMatrix) -> Result<CMatrix> {
    op.apply(t)
}

pub(crate) fn left_spectral(w: &Purification) -> Result<SpectralData> {
    let m = w.matrix();
    spectral_decompose(
        &HermitianMatrix::from_hermitian_part(&(m * m.adjoint())),
        true,
    )
}

pub(crate) fn right_spectral(w: &Purification) -> Result<SpectralData> {
    let m = w.matrix();
    spectral_decompose(
        &HermitianMatrix::from_hermitian_part(&(m.adjoint() * m)),
        true,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{frobenius, from_real_diagonal, identity, unit};

    fn close(a: &CMatrix, b: &CMatrix, tol: f64) -> bool {
        frobenius(&(a - b)) <= tol
    }

    #[test]
    fn identity_spectrum() {
        let s = spectral_decompose(&HermitianMatrix::identity(3), true).unwrap();
        assert_eq!(s.eigenvalues(), &[1.0, 1.0, 1.0]);
        let u = s.eigenvectors();
        assert!(close(&(u.adjoint() * u), &identity(3), 1e-14));
    }

    #[test]
    fn diagonal_spectrum_sorted() {
        let s =
            spectral_decompose(&HermitianMatrix::from_real_diagonal(&[2.0, 1.0]), true).unwrap();
        assert_eq!(s.eigenvalues(), &[1.0, 2.0]);
        let u = s.eigenvectors();
        assert!((u[(1, 0)].norm() - 1.0).abs() < 1e-15);
        assert!((u[(0, 1)].norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn positive_flag_rejects_indefinite() {
        let h = HermitianMatrix::from_real_diagonal(&[1.0, -1.0]);
        assert!(spectral_decompose(&h, false).is_ok());
        assert!(matches!(
            spectral_decompose(&h, true),
            Err(Error::NotPositiveDefinite { .. })
        ));
    }

    #[test]
    fn x_on_unit_at_diagonal_point() {
        let (l1, l2) = (0.8f64, 0.6f64);
        let w = Purification::diagonal(&[l1, l2], false).unwrap();
        let x = Superoperator::x(&w).unwrap();
        let out = x.apply(&unit(2, 0, 1)).unwrap();
        let expected = unit(2, 0, 1).scale(l1 * l1 / (l2 * l2));
        assert!(close(&out, &expected, 1e-14));
    }

    #[test]
    fn x_at_identity_is_identity() {
        let w = Purification::new(identity(2), false).unwrap();
        let x = Superoperator::x(&w).unwrap();
        let t = unit(2, 0, 1) + unit(2, 1, 1).scale(3.0);
        assert!(close(&x.apply(&t).unwrap(), &t, 1e-15));
    }

    #[test]
    fn inverse_one_plus_x() {
        let w = Purification::diagonal(&[1.0, 3.0f64.sqrt()], false).unwrap();
        let op = Superoperator::func_of_x(&w, |r| 1.0 / (1.0 + r)).unwrap();
        let out = op.apply(&unit(2, 0, 1)).unwrap();
        assert!(close(&out, &unit(2, 0, 1).scale(0.75), 1e-15));
    }

    #[test]
    fn superop_dimension_mismatch() {
        let w = Purification::new(identity(2), false).unwrap();
        let x = Superoperator::x(&w).unwrap();
        assert!(matches!(
            x.apply(&identity(3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn sqrt_examples() {
        let s = matrix_sqrt(&HermitianMatrix::identity(2)).unwrap();
        assert!(close(s.matrix(), &identity(2), 1e-15));
        let s = matrix_sqrt(&HermitianMatrix::from_real_diagonal(&[4.0, 9.0])).unwrap();
        assert!(close(s.matrix(), &from_real_diagonal(&[2.0, 3.0]), 1e-15));
    }

    #[test]
    fn sqrt_clamps_and_rejects() {
        let tiny = HermitianMatrix::from_real_diagonal(&[1.0, -1e-14]);
        let s = matrix_sqrt(&tiny).unwrap();
        assert_eq!(s.matrix()[(1, 1)].re, 0.0);
        let neg = HermitianMatrix::from_real_diagonal(&[1.0, -1e-6]);
        assert!(matches!(
            matrix_sqrt(&neg),
            Err(Error::NegativeEigenvalue { .. })
        ));
    }
}
