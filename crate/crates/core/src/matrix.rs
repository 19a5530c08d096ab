//! Complex matrix primitives and the validated matrix types of the bundle:
//! hermitian matrices, faithful density matrices and purifications.

use nalgebra::DMatrix;
#[allow(unused_imports)]
use num_traits::Float;

use crate::config::{TOL_HERM, TOL_PD, TOL_TRACE};
use crate::error::{Error, Result};
use crate::spectral::{spectral_decompose, SpectralData};

pub type Complex64 = num_complex::Complex<f64>;

/// Dense complex `n × n` matrix, the carrier of `W`, `T`, `G`, `A`, `e_ij`.
pub type CMatrix = DMatrix<Complex64>;

pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub(crate) const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

pub fn zeros(n: usize) -> CMatrix {
    CMatrix::zeros(n, n)
}

/// The standard matrix unit `e_ij` (zero-based indices).
pub fn unit(n: usize, i: usize, j: usize) -> CMatrix {
    let mut m = zeros(n);
    m[(i, j)] = ONE;
    m
}

pub fn from_real_diagonal(diag: &[f64]) -> CMatrix {
    let n = diag.len();
    let mut m = zeros(n);
    for (k, &d) in diag.iter().enumerate() {
        m[(k, k)] = Complex64::new(d, 0.0);
    }
    m
}

pub fn commutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a * b - b * a
}

pub fn frobenius(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn trace(m: &CMatrix) -> Complex64 {
    (0..m.nrows()).map(|k| m[(k, k)]).sum()
}

/// Largest entrywise deviation from hermiticity, `max |m_ij − conj(m_ji)|`.
pub fn hermiticity_defect(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

/// `(m + m∗)/2`.
pub fn hermitian_part(m: &CMatrix) -> CMatrix {
    (m + m.adjoint()).scale(0.5)
}

/// `(m − m∗)/2`.
pub fn antihermitian_part(m: &CMatrix) -> CMatrix {
    (m - m.adjoint()).scale(0.5)
}

/// The bundle metric `g(T1, T2) = Re Tr T1∗ T2` on `M_n(ℂ)`.
pub fn hs_metric(t1: &CMatrix, t2: &CMatrix) -> Result<f64> {
    check_same_dim(t1, t2)?;
    Ok(t1
        .iter()
        .zip(t2.iter())
        .map(|(a, b)| (a.conj() * b).re)
        .sum())
}

pub(crate) fn check_square(m: &CMatrix) -> Result<usize> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    if m.nrows() == 0 {
        return Err(Error::EmptyMatrix);
    }
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(m.nrows())
}

pub(crate) fn check_same_dim(a: &CMatrix, b: &CMatrix) -> Result<()> {
    if a.shape() != b.shape() {
        return Err(Error::DimensionMismatch {
            expected: a.nrows(),
            found: b.nrows(),
        });
    }
    Ok(())
}

pub(crate) fn check_dim(expected: usize, m: &CMatrix) -> Result<()> {
    if m.nrows() != expected || m.ncols() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: m.nrows(),
        });
    }
    Ok(())
}

/// A hermitian matrix. Construction checks `|m_ij − conj(m_ji)| ≤ 1e-12`
/// and stores the exact hermitian part.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix(CMatrix);

impl HermitianMatrix {
    pub fn new(m: CMatrix) -> Result<Self> {
        check_square(&m)?;
        let deviation = hermiticity_defect(&m);
        if deviation > TOL_HERM {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(HermitianMatrix(hermitian_part(&m)))
    }

    /// Hermitian part of an arbitrary square matrix; never fails on shape
    /// grounds other than squareness.
    pub fn from_hermitian_part(m: &CMatrix) -> Self {
        HermitianMatrix(hermitian_part(m))
    }

    pub fn zeros(n: usize) -> Self {
        HermitianMatrix(zeros(n))
    }

    pub fn identity(n: usize) -> Self {
        HermitianMatrix(identity(n))
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        HermitianMatrix(from_real_diagonal(diag))
    }

    /// `e_ij + e_ji` (zero-based).
    pub fn symmetric_unit(n: usize, i: usize, j: usize) -> Self {
        HermitianMatrix(unit(n, i, j) + unit(n, j, i))
    }

    /// `i(e_ij − e_ji)` (zero-based).
    pub fn antisymmetric_unit(n: usize, i: usize, j: usize) -> Self {
        HermitianMatrix((unit(n, i, j) - unit(n, j, i)) * I)
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> CMatrix {
        self.0
    }

    pub fn scale(&self, s: f64) -> Self {
        HermitianMatrix(self.0.scale(s))
    }

    pub fn trace(&self) -> f64 {
        trace(&self.0).re
    }
}

impl AsRef<CMatrix> for HermitianMatrix {
    fn as_ref(&self) -> &CMatrix {
        &self.0
    }
}

/// A faithful (strictly positive definite) density matrix, optionally of
/// unit trace. Its spectral decomposition is computed once at construction.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    mat: CMatrix,
    normalized: bool,
    spectral: SpectralData,
}

impl DensityMatrix {
    pub fn new(m: CMatrix, normalized: bool) -> Result<Self> {
        let h = HermitianMatrix::new(m)?;
        Self::from_hermitian(h, normalized)
    }

    pub fn from_hermitian(h: HermitianMatrix, normalized: bool) -> Result<Self> {
        let spectral = spectral_decompose(&h, true)?;
        if normalized {
            let tr = h.trace();
            if (tr - 1.0).abs() > TOL_TRACE {
                return Err(Error::NotNormalized { trace: tr });
            }
        }
        Ok(DensityMatrix {
            mat: h.into_matrix(),
            normalized,
            spectral,
        })
    }

    /// Rescales to unit trace and marks the state normalized.
    pub fn normalize(&self) -> Result<Self> {
        let tr = trace(&self.mat).re;
        DensityMatrix::new(self.mat.unscale(tr), true)
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.mat
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn spectral(&self) -> &SpectralData {
        &self.spectral
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.spectral.eigenvalues()[0]
    }

    pub fn max_eigenvalue(&self) -> f64 {
        *self
            .spectral
            .eigenvalues()
            .last()
            .expect("nonempty spectrum")
    }

    pub fn as_hermitian(&self) -> HermitianMatrix {
        HermitianMatrix(self.mat.clone())
    }
}

impl PartialEq for DensityMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat && self.normalized == other.normalized
    }
}

/// An invertible purification `W`, optionally with `Tr WW∗ = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Purification {
    mat: CMatrix,
    normalized: bool,
}

impl Purification {
    pub fn new(m: CMatrix, normalized: bool) -> Result<Self> {
        check_square(&m)?;
        let sv = m.clone().singular_values();
        let smax = sv.iter().cloned().fold(0.0, f64::max);
        let smin = sv.iter().cloned().fold(f64::INFINITY, f64::min);
        if !(smin > TOL_PD * smax) {
            return Err(Error::Singular { sigma_min: smin });
        }
        if normalized {
            let tr = frobenius(&m).powi(2);
            if (tr - 1.0).abs() > TOL_TRACE {
                return Err(Error::NotNormalized { trace: tr });
            }
        }
        Ok(Purification { mat: m, normalized })
    }

    /// Diagonal purification `diag(λ_1, …, λ_n)`.
    pub fn diagonal(lambda: &[f64], normalized: bool) -> Result<Self> {
        Purification::new(from_real_diagonal(lambda), normalized)
    }

    /// The positive square root `D^{1/2}`, a purification of `D`.
    pub fn sqrt_of(d: &DensityMatrix) -> Self {
        let root = d.spectral().map_eigenvalues(f64::sqrt);
        Purification {
            mat: root,
            normalized: d.is_normalized(),
        }
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> CMatrix {
        self.mat
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// Right action of the structure group, `W ↦ WU`.
    pub fn right_act(&self, u: &CMatrix) -> Result<Self> {
        check_dim(self.dim(), u)?;
        Purification::new(&self.mat * u, self.normalized)
    }

    /// Real positive diagonal entries, if `W` is a positive diagonal matrix.
    pub fn positive_diagonal(&self) -> Option<alloc::vec::Vec<f64>> {
        let n = self.dim();
        let scale = max_abs(&self.mat);
        let tol = 1e-14 * scale;
        let mut out = alloc::vec::Vec::with_capacity(n);
        for i in 0..n {
            for j in 0..n {
                let z = self.mat[(i, j)];
                if i == j {
                    if z.im.abs() > tol || !(z.re > 0.0) {
                        return None;
                    }
                } else if z.norm() > tol {
                    return None;
                }
            }
            out.push(self.mat[(i, i)].re);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hs_metric_examples() {
        let e11 = unit(2, 0, 0);
        assert_eq!(hs_metric(&e11, &e11).unwrap(), 1.0);
        assert_eq!(hs_metric(&unit(2, 0, 1), &unit(2, 1, 0)).unwrap(), 0.0);
        let t1 = e11.map(|z| z * Complex64::new(1.0, 1.0));
        assert_eq!(hs_metric(&t1, &e11).unwrap(), 1.0);
    }

    #[test]
    fn hs_metric_dimension_mismatch() {
        let err = hs_metric(&zeros(2), &zeros(3)).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn hermitian_rejects_non_hermitian() {
        let err = HermitianMatrix::new(unit(2, 0, 1)).unwrap_err();
        assert!(matches!(err, Error::NotHermitian { .. }));
        assert!(HermitianMatrix::new(unit(2, 0, 0)).is_ok());
    }

    #[test]
    fn rejects_nonsquare_and_nonfinite() {
        let m = CMatrix::zeros(2, 3);
        assert!(matches!(
            HermitianMatrix::new(m),
            Err(Error::NotSquare { .. })
        ));
        let mut m = identity(2);
        m[(0, 0)] = Complex64::new(f64::NAN, 0.0);
        assert_eq!(HermitianMatrix::new(m), Err(Error::NonFinite));
    }

    #[test]
    fn density_checks() {
        assert!(DensityMatrix::new(from_real_diagonal(&[0.5, 0.5]), true).is_ok());
        assert!(matches!(
            DensityMatrix::new(from_real_diagonal(&[1.0, 0.5]), true),
            Err(Error::NotNormalized { .. })
        ));
        assert!(matches!(
            DensityMatrix::new(from_real_diagonal(&[1.0, -0.5]), false),
            Err(Error::NotPositiveDefinite { .. })
        ));
        assert!(matches!(
            DensityMatrix::new(from_real_diagonal(&[1.0, 0.0]), false),
            Err(Error::NotPositiveDefinite { .. })
        ));
    }

    #[test]
    fn purification_checks() {
        assert!(matches!(
            Purification::new(from_real_diagonal(&[1.0, 0.0]), false),
            Err(Error::Singular { .. })
        ));
        let s = 0.5f64.sqrt();
        let w = Purification::diagonal(&[s, s], true).unwrap();
        assert_eq!(w.positive_diagonal().unwrap(), alloc::vec![s, s]);
        let off = Purification::new(identity(2) + unit(2, 0, 1), false).unwrap();
        assert!(off.positive_diagonal().is_none());
    }
}
