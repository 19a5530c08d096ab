//! Orthonormal horizontal frames at a diagonal purification `Λ`.
//!
//! With `d_k = λ_k²` the eigenvalues of `D = Λ²` the generators are
//!
//! ```text
//! H_i  = e_ii / √d_i
//! h_ij = (e_ij + e_ji) / √(d_i + d_j)
//! h̃_ij = i (e_ij − e_ji) / √(d_i + d_j)
//! ```
//!
//! ordered `H_1..H_n`, then `h_ij` for `i < j` row-major, then `h̃_ij`.
//! Since `g(GΛ, G'Λ) = Re Tr(G G' D)`, the vectors `G_α Λ` are orthonormal.

use alloc::vec::Vec;

use nalgebra::DMatrix;
#[allow(unused_imports)]
use num_traits::Float;

use crate::config::TOL_TRACE;
use crate::error::{Error, Result};
use crate::matrix::{hs_metric, HermitianMatrix, Purification};

/// Generators `G_α` of an orthonormal horizontal basis `{G_α Λ}`.
#[derive(Debug, Clone)]
pub struct HorizontalFrame {
    base: Purification,
    lambda: Vec<f64>,
    generators: Vec<HermitianMatrix>,
    normalized_case: bool,
}

impl HorizontalFrame {
    pub fn base(&self) -> &Purification {
        &self.base
    }

    /// Diagonal entries `λ_i` of the base point.
    pub fn lambda(&self) -> &[f64] {
        &self.lambda
    }

    /// Eigenvalues `d_i = λ_i²` of `D = Λ²`.
    pub fn eigenvalues(&self) -> Vec<f64> {
        self.lambda.iter().map(|l| l * l).collect()
    }

    pub fn generators(&self) -> &[HermitianMatrix] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn normalized_case(&self) -> bool {
        self.normalized_case
    }

    /// Gram matrix `g(G_α Λ, G_β Λ)`.
    pub fn gram(&self) -> DMatrix<f64> {
        let lam = self.base.matrix();
        let vecs: Vec<_> = self.generators.iter().map(|g| g.matrix() * lam).collect();
        let k = vecs.len();
        DMatrix::from_fn(k, k, |a, b| {
            hs_metric(&vecs[a], &vecs[b]).expect("frame vectors share one dimension")
        })
    }
}

/// Orthonormal horizontal frame at the positive diagonal `Λ`.
///
/// In the normalized case (`Tr Λ² = 1`) the direction `𝟙·Λ = Λ`, normal to
/// the unit sphere, is removed: the diagonal family is Gram–Schmidt
/// orthogonalized against `𝟙`, leaving `n² − 1` generators.
pub fn horizontal_frame(lambda: &Purification, normalized_case: bool) -> Result<HorizontalFrame> {
    let lam = lambda.positive_diagonal().ok_or(Error::NotDiagonal)?;
    let n = lam.len();
    let d: Vec<f64> = lam.iter().map(|l| l * l).collect();
    if normalized_case {
        let tr: f64 = d.iter().sum();
        if (tr - 1.0).abs() > TOL_TRACE {
            return Err(Error::NotNormalized { trace: tr });
        }
    }

    let mut generators = Vec::with_capacity(n * n);
    if normalized_case {
        generators.extend(
            diagonal_complement(&d)
                .into_iter()
                .map(|v| HermitianMatrix::from_real_diagonal(&v)),
        );
    } else {
        for i in 0..n {
            let mut v = alloc::vec![0.0; n];
            v[i] = 1.0 / d[i].sqrt();
            generators.push(HermitianMatrix::from_real_diagonal(&v));
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            generators
                .push(HermitianMatrix::symmetric_unit(n, i, j).scale(1.0 / (d[i] + d[j]).sqrt()));
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            generators.push(
                HermitianMatrix::antisymmetric_unit(n, i, j).scale(1.0 / (d[i] + d[j]).sqrt()),
            );
        }
    }

    Ok(HorizontalFrame {
        base: lambda.clone(),
        lambda: lam,
        generators,
        normalized_case,
    })
}

/// Modified Gram–Schmidt of `e_i/√d_i` against the unit vector `𝟙` under
/// `⟨a, b⟩ = Σ a_k b_k d_k`; returns the `n − 1` surviving directions.
fn diagonal_complement(d: &[f64]) -> Vec<Vec<f64>> {
    let n = d.len();
    let inner =
        |a: &[f64], b: &[f64]| -> f64 { a.iter().zip(b).zip(d).map(|((x, y), w)| x * y * w).sum() };
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(n);
    basis.push(alloc::vec![1.0; n]);
    for i in 0..n {
        if basis.len() == n {
            break;
        }
        let mut v = alloc::vec![0.0; n];
        v[i] = 1.0 / d[i].sqrt();
        for _ in 0..2 {
            for q in &basis {
                let c = inner(&v, q);
                for (vk, qk) in v.iter_mut().zip(q) {
                    *vk -= c * qk;
                }
            }
        }
        let norm = inner(&v, &v).sqrt();
        if norm > 1e-8 {
            v.iter_mut().for_each(|x| *x /= norm);
            basis.push(v);
        }
    }
    basis.remove(0);
    basis
}

/// Generators of the ½-weighted full sum over all ordered pairs `(i, j)`:
/// `h_ij` for every `i, j` (so `h_ii = √2 H_i`) and `h̃_ij` for `i ≠ j`.
pub fn full_pair_generators(lambda: &[f64]) -> Vec<HermitianMatrix> {
    let n = lambda.len();
    let d: Vec<f64> = lambda.iter().map(|l| l * l).collect();
    let mut out = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        for j in 0..n {
            let s = 1.0 / (d[i] + d[j]).sqrt();
            out.push(HermitianMatrix::symmetric_unit(n, i, j).scale(s));
            if i != j {
                out.push(HermitianMatrix::antisymmetric_unit(n, i, j).scale(s));
            }
        }
    }
    out
}
