//! Seeded random matrices.
//!
//! The generator is ChaCha20 seeded through `seed_from_u64`, so streams are
//! bit-reproducible across platforms. Uniforms take the top 53 bits of each
//! `u64`; Gaussians come from Box–Muller.

use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;
use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

use crate::config::RESAMPLE_LIMIT;
use crate::error::{Error, Result};
use crate::matrix::{frobenius, CMatrix, Complex64, DensityMatrix, HermitianMatrix, Purification};

/// Stream of standard normal and complex normal variates.
#[derive(Debug, Clone)]
pub struct GaussianStream {
    rng: ChaCha20Rng,
    spare: Option<f64>,
}

impl GaussianStream {
    pub fn new(seed: u64) -> Self {
        GaussianStream {
            rng: ChaCha20Rng::seed_from_u64(seed),
            spare: None,
        }
    }

    /// Uniform on `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform on `[lo, hi)`.
    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Standard normal `N(0, 1)`.
    pub fn gaussian(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        let (a, b) = self.box_muller();
        self.spare = Some(b);
        a
    }

    fn box_muller(&mut self) -> (f64, f64) {
        // 1 − u lies in (0, 1], so the logarithm is finite.
        let u1 = 1.0 - self.uniform();
        let u2 = self.uniform();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = 2.0 * PI * u2;
        (r * theta.cos(), r * theta.sin())
    }

    /// Standard complex normal: `E|z|² = 1`, real and imaginary parts from
    /// one Box–Muller pair.
    pub fn complex_gaussian(&mut self) -> Complex64 {
        let (a, b) = self.box_muller();
        Complex64::new(a, b) * core::f64::consts::FRAC_1_SQRT_2
    }

    /// Ginibre matrix, entries filled row-major.
    pub fn ginibre(&mut self, n: usize) -> CMatrix {
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self.complex_gaussian();
            }
        }
        m
    }

    /// Hermitian part of a Ginibre matrix (GUE up to scale).
    pub fn hermitian(&mut self, n: usize) -> HermitianMatrix {
        HermitianMatrix::from_hermitian_part(&self.ginibre(n))
    }

    /// Traceless hermitian matrix.
    pub fn traceless_hermitian(&mut self, n: usize) -> HermitianMatrix {
        let h = self.hermitian(n);
        let shift = h.trace() / n as f64;
        HermitianMatrix::from_hermitian_part(&(h.matrix() - CMatrix::identity(n, n).scale(shift)))
    }

    /// Haar unitary: QR of a Ginibre matrix with the phases of `R`'s
    /// diagonal absorbed into `Q`.
    pub fn unitary(&mut self, n: usize) -> CMatrix {
        let qr = self.ginibre(n).qr();
        let (mut q, r) = qr.unpack();
        for k in 0..n {
            let z = r[(k, k)];
            let phase = if z.norm() > 0.0 {
                z / z.norm()
            } else {
                Complex64::new(1.0, 0.0)
            };
            for i in 0..n {
                q[(i, k)] *= phase;
            }
        }
        q
    }

    /// `WW∗ / Tr WW∗` for a Ginibre `W` (Hilbert–Schmidt ensemble),
    /// resampled until the eigenvalue ratio is at most `cond_cap`.
    pub fn density(&mut self, n: usize, cond_cap: f64) -> Result<DensityMatrix> {
        for _ in 0..RESAMPLE_LIMIT {
            let w = self.ginibre(n);
            let d = &w * w.adjoint();
            let tr = d.trace().re;
            if let Ok(dm) = DensityMatrix::new(d.unscale(tr), true) {
                if dm.max_eigenvalue() / dm.min_eigenvalue() <= cond_cap {
                    return Ok(dm);
                }
            }
        }
        Err(Error::ResampleLimitExceeded {
            attempts: RESAMPLE_LIMIT,
        })
    }

    /// Positive entries in `[lo, hi)`.
    pub fn positive_vec(&mut self, n: usize, lo: f64, hi: f64) -> alloc::vec::Vec<f64> {
        (0..n).map(|_| self.uniform_in(lo, hi)).collect()
    }
}

/// Random purification with i.i.d. standard complex Gaussian entries,
/// resampled until `σ_max / σ_min ≤ cond_cap`, then rescaled to
/// `Tr WW∗ = 1` if `normalized`.
pub fn random_purification(
    n: usize,
    seed: u64,
    normalized: bool,
    cond_cap: f64,
) -> Result<Purification> {
    if n == 0 {
        return Err(Error::InvalidArgument("dimension must be at least 1"));
    }
    if !(cond_cap >= 1.0) {
        return Err(Error::InvalidArgument("cond_cap must be at least 1"));
    }
    let mut stream = GaussianStream::new(seed);
    for _ in 0..RESAMPLE_LIMIT {
        let w = stream.ginibre(n);
        if singular_value_ratio(&w) <= cond_cap {
            let w = if normalized {
                w.unscale(frobenius(&w))
            } else {
                w
            };
            if let Ok(p) = Purification::new(w, normalized) {
                return Ok(p);
            }
        }
    }
    Err(Error::ResampleLimitExceeded {
        attempts: RESAMPLE_LIMIT,
    })
}

pub fn singular_value_ratio(w: &CMatrix) -> f64 {
    let sv = w.clone().singular_values();
    let max = sv.iter().cloned().fold(0.0, f64::max);
    let min = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    max / min
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_by_one_normalized_is_a_phase() {
        for seed in 0..5 {
            let w = random_purification(1, seed, true, 1.0).unwrap();
            assert!((w.matrix()[(0, 0)].norm() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn deterministic() {
        let a = random_purification(3, 42, false, 1e6).unwrap();
        let b = random_purification(3, 42, false, 1e6).unwrap();
        assert_eq!(a, b);
        let c = random_purification(3, 43, false, 1e6).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn respects_conditioning_cap() {
        let w = random_purification(4, 1, false, 100.0).unwrap();
        assert!(singular_value_ratio(w.matrix()) <= 100.0);
    }

    #[test]
    fn impossible_cap_exhausts_attempts() {
        let err = random_purification(6, 0, false, 1.0 + 1e-9).unwrap_err();
        assert_eq!(err, Error::ResampleLimitExceeded { attempts: 1000 });
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(random_purification(0, 0, false, 10.0).is_err());
        assert!(random_purification(2, 0, false, 0.5).is_err());
    }

    #[test]
    fn unitary_is_unitary() {
        let mut s = GaussianStream::new(9);
        let u = s.unitary(4);
        let err = frobenius(&(u.adjoint() * &u - CMatrix::identity(4, 4)));
        assert!(err < 1e-13);
    }

    #[test]
    fn gaussian_moments_are_plausible() {
        let mut s = GaussianStream::new(123);
        let n = 20000;
        let xs: alloc::vec::Vec<f64> = (0..n).map(|_| s.gaussian()).collect();
        let mean = xs.iter().sum::<f64>() / n as f64;
        let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n as f64;
        assert!(mean.abs() < 0.03);
        assert!((var - 1.0).abs() < 0.05);
    }
}
