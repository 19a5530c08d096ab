//! Numerical verification of the source-free Yang-Mills equation
//! `∗D∗Ω = 0` for the curvature of the Uhlmann connection.
//!
//! At a point `W` with an orthonormal horizontal frame `{G_α W}`,
//!
//! ```text
//! ∗D∗Ω(GW) = −Σ_α (∇_{G_α W} Ω)(G_α W, GW),
//! ```
//!
//! and each summand has the closed form
//!
//! ```text
//! (∇_{G_α W} Ω)(G_α W, GW) = 2 W∗ (1+x)⁻¹ ( B(G_α, G) ) W∗⁻¹,
//! B(G_α, G) = [G_α, (1−x)/(1+x) [G_α, G] − (1+x)⁻¹ (G G_α + x(G_α G))] − [G_α², G].
//! ```
//!
//! The closed form is the combination `∇(Ω(·,·)) − Ω(∇·, ·) − Ω(·, ∇·)` of
//! three simpler terms, each of which is exposed separately so the finite
//! difference oracle can check them one by one. Generic points are reduced
//! to a positive diagonal `Λ` through the singular value decomposition
//! `W = V Λ U∗`, using invariance under the left and right unitary actions.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::bundle::BundlePoint;
use crate::error::{Error, Result};
use crate::frame::{full_pair_generators, horizontal_frame, HorizontalFrame};
use crate::matrix::{
    check_dim, commutator, frobenius, hs_metric, identity, unit, CMatrix, HermitianMatrix,
    Purification,
};
use crate::random::{random_purification, GaussianStream};

/// The three terms whose combination is `(∇_{G_α W} Ω)(G_α W, GW)`.
#[derive(Debug, Clone, PartialEq)]
pub struct NablaOmegaParts {
    /// Directional derivative of `W ↦ Ω_W(G_α W, GW)` along `G_α W`.
    pub derivative: CMatrix,
    /// `Ω(∇_{G_α W} G_α W, GW) = Ω(G_α² W, GW)`.
    pub first_slot: CMatrix,
    /// `Ω(G_α W, ∇_{G_α W} GW) = Ω(G_α W, G G_α W)`.
    pub second_slot: CMatrix,
}

impl NablaOmegaParts {
    pub fn total(&self) -> CMatrix {
        &self.derivative - &self.first_slot - &self.second_slot
    }
}

fn require_diagonal(lambda: &Purification) -> Result<()> {
    lambda
        .positive_diagonal()
        .map(|_| ())
        .ok_or(Error::NotDiagonal)
}

/// Inner bracket `B(G_α, G)` at `p`.
pub fn bracket_at(p: &BundlePoint, ga: &CMatrix, g: &CMatrix) -> Result<CMatrix> {
    let cayley = p.cayley_x(&commutator(ga, g))?;
    let mixed = p.inv_one_plus_x(&(g * ga + p.x(&(ga * g))?))?;
    Ok(commutator(ga, &(cayley - mixed)) - commutator(&(ga * ga), g))
}

/// `(∇_{G_α W} Ω)(G_α W, GW)` at an arbitrary point.
pub fn nabla_omega_term_at(p: &BundlePoint, ga: &CMatrix, g: &CMatrix) -> Result<CMatrix> {
    let b = bracket_at(p, ga, g)?;
    Ok(p.conjugate_out(&p.inv_one_plus_x(&b)?).scale(2.0))
}

/// The three constituent terms in closed form at an arbitrary point.
pub fn nabla_omega_parts_at(p: &BundlePoint, ga: &CMatrix, g: &CMatrix) -> Result<NablaOmegaParts> {
    let out =
        |m: CMatrix| -> Result<CMatrix> { Ok(p.conjugate_out(&p.inv_one_plus_x(&m)?).scale(2.0)) };
    let derivative = out(commutator(ga, &p.cayley_x(&commutator(ga, g))?))?;
    let first_slot = out(commutator(&(ga * ga), g))?;
    let mixed = p.inv_one_plus_x(&(g * ga + p.x(&(ga * g))?))?;
    let second_slot = out(commutator(ga, &mixed))?;
    Ok(NablaOmegaParts {
        derivative,
        first_slot,
        second_slot,
    })
}

/// `(∇_{G_α Λ} Ω)(G_α Λ, GΛ)` at the positive diagonal `Λ`.
pub fn nabla_omega_term(
    lambda: &Purification,
    ga: &HermitianMatrix,
    g: &HermitianMatrix,
) -> Result<CMatrix> {
    require_diagonal(lambda)?;
    check_dim(lambda.dim(), ga.matrix())?;
    check_dim(lambda.dim(), g.matrix())?;
    nabla_omega_term_at(&BundlePoint::new(lambda)?, ga.matrix(), g.matrix())
}

pub fn nabla_omega_parts(
    lambda: &Purification,
    ga: &HermitianMatrix,
    g: &HermitianMatrix,
) -> Result<NablaOmegaParts> {
    require_diagonal(lambda)?;
    check_dim(lambda.dim(), ga.matrix())?;
    check_dim(lambda.dim(), g.matrix())?;
    nabla_omega_parts_at(&BundlePoint::new(lambda)?, ga.matrix(), g.matrix())
}

/// Finite-difference evaluation of the three terms: the derivative by
/// central differences of `t ↦ Ω_{W(t)}(G_α W(t), G W(t))` along
/// `W(t) = (𝟙 + t G_α) Λ`, the other two from the general curvature
/// formula at `Λ`.
pub fn fd_nabla_omega_parts(
    lambda: &Purification,
    ga: &HermitianMatrix,
    g: &HermitianMatrix,
    h: f64,
) -> Result<NablaOmegaParts> {
    require_diagonal(lambda)?;
    let n = lambda.dim();
    check_dim(n, ga.matrix())?;
    check_dim(n, g.matrix())?;
    if !(h > 0.0) {
        return Err(Error::InvalidArgument(
            "finite-difference step must be positive",
        ));
    }
    let displaced = |t: f64| -> Result<BundlePoint> {
        let w = (identity(n) + ga.matrix().scale(t)) * lambda.matrix();
        let w = Purification::new(w, false).map_err(|_| Error::StepTooLarge {
            step: h,
            limit: f64::NAN,
        })?;
        BundlePoint::new(&w)
    };
    let plus = displaced(h)?.curvature_hh(ga, g)?;
    let minus = displaced(-h)?.curvature_hh(ga, g)?;
    let derivative = (plus - minus).unscale(2.0 * h);

    let p = BundlePoint::new(lambda)?;
    let ga2 = HermitianMatrix::from_hermitian_part(&(ga.matrix() * ga.matrix()));
    let first_slot = p.curvature(&ga2, &(g.matrix() * lambda.matrix()))?;
    let second_slot = p.curvature(ga, &(g.matrix() * ga.matrix() * lambda.matrix()))?;
    Ok(NablaOmegaParts {
        derivative,
        first_slot,
        second_slot,
    })
}

pub fn fd_nabla_omega_oracle(
    lambda: &Purification,
    ga: &HermitianMatrix,
    g: &HermitianMatrix,
    h: f64,
) -> Result<CMatrix> {
    Ok(fd_nabla_omega_parts(lambda, ga, g, h)?.total())
}

fn residual_over(p: &BundlePoint, generators: &[CMatrix], g: &CMatrix) -> Result<CMatrix> {
    let mut acc = CMatrix::zeros(p.dim(), p.dim());
    for ga in generators {
        acc += nabla_omega_term_at(p, ga, g)?;
    }
    Ok(-acc)
}

fn frame_matrices(frame: &HorizontalFrame) -> Vec<CMatrix> {
    frame
        .generators()
        .iter()
        .map(|g| g.matrix().clone())
        .collect()
}

/// `∗D∗Ω(GΛ) = −Σ_α (∇_{G_α Λ} Ω)(G_α Λ, GΛ)` over `horizontal_frame`.
///
/// In the normalized case the sum runs over the `n² − 1` generators
/// tangent to the unit sphere. The normal correction terms of the induced
/// connection vanish there (see [`normal_correction`]), so the summand is
/// unchanged.
pub fn ym_residual(
    lambda: &Purification,
    g: &HermitianMatrix,
    normalized_case: bool,
) -> Result<CMatrix> {
    let frame = horizontal_frame(lambda, normalized_case)?;
    check_dim(lambda.dim(), g.matrix())?;
    let p = BundlePoint::new(lambda)?;
    residual_over(&p, &frame_matrices(&frame), g.matrix())
}

/// The same residual through the ½-weighted sum over all ordered pairs
/// `(i, j)` of the `h_ij` and `h̃_ij` families.
pub fn ym_residual_full_sum(lambda: &Purification, g: &HermitianMatrix) -> Result<CMatrix> {
    let lam = lambda.positive_diagonal().ok_or(Error::NotDiagonal)?;
    check_dim(lambda.dim(), g.matrix())?;
    let p = BundlePoint::new(lambda)?;
    let gens: Vec<CMatrix> = full_pair_generators(&lam)
        .into_iter()
        .map(|h| h.into_matrix())
        .collect();
    Ok(residual_over(&p, &gens, g.matrix())?.scale(0.5))
}

/// `Σ_α B(G_α, G)`, the residual stripped of the injective outer map
/// `M ↦ 2 W∗ (1+x)⁻¹(M) W∗⁻¹`.
pub fn bracket_sum(
    lambda: &Purification,
    g: &HermitianMatrix,
    normalized_case: bool,
) -> Result<CMatrix> {
    let frame = horizontal_frame(lambda, normalized_case)?;
    check_dim(lambda.dim(), g.matrix())?;
    let p = BundlePoint::new(lambda)?;
    let mut acc = CMatrix::zeros(p.dim(), p.dim());
    for ga in frame.generators() {
        acc += bracket_at(&p, ga.matrix(), g.matrix())?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// One sign branch of the pair sum at `Λ`:
///
/// ```text
/// Σ_{i,j} ±1/(d_i + d_j) { −[E², G] + [E, (1−x)/(1+x)[E, G] − (1+x)⁻¹(G E + x(E G))] },
/// E = e_ij ± e_ji,  d_k = λ_k².
/// ```
///
/// `G` may be any complex matrix; the expression is linear in it.
pub fn sum19_partial(lambda: &Purification, g: &CMatrix, sign: Sign) -> Result<CMatrix> {
    let lam = lambda.positive_diagonal().ok_or(Error::NotDiagonal)?;
    let n = lam.len();
    check_dim(n, g)?;
    let d: Vec<f64> = lam.iter().map(|l| l * l).collect();
    let p = BundlePoint::new(lambda)?;
    let s = sign.value();
    let mut acc = CMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let e = unit(n, i, j) + unit(n, j, i).scale(s);
            let cayley = p.cayley_x(&commutator(&e, g))?;
            let mixed = p.inv_one_plus_x(&(g * &e + p.x(&(&e * g))?))?;
            let term = commutator(&e, &(cayley - mixed)) - commutator(&(&e * &e), g);
            acc += term.scale(s / (d[i] + d[j]));
        }
    }
    Ok(acc)
}

/// Correction terms of the connection induced on the unit sphere,
///
/// ```text
/// −g(∇_{G_α Λ} G_α Λ, N) Ω(GΛ, N) + g(∇_{G_α Λ} GΛ, N) Ω(G_α Λ, N),   N = Λ.
/// ```
///
/// They vanish because `Ω(·, Λ) = Ω(·, 𝟙·Λ) = 0`.
pub fn normal_correction(
    lambda: &Purification,
    ga: &HermitianMatrix,
    g: &HermitianMatrix,
) -> Result<CMatrix> {
    require_diagonal(lambda)?;
    let l = lambda.matrix();
    let p = BundlePoint::new(lambda)?;
    let a = hs_metric(&(ga.matrix() * ga.matrix() * l), l)?;
    let b = hs_metric(&(g.matrix() * ga.matrix() * l), l)?;
    Ok(p.curvature(ga, l)?.scale(b) - p.curvature(g, l)?.scale(a))
}

/// Parameters of a verification campaign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub dim: usize,
    pub seed: u64,
    pub samples: usize,
    pub normalized_case: bool,
    /// Relative tolerance: residuals are judged against `tol · max(scale, 1)`.
    pub tol: f64,
    /// Cap on the eigenvalue ratio of `D = WW∗`.
    pub cond_cap: f64,
}

impl VerifyConfig {
    pub fn new(dim: usize, seed: u64, samples: usize, normalized_case: bool) -> Self {
        VerifyConfig {
            dim,
            seed,
            samples,
            normalized_case,
            tol: crate::config::default_ym_tolerance(dim),
            cond_cap: crate::config::DEFAULT_COND_CAP,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::InvalidArgument("dimension must be at least 1"));
        }
        if self.samples == 0 {
            return Err(Error::InvalidArgument("samples must be at least 1"));
        }
        if !(self.tol > 0.0) {
            return Err(Error::InvalidArgument("tolerance must be positive"));
        }
        if !(self.cond_cap >= 1.0) {
            return Err(Error::InvalidArgument("cond_cap must be at least 1"));
        }
        Ok(())
    }
}

/// Residual for one probe direction.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeResidual {
    pub sample: usize,
    pub probe_id: String,
    /// `‖∗D∗Ω(GΛ)‖_F / ‖G‖_F`.
    pub residual: f64,
    /// Largest `‖Ω(G_α Λ, G_β Λ)‖_F` over frame pairs at this sample.
    pub scale: f64,
}

/// Outcome of [`verify`].
#[derive(Debug, Clone, PartialEq)]
pub struct YMReport {
    pub dim: usize,
    pub seed: u64,
    pub normalized_case: bool,
    pub samples: usize,
    pub residuals: Vec<ProbeResidual>,
    pub max_residual: f64,
    /// Largest curvature norm over all samples and frame pairs.
    pub scale: f64,
    /// Residual at the undiagonalized first sample, frame conjugated.
    pub general_point_residual: f64,
    /// `max ‖res_W(VGV∗) − U res_Λ(G) U∗‖ / ‖G‖` at the first sample.
    pub equivariance_defect: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl YMReport {
    pub fn threshold(&self) -> f64 {
        self.tolerance * self.scale.max(1.0)
    }

    pub fn max_relative_residual(&self) -> f64 {
        self.max_residual / self.scale.max(1.0)
    }
}

/// Seed of sample `s` in a campaign seeded with `seed`.
pub fn sample_seed(seed: u64, s: usize) -> u64 {
    seed.wrapping_add((s as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Hermitian probe basis `e_kk`, `e_kl + e_lk`, `i(e_kl − e_lk)` (`k < l`)
/// with stable identifiers (one-based indices).
pub fn probe_basis(n: usize) -> Vec<(String, HermitianMatrix)> {
    let mut out = Vec::with_capacity(n * n);
    for k in 0..n {
        let mut g = CMatrix::zeros(n, n);
        g[(k, k)] = crate::matrix::Complex64::new(1.0, 0.0);
        out.push((
            format!("diag:{}", k + 1),
            HermitianMatrix::from_hermitian_part(&g),
        ));
    }
    for k in 0..n {
        for l in (k + 1)..n {
            out.push((
                format!("sym:{}:{}", k + 1, l + 1),
                HermitianMatrix::symmetric_unit(n, k, l),
            ));
        }
    }
    for k in 0..n {
        for l in (k + 1)..n {
            out.push((
                format!("asym:{}:{}", k + 1, l + 1),
                HermitianMatrix::antisymmetric_unit(n, k, l),
            ));
        }
    }
    out
}

const RANDOM_PROBES: usize = 3;

fn random_probes(n: usize, seed: u64) -> Vec<(String, HermitianMatrix)> {
    let mut stream = GaussianStream::new(seed ^ 0x5EED_0F9A_0BE5_u64);
    (0..RANDOM_PROBES)
        .map(|r| {
            let h = stream.hermitian(n);
            let norm = frobenius(h.matrix());
            (format!("rand:{}", r + 1), h.scale(1.0 / norm))
        })
        .collect()
}

/// Largest `‖Ω(G_α Λ, G_β Λ)‖_F` over pairs of frame generators.
pub fn curvature_scale(p: &BundlePoint, frame: &HorizontalFrame) -> Result<f64> {
    let gens = frame.generators();
    let mut scale = 0.0f64;
    for a in 0..gens.len() {
        for b in (a + 1)..gens.len() {
            scale = scale.max(frobenius(&p.curvature_hh(&gens[a], &gens[b])?));
        }
    }
    Ok(scale)
}

/// Samples random purifications, reduces each to its diagonal
/// representative `Λ` and checks `∗D∗Ω(GΛ) = 0` on the full hermitian probe
/// basis plus three random probes. The first sample is additionally
/// checked at the original, undiagonalized point with the conjugated frame.
pub fn verify(cfg: &VerifyConfig) -> Result<YMReport> {
    verify_with(cfg, |_, _| {})
}

/// [`verify`], calling `on_sample(s, residuals)` after each sample with
/// that sample's probe residuals.
pub fn verify_with(
    cfg: &VerifyConfig,
    mut on_sample: impl FnMut(usize, &[ProbeResidual]),
) -> Result<YMReport> {
    cfg.validate()?;
    let n = cfg.dim;
    let sv_cap = cfg.cond_cap.sqrt();
    let basis = probe_basis(n);

    let mut residuals = Vec::with_capacity(cfg.samples * (basis.len() + RANDOM_PROBES));
    let mut scale = 0.0f64;
    let mut general_point_residual = 0.0f64;
    let mut equivariance_defect = 0.0f64;

    for s in 0..cfg.samples {
        let seed = sample_seed(cfg.seed, s);
        let w = random_purification(n, seed, cfg.normalized_case, sv_cap)?;
        let reduction = diagonal_reduction(&w)?;
        let lambda = &reduction.lambda;
        let frame = horizontal_frame(lambda, cfg.normalized_case)?;
        let p = BundlePoint::new(lambda)?;
        let gens = frame_matrices(&frame);
        let sample_scale = curvature_scale(&p, &frame)?;
        scale = scale.max(sample_scale);

        let probes: Vec<(String, HermitianMatrix)> = basis
            .iter()
            .cloned()
            .chain(random_probes(n, seed))
            .collect();

        let general = if s == 0 {
            Some((BundlePoint::new(&w)?, reduction.conjugated(&gens)))
        } else {
            None
        };

        let first = residuals.len();
        for (id, g) in probes {
            let norm = frobenius(g.matrix());
            let res = residual_over(&p, &gens, g.matrix())?;
            residuals.push(ProbeResidual {
                sample: s,
                probe_id: id,
                residual: frobenius(&res) / norm,
                scale: sample_scale,
            });
            if let Some((pw, gens_w)) = &general {
                let gw = reduction.left_conjugate(g.matrix());
                let res_w = residual_over(pw, gens_w, &gw)?;
                let expected = reduction.right_conjugate(&res);
                general_point_residual = general_point_residual.max(frobenius(&res_w) / norm);
                equivariance_defect =
                    equivariance_defect.max(frobenius(&(res_w - expected)) / norm);
            }
        }
        on_sample(s, &residuals[first..]);
    }

    let max_residual = residuals.iter().map(|r| r.residual).fold(0.0, f64::max);
    let threshold = cfg.tol * scale.max(1.0);
    let finite = residuals.iter().all(|r| r.residual.is_finite());
    let passed = finite
        && max_residual <= threshold
        && general_point_residual <= threshold
        && equivariance_defect <= threshold;
    Ok(YMReport {
        dim: n,
        seed: cfg.seed,
        normalized_case: cfg.normalized_case,
        samples: cfg.samples,
        residuals,
        max_residual,
        scale,
        general_point_residual,
        equivariance_defect,
        tolerance: cfg.tol,
        passed,
    })
}

/// `W = V Λ U∗` with `Λ` positive diagonal.
#[derive(Debug, Clone)]
pub struct DiagonalReduction {
    pub lambda: Purification,
    pub v: CMatrix,
    pub u: CMatrix,
}

impl DiagonalReduction {
    /// `V M V∗`: carries a generator at `Λ` to the matching one at `W`.
    pub fn left_conjugate(&self, m: &CMatrix) -> CMatrix {
        &self.v * m * self.v.adjoint()
    }

    /// `U M U∗`: carries a curvature value at `Λ` to the one at `W`.
    pub fn right_conjugate(&self, m: &CMatrix) -> CMatrix {
        &self.u * m * self.u.adjoint()
    }

    fn conjugated(&self, gens: &[CMatrix]) -> Vec<CMatrix> {
        gens.iter().map(|g| self.left_conjugate(g)).collect()
    }
}

pub fn diagonal_reduction(w: &Purification) -> Result<DiagonalReduction> {
    let svd = w.matrix().clone().svd(true, true);
    let v = svd.u.expect("left singular vectors requested");
    let u_adj = svd.v_t.expect("right singular vectors requested");
    let sigma: Vec<f64> = svd.singular_values.iter().cloned().collect();
    let lambda = Purification::diagonal(&sigma, w.is_normalized())?;
    Ok(DiagonalReduction {
        lambda,
        v,
        u: u_adj.adjoint(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::max_abs;

    fn lambda3() -> Purification {
        Purification::diagonal(&[0.9, 0.6, 1.3], false).unwrap()
    }

    #[test]
    fn identity_probe_vanishes_termwise() {
        let l = lambda3();
        let one = HermitianMatrix::identity(3);
        for ga in horizontal_frame(&l, false).unwrap().generators() {
            assert!(max_abs(&nabla_omega_term(&l, ga, &one).unwrap()) < 1e-12);
        }
        assert!(max_abs(&ym_residual(&l, &one, false).unwrap()) < 1e-12);
    }

    #[test]
    fn identity_generator_contributes_nothing() {
        let l = lambda3();
        let mut s = GaussianStream::new(2);
        let g = s.hermitian(3);
        let one = HermitianMatrix::identity(3);
        assert!(max_abs(&nabla_omega_term(&l, &one, &g).unwrap()) < 1e-12);
    }

    #[test]
    fn parts_combine_to_closed_form() {
        let l = lambda3();
        let mut s = GaussianStream::new(3);
        let (ga, g) = (s.hermitian(3), s.hermitian(3));
        let parts = nabla_omega_parts(&l, &ga, &g).unwrap();
        let term = nabla_omega_term(&l, &ga, &g).unwrap();
        assert!(max_abs(&(parts.total() - &term)) < 1e-12 * max_abs(&term));
    }

    #[test]
    fn rejects_non_diagonal_base() {
        let mut s = GaussianStream::new(4);
        let w = Purification::new(s.ginibre(2), false).unwrap();
        let g = HermitianMatrix::identity(2);
        assert_eq!(
            nabla_omega_term(&w, &g, &g).unwrap_err(),
            Error::NotDiagonal
        );
        assert_eq!(ym_residual(&w, &g, false).unwrap_err(), Error::NotDiagonal);
    }

    #[test]
    fn fd_oracle_identity_probe_and_diagonal_inputs() {
        let l = lambda3();
        let mut s = GaussianStream::new(5);
        let ga = s.hermitian(3);
        let one = HermitianMatrix::identity(3);
        assert!(max_abs(&fd_nabla_omega_oracle(&l, &ga, &one, 1e-4).unwrap()) < 1e-8);
        let gad = HermitianMatrix::from_real_diagonal(&[0.3, -1.0, 0.5]);
        let gd = HermitianMatrix::from_real_diagonal(&[1.2, 0.1, -0.7]);
        assert!(max_abs(&fd_nabla_omega_oracle(&l, &gad, &gd, 1e-4).unwrap()) < 1e-8);
    }

    #[test]
    fn fd_oracle_rejects_bad_step() {
        let l = lambda3();
        let g = HermitianMatrix::identity(3);
        assert!(fd_nabla_omega_oracle(&l, &g, &g, 0.0).is_err());
        assert!(matches!(
            fd_nabla_omega_oracle(&l, &g, &g, 1.0),
            Err(Error::StepTooLarge { .. })
        ));
    }

    #[test]
    fn sum19_is_linear_in_probe() {
        let l = lambda3();
        let a = unit(3, 0, 1);
        let b = unit(3, 1, 2);
        for sign in [Sign::Plus, Sign::Minus] {
            let lhs = sum19_partial(&l, &(&a + &b), sign).unwrap();
            let rhs = sum19_partial(&l, &a, sign).unwrap() + sum19_partial(&l, &b, sign).unwrap();
            assert!(max_abs(&(lhs - rhs)) < 1e-12);
        }
    }

    #[test]
    fn one_dimensional_verify_is_exact() {
        for normalized in [false, true] {
            let r = verify(&VerifyConfig::new(1, 17, 3, normalized)).unwrap();
            assert!(r.passed);
            assert_eq!(r.max_residual, 0.0);
        }
    }

    #[test]
    fn verify_rejects_invalid_config() {
        let mut cfg = VerifyConfig::new(2, 0, 1, false);
        cfg.dim = 0;
        assert!(verify(&cfg).is_err());
        let mut cfg = VerifyConfig::new(2, 0, 0, false);
        assert!(verify(&cfg).is_err());
        cfg.samples = 1;
        cfg.tol = 0.0;
        assert!(verify(&cfg).is_err());
    }

    #[test]
    fn reduction_reconstructs() {
        let w = random_purification(4, 8, true, 30.0).unwrap();
        let r = diagonal_reduction(&w).unwrap();
        let back = &r.v * r.lambda.matrix() * r.u.adjoint();
        assert!(max_abs(&(back - w.matrix())) < 1e-13);
    }
}
