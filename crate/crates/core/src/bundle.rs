//! The purification bundle `π(W) = WW∗`: vertical/horizontal splitting,
//! the connection form, its curvature and horizontal lifts.
//!
//! Vertical vectors at `W` are `WA` with `A` antihermitian, horizontal ones
//! are `GW` with `G` hermitian. The connection form is
//!
//! ```text
//! ω(T) = (L̃ + R̃)⁻¹ (W∗T − T∗W),      D̃ = W∗W,
//! ```
//!
//! and with a horizontal first argument the curvature is
//!
//! ```text
//! Ω(GW, T) = 2 W∗ (1+x)⁻¹ ( [G, (1+x)⁻¹ (T W⁻¹ + x(W∗⁻¹ T∗))] ) W∗⁻¹,
//! ```
//!
//! where `x = Ad D`, `D = WW∗`.

use crate::error::{Error, Result};
use crate::matrix::{
    antihermitian_part, check_dim, commutator, frobenius, hs_metric, CMatrix, DensityMatrix,
    HermitianMatrix, Purification,
};
use crate::spectral::SpectralData;
use crate::sylvester::solve_sylvester;

/// A purification together with everything needed to apply the bundle
/// superoperators at it: `W∗`, `W⁻¹`, `W∗⁻¹` and the spectral data of
/// `D = WW∗` and `D̃ = W∗W`.
#[derive(Debug, Clone)]
pub struct BundlePoint {
    w: Purification,
    w_adj: CMatrix,
    w_inv: CMatrix,
    w_adj_inv: CMatrix,
    density: DensityMatrix,
    right: SpectralData,
}

impl BundlePoint {
    pub fn new(w: &Purification) -> Result<Self> {
        let m = w.matrix();
        let n = w.dim();
        let w_inv = m
            .clone()
            .try_inverse()
            .ok_or(Error::Singular { sigma_min: 0.0 })?;
        let w_adj = m.adjoint();
        let w_adj_inv = w_inv.adjoint();
        let density = project(w)?;
        let right = DensityMatrix::new(&w_adj * m, false)?.spectral().clone();
        debug_assert_eq!(right.dim(), n);
        Ok(BundlePoint {
            w: w.clone(),
            w_adj,
            w_inv,
            w_adj_inv,
            density,
            right,
        })
    }

    pub fn dim(&self) -> usize {
        self.w.dim()
    }

    pub fn purification(&self) -> &Purification {
        &self.w
    }

    pub fn w(&self) -> &CMatrix {
        self.w.matrix()
    }

    pub fn density(&self) -> &DensityMatrix {
        &self.density
    }

    /// `x(T) = D T D⁻¹`.
    pub fn x(&self, t: &CMatrix) -> Result<CMatrix> {
        self.density.spectral().apply_pairwise(t, |a, b| a / b)
    }

    /// `f(x)(T)`.
    pub fn func_of_x(&self, t: &CMatrix, f: impl Fn(f64) -> f64) -> Result<CMatrix> {
        self.density.spectral().apply_pairwise(t, |a, b| f(a / b))
    }

    /// `(1 + x)⁻¹ (T)`.
    pub fn inv_one_plus_x(&self, t: &CMatrix) -> Result<CMatrix> {
        self.func_of_x(t, |r| 1.0 / (1.0 + r))
    }

    /// `(1 − x)(1 + x)⁻¹ (T)`.
    pub fn cayley_x(&self, t: &CMatrix) -> Result<CMatrix> {
        self.func_of_x(t, |r| (1.0 - r) / (1.0 + r))
    }

    /// `(L̃ + R̃)⁻¹ (T)`, built from `D̃ = W∗W`.
    pub fn inv_ltilde_plus_rtilde(&self, t: &CMatrix) -> Result<CMatrix> {
        self.right.apply_pairwise(t, |a, b| 1.0 / (a + b))
    }

    /// `W∗ M W∗⁻¹`.
    pub fn conjugate_out(&self, m: &CMatrix) -> CMatrix {
        &self.w_adj * m * &self.w_adj_inv
    }

    pub fn connection_form(&self, t: &CMatrix) -> Result<CMatrix> {
        check_dim(self.dim(), t)?;
        let w = self.w();
        let src = &self.w_adj * t - t.adjoint() * w;
        Ok(antihermitian_part(&self.inv_ltilde_plus_rtilde(&src)?))
    }

    pub fn split_tangent(&self, t: &CMatrix) -> Result<VerticalHorizontalSplit> {
        let a = self.connection_form(t)?;
        let w = self.w();
        let vertical = w * &a;
        let horizontal = t - &vertical;
        let y = HermitianMatrix::from_hermitian_part(&(t * w.adjoint() + w * t.adjoint()));
        let generator = solve_sylvester(&self.density, &y)?;
        debug_assert!(
            frobenius(&(generator.matrix() * w - &horizontal))
                <= 1e-9 * frobenius(t).max(1.0) * crate::random::singular_value_ratio(w)
        );
        Ok(VerticalHorizontalSplit {
            vertical,
            horizontal,
            connection: a,
            generator,
        })
    }

    pub fn horizontal_lift(&self, x: &HermitianMatrix) -> Result<CMatrix> {
        let g = solve_sylvester(&self.density, x)?;
        Ok(g.matrix() * self.w())
    }

    /// `Ω(GW, T)` for arbitrary `T`.
    pub fn curvature(&self, g: &HermitianMatrix, t: &CMatrix) -> Result<CMatrix> {
        check_dim(self.dim(), g.matrix())?;
        check_dim(self.dim(), t)?;
        let hor = t * &self.w_inv;
        let ver = self.x(&(&self.w_adj_inv * t.adjoint()))?;
        let inner = self.inv_one_plus_x(&(hor + ver))?;
        let outer = self.inv_one_plus_x(&commutator(g.matrix(), &inner))?;
        let value = self.conjugate_out(&outer).scale(2.0);
        #[cfg(debug_assertions)]
        self.check_curvature_on_horizontal(g, t, &value)?;
        Ok(value)
    }

    /// For horizontal `T = G'W` the general formula must agree with
    /// `curvature_hh(G, G')`.
    #[cfg(debug_assertions)]
    fn check_curvature_on_horizontal(
        &self,
        g: &HermitianMatrix,
        t: &CMatrix,
        value: &CMatrix,
    ) -> Result<()> {
        let a = self.connection_form(t)?;
        let scale = frobenius(t).max(f64::MIN_POSITIVE);
        if frobenius(&a) <= 1e-13 * scale {
            let gp = HermitianMatrix::from_hermitian_part(&(t * &self.w_inv));
            let hh = self.curvature_hh(g, &gp)?;
            debug_assert!(
                frobenius(&(value - &hh)) <= 1e-8 * frobenius(&hh).max(1.0),
                "curvature disagrees with curvature_hh on a horizontal argument"
            );
        }
        Ok(())
    }

    /// `Ω(GW, G'W) = 2 W∗ (1+x)⁻¹ ([G, G']) W∗⁻¹`.
    pub fn curvature_hh(&self, g: &HermitianMatrix, gp: &HermitianMatrix) -> Result<CMatrix> {
        check_dim(self.dim(), g.matrix())?;
        check_dim(self.dim(), gp.matrix())?;
        let c = commutator(g.matrix(), gp.matrix());
        Ok(self.conjugate_out(&self.inv_one_plus_x(&c)?).scale(2.0))
    }

    /// `Ω(GW, G'W) = 2 (L̃ + R̃)⁻¹ (W∗[G, G']W)`, the connection-form route.
    pub fn curvature_hh_via_connection(
        &self,
        g: &HermitianMatrix,
        gp: &HermitianMatrix,
    ) -> Result<CMatrix> {
        check_dim(self.dim(), g.matrix())?;
        check_dim(self.dim(), gp.matrix())?;
        let c = commutator(g.matrix(), gp.matrix());
        let src = &self.w_adj * c * self.w();
        Ok(self.inv_ltilde_plus_rtilde(&src)?.scale(2.0))
    }
}

/// A tangent vector `T ∈ T_W 𝒫`.
#[derive(Debug, Clone, PartialEq)]
pub struct TangentAtW {
    pub base: Purification,
    pub vector: CMatrix,
}

impl TangentAtW {
    /// With `check_tangency` and a normalized base, requires
    /// `|Re Tr W∗T| ≤ 1e-12 · ‖T‖_F` (tangency to the unit sphere).
    pub fn new(base: Purification, vector: CMatrix, check_tangency: bool) -> Result<Self> {
        check_dim(base.dim(), &vector)?;
        if check_tangency && base.is_normalized() {
            let radial = hs_metric(base.matrix(), &vector)?;
            if radial.abs() > 1e-12 * frobenius(&vector).max(1.0) {
                return Err(Error::InvalidArgument(
                    "vector is not tangent to the unit sphere",
                ));
            }
        }
        Ok(TangentAtW { base, vector })
    }
}

/// `T = WA + GW` with `A = ω(T)` antihermitian and `G` hermitian.
#[derive(Debug, Clone, PartialEq)]
pub struct VerticalHorizontalSplit {
    pub vertical: CMatrix,
    pub horizontal: CMatrix,
    pub connection: CMatrix,
    pub generator: HermitianMatrix,
}

pub fn project(w: &Purification) -> Result<DensityMatrix> {
    let m = w.matrix();
    DensityMatrix::from_hermitian(
        HermitianMatrix::from_hermitian_part(&(m * m.adjoint())),
        w.is_normalized(),
    )
}

pub fn connection_form(w: &Purification, t: &CMatrix) -> Result<CMatrix> {
    BundlePoint::new(w)?.connection_form(t)
}

pub fn split_tangent(w: &Purification, t: &CMatrix) -> Result<VerticalHorizontalSplit> {
    BundlePoint::new(w)?.split_tangent(t)
}

/// Horizontal lift `GW` of the base tangent `X`, with `DG + GD = X`.
pub fn horizontal_lift(w: &Purification, x: &HermitianMatrix) -> Result<CMatrix> {
    BundlePoint::new(w)?.horizontal_lift(x)
}

pub fn curvature(w: &Purification, g: &HermitianMatrix, t: &CMatrix) -> Result<CMatrix> {
    BundlePoint::new(w)?.curvature(g, t)
}

pub fn curvature_hh(
    w: &Purification,
    g: &HermitianMatrix,
    gp: &HermitianMatrix,
) -> Result<CMatrix> {
    BundlePoint::new(w)?.curvature_hh(g, gp)
}
