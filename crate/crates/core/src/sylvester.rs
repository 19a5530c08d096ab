//! The Sylvester equation `DG + GD = Y` for positive definite `D`.

use crate::error::Result;
use crate::matrix::{check_dim, hermitian_part, CMatrix, DensityMatrix, HermitianMatrix};

/// Unique hermitian solution `G` of `DG + GD = Y`.
///
/// Solved in the eigenbasis of `D` (`Ĝ_ij = Ŷ_ij / (d_i + d_j)`), followed
/// by one sweep of residual correction.
pub fn solve_sylvester(d: &DensityMatrix, y: &HermitianMatrix) -> Result<HermitianMatrix> {
    check_dim(d.dim(), y.matrix())?;
    let mut g = eigenbasis_solve(d, y.matrix());
    let dm = d.matrix();
    let residual = y.matrix() - (dm * &g + &g * dm);
    g += eigenbasis_solve(d, &residual);
    Ok(HermitianMatrix::from_hermitian_part(&g))
}

fn eigenbasis_solve(d: &DensityMatrix, y: &CMatrix) -> CMatrix {
    let sd = d.spectral();
    let u = sd.eigenvectors();
    let ev = sd.eigenvalues();
    let mut hat = u.adjoint() * y * u;
    for j in 0..ev.len() {
        for i in 0..ev.len() {
            hat[(i, j)] = hat[(i, j)].unscale(ev[i] + ev[j]);
        }
    }
    hermitian_part(&(u * hat * u.adjoint()))
}
