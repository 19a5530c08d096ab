//! Test-only oracles. Superoperators are materialized here as dense
//! `n² × n²` matrices over column-major `vec(T)`, independently of the
//! eigenbasis calculus in the library.

#![allow(dead_code)]

use bym_core::matrix::{frobenius, CMatrix, Complex64};
use nalgebra::DMatrix;

pub fn vec_of(t: &CMatrix) -> nalgebra::DVector<Complex64> {
    nalgebra::DVector::from_iterator(t.len(), t.iter().cloned())
}

pub fn unvec(v: &nalgebra::DVector<Complex64>, n: usize) -> CMatrix {
    CMatrix::from_iterator(n, n, v.iter().cloned())
}

/// `vec(A X B) = (Bᵀ ⊗ A) vec(X)`.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (ra, ca) = a.shape();
    let (rb, cb) = b.shape();
    DMatrix::from_fn(ra * rb, ca * cb, |i, j| {
        a[(i / rb, j / cb)] * b[(i % rb, j % cb)]
    })
}

/// Left multiplication by `d`.
pub fn left_op(d: &CMatrix) -> CMatrix {
    let n = d.nrows();
    kron(&CMatrix::identity(n, n), d)
}

/// Right multiplication by `d`.
pub fn right_op(d: &CMatrix) -> CMatrix {
    let n = d.nrows();
    kron(&d.transpose(), &CMatrix::identity(n, n))
}

/// `x = L R⁻¹` as a dense matrix.
pub fn x_op(d: &CMatrix) -> CMatrix {
    let r_inv = right_op(d).try_inverse().expect("invertible");
    left_op(d) * r_inv
}

pub fn apply_dense(op: &CMatrix, t: &CMatrix) -> CMatrix {
    unvec(&(op * vec_of(t)), t.nrows())
}

pub fn solve_dense(op: &CMatrix, t: &CMatrix) -> CMatrix {
    let sol = op
        .clone()
        .lu()
        .solve(&vec_of(t))
        .expect("nonsingular system");
    unvec(&sol, t.nrows())
}

pub fn rel_err(a: &CMatrix, b: &CMatrix) -> f64 {
    frobenius(&(a - b)) / frobenius(b).max(1e-300)
}

pub fn err(a: &CMatrix, b: &CMatrix) -> f64 {
    frobenius(&(a - b))
}
