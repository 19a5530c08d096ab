//! Geometry of the purification bundle `W ↦ WW∗` over faithful density
//! matrices.
//!
//! The crate is `no_std` (it needs `alloc`). It provides
//!
//! - the spectral superoperator calculus (`L`, `R`, `x = Ad D` and scalar
//!   functions of them) together with the Sylvester solve `DG + GD = Y`,
//! - the bundle layer: projection, Uhlmann connection form, curvature,
//!   horizontal lifts, orthonormal horizontal frames and discrete parallel
//!   transport,
//! - the Bures metric, root fidelity, Bures distance and a finite-difference
//!   Hessian oracle,
//! - a verifier showing numerically that the curvature satisfies the
//!   source-free Yang-Mills equation `∗D∗Ω = 0`.
//!
//! All operations are pure functions on immutable values.

#![no_std]
#![forbid(unsafe_code)]
// `!(x > 0.0)` rejects NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod bundle;
pub mod config;
pub mod error;
pub mod frame;
pub mod matrix;
pub mod metric;
pub mod random;
pub mod spectral;
pub mod sylvester;
pub mod transport;
pub mod yangmills;

pub use bundle::{
    connection_form, curvature, curvature_hh, horizontal_lift, project, split_tangent, BundlePoint,
    TangentAtW, VerticalHorizontalSplit,
};
pub use config::Tolerances;
pub use error::{Error, Result};
pub use frame::{horizontal_frame, HorizontalFrame};
pub use matrix::{CMatrix, Complex64, DensityMatrix, HermitianMatrix, Purification};
pub use metric::{bures_distance, bures_metric, fidelity_root, hessian_oracle};
pub use random::{random_purification, GaussianStream};
pub use spectral::{matrix_sqrt, spectral_decompose, SpectralData, SuperopKind, Superoperator};
pub use sylvester::solve_sylvester;
pub use transport::{holonomy, loop_holonomy, transport};
pub use yangmills::{verify, verify_with, ProbeResidual, VerifyConfig, YMReport};
