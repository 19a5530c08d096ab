mod common;

use bym_core::bundle::{connection_form, curvature_hh, horizontal_lift};
use bym_core::frame::horizontal_frame;
use bym_core::matrix::{
    frobenius, hermiticity_defect, hs_metric, CMatrix, DensityMatrix, HermitianMatrix, Purification,
};
use bym_core::metric::{bures_distance, bures_metric};
use bym_core::random::{random_purification, GaussianStream};
use bym_core::spectral::{matrix_sqrt, Superoperator};
use bym_core::sylvester::solve_sylvester;
use common::*;
use proptest::prelude::*;

fn cfg() -> ProptestConfig {
    ProptestConfig::with_cases(64)
}

fn density(seed: u64, n: usize) -> DensityMatrix {
    GaussianStream::new(seed).density(n, 100.0).unwrap()
}

fn conj(u: &CMatrix, m: &CMatrix) -> CMatrix {
    u * m * u.adjoint()
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn inv_l_plus_r_is_the_sylvester_solve(seed in any::<u64>(), n in 1usize..=5) {
        let d = density(seed, n);
        let y = GaussianStream::new(seed ^ 1).hermitian(n);
        let g = solve_sylvester(&d, &y).unwrap();
        let via_op = Superoperator::inv_l_plus_r(&d).apply(y.matrix()).unwrap();
        prop_assert!(rel_err(g.matrix(), &via_op) < 1e-12);
        prop_assert!(hermiticity_defect(&via_op) < 1e-12 * frobenius(&via_op).max(1.0));
        prop_assert_eq!(hermiticity_defect(g.matrix()), 0.0);
    }

    #[test]
    fn superoperators_are_linear(seed in any::<u64>(), n in 1usize..=5, a in -3.0f64..3.0, b in -3.0f64..3.0) {
        let w = random_purification(n, seed, false, 10.0).unwrap();
        let mut s = GaussianStream::new(seed ^ 2);
        let (t1, t2) = (s.ginibre(n), s.ginibre(n));
        let mix = t1.scale(a) + t2.scale(b);
        for op in [
            Superoperator::x(&w).unwrap(),
            Superoperator::x_tilde(&w).unwrap(),
            Superoperator::inv_ltilde_plus_rtilde(&w).unwrap(),
            Superoperator::func_of_x(&w, |r| (1.0 - r) / (1.0 + r)).unwrap(),
        ] {
            let lhs = op.apply(&mix).unwrap();
            let rhs = op.apply(&t1).unwrap().scale(a) + op.apply(&t2).unwrap().scale(b);
            prop_assert!(err(&lhs, &rhs) < 1e-11 * frobenius(&rhs).max(1.0));
        }
    }

    #[test]
    fn x_is_positive(seed in any::<u64>(), n in 1usize..=5) {
        // Tr(T∗ D T D⁻¹) = ‖D^{1/2} T D^{-1/2}‖².
        let w = random_purification(n, seed, false, 10.0).unwrap();
        let t = GaussianStream::new(seed ^ 3).ginibre(n);
        let xt = Superoperator::x(&w).unwrap().apply(&t).unwrap();
        let q = (t.adjoint() * &xt).trace();
        let d = DensityMatrix::new(w.matrix() * w.matrix().adjoint(), false).unwrap();
        let half = d.spectral().map_eigenvalues(|v| v.sqrt());
        let ihalf = d.spectral().map_eigenvalues(|v| 1.0 / v.sqrt());
        let norm2 = frobenius(&(&half * &t * &ihalf)).powi(2);
        prop_assert!(q.re > 0.0);
        prop_assert!((q.re - norm2).abs() <= 1e-11 * norm2);
        prop_assert!(q.im.abs() <= 1e-11 * norm2);
    }

    #[test]
    fn left_and_right_multiplication_commute(seed in any::<u64>(), n in 1usize..=5) {
        let d = density(seed, n).matrix().clone();
        let t = GaussianStream::new(seed ^ 4).ginibre(n);
        let lr = &d * (&t * &d);
        let rl = (&d * &t) * &d;
        prop_assert!(err(&lr, &rl) < 1e-14 * frobenius(&t).max(1.0));
        let (l, r) = (left_op(&d), right_op(&d));
        prop_assert!(frobenius(&(&l * &r - &r * &l)) < 1e-14);
    }

    #[test]
    fn sqrt_of_square(seed in any::<u64>(), n in 1usize..=5) {
        let s0 = density(seed, n);
        let s2 = HermitianMatrix::from_hermitian_part(&(s0.matrix() * s0.matrix()));
        let root = matrix_sqrt(&s2).unwrap();
        prop_assert!(err(root.matrix(), s0.matrix()) < 1e-10);
    }

    #[test]
    fn connection_form_is_antihermitian(seed in any::<u64>(), n in 1usize..=5) {
        let w = random_purification(n, seed, false, 30.0).unwrap();
        let t = GaussianStream::new(seed ^ 5).ginibre(n);
        let a = connection_form(&w, &t).unwrap();
        prop_assert!(frobenius(&(&a + a.adjoint())) < 1e-13 * frobenius(&a).max(1.0));
    }

    #[test]
    fn lift_is_a_riemannian_submersion(seed in any::<u64>(), n in 1usize..=5) {
        let w = random_purification(n, seed, false, 30.0).unwrap();
        let d = DensityMatrix::new(w.matrix() * w.matrix().adjoint(), false).unwrap();
        let mut s = GaussianStream::new(seed ^ 6);
        let (x, y) = (s.hermitian(n), s.hermitian(n));
        let lhs = bures_metric(&d, &x, &y).unwrap();
        let rhs = hs_metric(&horizontal_lift(&w, &x).unwrap(), &horizontal_lift(&w, &y).unwrap()).unwrap();
        let scale = (bures_metric(&d, &x, &x).unwrap() * bures_metric(&d, &y, &y).unwrap()).sqrt();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * scale);
    }

    #[test]
    fn bures_metric_is_unitarily_invariant_and_symmetric(seed in any::<u64>(), n in 1usize..=5) {
        let d = density(seed, n);
        let mut s = GaussianStream::new(seed ^ 7);
        let (x, y) = (s.hermitian(n), s.hermitian(n));
        let u = s.unitary(n);
        let du = DensityMatrix::new(HermitianMatrix::from_hermitian_part(&conj(&u, d.matrix())).into_matrix(), true).unwrap();
        let xu = HermitianMatrix::from_hermitian_part(&conj(&u, x.matrix()));
        let yu = HermitianMatrix::from_hermitian_part(&conj(&u, y.matrix()));
        let g = bures_metric(&d, &x, &y).unwrap();
        let scale = (bures_metric(&d, &x, &x).unwrap() * bures_metric(&d, &y, &y).unwrap()).sqrt();
        prop_assert!((g - bures_metric(&du, &xu, &yu).unwrap()).abs() <= 1e-11 * scale);
        prop_assert!((g - bures_metric(&d, &y, &x).unwrap()).abs() <= 1e-12 * scale);
    }

    #[test]
    fn curvature_is_antisymmetric(seed in any::<u64>(), n in 1usize..=5) {
        let w = random_purification(n, seed, false, 30.0).unwrap();
        let mut s = GaussianStream::new(seed ^ 8);
        let (g, gp) = (s.hermitian(n), s.hermitian(n));
        let a = curvature_hh(&w, &g, &gp).unwrap();
        let b = curvature_hh(&w, &gp, &g).unwrap();
        prop_assert!(frobenius(&(&a + &b)) <= 1e-13 * frobenius(&a).max(1.0));
    }

    #[test]
    fn frame_spans_the_horizontal_space(seed in any::<u64>(), n in 1usize..=5, normalized in any::<bool>()) {
        let mut s = GaussianStream::new(seed);
        let mut lam = s.positive_vec(n, 0.2, 1.5);
        if normalized {
            let norm = lam.iter().map(|l| l * l).sum::<f64>().sqrt();
            lam.iter_mut().for_each(|l| *l /= norm);
        }
        let lambda = Purification::diagonal(&lam, normalized).unwrap();
        let frame = horizontal_frame(&lambda, normalized).unwrap();
        let l = lambda.matrix();
        let mut g = s.hermitian(n).into_matrix();
        if normalized {
            // Remove the radial direction 𝟙 · Λ.
            let c = hs_metric(&(&g * l), l).unwrap();
            g -= CMatrix::identity(n, n).scale(c);
        }
        let t = &g * l;
        let mut rebuilt = CMatrix::zeros(n, n);
        for ga in frame.generators() {
            let v = ga.matrix() * l;
            rebuilt += v.scale(hs_metric(&v, &t).unwrap());
        }
        prop_assert!(err(&rebuilt, &t) <= 1e-11 * frobenius(&t).max(1.0));
    }

    #[test]
    fn x_tilde_is_x_of_the_adjoint(seed in any::<u64>(), n in 1usize..=5) {
        let w = random_purification(n, seed, false, 10.0).unwrap();
        let w_adj = Purification::new(w.matrix().adjoint(), false).unwrap();
        let t = GaussianStream::new(seed ^ 9).ginibre(n);
        let a = Superoperator::x_tilde(&w).unwrap().apply(&t).unwrap();
        let b = Superoperator::x(&w_adj).unwrap().apply(&t).unwrap();
        prop_assert!(err(&a, &b) <= 1e-11 * frobenius(&b).max(1.0));
    }

    #[test]
    fn distance_is_a_metric(seed in any::<u64>(), n in 1usize..=4) {
        let mut s = GaussianStream::new(seed);
        let a = s.density(n, 50.0).unwrap();
        let b = s.density(n, 50.0).unwrap();
        let c = s.density(n, 50.0).unwrap();
        let ab = bures_distance(&a, &b).unwrap();
        prop_assert!((ab - bures_distance(&b, &a).unwrap()).abs() < 1e-12);
        prop_assert!(bures_distance(&a, &c).unwrap() <= ab + bures_distance(&b, &c).unwrap() + 1e-12);
        prop_assert!(ab <= 2f64.sqrt() + 1e-12);
    }
}
