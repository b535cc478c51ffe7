//! Property tests for the algebraic invariants the library is built on.

use beamsplit::measures;
use beamsplit::qlinalg::{
    eigenvalues_general4, hermitian_eigenvalues, partial_trace, tensor, Complex, DensityMatrix2,
    DensityMatrix4, Mat2, Mat4, Subsystem,
};
use beamsplit::states::{self, Family, FamilyParams, Sign};
use proptest::prelude::*;
use std::f64::consts::{FRAC_PI_2, TAU};

fn cnum() -> impl Strategy<Value = Complex> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(re, im)| Complex::new(re, im))
}

fn mat2() -> impl Strategy<Value = Mat2> {
    prop::array::uniform4(cnum()).prop_map(|a| Mat2::from_rows([[a[0], a[1]], [a[2], a[3]]]))
}

fn mat4() -> impl Strategy<Value = Mat4> {
    prop::array::uniform16(cnum()).prop_map(|a| {
        Mat4::from_fn(|i, j| a[4 * i + j])
    })
}

fn hermitian4() -> impl Strategy<Value = Mat4> {
    mat4().prop_map(|m| m.add(&m.adjoint()).scale(0.5))
}

/// Normalized Ginibre product: always a valid one-qubit density matrix.
fn density2() -> impl Strategy<Value = DensityMatrix2> {
    prop::array::uniform4(cnum()).prop_map(|a| {
        let g = Mat2::from_rows([[a[0], a[1]], [a[2], a[3]]]);
        let gg = g.mul(&g.adjoint());
        let m = gg.scale(1.0 / gg.trace().re);
        DensityMatrix2::new(m).expect("normalized Ginibre product is a valid state")
    })
}

fn density4() -> impl Strategy<Value = DensityMatrix4> {
    (any::<u64>(), 1usize..=4).prop_map(|(seed, rank)| {
        states::random_density(seed, rank).expect("sampler output is valid")
    })
}

/// Density matrix with support only on the diagonal and antidiagonal. The
/// two 2x2 cross blocks are independently positive by construction.
fn xstate() -> impl Strategy<Value = DensityMatrix4> {
    (
        prop::array::uniform4(0.01..1.0f64),
        0.0..0.999f64,
        0.0..0.999f64,
        0.0..TAU,
        0.0..TAU,
    )
        .prop_map(|(d, s14, s23, p14, p23)| {
            let tot: f64 = d.iter().sum();
            let d = [d[0] / tot, d[1] / tot, d[2] / tot, d[3] / tot];
            let r14 = Complex::from_polar(s14 * (d[0] * d[3]).sqrt(), p14);
            let r23 = Complex::from_polar(s23 * (d[1] * d[2]).sqrt(), p23);
            let mut m = Mat4::zeros();
            for (i, di) in d.iter().enumerate() {
                m[(i, i)] = Complex::new(*di, 0.0);
            }
            m[(0, 3)] = r14;
            m[(3, 0)] = r14.conj();
            m[(1, 2)] = r23;
            m[(2, 1)] = r23.conj();
            DensityMatrix4::new(m).expect("cross-block construction is positive")
        })
}

/// Generic single-qubit unitary (exactly unitary entry-by-entry).
fn unitary2() -> impl Strategy<Value = Mat2> {
    (0.0..TAU, 0.0..FRAC_PI_2, 0.0..TAU).prop_map(|(alpha, beta, delta)| {
        let (c, s) = (beta.cos(), beta.sin());
        Mat2::from_rows([
            [
                Complex::from_polar(c, alpha),
                Complex::from_polar(s, delta),
            ],
            [
                -Complex::from_polar(s, -delta),
                Complex::from_polar(c, -alpha),
            ],
        ])
    })
}

fn family_params() -> impl Strategy<Value = FamilyParams> {
    (
        prop_oneof![
            Just(Family::BellPhi),
            Just(Family::BellPsi),
            Just(Family::TwoBellMixture),
            Just(Family::Werner),
            Just(Family::EntangledSeparable),
            Just(Family::MemsBound),
        ],
        0.0..=1.0f64,
        0.0..FRAC_PI_2,
        0.0..FRAC_PI_2,
        prop_oneof![Just(Sign::Plus), Just(Sign::Minus)],
    )
        .prop_map(|(family, gamma, theta1, theta2, sign)| FamilyParams {
            family,
            gamma,
            theta1,
            theta2,
            sign,
        })
}

fn max_abs(m: &Mat4) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            worst = worst.max(m[(i, j)].norm());
        }
    }
    worst
}

proptest! {
    #[test]
    fn tensor_is_bilinear(a in mat2(), b in mat2(), c in mat2()) {
        let lhs = tensor(&a, &b.add(&c));
        let rhs = tensor(&a, &b).add(&tensor(&a, &c));
        prop_assert!(max_abs(&lhs.sub(&rhs)) <= 1e-14);
        let lhs = tensor(&a.add(&b), &c);
        let rhs = tensor(&a, &c).add(&tensor(&b, &c));
        prop_assert!(max_abs(&lhs.sub(&rhs)) <= 1e-14);
    }

    #[test]
    fn partial_trace_inverts_tensor_products(p in density2(), q in density2()) {
        let joint = DensityMatrix4::new(tensor(p.matrix(), q.matrix()))
            .expect("product of valid states is valid");
        let back_a = partial_trace(&joint, Subsystem::A);
        let back_b = partial_trace(&joint, Subsystem::B);
        prop_assert!(back_a.matrix().sub(p.matrix()).hermiticity_deviation() <= 1e-12);
        prop_assert!(back_b.matrix().sub(q.matrix()).hermiticity_deviation() <= 1e-12);
        for i in 0..2 {
            for j in 0..2 {
                prop_assert!((back_a.matrix()[(i, j)] - p.matrix()[(i, j)]).norm() <= 1e-14);
                prop_assert!((back_b.matrix()[(i, j)] - q.matrix()[(i, j)]).norm() <= 1e-14);
            }
        }
    }

    #[test]
    fn hermitian_eigenvalue_sum_is_the_trace(h in hermitian4()) {
        let eigs = hermitian_eigenvalues(&h).unwrap();
        let sum: f64 = eigs.iter().sum();
        prop_assert!((sum - h.trace().re).abs() <= 1e-10);
    }

    #[test]
    fn general_solver_agrees_on_hermitian_input(h in hermitian4()) {
        let sym = hermitian_eigenvalues(&h).unwrap();
        let gen = eigenvalues_general4(&h).unwrap();
        // Both come out sorted by descending real part.
        for (g, s) in gen.iter().zip(sym.iter()) {
            prop_assert!(g.im.abs() <= 1e-8);
            prop_assert!((g.re - s).abs() <= 1e-8);
        }
    }

    #[test]
    fn pure_state_eof_equals_either_subsystem_entropy(seed in any::<u64>()) {
        let rho = states::random_pure(seed).density();
        prop_assert!(measures::purity(&rho) >= 1.0 - 1e-10);
        let e = measures::eof(&rho).unwrap();
        let sa = measures::subsystem_entropy(&rho, Subsystem::A);
        let sb = measures::subsystem_entropy(&rho, Subsystem::B);
        prop_assert!((e - sa).abs() <= 1e-8);
        prop_assert!((e - sb).abs() <= 1e-8);
    }

    #[test]
    fn concurrence_ignores_local_unitaries(rho in density4(), ua in unitary2(), ub in unitary2()) {
        let u = tensor(&ua, &ub);
        let rotated = DensityMatrix4::new(u.mul(rho.matrix()).mul(&u.adjoint()))
            .expect("unitary conjugation preserves validity");
        let c0 = measures::concurrence(&rho).unwrap();
        let c1 = measures::concurrence(&rotated).unwrap();
        prop_assert!((c0 - c1).abs() <= 1e-8);
    }

    #[test]
    fn cross_shaped_states_match_the_analytic_concurrence(rho in xstate()) {
        let m = rho.matrix();
        let expected = 2.0
            * 0.0f64
                .max(m[(1, 2)].norm() - (m[(0, 0)].re * m[(3, 3)].re).sqrt())
                .max(m[(0, 3)].norm() - (m[(1, 1)].re * m[(2, 2)].re).sqrt());
        let c = measures::concurrence(&rho).unwrap();
        prop_assert!((c - expected).abs() <= 1e-8);
    }

    #[test]
    fn joint_entropy_grows_towards_the_maximal_mixture(rho in density4(), t in 0.0..=1.0f64) {
        let id4 = Mat4::identity().scale(0.25);
        let mixed = DensityMatrix4::new(rho.matrix().scale(1.0 - t).add(&id4.scale(t)))
            .expect("convex mixture of valid states is valid");
        let s0 = measures::entropy_joint(&rho);
        let s1 = measures::entropy_joint(&mixed);
        prop_assert!(s1 >= s0 - 1e-12);
        prop_assert!(s1 <= 1.0 + 1e-12);
    }

    #[test]
    fn bell_concurrence_is_the_doubled_angle_sine(theta in 0.0..FRAC_PI_2, plus in any::<bool>()) {
        let sign = if plus { Sign::Plus } else { Sign::Minus };
        let expect = (2.0 * theta).sin();
        let phi = states::bell_phi(theta, sign).unwrap().density();
        let psi = states::bell_psi(theta, sign).unwrap().density();
        prop_assert!((measures::concurrence(&phi).unwrap() - expect).abs() <= 1e-10);
        prop_assert!((measures::concurrence(&psi).unwrap() - expect).abs() <= 1e-10);
    }

    #[test]
    fn every_family_member_is_valid_and_cross_shaped(params in family_params()) {
        let rho = params.state().unwrap(); // construction is the validity gate
        let m = rho.matrix();
        for i in 0..4 {
            for j in 0..4 {
                if i != j && i + j != 3 {
                    prop_assert!(m[(i, j)].norm() <= 1e-15);
                }
            }
        }
        // The analytic cross-shape concurrence applies to every family.
        let expected = 2.0
            * 0.0f64
                .max(m[(1, 2)].norm() - (m[(0, 0)].re * m[(3, 3)].re).sqrt())
                .max(m[(0, 3)].norm() - (m[(1, 1)].re * m[(2, 2)].re).sqrt());
        let c = measures::concurrence(&rho).unwrap();
        prop_assert!((c - expected).abs() <= 1e-8);
    }

    #[test]
    fn balanced_two_bell_mixture_dips_then_recovers(theta2 in 0.05..(FRAC_PI_2 - 0.05)) {
        // Maximal first component: EOF decreases from gamma = 0 until the
        // component weights balance, and both one-arm entropies agree.
        let s2 = (2.0 * theta2).sin();
        let crossing = s2 / (1.0 + s2);
        let steps = 40;
        let mut prev = f64::INFINITY;
        for k in 0..=steps {
            let gamma = crossing * k as f64 / steps as f64;
            let rho = states::two_bell_mixture(gamma, std::f64::consts::FRAC_PI_4, theta2).unwrap();
            let e = measures::eof(&rho).unwrap();
            prop_assert!(e <= prev + 1e-12);
            prev = e;
            let sa = measures::subsystem_entropy(&rho, Subsystem::A);
            let sb = measures::subsystem_entropy(&rho, Subsystem::B);
            prop_assert!((sa - sb).abs() <= 1e-12);
        }
        // Past the crossing the trend reverses.
        let just_past = states::two_bell_mixture(
            (crossing + 0.05).min(1.0),
            std::f64::consts::FRAC_PI_4,
            theta2,
        )
        .unwrap();
        prop_assert!(measures::eof(&just_past).unwrap() > prev);
    }

    #[test]
    fn filtering_probability_stays_in_the_unit_interval(
        rho in density4(),
        etas in prop::array::uniform4(0.0..=1.0f64),
    ) {
        let s = beamsplit::filter::FilterSettings::new(etas[0], etas[1], etas[2], etas[3]).unwrap();
        match beamsplit::filter::apply_filter(&rho, &s) {
            Ok(out) => {
                prop_assert!(out.probability >= 0.0);
                prop_assert!(out.probability <= 1.0);
            }
            Err(beamsplit::Error::VanishingEnsemble { probability }) => {
                prop_assert!(probability <= beamsplit::filter::VANISH_TOL);
            }
            Err(e) => return Err(TestCaseError::fail(format!("unexpected error: {e}"))),
        }
    }
}
