//! Entanglement and mixedness measures for two-qubit states.
//!
//! Concurrence follows the spin-flip construction: `C = max(0, λ1 - λ2 -
//! λ3 - λ4)` with `λi` the descending square roots of the eigenvalues of
//! `rho · rho_tilde`, `rho_tilde = (σy ⊗ σy) rho* (σy ⊗ σy)`. Entanglement
//! of formation is `h((1 + sqrt(1 - C²)) / 2)` with `h` the base-2 binary
//! entropy. The joint von Neumann entropy is normalized to base 4 (so the
//! maximally mixed state scores 1), subsystem entropies to base 2, and the
//! linear entropy is `(4/3)(1 - Tr rho²)`.

use crate::error::{Error, Result};
use crate::qlinalg::{
    eigenvalues_general4, hermitian_eigenvalues, partial_trace, DensityMatrix4, Mat4, Subsystem,
};
use num_complex::Complex64;

/// Largest imaginary part tolerated on an eigenvalue of `rho · rho_tilde`.
const LAMBDA_IM_TOL: f64 = 1e-8;
/// Most negative real part tolerated on such an eigenvalue before erroring;
/// anything in `[-1e-8, 0)` is clamped to zero.
const LAMBDA_NEG_TOL: f64 = 1e-8;

/// All scalar measures of one state, as reported by sweeps and the CLI.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasureReport {
    pub concurrence: f64,
    pub eof: f64,
    pub entropy_joint: f64,
    pub entropy_a: f64,
    pub entropy_b: f64,
    pub linear_entropy: f64,
    pub purity: f64,
}

fn yy() -> Mat4 {
    // σy ⊗ σy: antidiagonal (-1, 1, 1, -1) read from the top-right corner.
    let mut m = Mat4::zeros();
    m[(0, 3)] = Complex64::new(-1.0, 0.0);
    m[(1, 2)] = Complex64::new(1.0, 0.0);
    m[(2, 1)] = Complex64::new(1.0, 0.0);
    m[(3, 0)] = Complex64::new(-1.0, 0.0);
    m
}

/// Spin-flipped state `(σy ⊗ σy) rho* (σy ⊗ σy)` (not normalized-checked:
/// it is Hermitian, unit-trace and PSD whenever `rho` is).
pub fn spin_flip(rho: &DensityMatrix4) -> Mat4 {
    let yy = yy();
    yy.mul(&rho.matrix().conj()).mul(&yy)
}

/// Concurrence `C ∈ [0, 1]`.
///
/// The eigenvalues of `rho · rho_tilde` come from the general QR solver;
/// imaginary parts above 1e-8 or real parts below -1e-8 are reported as
/// [`Error::ConvergenceFailure`], smaller deviations are discarded. Because
/// `rank(rho · rho_tilde) <= rank(rho)`, the trailing `4 - rank(rho)`
/// square roots are zeroed exactly rather than left as `O(sqrt(eps))`
/// noise — without this, rank-deficient states (every pure state, every
/// two-state mixture) would carry ~1e-8 concurrence error.
pub fn concurrence(rho: &DensityMatrix4) -> Result<f64> {
    let rank = rho.rank();
    let prod = rho.matrix().mul(&spin_flip(rho));
    let eigs = eigenvalues_general4(&prod)?;
    let mut lam = [0.0f64; 4];
    for (slot, z) in lam.iter_mut().zip(eigs.iter()) {
        if z.im.abs() > LAMBDA_IM_TOL {
            return Err(Error::ConvergenceFailure(format!(
                "eigenvalue {z} of rho·rho_tilde has |imaginary part| > {LAMBDA_IM_TOL:.0e}"
            )));
        }
        if z.re < -LAMBDA_NEG_TOL {
            return Err(Error::ConvergenceFailure(format!(
                "eigenvalue {z} of rho·rho_tilde is negative beyond {LAMBDA_NEG_TOL:.0e}"
            )));
        }
        *slot = z.re.max(0.0).sqrt();
    }
    lam.sort_by(|a, b| b.partial_cmp(a).unwrap());
    for l in lam.iter_mut().skip(rank) {
        *l = 0.0;
    }
    Ok((lam[0] - lam[1] - lam[2] - lam[3]).clamp(0.0, 1.0))
}

/// Base-2 binary entropy `h(x) = -x log2 x - (1-x) log2 (1-x)`, with the
/// `0 log 0 = 0` convention; arguments at or beyond the endpoints give 0.
pub fn binary_entropy(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -(x * x.log2()) - (1.0 - x) * (1.0 - x).log2()
}

/// Entanglement of formation as a function of concurrence:
/// `h((1 + sqrt(1 - C²)) / 2)`; 0 for separable, 1 for maximal.
pub fn eof_from_concurrence(c: f64) -> f64 {
    let c = c.clamp(0.0, 1.0);
    binary_entropy((1.0 + (1.0 - c * c).max(0.0).sqrt()) / 2.0)
}

/// Entanglement of formation of a state.
pub fn eof(rho: &DensityMatrix4) -> Result<f64> {
    Ok(eof_from_concurrence(concurrence(rho)?))
}

/// Clamp a validated-state eigenvalue into `[0, 1]` before taking logs:
/// values in `(-1e-10, 0)` are rounding noise below the positivity gate,
/// values barely above 1 are the complementary noise.
fn clamp_prob(l: f64) -> f64 {
    l.clamp(0.0, 1.0)
}

/// Joint von Neumann entropy, base 4: `-Σ λ log4 λ ∈ [0, 1]`.
pub fn entropy_joint(rho: &DensityMatrix4) -> f64 {
    rho.eigenvalues()
        .iter()
        .map(|&l| {
            let l = clamp_prob(l);
            if l == 0.0 {
                0.0
            } else {
                -l * l.log2() / 2.0
            }
        })
        .sum()
}

/// Von Neumann entropy of one arm's reduced state, base 2: `∈ [0, 1]`.
pub fn subsystem_entropy(rho: &DensityMatrix4, keep: Subsystem) -> f64 {
    partial_trace(rho, keep)
        .eigenvalues()
        .iter()
        .map(|&l| {
            let l = clamp_prob(l);
            if l == 0.0 {
                0.0
            } else {
                -l * l.log2()
            }
        })
        .sum()
}

/// Purity `Tr rho² = Σ |rho_ij|² ∈ [1/4, 1]`.
pub fn purity(rho: &DensityMatrix4) -> f64 {
    rho.matrix().frobenius_sq()
}

/// Linear entropy `(4/3)(1 - Tr rho²) ∈ [0, 1]`.
pub fn linear_entropy(rho: &DensityMatrix4) -> f64 {
    (4.0 / 3.0) * (1.0 - purity(rho))
}

/// Compute every measure of one state.
pub fn report(rho: &DensityMatrix4) -> Result<MeasureReport> {
    let c = concurrence(rho)?;
    Ok(MeasureReport {
        concurrence: c,
        eof: eof_from_concurrence(c),
        entropy_joint: entropy_joint(rho),
        entropy_a: subsystem_entropy(rho, Subsystem::A),
        entropy_b: subsystem_entropy(rho, Subsystem::B),
        linear_entropy: linear_entropy(rho),
        purity: purity(rho),
    })
}

/// Trace distance `½ Σ |eig(a - b)| ∈ [0, 1]`.
pub fn trace_distance(a: &DensityMatrix4, b: &DensityMatrix4) -> f64 {
    let diff = a.matrix().sub(b.matrix());
    hermitian_eigenvalues(&diff)
        .expect("difference of Hermitian matrices is Hermitian")
        .iter()
        .map(|l| l.abs())
        .sum::<f64>()
        / 2.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::Complex;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn pure(amps: [Complex; 4]) -> DensityMatrix4 {
        let n: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        let m = Mat4::from_fn(|i, j| amps[i] * amps[j].conj() / n);
        DensityMatrix4::new(m).unwrap()
    }

    fn isotropic_bell_mixture(gamma: f64) -> DensityMatrix4 {
        // (1-γ) I/4 + γ |phi+><phi+|, maximally entangled phi+.
        let mut m = Mat4::from_diag([(1.0 - gamma) / 4.0; 4]);
        for (i, j) in [(0usize, 0usize), (0, 3), (3, 0), (3, 3)] {
            m[(i, j)] += c(gamma / 2.0, 0.0);
        }
        DensityMatrix4::new(m).unwrap()
    }

    #[test]
    fn maximal_bell_state_measures() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let rho = pure([c(s, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(s, 0.0)]);
        let r = report(&rho).unwrap();
        assert_abs_diff_eq!(r.concurrence, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.eof, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.entropy_joint, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.entropy_a, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.entropy_b, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.linear_entropy, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.purity, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn partially_entangled_pure_state_concurrence_is_sin_two_theta() {
        // cosθ|VH> + sinθ|HV>, θ = π/6: C = sin 2θ, exact thanks to the
        // rank-aware zeroing of the three spurious square roots.
        let th = std::f64::consts::PI / 6.0;
        let rho = pure([c(0.0, 0.0), c(th.cos(), 0.0), c(th.sin(), 0.0), c(0.0, 0.0)]);
        let cval = concurrence(&rho).unwrap();
        assert_abs_diff_eq!(cval, (2.0 * th).sin(), epsilon = 1e-10);
        // For pure states EOF equals the subsystem entropy.
        assert_abs_diff_eq!(eof(&rho).unwrap(), 0.8112781244591328, epsilon = 1e-12);
        assert_abs_diff_eq!(
            subsystem_entropy(&rho, Subsystem::A),
            0.8112781244591328,
            epsilon = 1e-12
        );
    }

    #[test]
    fn product_state_is_separable() {
        let rho = pure([c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        let r = report(&rho).unwrap();
        assert_eq!(r.concurrence, 0.0);
        assert_eq!(r.eof, 0.0);
        assert_abs_diff_eq!(r.entropy_joint, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.entropy_a, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.purity, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn isotropic_mixture_half_reference_values() {
        let rho = isotropic_bell_mixture(0.5);
        let r = report(&rho).unwrap();
        assert_abs_diff_eq!(r.concurrence, 0.25, epsilon = 1e-11);
        assert_abs_diff_eq!(r.eof, 0.11761887377091781, epsilon = 1e-10);
        assert_abs_diff_eq!(r.entropy_joint, 0.7743974703476992, epsilon = 1e-12);
        assert_abs_diff_eq!(r.entropy_a, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.entropy_b, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.linear_entropy, 0.75, epsilon = 1e-12);
        assert_abs_diff_eq!(r.purity, 0.4375, epsilon = 1e-12);
    }

    #[test]
    fn maximally_mixed_state_measures() {
        let rho = DensityMatrix4::new(Mat4::from_diag([0.25; 4])).unwrap();
        let r = report(&rho).unwrap();
        assert_eq!(r.concurrence, 0.0);
        assert_abs_diff_eq!(r.entropy_joint, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.entropy_a, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.linear_entropy, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.purity, 0.25, epsilon = 1e-12);
    }

    #[test]
    fn binary_entropy_reference_points() {
        assert_eq!(binary_entropy(0.0), 0.0);
        assert_eq!(binary_entropy(1.0), 0.0);
        assert_abs_diff_eq!(binary_entropy(0.5), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(binary_entropy(0.75), 0.8112781244591328, epsilon = 1e-15);
        assert_abs_diff_eq!(
            binary_entropy(0.3),
            binary_entropy(0.7),
            epsilon = 1e-15
        );
    }

    #[test]
    fn x_shaped_state_matches_closed_form() {
        // For states supported on the diagonal plus the two antidiagonal
        // coherences, C = 2 max(0, |ρ23| - sqrt(ρ11 ρ44), |ρ14| - sqrt(ρ22 ρ33)).
        let mut m = Mat4::from_diag([0.3, 0.25, 0.25, 0.2]);
        m[(0, 3)] = c(0.1, 0.05);
        m[(3, 0)] = c(0.1, -0.05);
        m[(1, 2)] = c(0.248, 0.0);
        m[(2, 1)] = c(0.248, 0.0);
        let rho = DensityMatrix4::new(m).unwrap();
        let inner = 0.248 - (0.3f64 * 0.2).sqrt();
        let outer = (0.1f64.powi(2) + 0.05f64.powi(2)).sqrt() - 0.25;
        let expect = 2.0 * inner.max(outer).max(0.0);
        assert_abs_diff_eq!(concurrence(&rho).unwrap(), expect, epsilon = 1e-9);
    }

    #[test]
    fn eof_is_monotone_in_concurrence() {
        let mut last = -1.0;
        for k in 0..=100 {
            let e = eof_from_concurrence(k as f64 / 100.0);
            assert!(e >= last);
            last = e;
        }
        assert_eq!(eof_from_concurrence(0.0), 0.0);
        assert_abs_diff_eq!(eof_from_concurrence(1.0), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn trace_distance_reference_values() {
        let vv = pure([c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        let hh = pure([c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        assert_eq!(trace_distance(&vv, &vv), 0.0);
        assert_abs_diff_eq!(trace_distance(&vv, &hh), 1.0, epsilon = 1e-12);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let bell = pure([c(s, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(s, 0.0)]);
        let mixed = DensityMatrix4::new(Mat4::from_diag([0.25; 4])).unwrap();
        assert_abs_diff_eq!(trace_distance(&bell, &mixed), 0.75, epsilon = 1e-12);
    }
}
