//! Dense complex matrices for two-qubit work, validated density matrices,
//! tensor products, and partial traces.
//!
//! Basis convention for the two-photon space: `{|VV>, |VH>, |HV>, |HH>}`,
//! i.e. index `2*a + b` with `V = 0`, `H = 1`, arm A the left (slow) index
//! and arm B the right (fast) index.

mod eigen;

pub use eigen::{eigenvalues_general4, hermitian_eigensystem, hermitian_eigenvalues};

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::ops::{Index, IndexMut};

/// Complex scalar used throughout the crate.
pub type Complex = Complex64;

/// Tolerance on `max |m - m†|` for accepting a matrix as Hermitian.
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Tolerance on `|Tr rho - 1|` for density matrices.
pub const TRACE_TOL: f64 = 1e-12;
/// Most negative eigenvalue a density matrix may carry (numerical slack).
pub const POSITIVITY_TOL: f64 = 1e-10;
/// Eigenvalues of a density matrix above this count towards its rank.
pub const RANK_TOL: f64 = 1e-12;

/// Dense `N x N` complex matrix with value semantics.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat<const N: usize> {
    e: [[Complex; N]; N],
}

pub type Mat2 = Mat<2>;
pub type Mat4 = Mat<4>;

impl<const N: usize> Mat<N> {
    pub fn zeros() -> Self {
        Mat { e: [[Complex::new(0.0, 0.0); N]; N] }
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.e[i][i] = Complex::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: [[Complex; N]; N]) -> Self {
        let m = Mat { e: rows };
        debug_assert!(m.is_finite(), "matrix entries must be finite");
        m
    }

    /// Build from floats on a diagonal, zeros elsewhere.
    pub fn from_diag(d: [f64; N]) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.e[i][i] = Complex::new(d[i], 0.0);
        }
        m
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.e[i][j] = f(i, j);
            }
        }
        debug_assert!(m.is_finite(), "matrix entries must be finite");
        m
    }

    pub fn is_finite(&self) -> bool {
        self.e
            .iter()
            .flatten()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(|i, j| self.e[i][j] + other.e[i][j])
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(|i, j| self.e[i][j] - other.e[i][j])
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_fn(|i, j| self.e[i][j] * s)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                let mut acc = Complex::new(0.0, 0.0);
                for k in 0..N {
                    acc += self.e[i][k] * other.e[k][j];
                }
                m.e[i][j] = acc;
            }
        }
        m
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.e[j][i].conj())
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conj(&self) -> Self {
        Self::from_fn(|i, j| self.e[i][j].conj())
    }

    pub fn trace(&self) -> Complex {
        (0..N).map(|i| self.e[i][i]).sum()
    }

    /// `max_ij |self[i][j] - other[i][j]|`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..N {
            for j in 0..N {
                worst = worst.max((self.e[i][j] - other.e[i][j]).norm());
            }
        }
        worst
    }

    /// Deviation from Hermiticity, `max |m - m†|`.
    pub fn hermiticity_deviation(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    /// Sum of squared entry magnitudes; for Hermitian `m` this is `Tr m²`.
    pub fn frobenius_sq(&self) -> f64 {
        self.e.iter().flatten().map(|z| z.norm_sqr()).sum()
    }
}

impl<const N: usize> Index<(usize, usize)> for Mat<N> {
    type Output = Complex;
    fn index(&self, (i, j): (usize, usize)) -> &Complex {
        &self.e[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for Mat<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex {
        &mut self.e[i][j]
    }
}

/// Kronecker product of two one-qubit operators, arm A slow, arm B fast:
/// `out[2i+k][2j+l] = a[i][j] * b[k][l]`.
pub fn tensor(a: &Mat2, b: &Mat2) -> Mat4 {
    Mat4::from_fn(|r, c| a[(r / 2, c / 2)] * b[(r % 2, c % 2)])
}

/// Which arm survives a partial trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Validated two-qubit density matrix: Hermitian within 1e-12, trace one
/// within 1e-12, smallest eigenvalue `>= -1e-10`, all entries finite.
/// Violations are rejected at construction, never repaired. The spectrum
/// found during validation is kept, so [`DensityMatrix4::eigenvalues`] is
/// free.
#[derive(Clone, Debug)]
pub struct DensityMatrix4 {
    m: Mat4,
    eigs: [f64; 4],
}

impl PartialEq for DensityMatrix4 {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}

/// Validated one-qubit density matrix; same tolerances as [`DensityMatrix4`].
#[derive(Clone, Debug)]
pub struct DensityMatrix2 {
    m: Mat2,
    eigs: [f64; 2],
}

impl PartialEq for DensityMatrix2 {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}

fn validate<const N: usize>(m: &Mat<N>) -> Result<[f64; N]> {
    if !m.is_finite() {
        return Err(Error::InvalidState("non-finite entry".into()));
    }
    let herm = m.hermiticity_deviation();
    if herm > HERMITICITY_TOL {
        return Err(Error::InvalidState(format!(
            "hermiticity violated: max |m - m†| = {herm:.3e} > {HERMITICITY_TOL:.0e}"
        )));
    }
    let tr = m.trace();
    if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
        return Err(Error::InvalidState(format!(
            "trace violated: Tr = {tr} differs from 1 by more than {TRACE_TOL:.0e}"
        )));
    }
    let eigs = hermitian_eigenvalues(m)?;
    let min = eigs[N - 1];
    if min < -POSITIVITY_TOL {
        return Err(Error::InvalidState(format!(
            "positivity violated: smallest eigenvalue {min:.3e} < -{POSITIVITY_TOL:.0e}"
        )));
    }
    Ok(eigs)
}

impl DensityMatrix4 {
    pub fn new(m: Mat4) -> Result<Self> {
        let eigs = validate(&m)?;
        Ok(DensityMatrix4 { m, eigs })
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.m
    }

    /// Eigenvalues, descending (found once at construction).
    pub fn eigenvalues(&self) -> [f64; 4] {
        self.eigs
    }

    /// Number of eigenvalues above [`RANK_TOL`].
    pub fn rank(&self) -> usize {
        self.eigs.iter().filter(|&&l| l > RANK_TOL).count()
    }
}

impl DensityMatrix2 {
    pub fn new(m: Mat2) -> Result<Self> {
        let eigs = validate(&m)?;
        Ok(DensityMatrix2 { m, eigs })
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.m
    }

    pub fn eigenvalues(&self) -> [f64; 2] {
        self.eigs
    }
}

/// Trace out one arm of a two-qubit state.
///
/// Keeping A: `rho_A[i][j] = sum_k rho[2i+k][2j+k]`;
/// keeping B: `rho_B[k][l] = sum_i rho[2i+k][2i+l]`.
pub fn partial_trace(rho: &DensityMatrix4, keep: Subsystem) -> DensityMatrix2 {
    let m = rho.matrix();
    let reduced = match keep {
        Subsystem::A => Mat2::from_fn(|i, j| m[(2 * i, 2 * j)] + m[(2 * i + 1, 2 * j + 1)]),
        Subsystem::B => Mat2::from_fn(|k, l| m[(k, l)] + m[(2 + k, 2 + l)]),
    };
    DensityMatrix2::new(reduced)
        .expect("partial trace of a valid state is a valid state")
}
