//! The two-photon polarization states under study.
//!
//! Pure Bell-type states come in two flavours, written in the
//! `{|VV>, |VH>, |HV>, |HH>}` basis with a mixing angle `θ ∈ [0, π/2]`:
//!
//! ```text
//! |phi±(θ)> = cos θ |VV> ± sin θ |HH>      (outer block)
//! |psi±(θ)> = cos θ |VH> ± sin θ |HV>      (inner block)
//! ```
//!
//! On top of these, the module builds the mixed families swept by the CLI:
//! two-Bell mixtures, isotropic (white-noise) Bell mixtures, mixtures of an
//! entangled state with an orthogonal separable one, the boundary family of
//! maximally entangled mixed states, and seeded random states of chosen
//! rank.

use crate::error::{Error, Result};
use crate::qlinalg::{Complex, DensityMatrix4, Mat4};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use std::fmt;

/// Relative sign between the two amplitudes of a Bell-type state.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn factor(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Normalized four-amplitude pure state.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState4 {
    amps: [Complex; 4],
}

impl PureState4 {
    /// Accepts amplitudes with `| ||ψ|| - 1 | <= 1e-12`, all finite.
    pub fn new(amps: [Complex; 4]) -> Result<Self> {
        if amps.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::ParamOutOfRange("non-finite amplitude".into()));
        }
        let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::ParamOutOfRange(format!(
                "state norm {norm} differs from 1 by more than 1e-12"
            )));
        }
        Ok(PureState4 { amps })
    }

    pub fn amplitudes(&self) -> &[Complex; 4] {
        &self.amps
    }

    /// Projector `|ψ><ψ|` as a validated density matrix.
    pub fn density(&self) -> DensityMatrix4 {
        let n: f64 = self.amps.iter().map(|z| z.norm_sqr()).sum();
        let m = Mat4::from_fn(|i, j| self.amps[i] * self.amps[j].conj() / n);
        DensityMatrix4::new(m).expect("projector of a normalized state is a valid state")
    }
}

fn check_unit(name: &str, x: f64) -> Result<f64> {
    if !x.is_finite() || !(0.0..=1.0).contains(&x) {
        return Err(Error::ParamOutOfRange(format!("{name} = {x} not in [0, 1]")));
    }
    Ok(x)
}

fn check_angle(name: &str, theta: f64) -> Result<f64> {
    if !theta.is_finite() || !(0.0..=std::f64::consts::FRAC_PI_2).contains(&theta) {
        return Err(Error::ParamOutOfRange(format!(
            "{name} = {theta} not in [0, π/2]"
        )));
    }
    Ok(theta)
}

/// `cos θ |VV> ± sin θ |HH>`.
pub fn bell_phi(theta: f64, sign: Sign) -> Result<PureState4> {
    let theta = check_angle("theta", theta)?;
    let z = |x: f64| Complex::new(x, 0.0);
    PureState4::new([z(theta.cos()), z(0.0), z(0.0), z(sign.factor() * theta.sin())])
}

/// `cos θ |VH> ± sin θ |HV>`.
pub fn bell_psi(theta: f64, sign: Sign) -> Result<PureState4> {
    let theta = check_angle("theta", theta)?;
    let z = |x: f64| Complex::new(x, 0.0);
    PureState4::new([z(0.0), z(theta.cos()), z(sign.factor() * theta.sin()), z(0.0)])
}

/// `γ |phi+(θ1)><phi+(θ1)| + (1-γ) |psi+(θ2)><psi+(θ2)|` — rank ≤ 2, with
/// the φ component living on the outer `{|VV>, |HH>}` block and the ψ
/// component on the inner `{|VH>, |HV>}` block.
pub fn two_bell_mixture(gamma: f64, theta1: f64, theta2: f64) -> Result<DensityMatrix4> {
    let gamma = check_unit("gamma", gamma)?;
    let phi = bell_phi(theta1, Sign::Plus)?.density();
    let psi = bell_psi(theta2, Sign::Plus)?.density();
    let m = phi.matrix().scale(gamma).add(&psi.matrix().scale(1.0 - gamma));
    DensityMatrix4::new(m)
}

/// Isotropic mixture `(1-γ) I/4 + γ |phi+(θ)><phi+(θ)|`; separable for
/// `γ <= 1/3` when θ = π/4.
pub fn werner(gamma: f64, theta: f64) -> Result<DensityMatrix4> {
    let gamma = check_unit("gamma", gamma)?;
    let phi = bell_phi(theta, Sign::Plus)?.density();
    let m = Mat4::identity()
        .scale((1.0 - gamma) / 4.0)
        .add(&phi.matrix().scale(gamma));
    DensityMatrix4::new(m)
}

/// `γ |psi+(θ)><psi+(θ)| + (1-γ) |VV><VV|`: an entangled state mixed with
/// an orthogonal separable one; eigenvalues `{γ, 1-γ, 0, 0}` and
/// concurrence `γ sin 2θ`.
pub fn entangled_separable(gamma: f64, theta: f64) -> Result<DensityMatrix4> {
    let gamma = check_unit("gamma", gamma)?;
    let psi = bell_psi(theta, Sign::Plus)?.density();
    let mut m = psi.matrix().scale(gamma);
    m[(0, 0)] += Complex::new(1.0 - gamma, 0.0);
    DensityMatrix4::new(m)
}

/// Boundary family of maximally entangled mixed states: for a target
/// concurrence `γ ∈ [0, 1]`, the diagonal is `(1 - 2g, g, g, 0)` with the
/// inner coherences `γ/2`, where `g = γ/2` for `γ >= 2/3` and `g = 1/3`
/// below; no state of equal linear entropy has higher concurrence.
pub fn mems_bound_state(gamma: f64) -> Result<DensityMatrix4> {
    let gamma = check_unit("gamma", gamma)?;
    let g = if gamma >= 2.0 / 3.0 { gamma / 2.0 } else { 1.0 / 3.0 };
    let mut m = Mat4::from_diag([1.0 - 2.0 * g, g, g, 0.0]);
    m[(1, 2)] = Complex::new(gamma / 2.0, 0.0);
    m[(2, 1)] = Complex::new(gamma / 2.0, 0.0);
    DensityMatrix4::new(m)
}

fn chacha(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seeded random density matrix of the requested rank (1..=4): `G G† / Tr`
/// with `G` a 4×rank matrix of standard complex Gaussians drawn from
/// ChaCha8 in row-major order, real part before imaginary part. The same
/// seed yields the same state on every platform.
pub fn random_density(seed: u64, rank: usize) -> Result<DensityMatrix4> {
    if !(1..=4).contains(&rank) {
        return Err(Error::ParamOutOfRange(format!("rank = {rank} not in 1..=4")));
    }
    let mut rng = chacha(seed);
    let mut g = [[Complex::new(0.0, 0.0); 4]; 4];
    for row in g.iter_mut() {
        for col in row.iter_mut().take(rank) {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            *col = Complex::new(re, im);
        }
    }
    let m = Mat4::from_fn(|i, j| (0..rank).map(|k| g[i][k] * g[j][k].conj()).sum());
    let tr = m.trace().re;
    DensityMatrix4::new(m.scale(1.0 / tr))
}

/// Seeded random pure state: four standard complex Gaussians, normalized.
pub fn random_pure(seed: u64) -> PureState4 {
    let mut rng = chacha(seed);
    let mut amps = [Complex::new(0.0, 0.0); 4];
    for a in amps.iter_mut() {
        let re: f64 = StandardNormal.sample(&mut rng);
        let im: f64 = StandardNormal.sample(&mut rng);
        *a = Complex::new(re, im);
    }
    let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for a in amps.iter_mut() {
        *a /= norm;
    }
    PureState4::new(amps).expect("normalized Gaussian amplitudes form a valid state")
}

/// The mixed/pure families the CLI and the constraint solvers know about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    BellPhi,
    BellPsi,
    TwoBellMixture,
    Werner,
    EntangledSeparable,
    MemsBound,
}

/// Parameter bundle for building any family member. Families ignore the
/// fields they do not use: `BellPhi` reads `theta1` and `sign`, `BellPsi`
/// reads `theta2` and `sign`, `TwoBellMixture` reads `gamma`/`theta1`/
/// `theta2`, `Werner` and `EntangledSeparable` read `gamma`/`theta1`,
/// `MemsBound` reads `gamma` alone.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FamilyParams {
    pub family: Family,
    pub gamma: f64,
    pub theta1: f64,
    pub theta2: f64,
    pub sign: Sign,
}

impl FamilyParams {
    /// Build the state this parameter bundle describes.
    pub fn state(&self) -> Result<DensityMatrix4> {
        match self.family {
            Family::BellPhi => Ok(bell_phi(self.theta1, self.sign)?.density()),
            Family::BellPsi => Ok(bell_psi(self.theta2, self.sign)?.density()),
            Family::TwoBellMixture => two_bell_mixture(self.gamma, self.theta1, self.theta2),
            Family::Werner => werner(self.gamma, self.theta1),
            Family::EntangledSeparable => entangled_separable(self.gamma, self.theta1),
            Family::MemsBound => mems_bound_state(self.gamma),
        }
    }
}
