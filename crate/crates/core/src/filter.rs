//! The local filtering map, its full photonic-mode model, and closed-form
//! transmission solvers.
//!
//! Each arm carries one photon whose V and H components meet independent
//! variable beam splitters with transmission amplitudes `eta` in `[0, 1]`.
//! Conditioning on a coincidence (both photons transmitted) applies the
//! non-unitary diagonal map of [`apply_filter`]; [`full_mode_output`]
//! instead keeps every output port — transmitted modes plus a per-arm
//! record of whether a photon left through a reflected port — and serves
//! as an independent oracle for the map.

use crate::error::{Error, Result};
use crate::qlinalg::{hermitian_eigensystem, Complex, DensityMatrix4, Mat4};
use crate::states::{Family, FamilyParams, PureState4};

/// Success probabilities at or below this are an empty subensemble.
pub const VANISH_TOL: f64 = 1e-12;

/// Transmission amplitudes of the four variable beam splitters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FilterSettings {
    pub eta_va: f64,
    pub eta_ha: f64,
    pub eta_vb: f64,
    pub eta_hb: f64,
}

impl FilterSettings {
    /// Each amplitude must be finite and in `[0, 1]`.
    pub fn new(eta_va: f64, eta_ha: f64, eta_vb: f64, eta_hb: f64) -> Result<Self> {
        for (name, v) in [
            ("eta_va", eta_va),
            ("eta_ha", eta_ha),
            ("eta_vb", eta_vb),
            ("eta_hb", eta_hb),
        ] {
            if !v.is_finite() || !(0.0..=1.0).contains(&v) {
                return Err(Error::ParamOutOfRange(format!("{name} = {v} not in [0, 1]")));
            }
        }
        Ok(FilterSettings { eta_va, eta_ha, eta_vb, eta_hb })
    }

    /// Fully open filters: the identity map.
    pub fn all_open() -> Self {
        FilterSettings { eta_va: 1.0, eta_ha: 1.0, eta_vb: 1.0, eta_hb: 1.0 }
    }

    /// `[eta_va, eta_ha, eta_vb, eta_hb]` — also the lexicographic
    /// tie-break order used by the optimizer.
    pub fn as_array(&self) -> [f64; 4] {
        [self.eta_va, self.eta_ha, self.eta_vb, self.eta_hb]
    }
}

/// `diag(η_VA η_VB, η_VA η_HB, η_HA η_VB, η_HA η_HB)` — the joint
/// transmission operator `A ⊗ B` in the `{VV, VH, HV, HH}` basis.
pub fn filter_operator(s: &FilterSettings) -> Mat4 {
    Mat4::from_diag([
        s.eta_va * s.eta_vb,
        s.eta_va * s.eta_hb,
        s.eta_ha * s.eta_vb,
        s.eta_ha * s.eta_hb,
    ])
}

/// A post-selected filtered state and the probability of obtaining it.
#[derive(Clone, Debug, PartialEq)]
pub struct FilterOutcome {
    pub state: DensityMatrix4,
    pub probability: f64,
}

/// `rho -> (A ⊗ B) rho (A ⊗ B)† / P` with `P` the trace of the
/// unnormalized result; [`Error::VanishingEnsemble`] when `P <= 1e-12`.
pub fn apply_filter(rho: &DensityMatrix4, s: &FilterSettings) -> Result<FilterOutcome> {
    let f = filter_operator(s);
    let m = f.mul(rho.matrix()).mul(&f); // F is real diagonal: F† = F
    let p = m.trace().re;
    if p <= VANISH_TOL {
        return Err(Error::VanishingEnsemble { probability: p });
    }
    let state = DensityMatrix4::new(m.scale(1.0 / p))?;
    Ok(FilterOutcome { state, probability: p.clamp(0.0, 1.0) })
}

/// Occupation of one arm's transmitted mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArmMode {
    Vacuum,
    V,
    H,
}

impl ArmMode {
    fn code(self) -> usize {
        match self {
            ArmMode::Vacuum => 0,
            ArmMode::V => 1,
            ArmMode::H => 2,
        }
    }
}

/// Output of the full four-beam-splitter mode model on a pure input:
/// amplitudes over (arm A ∈ {0, V, H}) ⊗ (arm B ∈ {0, V, H}) ⊗ (reflected
/// photon at A?) ⊗ (reflected photon at B?), 36 components.
///
/// The polarization of a reflected photon is deliberately discarded — only
/// the per-arm "a photon left through a reflected port" flag is kept — so
/// pathways that differ only in that label land in the same component.
/// Their amplitudes add coherently (matching the aggregated expansion the
/// model is defined by), while [`ExtendedState::block_weight`] accumulates
/// their squared magnitudes separately so that probability bookkeeping
/// across all ports stays exact; [`ExtendedState::norm`] is 1 for every
/// unit-norm input.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtendedState {
    amps: [Complex; 36],
    weights: [f64; 36],
}

fn slot(arm_a: usize, arm_b: usize, anc_a: usize, anc_b: usize) -> usize {
    ((arm_a * 3 + arm_b) * 2 + anc_a) * 2 + anc_b
}

impl ExtendedState {
    /// Coherent amplitude of one component.
    pub fn amplitude(&self, arm_a: ArmMode, arm_b: ArmMode, anc_a: bool, anc_b: bool) -> Complex {
        self.amps[slot(arm_a.code(), arm_b.code(), anc_a as usize, anc_b as usize)]
    }

    /// Total squared-magnitude weight routed into one component, summed
    /// over pathways whose reflected-polarization label was discarded.
    pub fn block_weight(&self, arm_a: ArmMode, arm_b: ArmMode, anc_a: bool, anc_b: bool) -> f64 {
        self.weights[slot(arm_a.code(), arm_b.code(), anc_a as usize, anc_b as usize)]
    }

    /// Square root of the summed weights of every port; 1 within 1e-12
    /// for any unit-norm input.
    pub fn norm(&self) -> f64 {
        self.weights.iter().sum::<f64>().sqrt()
    }
}

/// Send a pure state through all four beam splitters and keep every output
/// port. Each polarization mode maps independently as
/// `|X> -> η_X |X>|no reflection> + sqrt(1 - η_X²) |vacuum>|reflection>`.
pub fn full_mode_output(psi: &PureState4, s: &FilterSettings) -> ExtendedState {
    let eta_a = [s.eta_va, s.eta_ha];
    let eta_b = [s.eta_vb, s.eta_hb];
    let refl = |eta: f64| (1.0 - eta * eta).max(0.0).sqrt();
    let mut amps = [Complex::new(0.0, 0.0); 36];
    let mut weights = [0.0f64; 36];
    let add = |i: usize, z: Complex, a: &mut [Complex; 36], w: &mut [f64; 36]| {
        a[i] += z;
        w[i] += z.norm_sqr();
    };
    for (idx, &alpha) in psi.amplitudes().iter().enumerate() {
        if alpha == Complex::new(0.0, 0.0) {
            continue;
        }
        let x = idx / 2; // 0 = V, 1 = H on arm A
        let y = idx % 2;
        let (ta, ra) = (eta_a[x], refl(eta_a[x]));
        let (tb, rb) = (eta_b[y], refl(eta_b[y]));
        add(slot(x + 1, y + 1, 0, 0), alpha * ta * tb, &mut amps, &mut weights);
        add(slot(x + 1, 0, 0, 1), alpha * ta * rb, &mut amps, &mut weights);
        add(slot(0, y + 1, 1, 0), alpha * ra * tb, &mut amps, &mut weights);
        add(slot(0, 0, 1, 1), alpha * ra * rb, &mut amps, &mut weights);
    }
    ExtendedState { amps, weights }
}

/// Project onto the coincidence block (both transmitted modes occupied, no
/// reflections) and renormalize; the probability is the block's squared
/// norm. [`Error::VanishingEnsemble`] when that is `<= 1e-12`.
pub fn coincidence_project(ext: &ExtendedState) -> Result<FilterOutcome> {
    let mut c = [Complex::new(0.0, 0.0); 4];
    for x in 0..2 {
        for y in 0..2 {
            c[2 * x + y] = ext.amps[slot(x + 1, y + 1, 0, 0)];
        }
    }
    let p: f64 = c.iter().map(|z| z.norm_sqr()).sum();
    if p <= VANISH_TOL {
        return Err(Error::VanishingEnsemble { probability: p });
    }
    let scale = p.sqrt();
    for z in c.iter_mut() {
        *z /= scale;
    }
    let state = PureState4::new(c)?.density();
    Ok(FilterOutcome { state, probability: p.clamp(0.0, 1.0) })
}

/// Filter a mixed state through the mode-level model: eigendecompose,
/// send each pure component through [`full_mode_output`], and recombine
/// the unnormalized coincidence blocks weighted by the eigenvalues.
/// Exists as an independent cross-check of [`apply_filter`].
pub fn oracle_filter(rho: &DensityMatrix4, s: &FilterSettings) -> Result<FilterOutcome> {
    let (vals, vecs) = hermitian_eigensystem(rho.matrix())?;
    let mut m = Mat4::zeros();
    let mut p = 0.0;
    for (k, &w) in vals.iter().enumerate() {
        if w <= 1e-14 {
            continue; // null component: no probability weight to route
        }
        let mut amps = [Complex::new(0.0, 0.0); 4];
        for (i, a) in amps.iter_mut().enumerate() {
            *a = vecs[(i, k)];
        }
        let ext = full_mode_output(
            &PureState4::new(amps).expect("eigenvector columns are unit vectors"),
            s,
        );
        let mut c = [Complex::new(0.0, 0.0); 4];
        for x in 0..2 {
            for y in 0..2 {
                c[2 * x + y] = ext.amps[slot(x + 1, y + 1, 0, 0)];
            }
        }
        p += w * c.iter().map(|z| z.norm_sqr()).sum::<f64>();
        m = m.add(&Mat4::from_fn(|i, j| c[i] * c[j].conj() * w));
    }
    if p <= VANISH_TOL {
        return Err(Error::VanishingEnsemble { probability: p });
    }
    let state = DensityMatrix4::new(m.scale(1.0 / p))?;
    Ok(FilterOutcome { state, probability: p.clamp(0.0, 1.0) })
}

/// Largest eigenvalue of `(A ⊗ B)† (A ⊗ B)`; at most `1 + 1e-12` for valid
/// settings, witnessing that the lossy channels complete a CP map.
pub fn kraus_completion_check(s: &FilterSettings) -> f64 {
    let f = filter_operator(s);
    let m = f.adjoint().mul(&f);
    crate::qlinalg::hermitian_eigenvalues(&m)
        .expect("diagonal real matrix is Hermitian")[0]
}

fn tan_of(name: &str, theta: f64) -> Result<f64> {
    let t = theta.tan();
    if !(t.is_finite()) || t <= 0.0 {
        return Err(Error::NoSolution(format!(
            "{name} = {theta} admits no transmission settings in (0, 1] (degenerate angle)"
        )));
    }
    Ok(t)
}

fn rescaled(raw: [f64; 4]) -> Result<FilterSettings> {
    let max = raw.iter().cloned().fold(0.0f64, f64::max);
    if !max.is_finite() || max <= 0.0 {
        return Err(Error::NoSolution("constraint forces all transmissions to zero".into()));
    }
    let s = raw.map(|v| v / max);
    if s.iter().any(|&v| !v.is_finite() || v <= 0.0) {
        return Err(Error::NoSolution(
            "constraint forces a transmission to zero after rescaling".into(),
        ));
    }
    FilterSettings::new(s[0], s[1], s[2], s[3])
}

fn check_path(path: Option<f64>) -> Result<f64> {
    match path {
        Some(e) if e.is_finite() && e > 0.0 && e <= 1.0 => Ok(e),
        Some(e) => Err(Error::ParamOutOfRange(format!("path parameter ε = {e} not in (0, 1]"))),
        None => Err(Error::ParamOutOfRange(
            "this family needs an explicit path parameter ε in (0, 1]".into(),
        )),
    }
}

fn reject_path(path: Option<f64>) -> Result<()> {
    if path.is_some() {
        return Err(Error::ParamOutOfRange(
            "path parameter only applies to families with a one-parameter solution set".into(),
        ));
    }
    Ok(())
}

/// Closed-form transmission settings that balance the given family into a
/// subsystem-entropy-maximizing (Bell-diagonal) filtered state.
///
/// The four amplitudes are underdetermined by the balance conditions; the
/// canonical representative puts the H channels at the maximum and applies
/// one global rescale so every amplitude lies in `(0, 1]`, which maximizes
/// the success probability within the solution family. Families with a
/// genuinely one-dimensional solution set — `EntangledSeparable`, where
/// maximal entanglement is reached only in the no-transmission limit, and
/// `MemsBound` — take that remaining freedom as an explicit `path`
/// parameter `ε = η_VB` (with `η_VA = ε·tan θ` for `EntangledSeparable`);
/// the closed-form families reject a supplied `path`.
pub fn solve_constraints(params: &FamilyParams, path: Option<f64>) -> Result<FilterSettings> {
    match params.family {
        Family::BellPhi => {
            reject_path(path)?;
            let t = tan_of("theta1", params.theta1)?;
            rescaled([t.sqrt(), 1.0, t.sqrt(), 1.0])
        }
        Family::BellPsi => {
            reject_path(path)?;
            let t = tan_of("theta2", params.theta2)?;
            rescaled([t.sqrt(), 1.0, 1.0, t.sqrt()])
        }
        Family::TwoBellMixture => {
            reject_path(path)?;
            let t1 = tan_of("theta1", params.theta1)?;
            let t2 = tan_of("theta2", params.theta2)?;
            rescaled([(t1 * t2).sqrt(), 1.0, (t1 / t2).sqrt(), 1.0])
        }
        Family::Werner => {
            reject_path(path)?;
            let t = tan_of("theta1", params.theta1)?;
            rescaled([t.sqrt(), 1.0, t.sqrt(), 1.0])
        }
        Family::EntangledSeparable => {
            let eps = check_path(path)?;
            let t = tan_of("theta1", params.theta1)?;
            rescaled([eps * t, 1.0, eps, 1.0])
        }
        Family::MemsBound => {
            let eps = check_path(path)?;
            rescaled([eps, 1.0, eps, 1.0])
        }
    }
}

/// One-parameter filter path swept by the CLI, `t ∈ [0, 1]`.
///
/// For `Werner`, `MemsBound` and `BellPhi` the axis is the joint
/// transmission `t = η² = η_VA·η_VB` with both V channels at `sqrt(t)` and
/// the H channels open; `BellPsi` attenuates `η_VA` and `η_HB` instead
/// (its balance condition pairs those channels). For
/// `EntangledSeparable`, `t` is the path parameter `ε` of
/// [`solve_constraints`]. For `TwoBellMixture`, `t` scales the canonical
/// constrained settings globally (which leaves the filtered state fixed
/// and sweeps only the success probability).
pub fn eta_path(params: &FamilyParams, t: f64) -> Result<FilterSettings> {
    if !t.is_finite() || !(0.0..=1.0).contains(&t) {
        return Err(Error::ParamOutOfRange(format!("path position t = {t} not in [0, 1]")));
    }
    match params.family {
        Family::Werner | Family::MemsBound | Family::BellPhi => {
            FilterSettings::new(t.sqrt(), 1.0, t.sqrt(), 1.0)
        }
        Family::BellPsi => FilterSettings::new(t.sqrt(), 1.0, 1.0, t.sqrt()),
        Family::EntangledSeparable => solve_constraints(params, Some(t)),
        Family::TwoBellMixture => {
            let base = solve_constraints(params, None)?;
            let [va, ha, vb, hb] = base.as_array().map(|v| v * t);
            FilterSettings::new(va, ha, vb, hb)
        }
    }
}
