//! Derivative-free search over [`FilterSettings`] maximizing post-filter
//! entanglement of formation.
//!
//! The objective is non-smooth where the concurrence hits zero and where the
//! spin-flip eigenvalues cross, so the search avoids gradients entirely: a
//! coarse grid over `[0,1]^4` seeds per-axis golden-section refinement around
//! the incumbent. Every evaluated point enters a candidate pool, and the
//! final answer is a pure reduction over that pool (max EOF, then max
//! success probability among near-ties, then lexicographically smallest
//! settings), so the result is independent of evaluation order and bitwise
//! reproducible.

use crate::error::{Error, Result};
use crate::filter::{apply_filter, FilterOutcome, FilterSettings};
use crate::measures::{self, MeasureReport};
use crate::qlinalg::{DensityMatrix4, Subsystem};

/// Inverse golden ratio, the section point of each refinement probe.
const INVPHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section probes per axis per cycle.
const SECTION_ITERS: usize = 32;

/// Coordinate-descent cycles per refinement round (fewer if the incumbent
/// stops moving).
const MAX_CYCLES: usize = 8;

/// What "best" means.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OptimizeMode {
    /// Maximize EOF, nothing else.
    UnconstrainedEof,
    /// Maximize EOF over settings whose output has both one-arm entropies
    /// equal to 1 within `entropy_tolerance` (a hard filter, not a penalty).
    SubsystemConstrained,
}

/// Search-harness knobs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OptimizeConfig {
    pub mode: OptimizeMode,
    /// Points per axis in the seeding grid (>= 8).
    pub grid_resolution: usize,
    /// Golden-section rounds (>= 1); each round halves the search window.
    pub refine_rounds: usize,
    /// Slack allowed on max(|S_A - 1|, |S_B - 1|) in constrained mode.
    pub entropy_tolerance: f64,
    /// Candidates within this EOF distance of the best compete on probability.
    pub eof_tie_tolerance: f64,
    /// Candidates below this success probability are rejected.
    pub min_probability: f64,
}

impl OptimizeConfig {
    pub fn unconstrained() -> Self {
        OptimizeConfig {
            mode: OptimizeMode::UnconstrainedEof,
            grid_resolution: 15,
            refine_rounds: 3,
            entropy_tolerance: 1e-6,
            eof_tie_tolerance: 1e-9,
            min_probability: 0.0,
        }
    }

    /// Constrained searches get a denser seed grid: the feasible set is a
    /// thin shell around a two-dimensional manifold and a coarse grid can
    /// miss it entirely.
    pub fn constrained() -> Self {
        OptimizeConfig {
            mode: OptimizeMode::SubsystemConstrained,
            grid_resolution: 21,
            ..Self::unconstrained()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.grid_resolution < 8 {
            return Err(Error::ParamOutOfRange(format!(
                "grid_resolution = {} < 8",
                self.grid_resolution
            )));
        }
        if self.refine_rounds < 1 {
            return Err(Error::ParamOutOfRange("refine_rounds = 0".into()));
        }
        if !self.entropy_tolerance.is_finite() || self.entropy_tolerance < 0.0 {
            return Err(Error::ParamOutOfRange(format!(
                "entropy_tolerance = {} not a finite non-negative real",
                self.entropy_tolerance
            )));
        }
        if !self.eof_tie_tolerance.is_finite() || self.eof_tie_tolerance < 0.0 {
            return Err(Error::ParamOutOfRange(format!(
                "eof_tie_tolerance = {} not a finite non-negative real",
                self.eof_tie_tolerance
            )));
        }
        if !self.min_probability.is_finite() || !(0.0..=1.0).contains(&self.min_probability) {
            return Err(Error::ParamOutOfRange(format!(
                "min_probability = {} not in [0, 1]",
                self.min_probability
            )));
        }
        Ok(())
    }
}

/// Best point found, with its full output.
#[derive(Clone, Debug)]
pub struct OptimizeResult {
    pub settings: FilterSettings,
    pub outcome: FilterOutcome,
    pub report: MeasureReport,
    /// `(|S_A - 1|, |S_B - 1|)` at the optimum (informational in
    /// unconstrained mode).
    pub constraint_residuals: (f64, f64),
}

/// One evaluated point, for trace output. `eof` is `None` when the point was
/// rejected before the objective was computed (vanishing ensemble, below the
/// probability floor, or outside the entropy constraint).
#[derive(Clone, Copy, Debug)]
pub struct Evaluation {
    pub settings: FilterSettings,
    pub probability: f64,
    pub eof: Option<f64>,
    pub feasible: bool,
}

#[derive(Clone, Copy, Debug)]
struct Candidate {
    axes: [f64; 4],
    eof: f64,
    probability: f64,
}

struct Search<'a> {
    rho: &'a DensityMatrix4,
    cfg: OptimizeConfig,
    pool: Vec<Candidate>,
    trace: Vec<Evaluation>,
    record: bool,
}

impl<'a> Search<'a> {
    /// Score one settings vector. Feasible points join the pool and return
    /// `(eof, probability)`; rejected points return `(-1, -1)` so any
    /// feasible point beats them.
    fn eval(&mut self, axes: [f64; 4]) -> Result<(f64, f64)> {
        // Golden-section arithmetic can land an ulp outside [0, 1].
        let axes = axes.map(|x| x.clamp(0.0, 1.0));
        let settings = FilterSettings::new(axes[0], axes[1], axes[2], axes[3])?;
        let outcome = match apply_filter(self.rho, &settings) {
            Ok(o) => o,
            Err(Error::VanishingEnsemble { probability }) => {
                self.push_trace(settings, probability, None, false);
                return Ok((-1.0, -1.0));
            }
            Err(e) => return Err(e),
        };
        let p = outcome.probability;
        if p < self.cfg.min_probability {
            self.push_trace(settings, p, None, false);
            return Ok((-1.0, -1.0));
        }
        if self.cfg.mode == OptimizeMode::SubsystemConstrained {
            let ra = (measures::subsystem_entropy(&outcome.state, Subsystem::A) - 1.0).abs();
            let rb = (measures::subsystem_entropy(&outcome.state, Subsystem::B) - 1.0).abs();
            if ra.max(rb) > self.cfg.entropy_tolerance {
                self.push_trace(settings, p, None, false);
                return Ok((-1.0, -1.0));
            }
        }
        let eof = measures::eof(&outcome.state)?;
        self.push_trace(settings, p, Some(eof), true);
        self.pool.push(Candidate { axes, eof, probability: p });
        Ok((eof, p))
    }

    fn push_trace(&mut self, settings: FilterSettings, p: f64, eof: Option<f64>, feasible: bool) {
        if self.record {
            self.trace.push(Evaluation { settings, probability: p, eof, feasible });
        }
    }

    /// Reduce the pool: max EOF, then max probability among candidates
    /// within `eof_tie_tolerance` of it, then lexicographically smallest
    /// `[eta_va, eta_ha, eta_vb, eta_hb]`. Order-independent by
    /// construction.
    fn incumbent(&self) -> Option<Candidate> {
        let best_eof = self.pool.iter().map(|c| c.eof).fold(f64::NEG_INFINITY, f64::max);
        self.pool
            .iter()
            .filter(|c| c.eof >= best_eof - self.cfg.eof_tie_tolerance)
            .min_by(|a, b| {
                b.probability
                    .total_cmp(&a.probability)
                    .then_with(|| a.axes[0].total_cmp(&b.axes[0]))
                    .then_with(|| a.axes[1].total_cmp(&b.axes[1]))
                    .then_with(|| a.axes[2].total_cmp(&b.axes[2]))
                    .then_with(|| a.axes[3].total_cmp(&b.axes[3]))
            })
            .copied()
    }

    /// Golden-section maximization of `(eof, probability)` along one axis
    /// over `[lo, hi]`, all other axes pinned at `center`. Returns the best
    /// sampled point on the axis with its score.
    fn section_axis(
        &mut self,
        center: [f64; 4],
        axis: usize,
        lo: f64,
        hi: f64,
    ) -> Result<(f64, (f64, f64))> {
        let at = |x: f64| {
            let mut axes = center;
            axes[axis] = x;
            axes
        };
        let mut lo = lo;
        let mut hi = hi;
        let mut x1 = hi - INVPHI * (hi - lo);
        let mut x2 = lo + INVPHI * (hi - lo);
        let mut f1 = self.eval(at(x1))?;
        let mut f2 = self.eval(at(x2))?;
        let mut best = if gt(f1, f2) { (x1, f1) } else { (x2, f2) };
        for _ in 0..SECTION_ITERS {
            if gt(f1, f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - INVPHI * (hi - lo);
                f1 = self.eval(at(x1))?;
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + INVPHI * (hi - lo);
                f2 = self.eval(at(x2))?;
            }
            for (x, f) in [(x1, f1), (x2, f2)] {
                if gt(f, best.1) {
                    best = (x, f);
                }
            }
        }
        Ok(best)
    }
}

/// Lexicographic `(eof, probability)` comparison.
fn gt(a: (f64, f64), b: (f64, f64)) -> bool {
    match a.0.total_cmp(&b.0) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => a.1.total_cmp(&b.1) == std::cmp::Ordering::Greater,
    }
}

/// Rescale each arm so its larger amplitude is exactly 1. The normalized
/// output state is invariant under a common scale on one arm's pair, so this
/// keeps EOF while maximizing success probability over the scaling orbit.
fn lift(axes: [f64; 4]) -> [f64; 4] {
    let mut out = axes;
    let ma = axes[0].max(axes[1]);
    if ma > 0.0 {
        out[0] = axes[0] / ma;
        out[1] = axes[1] / ma;
    }
    let mb = axes[2].max(axes[3]);
    if mb > 0.0 {
        out[2] = axes[2] / mb;
        out[3] = axes[3] / mb;
    }
    out
}

/// Deterministic EOF maximization over filter settings. See the module
/// documentation for the search scheme and the tie-break rule.
pub fn optimize_eof(rho: &DensityMatrix4, cfg: &OptimizeConfig) -> Result<OptimizeResult> {
    optimize_impl(rho, cfg, false).map(|(r, _)| r)
}

/// As [`optimize_eof`], additionally returning every evaluated point in
/// evaluation order.
pub fn optimize_eof_traced(
    rho: &DensityMatrix4,
    cfg: &OptimizeConfig,
) -> Result<(OptimizeResult, Vec<Evaluation>)> {
    optimize_impl(rho, cfg, true)
}

fn optimize_impl(
    rho: &DensityMatrix4,
    cfg: &OptimizeConfig,
    record: bool,
) -> Result<(OptimizeResult, Vec<Evaluation>)> {
    cfg.validate()?;
    let mut s = Search { rho, cfg: *cfg, pool: Vec::new(), trace: Vec::new(), record };

    // Seed grid: exact endpoints 0 and 1 included on every axis.
    let n = cfg.grid_resolution;
    let tick = |i: usize| i as f64 / (n - 1) as f64;
    for ia in 0..n {
        for ib in 0..n {
            for ic in 0..n {
                for id in 0..n {
                    s.eval([tick(ia), tick(ib), tick(ic), tick(id)])?;
                }
            }
        }
    }
    if s.pool.is_empty() {
        return Err(Error::NoFeasiblePoint);
    }

    // Boundary polish: the probability-maximal point of an EOF plateau often
    // has three amplitudes exactly 1 (attenuate only the majority
    // amplitude), and coordinate steps from an interior incumbent cannot
    // reach it. One full-range section per axis, all others pinned at 1,
    // feeds those points into the pool.
    for axis in 0..4 {
        s.section_axis([1.0, 1.0, 1.0, 1.0], axis, 0.0, 1.0)?;
    }

    // Refinement: per-axis golden sections in a window that halves each
    // round, cycling over the axes until the working point stops moving.
    // Each round starts from the lifted incumbent so refinement happens on
    // the probability-maximal representative of the scaling orbit.
    let spacing = 1.0 / (n - 1) as f64;
    for round in 0..cfg.refine_rounds {
        let w = spacing / f64::powi(2.0, round as i32);
        let pre = s.incumbent().expect("pool is non-empty");
        let lifted = lift(pre.axes);
        if lifted != pre.axes {
            s.eval(lifted)?;
        }
        let start = s.incumbent().expect("pool is non-empty");
        let mut center = start.axes;
        let mut center_score = (start.eof, start.probability);
        for _ in 0..MAX_CYCLES {
            let before = center;
            for axis in 0..4 {
                let lo = (center[axis] - w).max(0.0);
                let hi = (center[axis] + w).min(1.0);
                let (x, f) = s.section_axis(center, axis, lo, hi)?;
                if gt(f, center_score) {
                    center[axis] = x;
                    center_score = f;
                }
            }
            if center == before {
                break;
            }
        }
    }

    // The winner is reported on its scaling orbit's probability-maximal
    // representative whenever that lift is an improvement.
    let pre = s.incumbent().expect("pool is non-empty");
    let lifted = lift(pre.axes);
    if lifted != pre.axes {
        s.eval(lifted)?;
    }

    let best = s.incumbent().expect("pool is non-empty");
    let settings = FilterSettings::new(best.axes[0], best.axes[1], best.axes[2], best.axes[3])?;
    let outcome = apply_filter(rho, &settings)?;
    let report = measures::report(&outcome.state)?;
    let residuals = (
        (report.entropy_a - 1.0).abs(),
        (report.entropy_b - 1.0).abs(),
    );
    Ok((
        OptimizeResult { settings, outcome, report, constraint_residuals: residuals },
        s.trace,
    ))
}
