//! Error type shared across the crate.

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A routine requiring Hermitian input was handed a matrix whose
    /// deviation `max |m - m†|` exceeds the precondition tolerance.
    #[error("matrix is not Hermitian: max |m - m†| = {deviation:.3e} exceeds {tolerance:.0e}")]
    NotHermitian { deviation: f64, tolerance: f64 },

    /// A matrix failed density-matrix validation (hermiticity, unit trace,
    /// positivity, or finiteness). The message names the violated invariant.
    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    /// A caller-supplied parameter is outside its documented domain.
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    /// An iterative eigenvalue computation exhausted its budget, or produced
    /// values outside the tolerances a caller is contractually allowed to
    /// clean up (e.g. an eigenvalue of `rho * rho_tilde` with imaginary part
    /// above 1e-8).
    #[error("eigenvalue computation failed: {0}")]
    ConvergenceFailure(String),

    /// The post-selected ensemble is empty: the success probability of the
    /// filter fell to `<= 1e-12`, so the conditional state is undefined.
    #[error("post-selected ensemble vanishes: success probability {probability:.3e} <= 1e-12")]
    VanishingEnsemble { probability: f64 },

    /// A constraint solver has no solution for the requested family or the
    /// supplied path parameter is missing/invalid for it.
    #[error("no transmission solution: {0}")]
    NoSolution(String),

    /// Constrained optimization found no candidate satisfying the
    /// subsystem-entropy constraint at the configured tolerance.
    #[error("no feasible point satisfies the subsystem-entropy constraint")]
    NoFeasiblePoint,
}

pub type Result<T> = std::result::Result<T, Error>;
