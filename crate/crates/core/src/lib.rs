//! Two-qubit polarization states under local beam-splitter filtering.
//!
//! A pair of polarization-entangled photons (modes `V`/`H` on arms A and B)
//! is sent through one tunable filter per arm. Each filter transmits the
//! vertical and horizontal components with independent amplitudes
//! `eta_v`, `eta_h` in `[0, 1]`; conditioning on both photons surviving
//! implements the non-unitary map
//!
//! ```text
//! rho  ->  (A ⊗ B) rho (A ⊗ B)† / P,    A = diag(eta_va, eta_ha),
//!                                        B = diag(eta_vb, eta_hb),
//! ```
//!
//! with success probability `P = Tr[(A ⊗ B) rho (A ⊗ B)†]`. This crate
//! provides:
//!
//! * [`qlinalg`] — dense complex 2×2 / 4×4 matrices, validated density
//!   matrices, tensor products, partial traces, and the two eigensolvers
//!   everything else is built on (cyclic Jacobi for Hermitian input,
//!   Hessenberg + shifted QR for general input);
//! * [`measures`] — concurrence, entanglement of formation, joint and
//!   subsystem von Neumann entropies, linear entropy, purity;
//! * [`states`] — the state families under study (Bell-type pure states,
//!   two-Bell mixtures, Werner states, entangled–separable mixtures,
//!   maximally-entangled mixed boundary states, seeded random states);
//! * [`filter`] — the filter map itself, a full photonic-mode model that
//!   tracks reflected photons and serves as an independent oracle for it,
//!   closed-form transmission solvers, and one-parameter filter paths;
//! * [`optimize`] — a deterministic grid + golden-section search for the
//!   transmission settings maximizing entanglement of formation, with an
//!   optional subsystem-entropy constraint.

pub mod error;
pub mod filter;
pub mod measures;
pub mod optimize;
pub mod qlinalg;
pub mod states;

pub use error::{Error, Result};
