//! Born–Markov transport engine for open fermionic systems.
//!
//! Builds the generator (Liouvillian) of the master equation
//!
//! ```text
//!     ρ̇ = −i[H, ρ] − ½ Σ_j { [d_j†, D_j⁻ ρ − ρ D_j⁺] + h.c. } + γ 𝒟[ŝ]ρ
//! ```
//!
//! where each lead j couples through a fermionic operator d_j with rate Γ_j,
//! and the frequency-weighted operators D_j± encode the lead occupation:
//! in the energy eigenbasis of H,
//!
//! ```text
//!     (D_j⁺)_nm = Γ_j f_j(ω_mn) (d_j)_nm ,        ω_mn = E_m − E_n ,
//!     (D_j⁻)_nm = Γ_j [1 − f_j(ω_mn)] (d_j)_nm ,
//! ```
//!
//! with f_j the lead occupation function. For occupations that are constant
//! in frequency (a deep-bias source with f ≡ 1 or drain with f ≡ 0) the
//! construction is carried out directly in the site basis — no
//! eigendecomposition is involved and the generator reduces exactly to the
//! familiar Lindblad forms Γ 𝒟[d†] (source) and Γ 𝒟[d] (drain).
//!
//! The optional term γ 𝒟[ŝ] is a pure-dephasing channel (ŝ is typically a
//! dot occupation operator), with 𝒟[s]ρ = sρs† − ½{s†s, ρ}.
//!
//! Everything operates on column-stacked density matrices: the matrix element
//! ρ_(i,j) lives at vector index j·d + i, and superoperators are (d²×d²)
//! complex matrices built from the identity vec(XρY) = (Yᵀ ⊗ X) vec(ρ).
//!
//! The crate exposes:
//! - [`LeadSpec`]/[`LeadOccupation`]: lead descriptions and Fermi factors,
//! - [`build_liouvillian`]: generator assembly with per-channel components,
//! - [`steady_state`]: null-space steady state via a trace-normalized solve,
//! - [`evolve`]: fixed-step fourth-order Runge–Kutta propagation,
//! - [`lead_current`]: the particle current into a chosen lead,
//! - [`transport_liouvillian`]: convenience wiring for the two-dot
//!   interferometer models of the `model` crate.

pub mod current;
pub mod dissipator;
pub mod leads;
pub mod liouvillian;
pub mod propagate;
pub mod steady;
pub mod transport;

pub use current::{lead_current, lead_current_trace};
pub use dissipator::DissipatorOperators;
pub use leads::{fermi_occupation, LeadOccupation, LeadSpec};
pub use liouvillian::{build_liouvillian, Liouvillian};
pub use propagate::{evolve, maximally_mixed, Evolution};
pub use steady::{steady_state, SteadyState};
pub use transport::{transport_liouvillian, LeadRegime};

use linalg_core::LinalgError;
use thiserror::Error;

/// Errors produced while building or driving the transport generator.
#[derive(Debug, Error)]
pub enum EngineError {
    /// An underlying dense-linear-algebra operation failed.
    #[error("linear algebra failure: {0}")]
    Linalg(#[from] LinalgError),

    /// The physical parameter set handed to the convenience wiring is
    /// invalid.
    #[error("invalid model parameters: {0}")]
    Model(#[from] model::ModelError),

    /// Matrices passed to the builder do not share one Hilbert-space dimension.
    #[error("dimension mismatch: {context}")]
    ShapeMismatch {
        /// What was being combined when the mismatch was detected.
        context: String,
    },

    /// A rate (lead coupling or dephasing) was negative or non-finite.
    #[error("rate `{name}` must be finite and non-negative, got {value}")]
    InvalidRate {
        /// Which rate was rejected.
        name: &'static str,
        /// The offending value.
        value: f64,
    },

    /// A lead temperature was negative or non-finite.
    #[error("lead temperature must be finite and non-negative, got {value}")]
    InvalidTemperature {
        /// The offending value.
        value: f64,
    },

    /// A chemical potential was non-finite.
    #[error("lead chemical potential must be finite, got {value}")]
    InvalidChemicalPotential {
        /// The offending value.
        value: f64,
    },

    /// The steady state is not unique: the generator has a null space of
    /// dimension greater than one, so the trace-normalized linear system
    /// stays singular.
    #[error(
        "steady state is degenerate: trace-normalized generator of dimension {dim} is singular \
         (estimated rank {estimated_rank})"
    )]
    DegenerateSteadyState {
        /// Dimension of the vectorized problem (d²).
        dim: usize,
        /// Rank estimate reported by the factorization.
        estimated_rank: usize,
    },

    /// The candidate steady state does not annihilate the generator.
    #[error("steady-state residual {residual:.3e} exceeds bound {bound:.3e}")]
    ResidualTooLarge {
        /// Largest |(L ρ)_k| over the vectorized state.
        residual: f64,
        /// Permitted bound.
        bound: f64,
    },

    /// The candidate steady state is not trace-normalized.
    #[error("steady-state trace error {trace_error:.3e} exceeds bound {bound:.3e}")]
    TraceNotUnity {
        /// |Tr ρ − 1|.
        trace_error: f64,
        /// Permitted bound.
        bound: f64,
    },

    /// The requested propagation step is too coarse for the generator's
    /// fastest rate; results would not be trustworthy.
    #[error(
        "time step {dt:.3e} too large: dt · max|L| = {product:.3e} exceeds stability guard {guard}"
    )]
    StepTooLarge {
        /// Requested step.
        dt: f64,
        /// dt times the largest generator entry.
        product: f64,
        /// The stability guard that was violated.
        guard: f64,
    },

    /// Propagation drifted away from the initial trace, signalling
    /// accumulated integration error.
    #[error("trace drifted by {drift:.3e} during propagation (bound {bound:.3e})")]
    TraceDrift {
        /// |Tr ρ(t_final) − Tr ρ(0)|.
        drift: f64,
        /// Permitted bound.
        bound: f64,
    },

    /// An input matrix or state contained NaN or infinity.
    #[error("non-finite input: {context}")]
    NonFiniteInput {
        /// Which input was rejected.
        context: String,
    },

    /// A lead index referred to a lead that was never attached.
    #[error("lead index {index} out of range: generator has {count} leads")]
    LeadIndexOutOfRange {
        /// The requested index.
        index: usize,
        /// Number of leads attached to the generator.
        count: usize,
    },
}
