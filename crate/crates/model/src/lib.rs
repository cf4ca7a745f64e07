//! Operator-level description of a double-quantum-dot charge interferometer
//! that reads out a superconducting-island qubit.
//!
//! Two single-level dots sit between source and drain leads. An electron can
//! move from dot 1 to dot 2 along two arms:
//!
//! * a **reference arm** with direct tunneling amplitude λ₀·e^{iφ}, and
//! * an **island arm**: virtual charge excursions through a floating
//!   superconducting island (charging energy E_C) whose low-energy subgap
//!   modes store a qubit. Second order in the dot–island couplings λ₁, λ₂
//!   turns the excursions into an interdot amplitude proportional to the
//!   island's pair-parity eigenvalue z = ±1.
//!
//! The interference of the two arms makes the steady-state transport current
//! depend on z, so measuring the current measures the qubit.
//!
//! Two representations are provided:
//!
//! * [`build_effective_model`] — the four-state dot space after the island
//!   has been reduced to the single amplitude Ω(z) = −λ₀e^{iφ} + z·λ̃₁₂ with
//!   λ̃₁₂ = 2λ₁λ₂/E_C;
//! * [`build_full_model`] — twelve states keeping the island's charge ladder
//!   (neutral plus one extra/one missing charge, each costing E_C) explicit,
//!   used to check the reduction rather than assume it.
//!
//! [`stabilizer_effective_coupling`] covers the variant where the island arm
//! traverses a four-island plaquette so the interferometer reads out a
//! stabilizer eigenvalue instead of a single pair parity.

pub mod effective;
pub mod full;
pub mod params;
pub mod stabilizer;
pub mod system;

mod jw;

pub use effective::{EffectiveCoupling, build_effective_model};
pub use full::build_full_model;
pub use params::{ModelParams, Sector};
pub use stabilizer::{
    StabilizerCoupling, StabilizerParams, gate_offset_factor, stabilizer_effective_coupling,
};
pub use system::DotModel;

use thiserror::Error;

/// Parameter-validation failures. Every builder validates before
/// constructing, so a [`DotModel`] never exists with unphysical parameters.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum ModelError {
    /// The charging energy sets the energy scale of the island arm and must
    /// be strictly positive.
    #[error("charging energy must be > 0, got {value}")]
    NonPositiveChargingEnergy {
        /// Offending value.
        value: f64,
    },

    /// Rates (tunnel couplings to the leads, dephasing) are non-negative by
    /// definition.
    #[error("rate `{name}` must be >= 0, got {value}")]
    NegativeRate {
        /// Parameter name.
        name: &'static str,
        /// Offending value.
        value: f64,
    },

    /// Tunneling amplitudes are kept non-negative: a sign on λ₀ is the same
    /// point with φ → φ+π, and a sign on λ₁λ₂ is the same point with the
    /// sector flipped, so allowing signs would double-cover the parameter
    /// space and invite inconsistent reporting.
    #[error(
        "amplitude `{name}` must be >= 0, got {value} (fold signs into the phase or the sector)"
    )]
    NegativeAmplitude {
        /// Parameter name.
        name: &'static str,
        /// Offending value.
        value: f64,
    },

    /// NaN or infinity in a parameter.
    #[error("parameter `{name}` is not finite")]
    NonFinite {
        /// Parameter name.
        name: &'static str,
    },

    /// Gate offsets |Δn| ≥ ½ close the island charge gap: the virtual-state
    /// energies (1 ∓ 2Δn)E_C reach zero and the perturbative island arm no
    /// longer exists.
    #[error("gate offset must satisfy |Δn| < 1/2, got {value}")]
    GateOffsetTooLarge {
        /// Offending value.
        value: f64,
    },

    /// The stabilizer conversion factor divides by the dot-link amplitude,
    /// which must therefore be nonzero.
    #[error("link amplitude `{name}` must be nonzero")]
    ZeroLinkAmplitude {
        /// Parameter name.
        name: &'static str,
    },

    /// Sector signs other than ±1.
    #[error("sector sign must be +1 or -1, got {value}")]
    InvalidSectorSign {
        /// Offending value.
        value: i64,
    },
}
