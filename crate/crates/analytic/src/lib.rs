//! Closed-form oracle layer for the interferometer transport problem.
//!
//! Everything here is an exact formula evaluated in double precision — no
//! master-equation solving. The expressions come from the steady-state
//! solution of the reduced four-state transport equations and are kept
//! symbol-by-symbol faithful to their derivations, so that an independent
//! numerical cross-check (the transport engine) catches transcription errors
//! rather than sharing them.
//!
//! Provided quantities, all as functions of the model parameters:
//! - [`current_closed_form`]: the steady transport current with dephasing,
//!   reducing exactly to the dephasing-free form at γ = 0,
//! - [`zero_dephasing_current`]: the γ = 0 current, implemented separately,
//! - [`averaged_current`]: the current averaged over a uniform window of the
//!   first dot level (the two-arctan form), with
//!   [`averaged_current_quadrature`] as its numerical-integration oracle,
//! - [`current_dephasing_derivative`], [`gamma_star`], [`gamma_zero`]:
//!   the slope of the current in the dephasing rate, the interior maximum
//!   location, and the rate at which the current returns to its γ = 0 value,
//! - [`visibility_closed_form`], [`visibility_turnover`]: the interference
//!   visibility of the φ-swept current and the location of its minimum in γ,
//! - [`DerivedRates`]: the characteristic combinations Γ̃, K, B shared by
//!   those formulas,
//! - [`quadrature::adaptive_simpson`]: the general-purpose integrator used
//!   by the averaging oracle.

pub mod average;
pub mod current;
pub mod quadrature;
pub mod rates;
pub mod visibility;

pub use average::{averaged_current, averaged_current_quadrature};
pub use current::{
    current_closed_form, current_dephasing_derivative, gamma_star, gamma_zero,
    zero_dephasing_current,
};
pub use quadrature::adaptive_simpson;
pub use rates::DerivedRates;
pub use visibility::{visibility_closed_form, visibility_turnover};

use thiserror::Error;

/// Errors from the closed-form layer.
#[derive(Debug, Error, PartialEq)]
pub enum AnalyticError {
    /// The averaging half-width must be non-negative.
    #[error("averaging half-width must be non-negative, got {value}")]
    NegativeAveragingWindow {
        /// The offending half-width.
        value: f64,
    },

    /// The two-arctan averaged form is derived for the dephasing-free
    /// current; with a dephasing rate attached it does not apply.
    #[error(
        "averaged current is defined for zero dephasing, but the dephasing rate is {dephasing}"
    )]
    AveragingRequiresZeroDephasing {
        /// The dephasing rate that was set.
        dephasing: f64,
    },

    /// The requested characteristic is quoted for symmetric lead couplings.
    #[error("requires symmetric lead rates, got gamma1 = {gamma1}, gamma2 = {gamma2}")]
    RequiresSymmetricRates {
        /// Source rate.
        gamma1: f64,
        /// Drain rate.
        gamma2: f64,
    },

    /// The current has no interior maximum in the dephasing rate: the
    /// formula value is non-positive, so the current is monotone in γ ≥ 0.
    #[error("no interior maximum: formula gives gamma* = {value}, not positive")]
    NoInteriorMaximum {
        /// The (non-positive) formula value 2(|δ| − Γ).
        value: f64,
    },

    /// Visibility is undefined when both interference arms vanish: there is
    /// no φ-dependence at all.
    #[error("visibility undefined: both the direct and mediated couplings are zero")]
    NoInterference,

    /// A non-finite number was supplied where a finite one is required.
    #[error("non-finite input: {context}")]
    NonFiniteInput {
        /// Which input was rejected.
        context: &'static str,
    },
}
