//! Effective couplings when the island arm traverses a four-island
//! stabilizer plaquette.
//!
//! In the scaled-up layout the two dots are bridged not by one island but by
//! a plaquette of four, with single-charge link amplitudes t₁₂, t₃₄, t₅₆,
//! t₇₈ around the loop and the dots attached to islands 1 and 2 by λ₁, λ₂.
//! The interferometer then reads out the plaquette stabilizer eigenvalue
//! Ẑ = ±1 (a joint parity of the four islands) instead of a single pair
//! parity. Two derived quantities characterize the readout, both obtained at
//! leading order in the couplings over the charging energy E_C:
//!
//! * the **loop amplitude** c — the fourth-order ring-exchange energy of the
//!   plaquette itself, giving the stabilizer term −Re(c)·Ẑ (value at the
//!   symmetric gate point);
//! * the **Ẑ-conditioned transfer** α·ξ — the amplitude with which an
//!   electron crosses from dot 1 to dot 2 through the plaquette, carrying
//!   the eigenvalue Ẑ into the interference pattern. It is nonzero only
//!   away from the symmetric gate point: the gate-offset factor
//!   [`gate_offset_factor`] vanishes when either attached island is exactly
//!   charge-symmetric.
//!
//! The split into a dimensionless conversion factor α and an energy ξ mirrors
//! how the transfer is measured: ξ is the bare two-island shortcut energy and
//! α rescales it to the plaquette geometry.
//!
//! Everything here is a closed form; the order-by-order virtual-path
//! enumeration that these expressions summarize lives in the perturbation
//! crate, whose tests verify the two against each other.

use crate::ModelError;
use linalg_core::C64;

/// Inputs for the stabilizer-plaquette effective couplings.
#[derive(Debug, Clone, PartialEq)]
pub struct StabilizerParams {
    /// Coupling of dot 1 to island 1 (real, ≥ 0).
    pub lambda1: f64,
    /// Coupling of dot 2 to island 2 (real, ≥ 0).
    pub lambda2: f64,
    /// Link amplitude between islands 1 and 2 (the link shared with the
    /// dots; must be nonzero).
    pub t12: C64,
    /// Link amplitude between islands 2 and 3.
    pub t34: C64,
    /// Link amplitude between islands 3 and 4.
    pub t56: C64,
    /// Link amplitude between islands 4 and 1.
    pub t78: C64,
    /// Gate offset Δn₁ of island 1 (|Δn| < ½).
    pub delta_n1: f64,
    /// Gate offset Δn₂ of island 2 (|Δn| < ½).
    pub delta_n2: f64,
    /// Charging energy E_C > 0, common to the four islands.
    pub charging_energy: f64,
}

/// Derived stabilizer-readout couplings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StabilizerCoupling {
    /// Dimensionless conversion factor α = −32λ₁λ₂ / (5 t₁₂* E_C).
    pub alpha: C64,
    /// Shortcut transfer energy ξ = (5|t₁₂|²/16E_C)·η(Δn₁, Δn₂).
    pub xi: C64,
    /// Plaquette ring-exchange amplitude c = (5/16E_C³)·t₁₂t₃₄t₅₆t₇₈ at the
    /// symmetric gate point.
    pub loop_amplitude: C64,
    /// Ẑ-conditioned interdot transfer α·ξ — the plaquette analog of the
    /// single-island λ̃₁₂.
    pub transfer: C64,
}

/// Gate-offset factor η(Δn₁, Δn₂) = Δn₁Δn₂ / [(1−4Δn₁²)(1−4Δn₂²)].
///
/// Encodes how the two-island shortcut switches on with gate detuning: the
/// island virtual-state energies are (1 ∓ 2Δn)E_C, and the shortcut is the
/// part of the second-order transfer odd in both offsets, which cancels
/// exactly at the symmetric point Δn = 0.
pub fn gate_offset_factor(delta_n1: f64, delta_n2: f64) -> f64 {
    (delta_n1 * delta_n2) / ((1.0 - 4.0 * delta_n1 * delta_n1) * (1.0 - 4.0 * delta_n2 * delta_n2))
}

/// Computes the stabilizer-plaquette effective couplings.
pub fn stabilizer_effective_coupling(
    params: &StabilizerParams,
) -> Result<StabilizerCoupling, ModelError> {
    validate(params)?;
    let ec = params.charging_energy;
    let eta = gate_offset_factor(params.delta_n1, params.delta_n2);
    let lambda_product = C64::new(params.lambda1 * params.lambda2, 0.0);

    let alpha = C64::new(-32.0, 0.0) * lambda_product / (C64::new(5.0 * ec, 0.0) * params.t12.conj());
    let xi = params.t12 * params.t12.conj() * C64::new(5.0 * eta / (16.0 * ec), 0.0);
    let loop_amplitude = params.t12 * params.t34 * params.t56 * params.t78
        * C64::new(5.0 / (16.0 * ec * ec * ec), 0.0);
    let transfer = alpha * xi;

    Ok(StabilizerCoupling {
        alpha,
        xi,
        loop_amplitude,
        transfer,
    })
}

fn validate(params: &StabilizerParams) -> Result<(), ModelError> {
    for (name, value) in [
        ("lambda1", params.lambda1),
        ("lambda2", params.lambda2),
        ("delta_n1", params.delta_n1),
        ("delta_n2", params.delta_n2),
        ("charging_energy", params.charging_energy),
    ] {
        if !value.is_finite() {
            return Err(ModelError::NonFinite { name });
        }
    }
    for (name, value) in [
        ("t12", params.t12),
        ("t34", params.t34),
        ("t56", params.t56),
        ("t78", params.t78),
    ] {
        if !value.re.is_finite() || !value.im.is_finite() {
            return Err(ModelError::NonFinite { name });
        }
    }
    if params.charging_energy <= 0.0 {
        return Err(ModelError::NonPositiveChargingEnergy {
            value: params.charging_energy,
        });
    }
    for (name, value) in [("lambda1", params.lambda1), ("lambda2", params.lambda2)] {
        if value < 0.0 {
            return Err(ModelError::NegativeAmplitude { name, value });
        }
    }
    for value in [params.delta_n1, params.delta_n2] {
        if value.abs() >= 0.5 {
            return Err(ModelError::GateOffsetTooLarge { value });
        }
    }
    if params.t12.norm() == 0.0 {
        return Err(ModelError::ZeroLinkAmplitude { name: "t12" });
    }
    Ok(())
}
