//! Closed forms for the steady transport current and its behavior in the
//! dephasing rate.

use crate::rates::DerivedRates;
use crate::AnalyticError;
use model::ModelParams;

/// Steady transport current with dephasing:
///
/// ```text
///     I = 4|Ω|² Γ₁ Γ₂ Γ̃ / (B Γ̃ + 4 Γ₁ Γ₂ δ²) ,
///     Γ̃ = Γ₁ + Γ₂ + γ ,   B = 4|Ω|²(Γ₁+Γ₂) + Γ₁Γ₂Γ̃ .
/// ```
///
/// At γ = 0 this reduces algebraically to the dephasing-free form
/// ([`zero_dephasing_current`]). The current vanishes when Ω = 0 (no path
/// through the interferometer) and when the rate combinations degenerate to
/// zero; in the latter case 0 is returned rather than 0/0.
pub fn current_closed_form(params: &ModelParams) -> f64 {
    let rates = DerivedRates::from_params(params);
    let omega_sq = params.omega().norm_sqr();
    let g1 = params.gamma1;
    let g2 = params.gamma2;
    let numerator = 4.0 * omega_sq * g1 * g2 * rates.gamma_tilde;
    let denominator = rates.b_factor * rates.gamma_tilde + 4.0 * g1 * g2 * rates.delta * rates.delta;
    if numerator == 0.0 {
        return 0.0;
    }
    numerator / denominator
}

/// Steady transport current without dephasing, implemented verbatim in its
/// own algebraic arrangement:
///
/// ```text
///     I = 4 Γ₁ Γ₂ (Γ₁+Γ₂) |Ω|² / [ (4|Ω|² + Γ₁Γ₂)(Γ₁+Γ₂)² + 4 Γ₁ Γ₂ δ² ] .
/// ```
///
/// For symmetric rates Γ₁ = Γ₂ = Γ this simplifies to
/// 2Γ|Ω|²/(4|Ω|² + Γ² + δ²). The dephasing rate in `params` is ignored.
pub fn zero_dephasing_current(params: &ModelParams) -> f64 {
    let omega_sq = params.omega().norm_sqr();
    let g1 = params.gamma1;
    let g2 = params.gamma2;
    let gsum = g1 + g2;
    let delta = params.detuning();
    let numerator = 4.0 * g1 * g2 * gsum * omega_sq;
    let denominator = (4.0 * omega_sq + g1 * g2) * gsum * gsum + 4.0 * g1 * g2 * delta * delta;
    if numerator == 0.0 {
        return 0.0;
    }
    numerator / denominator
}

/// Exact derivative of the steady current with respect to the dephasing
/// rate:
///
/// ```text
///     dI/dγ = 4|Ω|² Γ₁² Γ₂² (4δ² − Γ̃²) / (B Γ̃ + 4 Γ₁ Γ₂ δ²)² .
/// ```
///
/// The sign of 4δ² − Γ̃² controls whether dephasing helps or hinders
/// transport: for 2|δ| > Γ̃ the current still grows with γ, and the interior
/// maximum sits where Γ̃ = 2|δ|.
pub fn current_dephasing_derivative(params: &ModelParams) -> f64 {
    let rates = DerivedRates::from_params(params);
    let omega_sq = params.omega().norm_sqr();
    let g1 = params.gamma1;
    let g2 = params.gamma2;
    let numerator = 4.0
        * omega_sq
        * g1
        * g1
        * g2
        * g2
        * (4.0 * rates.delta * rates.delta - rates.gamma_tilde * rates.gamma_tilde);
    let root = rates.b_factor * rates.gamma_tilde + 4.0 * g1 * g2 * rates.delta * rates.delta;
    if numerator == 0.0 {
        return 0.0;
    }
    numerator / (root * root)
}

/// Location of the interior maximum of the current in the dephasing rate,
/// for symmetric lead couplings Γ₁ = Γ₂ = Γ:
///
/// ```text
///     γ* = 2(|δ| − Γ) .
/// ```
///
/// Only a positive γ* is an interior maximum; at γ* ≤ 0 the current is
/// monotone non-increasing on γ ≥ 0 and
/// [`AnalyticError::NoInteriorMaximum`] is returned carrying the formula
/// value. Asymmetric rates are rejected — the quoted expression assumes
/// Γ₁ = Γ₂.
pub fn gamma_star(params: &ModelParams) -> Result<f64, AnalyticError> {
    if params.gamma1 != params.gamma2 {
        return Err(AnalyticError::RequiresSymmetricRates {
            gamma1: params.gamma1,
            gamma2: params.gamma2,
        });
    }
    let value = 2.0 * (params.detuning().abs() - params.gamma1);
    if value <= 0.0 {
        return Err(AnalyticError::NoInteriorMaximum { value });
    }
    Ok(value)
}

/// The nonzero dephasing rate at which the current returns to its γ = 0
/// value:
///
/// ```text
///     γ₀ = [4δ² − (Γ₁+Γ₂)²] / (Γ₁ + Γ₂) .
/// ```
///
/// Meaningful (an actual crossing) only when positive, i.e. for
/// 2|δ| > Γ₁ + Γ₂; otherwise the formula value is zero or negative and the
/// current never recrosses I(γ=0).
pub fn gamma_zero(params: &ModelParams) -> f64 {
    let gsum = params.gamma1 + params.gamma2;
    let delta = params.detuning();
    (4.0 * delta * delta - gsum * gsum) / gsum
}
