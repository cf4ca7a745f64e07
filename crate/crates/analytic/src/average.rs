//! Current averaged over a uniform window of the first dot level.
//!
//! Models slow charge noise on the interferometer: the level ε₁ is drawn
//! uniformly from [ε₁ − Δ, ε₁ + Δ] and the dephasing-free steady current is
//! averaged over the window. The integral has a closed two-arctan form;
//! an adaptive-quadrature twin is provided as its independent oracle.

use crate::current::{current_closed_form, zero_dephasing_current};
use crate::quadrature::adaptive_simpson;
use crate::AnalyticError;
use model::ModelParams;

fn validate_window(params: &ModelParams, half_width: f64) -> Result<(), AnalyticError> {
    if !half_width.is_finite() {
        return Err(AnalyticError::NonFiniteInput {
            context: "averaging half-width",
        });
    }
    if half_width < 0.0 {
        return Err(AnalyticError::NegativeAveragingWindow { value: half_width });
    }
    if half_width > 0.0 && params.dephasing != 0.0 {
        return Err(AnalyticError::AveragingRequiresZeroDephasing {
            dephasing: params.dephasing,
        });
    }
    Ok(())
}

/// Window-averaged current in closed form:
///
/// ```text
///     Ī = Γ₁Γ₂|Ω|² / (Δ √(Γ₁Γ₂ M)) ·
///         { arctan[ 2√(Γ₁Γ₂/M) (δ+Δ) / (Γ₁+Γ₂) ]
///         − arctan[ 2√(Γ₁Γ₂/M) (δ−Δ) / (Γ₁+Γ₂) ] } ,
///     M = 4|Ω|² + Γ₁Γ₂ ,
/// ```
///
/// the exact average of the dephasing-free current over
/// ε₁′ ∈ [ε₁ − Δ, ε₁ + Δ]. A zero half-width defers to
/// [`current_closed_form`]; the form applies only at zero dephasing, and a
/// negative or non-finite half-width is rejected.
pub fn averaged_current(params: &ModelParams, half_width: f64) -> Result<f64, AnalyticError> {
    validate_window(params, half_width)?;
    if half_width == 0.0 {
        return Ok(current_closed_form(params));
    }

    let g1 = params.gamma1;
    let g2 = params.gamma2;
    let omega_sq = params.omega().norm_sqr();
    let m = 4.0 * omega_sq + g1 * g2;
    let numerator = g1 * g2 * omega_sq;
    if numerator == 0.0 {
        return Ok(0.0);
    }
    let delta = params.detuning();
    let slope = 2.0 * (g1 * g2 / m).sqrt() / (g1 + g2);
    let spread = (slope * (delta + half_width)).atan() - (slope * (delta - half_width)).atan();
    Ok(numerator / (half_width * (g1 * g2 * m).sqrt()) * spread)
}

/// Numerical-integration oracle for [`averaged_current`]: the same window
/// average evaluated by adaptive Simpson quadrature of the dephasing-free
/// current over the first dot level.
///
/// `abs_tol` is the absolute tolerance requested on the averaged current
/// itself (the integrator runs at `abs_tol × 2Δ` on the raw integral); the
/// workspace default of 1e-10 is sensible, and comparisons at tight relative
/// levels should pass a correspondingly tighter value.
pub fn averaged_current_quadrature(
    params: &ModelParams,
    half_width: f64,
    abs_tol: f64,
) -> Result<f64, AnalyticError> {
    validate_window(params, half_width)?;
    if !abs_tol.is_finite() || abs_tol <= 0.0 {
        return Err(AnalyticError::NonFiniteInput {
            context: "quadrature tolerance",
        });
    }
    if half_width == 0.0 {
        return Ok(current_closed_form(params));
    }

    let center = params.epsilon1;
    let integrand = move |level: f64| {
        let shifted = ModelParams {
            epsilon1: level,
            ..*params
        };
        zero_dephasing_current(&shifted)
    };
    let integral = adaptive_simpson(
        &integrand,
        center - half_width,
        center + half_width,
        abs_tol * 2.0 * half_width,
    );
    Ok(integral / (2.0 * half_width))
}
