//! Characteristic rate combinations shared by the closed forms.

use model::ModelParams;

/// The derived quantities that appear throughout the steady-state formulas.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedRates {
    /// Detuning δ = ε₁ − ε₂.
    pub delta: f64,
    /// Total linewidth Γ̃ = Γ₁ + Γ₂ + γ.
    pub gamma_tilde: f64,
    /// K = Γ̃² + 4δ².
    pub k_factor: f64,
    /// B = 4|Ω|²(Γ₁ + Γ₂) + Γ₁Γ₂Γ̃.
    pub b_factor: f64,
}

impl DerivedRates {
    /// Evaluate the combinations for a parameter set.
    pub fn from_params(params: &ModelParams) -> Self {
        let delta = params.detuning();
        let gamma_tilde = params.gamma1 + params.gamma2 + params.dephasing;
        let k_factor = gamma_tilde * gamma_tilde + 4.0 * delta * delta;
        let omega_sq = params.omega().norm_sqr();
        let b_factor = 4.0 * omega_sq * (params.gamma1 + params.gamma2)
            + params.gamma1 * params.gamma2 * gamma_tilde;
        DerivedRates {
            delta,
            gamma_tilde,
            k_factor,
            b_factor,
        }
    }
}
