//! System parameters, their defaults, and validation.

use crate::ModelError;

/// Pair-parity eigensector of the island qubit.
///
/// The Hamiltonian conserves the island's subgap pair parity, so the two
/// eigensectors evolve independently and can be simulated one at a time.
/// The eigenvalue [`Sector::sign`] multiplies the island-mediated transfer
/// amplitude; distinguishing the two signs through the transport current is
/// what "reading out the qubit" means here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Sector {
    /// z = +1.
    #[default]
    Plus,
    /// z = −1.
    Minus,
}

impl Sector {
    /// The parity eigenvalue as a float: +1.0 or −1.0.
    pub fn sign(self) -> f64 {
        match self {
            Sector::Plus => 1.0,
            Sector::Minus => -1.0,
        }
    }

    /// The opposite sector.
    pub fn flipped(self) -> Self {
        match self {
            Sector::Plus => Sector::Minus,
            Sector::Minus => Sector::Plus,
        }
    }

    /// Parses an explicit ±1 (the on-disk / CLI representation).
    pub fn try_from_sign(value: i64) -> Result<Self, ModelError> {
        match value {
            1 => Ok(Sector::Plus),
            -1 => Ok(Sector::Minus),
            other => Err(ModelError::InvalidSectorSign { value: other }),
        }
    }

    /// Both sectors, in reporting order (+1 first).
    pub fn both() -> [Sector; 2] {
        [Sector::Plus, Sector::Minus]
    }
}

impl std::fmt::Display for Sector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sector::Plus => write!(f, "+1"),
            Sector::Minus => write!(f, "-1"),
        }
    }
}

/// Full parameter set of the interferometer.
///
/// All energies share one unit; the defaults take E_C = 1 as that unit and
/// place every other scale deep in the regime where the island reduction is
/// controlled: lead rates and reference amplitude at E_C/100, dot–island
/// couplings at E_C/10.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Level energy ε₁ of dot 1 (the dot fed by the source lead).
    pub epsilon1: f64,
    /// Level energy ε₂ of dot 2 (the dot drained by the drain lead).
    pub epsilon2: f64,
    /// Tunnel rate Γ₁ between the source lead and dot 1.
    pub gamma1: f64,
    /// Tunnel rate Γ₂ between dot 2 and the drain lead.
    pub gamma2: f64,
    /// Reference-arm tunneling amplitude λ₀ ≥ 0.
    pub lambda0: f64,
    /// Reference-arm phase φ (radians); the flux knob of the interferometer.
    pub phi: f64,
    /// Coupling λ₁ ≥ 0 between dot 1 and the island.
    pub lambda1: f64,
    /// Coupling λ₂ ≥ 0 between dot 2 and the island.
    pub lambda2: f64,
    /// Island charging energy E_C > 0 (cost of a virtual charge on the
    /// island, both signs).
    pub charging_energy: f64,
    /// Which pair-parity eigensector the island qubit occupies.
    pub sector: Sector,
    /// Charge-dephasing rate γ acting on the occupation of dot 1 (models an
    /// environment that watches which arm the electron took).
    pub dephasing: f64,
}

impl Default for ModelParams {
    fn default() -> Self {
        ModelParams {
            epsilon1: 0.0,
            epsilon2: 0.0,
            gamma1: 0.01,
            gamma2: 0.01,
            lambda0: 0.01,
            phi: 0.0,
            lambda1: 0.1,
            lambda2: 0.1,
            charging_energy: 1.0,
            sector: Sector::Plus,
            dephasing: 0.0,
        }
    }
}

impl ModelParams {
    /// Interdot detuning δ = ε₁ − ε₂, the only combination of the two level
    /// energies that the current depends on.
    pub fn detuning(&self) -> f64 {
        self.epsilon1 - self.epsilon2
    }

    /// Returns a copy with ε₁ = δ, ε₂ = 0 (the canonical way sweeps set a
    /// detuning).
    pub fn with_detuning(&self, delta: f64) -> Self {
        ModelParams {
            epsilon1: delta,
            epsilon2: 0.0,
            ..*self
        }
    }

    /// Island-mediated transfer amplitude λ̃₁₂ = 2λ₁λ₂/E_C.
    pub fn lambda_tilde(&self) -> f64 {
        2.0 * self.lambda1 * self.lambda2 / self.charging_energy
    }

    /// How hard the parameters push against the perturbative reduction:
    /// max(λ₀, λ₁, λ₂, Γ₁, Γ₂, |ε₁|, |ε₂|, γ)/E_C. The reduction is a
    /// second-order expansion in this ratio; consumers warn when it exceeds
    /// [`linalg_core::tolerances::VALIDITY_RATIO_WARN`].
    pub fn validity_ratio(&self) -> f64 {
        let scale = self
            .lambda0
            .max(self.lambda1)
            .max(self.lambda2)
            .max(self.gamma1)
            .max(self.gamma2)
            .max(self.epsilon1.abs())
            .max(self.epsilon2.abs())
            .max(self.dephasing);
        scale / self.charging_energy
    }

    /// Checks signs and finiteness of every parameter.
    pub fn validate(&self) -> Result<(), ModelError> {
        let named: [(&'static str, f64); 9] = [
            ("epsilon1", self.epsilon1),
            ("epsilon2", self.epsilon2),
            ("gamma1", self.gamma1),
            ("gamma2", self.gamma2),
            ("lambda0", self.lambda0),
            ("phi", self.phi),
            ("lambda1", self.lambda1),
            ("lambda2", self.lambda2),
            ("dephasing", self.dephasing),
        ];
        for (name, value) in named {
            if !value.is_finite() {
                return Err(ModelError::NonFinite { name });
            }
        }
        if !self.charging_energy.is_finite() {
            return Err(ModelError::NonFinite {
                name: "charging_energy",
            });
        }
        if self.charging_energy <= 0.0 {
            return Err(ModelError::NonPositiveChargingEnergy {
                value: self.charging_energy,
            });
        }
        for (name, value) in [
            ("gamma1", self.gamma1),
            ("gamma2", self.gamma2),
            ("dephasing", self.dephasing),
        ] {
            if value < 0.0 {
                return Err(ModelError::NegativeRate { name, value });
            }
        }
        for (name, value) in [
            ("lambda0", self.lambda0),
            ("lambda1", self.lambda1),
            ("lambda2", self.lambda2),
        ] {
            if value < 0.0 {
                return Err(ModelError::NegativeAmplitude { name, value });
            }
        }
        Ok(())
    }
}
