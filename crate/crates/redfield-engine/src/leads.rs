//! Lead descriptions and occupation functions.

use crate::EngineError;

/// Occupation profile of a lead as a function of transition frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LeadOccupation {
    /// f ≡ 1 at every frequency: a source lead in the deep-bias limit.
    ///
    /// The frequency weighting degenerates to a constant, so the dissipator
    /// is built exactly in the site basis and equals Γ 𝒟[d†].
    Filled,
    /// f ≡ 0 at every frequency: a drain lead in the deep-bias limit.
    ///
    /// As with [`LeadOccupation::Filled`], the dissipator is exact and equals
    /// Γ 𝒟[d].
    Empty,
    /// A thermal lead with Fermi occupation
    /// f(ω) = 1 / (exp[(ω − μ)/T] + 1).
    ///
    /// At `temperature = 0` this is the sharp step: 1 below the chemical
    /// potential, 0 above it, and ½ exactly at it.
    Thermal {
        /// Lead temperature T ≥ 0 (energy units, k_B = 1).
        temperature: f64,
        /// Chemical potential μ.
        chemical_potential: f64,
    },
}

impl LeadOccupation {
    /// The occupation f(ω) at transition frequency ω.
    pub fn occupation(&self, omega: f64) -> f64 {
        match *self {
            LeadOccupation::Filled => 1.0,
            LeadOccupation::Empty => 0.0,
            LeadOccupation::Thermal {
                temperature,
                chemical_potential,
            } => fermi_occupation(omega, chemical_potential, temperature),
        }
    }

    /// Whether f is the same at every frequency, so no eigenbasis weighting
    /// is needed and the dissipator is exact in the site basis.
    pub fn is_flat(&self) -> bool {
        matches!(self, LeadOccupation::Filled | LeadOccupation::Empty)
    }

    /// Validate the numbers inside the description.
    pub fn validate(&self) -> Result<(), EngineError> {
        if let LeadOccupation::Thermal {
            temperature,
            chemical_potential,
        } = *self
        {
            if !temperature.is_finite() || temperature < 0.0 {
                return Err(EngineError::InvalidTemperature { value: temperature });
            }
            if !chemical_potential.is_finite() {
                return Err(EngineError::InvalidChemicalPotential {
                    value: chemical_potential,
                });
            }
        }
        Ok(())
    }
}

/// One lead: a coupling rate and an occupation profile.
///
/// The coupling operator d_j is supplied separately when the generator is
/// assembled, so one `LeadSpec` can be reused across models.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LeadSpec {
    /// Tunneling rate Γ ≥ 0.
    pub rate: f64,
    /// Occupation profile.
    pub occupation: LeadOccupation,
}

impl LeadSpec {
    /// Deep-bias source lead: f ≡ 1.
    pub fn source(rate: f64) -> Self {
        LeadSpec {
            rate,
            occupation: LeadOccupation::Filled,
        }
    }

    /// Deep-bias drain lead: f ≡ 0.
    pub fn drain(rate: f64) -> Self {
        LeadSpec {
            rate,
            occupation: LeadOccupation::Empty,
        }
    }

    /// Thermal lead at the given temperature and chemical potential.
    pub fn thermal(rate: f64, temperature: f64, chemical_potential: f64) -> Self {
        LeadSpec {
            rate,
            occupation: LeadOccupation::Thermal {
                temperature,
                chemical_potential,
            },
        }
    }

    /// Validate rate and occupation parameters.
    pub fn validate(&self) -> Result<(), EngineError> {
        if !self.rate.is_finite() || self.rate < 0.0 {
            return Err(EngineError::InvalidRate {
                name: "lead rate",
                value: self.rate,
            });
        }
        self.occupation.validate()
    }
}

/// Fermi occupation f(ω) = 1 / (exp[(ω − μ)/T] + 1), handled so that extreme
/// arguments neither overflow nor lose the saturation values.
///
/// At T = 0 the function is the sharp step with the half-filled midpoint:
/// f = 1 for ω < μ, f = 0 for ω > μ, and f = ½ at ω = μ.
pub fn fermi_occupation(omega: f64, chemical_potential: f64, temperature: f64) -> f64 {
    if temperature == 0.0 {
        return if omega < chemical_potential {
            1.0
        } else if omega > chemical_potential {
            0.0
        } else {
            0.5
        };
    }
    let x = (omega - chemical_potential) / temperature;
    // Evaluate through the decaying exponential on each side so the
    // intermediate exp() never overflows.
    if x >= 0.0 {
        let e = (-x).exp();
        e / (1.0 + e)
    } else {
        1.0 / (1.0 + x.exp())
    }
}
