//! Island gate-offset configurations in exact rational arithmetic, and the
//! closed-form denominator sums the enumerations are checked against.

use crate::sequence::{ChargeSign, EnergyTerm};
use crate::PerturbationError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Gate-offset configuration of a chain of charging islands.
///
/// Island j (1-based) sits Δn_j away from its symmetric gate point; adding a
/// charge costs E_j⁺ = (1 − 2Δn_j)E_C and removing one costs
/// E_j⁻ = (1 + 2Δn_j)E_C. All quantities are held as exact rationals —
/// `f64` inputs are converted to the rational they exactly represent — so
/// denominator sums and closed forms can be compared without floating-point
/// slack.
#[derive(Debug, Clone, PartialEq)]
pub struct IslandChargeConfig {
    offsets: Vec<BigRational>,
    charging_energy: BigRational,
}

impl IslandChargeConfig {
    /// Builds a configuration from floating-point offsets and charging
    /// energy, converting each to its exact rational value.
    pub fn new(offsets: &[f64], charging_energy: f64) -> Result<Self, PerturbationError> {
        let rational_offsets = offsets
            .iter()
            .enumerate()
            .map(|(index, &value)| {
                BigRational::from_float(value).ok_or(PerturbationError::InvalidGateOffset {
                    island: index + 1,
                    value,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let rational_energy = BigRational::from_float(charging_energy).ok_or(
            PerturbationError::InvalidChargingEnergy {
                value: charging_energy,
            },
        )?;
        Self::from_rationals(rational_offsets, rational_energy)
    }

    /// Builds a configuration from exact rational offsets and charging
    /// energy.
    pub fn from_rationals(
        offsets: Vec<BigRational>,
        charging_energy: BigRational,
    ) -> Result<Self, PerturbationError> {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        for (index, offset) in offsets.iter().enumerate() {
            if offset.abs() >= half {
                return Err(PerturbationError::InvalidGateOffset {
                    island: index + 1,
                    value: rational_to_f64(offset),
                });
            }
        }
        if charging_energy <= BigRational::zero() {
            return Err(PerturbationError::InvalidChargingEnergy {
                value: rational_to_f64(&charging_energy),
            });
        }
        Ok(Self {
            offsets,
            charging_energy,
        })
    }

    /// Configuration with every island at its symmetric gate point.
    pub fn symmetric(islands: usize, charging_energy: f64) -> Result<Self, PerturbationError> {
        Self::new(&vec![0.0; islands], charging_energy)
    }

    /// Number of islands described.
    pub fn island_count(&self) -> usize {
        self.offsets.len()
    }

    /// Exact gate offsets, indexed from island 1 at position 0.
    pub fn offsets(&self) -> &[BigRational] {
        &self.offsets
    }

    /// Exact charging energy E_C.
    pub fn charging_energy(&self) -> &BigRational {
        &self.charging_energy
    }

    /// Excitation energy E_j^± = (1 ∓ 2Δn_j)E_C of island `island`
    /// (1-based) holding one extra (`Excess`) or one missing (`Deficit`)
    /// charge.
    ///
    /// # Panics
    ///
    /// If `island` exceeds the configured island count.
    pub fn excitation_energy(&self, island: u8, sign: ChargeSign) -> BigRational {
        let offset = &self.offsets[usize::from(island) - 1];
        let two = BigRational::from_integer(BigInt::from(2));
        let unit = match sign {
            ChargeSign::Excess => BigRational::one() - two * offset,
            ChargeSign::Deficit => BigRational::one() + two * offset,
        };
        unit * &self.charging_energy
    }

    /// Value of one energy symbol under this configuration.
    pub fn term_value(&self, term: &EnergyTerm) -> BigRational {
        match term {
            EnergyTerm::ChargingUnit => self.charging_energy.clone(),
            EnergyTerm::Excitation { island, sign } => self.excitation_energy(*island, *sign),
        }
    }

    pub(crate) fn require_islands(&self, expected: usize) -> Result<(), PerturbationError> {
        if self.island_count() != expected {
            return Err(PerturbationError::WrongIslandCount {
                expected,
                actual: self.island_count(),
            });
        }
        Ok(())
    }
}

/// Best-effort `f64` image of a rational, for error messages only.
fn rational_to_f64(value: &BigRational) -> f64 {
    num_traits::ToPrimitive::to_f64(value).unwrap_or(f64::NAN)
}

/// Gate-asymmetry factor η = Δn₁Δn₂ / [(1 − 4Δn₁²)(1 − 4Δn₂²)] of the first
/// two islands, exactly.
///
/// Vanishes whenever either offset is zero; the denominator is positive for
/// any valid configuration.
pub fn gate_offset_factor_rational(
    config: &IslandChargeConfig,
) -> Result<BigRational, PerturbationError> {
    config.require_islands(2)?;
    let four = BigRational::from_integer(BigInt::from(4));
    let numerator = &config.offsets()[0] * &config.offsets()[1];
    let denominator = (BigRational::one() - &four * &config.offsets()[0] * &config.offsets()[0])
        * (BigRational::one() - &four * &config.offsets()[1] * &config.offsets()[1]);
    Ok(numerator / denominator)
}

/// Closed form for the signed denominator sum of the six third-order
/// shortcut sequences:
/// (E₁⁺ − E₁⁻)(E₂⁺ − E₂⁻) / (E₁⁺E₁⁻E₂⁺E₂⁻).
///
/// Substituting E_j^± = (1 ∓ 2Δn_j)E_C reduces it to (16/E_C²)·η with η from
/// [`gate_offset_factor_rational`]; both identities are exercised in tests
/// against the mechanical enumeration.
pub fn shortcut_closed_form(
    config: &IslandChargeConfig,
) -> Result<BigRational, PerturbationError> {
    config.require_islands(2)?;
    let e1_plus = config.excitation_energy(1, ChargeSign::Excess);
    let e1_minus = config.excitation_energy(1, ChargeSign::Deficit);
    let e2_plus = config.excitation_energy(2, ChargeSign::Excess);
    let e2_minus = config.excitation_energy(2, ChargeSign::Deficit);
    let numerator = (&e1_plus - &e1_minus) * (&e2_plus - &e2_minus);
    let denominator = e1_plus * e1_minus * e2_plus * e2_minus;
    Ok(numerator / denominator)
}

/// Closed form for the denominator sum of the 120 fifth-order loop
/// sequences: (16/E_C⁴) ∏_{j=1..4} (1 − 4Δn_j²)⁻¹.
pub fn stabilizer_denominator_closed_form(
    config: &IslandChargeConfig,
) -> Result<BigRational, PerturbationError> {
    config.require_islands(4)?;
    let four = BigRational::from_integer(BigInt::from(4));
    let ec = config.charging_energy();
    let mut value = BigRational::from_integer(BigInt::from(16)) / (ec * ec * ec * ec);
    for offset in config.offsets() {
        value /= BigRational::one() - &four * offset * offset;
    }
    Ok(value)
}
