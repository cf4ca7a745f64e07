//! The four transfer-sequence enumerations: the single-island second-order
//! process, the two-island third-order shortcut, the four-island
//! ring-exchange loop, and the four-island fifth-order transfer loop.

use crate::config::IslandChargeConfig;
use crate::ops::{NormalOrderedProduct, SegmentOp};
use crate::sequence::{
    sequence_from_application_order, signed_denominator_sum, EnergyFactor, EnergyTerm,
    TransferSequence,
};
use crate::PerturbationError;
use itertools::Itertools;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

/// Bridge tunneling amplitudes t₁₂, t₃₄, t₅₆, t₇₈ between neighboring
/// islands. The forward bridge segment `Amn` carries −t_mn/2; the reversed
/// segment carries −t_mn*/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BridgeAmplitudes {
    /// Island 2 → island 1 bridge amplitude.
    pub t12: Complex64,
    /// Island 3 → island 2 bridge amplitude.
    pub t34: Complex64,
    /// Island 4 → island 3 bridge amplitude.
    pub t56: Complex64,
    /// Island 1 → island 4 bridge amplitude.
    pub t78: Complex64,
}

impl BridgeAmplitudes {
    /// All four bridges share one amplitude.
    pub fn uniform(t: Complex64) -> Self {
        Self {
            t12: t,
            t34: t,
            t56: t,
            t78: t,
        }
    }

    fn validate(&self) -> Result<(), PerturbationError> {
        for (name, value) in [
            ("t12", self.t12),
            ("t34", self.t34),
            ("t56", self.t56),
            ("t78", self.t78),
        ] {
            if !value.re.is_finite() || !value.im.is_finite() {
                return Err(PerturbationError::InvalidCoupling { name });
            }
        }
        Ok(())
    }
}

/// Result of the single-island second-order enumeration.
#[derive(Debug, Clone)]
pub struct QubitEnumeration {
    /// The two sequences, conventional listing order.
    pub sequences: Vec<TransferSequence>,
    /// Absolute sign and canonical generator word shared by both rows.
    pub canonical: NormalOrderedProduct,
    /// Exact signed denominator sum, 2/E_C.
    pub denominator_sum: BigRational,
    /// Coefficient of ẑd₂†d₁ contributed by one sequence, λ₁λ₂/E_C.
    pub per_sequence_amplitude: Complex64,
    /// Total coefficient of ẑd₂†d₁, 2λ₁λ₂/E_C.
    pub amplitude: Complex64,
}

/// Result of the two-island third-order shortcut enumeration.
#[derive(Debug, Clone)]
pub struct ShortcutEnumeration {
    /// The six sequences, conventional listing order.
    pub sequences: Vec<TransferSequence>,
    /// Absolute sign and canonical generator word of the first row.
    pub canonical: NormalOrderedProduct,
    /// Exact signed denominator sum,
    /// (E₁⁺ − E₁⁻)(E₂⁺ − E₂⁻)/(E₁⁺E₁⁻E₂⁺E₂⁻) = (16/E_C²)η.
    pub denominator_sum: BigRational,
}

/// Result of the four-island fourth-order ring-exchange enumeration.
#[derive(Debug, Clone)]
pub struct CodeLoopEnumeration {
    /// The 24 sequences, lexicographic listing order.
    pub sequences: Vec<TransferSequence>,
    /// Absolute sign and canonical generator word shared by all rows
    /// (+γ₁γ₂γ₃γ₄γ₅γ₆γ₇γ₈ = +Ẑ).
    pub canonical: NormalOrderedProduct,
    /// Exact signed denominator sum; 5/(2E_C³) at the symmetric gate point.
    pub denominator_sum: BigRational,
    /// Ring-exchange coefficient c in the loop energy −Re(c)·Ẑ:
    /// c = −2 × (one-direction summed amplitude), the factor two adding the
    /// Hermitian-conjugate (reverse-orientation) sequences. Uniform real
    /// bridges t at the symmetric point give c = 5t⁴/(16E_C³).
    pub ring_exchange: Complex64,
}

/// Result of the four-island fifth-order transfer-loop enumeration.
#[derive(Debug, Clone)]
pub struct StabilizerEnumeration {
    /// The 120 sequences, lexicographic listing order.
    pub sequences: Vec<TransferSequence>,
    /// Absolute sign and canonical generator word shared by all rows
    /// (−γ₁…γ₈d₁†d₂ = −Ẑd₁†d₂).
    pub canonical: NormalOrderedProduct,
    /// Exact signed denominator sum, (16/E_C⁴)∏ⱼ(1 − 4Δn_j²)⁻¹.
    pub denominator_sum: BigRational,
}

impl StabilizerEnumeration {
    /// Summed mechanical coefficient of Ẑd₁†d₂:
    /// 2λ₁λ₂(t₃₄t₅₆t₇₈)*/E_C⁴ · ∏ⱼ(1 − 4Δn_j²)⁻¹.
    pub fn mechanical_coupling(
        &self,
        lambda1: f64,
        lambda2: f64,
        bridges: &BridgeAmplitudes,
    ) -> Result<Complex64, PerturbationError> {
        validate_dot_coupling("lambda1", lambda1)?;
        validate_dot_coupling("lambda2", lambda2)?;
        bridges.validate()?;
        let first = &self.sequences[0];
        let amplitude_product = segment_amplitude_product(&first.ops, lambda1, lambda2, bridges);
        Ok(summed_amplitude(
            &self.canonical,
            amplitude_product,
            first.ops.len(),
            &self.denominator_sum,
        ))
    }
}

/// Sign (−1)^(k−1) carried by the k−1 free propagators of a k-segment
/// sequence.
fn propagator_sign(segment_count: usize) -> f64 {
    if (segment_count - 1).is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Coupling amplitude attached to one segment operator.
fn segment_amplitude(
    op: SegmentOp,
    lambda1: f64,
    lambda2: f64,
    bridges: &BridgeAmplitudes,
) -> Complex64 {
    match op {
        SegmentOp::M1 | SegmentOp::L1 => Complex64::new(lambda1, 0.0),
        SegmentOp::M2Dagger => Complex64::new(0.0, -lambda2),
        SegmentOp::L2Dagger => Complex64::new(lambda2, 0.0),
        SegmentOp::A12 => -bridges.t12 / 2.0,
        SegmentOp::A34 => -bridges.t34 / 2.0,
        SegmentOp::A43 => -bridges.t34.conj() / 2.0,
        SegmentOp::A56 => -bridges.t56 / 2.0,
        SegmentOp::A65 => -bridges.t56.conj() / 2.0,
        SegmentOp::A78 => -bridges.t78 / 2.0,
        SegmentOp::A87 => -bridges.t78.conj() / 2.0,
    }
}

/// Product of the segment amplitudes of one sequence (order-independent).
fn segment_amplitude_product(
    ops: &[SegmentOp],
    lambda1: f64,
    lambda2: f64,
    bridges: &BridgeAmplitudes,
) -> Complex64 {
    ops.iter().fold(Complex64::new(1.0, 0.0), |acc, &op| {
        acc * segment_amplitude(op, lambda1, lambda2, bridges)
    })
}

/// Combines canonical sign, amplitude product, propagator signs, and the
/// signed denominator sum into the summed coefficient of the canonical
/// operator word.
fn summed_amplitude(
    canonical: &NormalOrderedProduct,
    amplitude_product: Complex64,
    segment_count: usize,
    denominator_sum: &BigRational,
) -> Complex64 {
    let sum = denominator_sum.to_f64().unwrap_or(f64::NAN);
    amplitude_product * f64::from(canonical.sign) * propagator_sign(segment_count) * sum
}

/// Generates every ordering of `ranked` (given in ascending listing rank) in
/// lexicographic order over application-order segment lists, builds each
/// sequence, and rebases the per-row signs onto the first row.
fn enumerate_orderings(ranked: &[SegmentOp]) -> (Vec<TransferSequence>, NormalOrderedProduct) {
    let mut sequences: Vec<TransferSequence> = ranked
        .iter()
        .copied()
        .permutations(ranked.len())
        .map(|application_order| sequence_from_application_order(&application_order))
        .collect();
    let canonical = sequences[0].normal_ordered();
    for sequence in &mut sequences {
        debug_assert_eq!(
            sequence.normal_ordered().word,
            canonical.word,
            "all orderings of one segment set must reduce to one canonical word"
        );
        sequence.sign *= canonical.sign;
    }
    (sequences, canonical)
}

fn validate_dot_coupling(name: &'static str, value: f64) -> Result<(), PerturbationError> {
    if !value.is_finite() {
        return Err(PerturbationError::InvalidCoupling { name });
    }
    Ok(())
}

/// Enumerates the two second-order sequences transferring one charge across
/// the single island hosting ẑ = iγ₂γ₁.
///
/// Both orderings excite the island once; at its symmetric gate point each
/// virtual state costs the bare E_C, so the rows print `[EC]^-1` and sum to
/// 2/E_C. The summed operator is (λ₁λ₂·2/E_C)·ẑd₂†d₁; its Hermitian
/// conjugate (transferring the charge back) is not enumerated separately.
pub fn enumerate_qubit_2nd_order(
    lambda1: f64,
    lambda2: f64,
    charging_energy: f64,
) -> Result<QubitEnumeration, PerturbationError> {
    validate_dot_coupling("lambda1", lambda1)?;
    validate_dot_coupling("lambda2", lambda2)?;
    let config = IslandChargeConfig::symmetric(1, charging_energy)?;
    let ranked = [SegmentOp::M1, SegmentOp::M2Dagger];
    let (mut sequences, canonical) = enumerate_orderings(&ranked);
    // The single island sits at its symmetric gate point, where
    // E₁⁺ = E₁⁻ = E_C: print the bare charging energy.
    for sequence in &mut sequences {
        sequence.denominator = vec![EnergyFactor {
            terms: vec![EnergyTerm::ChargingUnit],
        }];
    }
    let denominator_sum = signed_denominator_sum(&sequences, &config);
    let bridges = BridgeAmplitudes::uniform(Complex64::new(0.0, 0.0));
    let amplitude_product =
        segment_amplitude_product(&sequences[0].ops, lambda1, lambda2, &bridges);
    // Canonical word γ₁γ₂d₁d₂† = −i·ẑd₂†d₁ for ẑ = iγ₂γ₁: converting the
    // coefficient onto ẑd₂†d₁ multiplies it by −i.
    let conversion = Complex64::new(0.0, -1.0);
    let per_sequence_weight = sequences[0]
        .signed_weight(&config)
        .to_f64()
        .unwrap_or(f64::NAN);
    let base = summed_amplitude(
        &canonical,
        amplitude_product,
        sequences[0].ops.len(),
        &denominator_sum,
    );
    let per_sequence_amplitude = conversion
        * amplitude_product
        * f64::from(canonical.sign)
        * propagator_sign(sequences[0].ops.len())
        * per_sequence_weight;
    Ok(QubitEnumeration {
        sequences,
        canonical,
        denominator_sum,
        per_sequence_amplitude,
        amplitude: conversion * base,
    })
}

/// Display order of the six shortcut rows relative to lexicographic
/// generation order, matching the conventional listing.
const SHORTCUT_DISPLAY_FROM_LEX: [usize; 6] = [0, 1, 5, 4, 2, 3];

/// Enumerates the six third-order sequences transferring one charge across
/// two bridged islands (the stabilizer-shortcut process).
///
/// Rows are listed in the conventional display order; their signs are
/// relative to the first row. The exact signed denominator sum equals
/// [`crate::shortcut_closed_form`], which vanishes at symmetric gating.
pub fn enumerate_shortcut(
    config: &IslandChargeConfig,
) -> Result<ShortcutEnumeration, PerturbationError> {
    config.require_islands(2)?;
    let ranked = [SegmentOp::L2Dagger, SegmentOp::A12, SegmentOp::L1];
    let (lex, canonical) = enumerate_orderings(&ranked);
    let sequences: Vec<TransferSequence> = SHORTCUT_DISPLAY_FROM_LEX
        .iter()
        .map(|&index| lex[index].clone())
        .collect();
    let denominator_sum = signed_denominator_sum(&sequences, config);
    Ok(ShortcutEnumeration {
        sequences,
        canonical,
        denominator_sum,
    })
}

/// Enumerates the 24 fourth-order ring-exchange sequences circulating one
/// charge around the four-island loop.
///
/// Every ordering reduces to +Ẑ = +γ₁γ₂γ₃γ₄γ₅γ₆γ₇γ₈, so the table rows all
/// carry sign +1. The ring-exchange coefficient sums both loop
/// orientations; see [`CodeLoopEnumeration::ring_exchange`].
pub fn enumerate_code_loop(
    config: &IslandChargeConfig,
    bridges: &BridgeAmplitudes,
) -> Result<CodeLoopEnumeration, PerturbationError> {
    config.require_islands(4)?;
    bridges.validate()?;
    let ranked = [
        SegmentOp::A78,
        SegmentOp::A56,
        SegmentOp::A34,
        SegmentOp::A12,
    ];
    let (sequences, canonical) = enumerate_orderings(&ranked);
    let denominator_sum = signed_denominator_sum(&sequences, config);
    let amplitude_product = segment_amplitude_product(&sequences[0].ops, 0.0, 0.0, bridges);
    let one_direction = summed_amplitude(
        &canonical,
        amplitude_product,
        sequences[0].ops.len(),
        &denominator_sum,
    );
    Ok(CodeLoopEnumeration {
        sequences,
        canonical,
        denominator_sum,
        ring_exchange: -2.0 * one_direction,
    })
}

/// Enumerates the 120 fifth-order sequences transferring one charge from
/// dot 2 to dot 1 around the four-island loop (the stabilizer-readout
/// process).
///
/// Every ordering reduces to −Ẑd₁†d₂, so the table rows all carry sign +1
/// relative to the first row. The summed coefficient of Ẑd₁†d₂ is produced
/// by [`StabilizerEnumeration::mechanical_coupling`].
pub fn enumerate_stabilizer_loop(
    config: &IslandChargeConfig,
) -> Result<StabilizerEnumeration, PerturbationError> {
    config.require_islands(4)?;
    let ranked = [
        SegmentOp::L2Dagger,
        SegmentOp::A43,
        SegmentOp::A65,
        SegmentOp::A87,
        SegmentOp::L1,
    ];
    let (sequences, canonical) = enumerate_orderings(&ranked);
    let denominator_sum = signed_denominator_sum(&sequences, config);
    Ok(StabilizerEnumeration {
        sequences,
        canonical,
        denominator_sum,
    })
}
