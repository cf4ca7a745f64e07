//! Transfer sequences: ordered segment lists, their intermediate-state
//! energy denominators, and the string forms used by the emitted tables.

use crate::config::IslandChargeConfig;
use crate::ops::{normal_order, NormalOrderedProduct, SegmentOp};
use num_rational::BigRational;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Whether an island holds one extra or one missing charge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChargeSign {
    /// One extra charge: energy E_j⁺ = (1 − 2Δn_j)E_C.
    Excess,
    /// One missing charge: energy E_j⁻ = (1 + 2Δn_j)E_C.
    Deficit,
}

/// One symbolic summand of an intermediate-state excitation energy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnergyTerm {
    /// The bare charging energy `EC` — used by the single-island process,
    /// whose island sits at the symmetric gate point by construction.
    ChargingUnit,
    /// `Ej+` or `Ej-`: island `island` holding an extra or missing charge.
    Excitation {
        /// 1-based island index.
        island: u8,
        /// Excess or deficit charge.
        sign: ChargeSign,
    },
}

impl EnergyTerm {
    /// Canonical string form: `EC`, `E3+`, `E1-`, …
    pub fn render(&self) -> String {
        match self {
            EnergyTerm::ChargingUnit => "EC".to_string(),
            EnergyTerm::Excitation { island, sign } => {
                let suffix = match sign {
                    ChargeSign::Excess => '+',
                    ChargeSign::Deficit => '-',
                };
                format!("E{island}{suffix}")
            }
        }
    }
}

/// One intermediate-state excitation energy: the sum of its terms, kept
/// sorted by ascending island index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnergyFactor {
    /// Summands, ascending by island.
    pub terms: Vec<EnergyTerm>,
}

impl EnergyFactor {
    /// Exact value of the factor under `config`.
    pub fn value(&self, config: &IslandChargeConfig) -> BigRational {
        self.terms
            .iter()
            .map(|term| config.term_value(term))
            .sum()
    }

    /// Terms joined with `+`: `E1-+E2+`, or a single bare term.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (position, term) in self.terms.iter().enumerate() {
            if position > 0 {
                out.push('+');
            }
            out.push_str(&term.render());
        }
        out
    }
}

/// One enumerated transfer sequence: its segments in printed order, its
/// fermionic reordering sign relative to the enumeration's first row, and
/// its energy denominator factors in reverse-chronological order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferSequence {
    /// Segment operators in printed order (the rightmost acts first).
    pub ops: Vec<SegmentOp>,
    /// Reordering sign relative to the first row of the same enumeration —
    /// the sign a printed table shows.
    pub sign: i8,
    /// Denominator factors, last intermediate state first.
    pub denominator: Vec<EnergyFactor>,
}

impl TransferSequence {
    /// Concatenated segment tokens, e.g. `L1A87A65A43L2†`.
    pub fn sequence_string(&self) -> String {
        self.ops.iter().map(|op| op.token()).collect()
    }

    /// Signed symbolic denominator, e.g. `-[(E1-+E2+)E2+]^-1`.
    ///
    /// A product in which every factor is a single term (and there are at
    /// least two factors) is wrapped in parentheses; any other product is
    /// wrapped in brackets with multi-term factors parenthesized
    /// individually.
    pub fn denominator_string(&self) -> String {
        let mut out = String::new();
        if self.sign < 0 {
            out.push('-');
        }
        let all_single = self.denominator.iter().all(|factor| factor.terms.len() == 1);
        if all_single && self.denominator.len() > 1 {
            out.push('(');
            for factor in &self.denominator {
                out.push_str(&factor.render());
            }
            out.push(')');
        } else {
            out.push('[');
            for factor in &self.denominator {
                if factor.terms.len() > 1 {
                    let _ = write!(out, "({})", factor.render());
                } else {
                    out.push_str(&factor.render());
                }
            }
            out.push(']');
        }
        out.push_str("^-1");
        out
    }

    /// Exact unsigned denominator product under `config`.
    pub fn denominator_value(&self, config: &IslandChargeConfig) -> BigRational {
        self.denominator
            .iter()
            .map(|factor| factor.value(config))
            .product()
    }

    /// Exact signed weight sign/∏(factors) under `config`.
    pub fn signed_weight(&self, config: &IslandChargeConfig) -> BigRational {
        let sign = BigRational::from_integer(self.sign.into());
        sign / self.denominator_value(config)
    }

    /// Normal-orders the full printed operator word of this sequence,
    /// returning its absolute sign and canonical generator word.
    pub fn normal_ordered(&self) -> NormalOrderedProduct {
        let word: Vec<_> = self
            .ops
            .iter()
            .flat_map(|op| op.word().iter().copied())
            .collect();
        normal_order(&word)
    }
}

/// Builds the sequence whose segments are applied in the order given
/// (first-applied first), walking the island charges to collect the
/// intermediate-state energies.
///
/// The per-row `sign` is filled with the *absolute* normal-ordering sign;
/// enumerations rebase it onto their first row afterwards.
pub(crate) fn sequence_from_application_order(application_order: &[SegmentOp]) -> TransferSequence {
    let mut charges: BTreeMap<u8, i8> = BTreeMap::new();
    let mut chronological: Vec<EnergyFactor> = Vec::with_capacity(application_order.len() - 1);
    for (step, op) in application_order.iter().enumerate() {
        for &(island, delta) in op.charge_effects() {
            let charge = charges.entry(island).or_insert(0);
            *charge += delta;
            debug_assert!(
                charge.abs() <= 1,
                "island {island} driven to charge {charge}; segment sets keep |q| ≤ 1"
            );
            if *charge == 0 {
                charges.remove(&island);
            }
        }
        let is_last = step + 1 == application_order.len();
        if !is_last {
            let terms = charges
                .iter()
                .map(|(&island, &charge)| EnergyTerm::Excitation {
                    island,
                    sign: if charge > 0 {
                        ChargeSign::Excess
                    } else {
                        ChargeSign::Deficit
                    },
                })
                .collect();
            chronological.push(EnergyFactor { terms });
        }
    }
    debug_assert!(
        charges.is_empty(),
        "sequence does not return every island to its ground charge"
    );

    let ops: Vec<SegmentOp> = application_order.iter().rev().copied().collect();
    let mut sequence = TransferSequence {
        ops,
        sign: 1,
        denominator: chronological.into_iter().rev().collect(),
    };
    sequence.sign = sequence.normal_ordered().sign;
    sequence
}

/// Exact denominator sum Σ sign·∏(factors)⁻¹ over a slice of sequences.
pub(crate) fn signed_denominator_sum(
    sequences: &[TransferSequence],
    config: &IslandChargeConfig,
) -> BigRational {
    sequences
        .iter()
        .map(|sequence| sequence.signed_weight(config))
        .sum()
}
