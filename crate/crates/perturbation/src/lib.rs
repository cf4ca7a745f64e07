//! Exact enumeration of virtual tunnel-transfer sequences through
//! charging-energy-protected islands, the energy denominators they pick up,
//! and the effective couplings their sums produce.
//!
//! A charge transfer between the two dots that has to cross one or more
//! Coulomb-blockaded islands proceeds through virtual intermediate states.
//! At k-th order in the tunnel couplings there are k! orderings of the k
//! transfer segments; each ordering visits its own chain of k−1 intermediate
//! charge states and contributes the product of the inverse excitation
//! energies of those states. This crate enumerates the orderings
//! mechanically, carries every energy denominator in exact rational
//! arithmetic, tracks the fermionic reordering sign of each operator
//! product, and exposes the summed amplitudes that the closed-form couplings
//! in the `model` crate summarize.
//!
//! # Bookkeeping conventions
//!
//! * **Application order vs printed order.** Operator products act
//!   right-to-left: the rightmost printed segment is applied first. Tables
//!   and sequence strings use the printed order; the intermediate-state
//!   walker runs in application order.
//! * **Denominator layout.** A sequence of k segments has k−1 intermediate
//!   states. Factors are printed in reverse-chronological order (the last
//!   intermediate state first), matching the printed operator string read
//!   left to right. Terms inside one factor are sorted by ascending island
//!   index.
//! * **Energy symbols.** Island j holding one extra charge contributes
//!   `Ej+` with value (1 − 2Δn_j)E_C; one missing charge contributes `Ej-`
//!   with value (1 + 2Δn_j)E_C; the single-island process at the symmetric
//!   gate point prints the bare `EC`. Island charges never leave {−1, 0, +1}
//!   for the segment sets enumerated here.
//! * **Row order.** Each enumeration generates sequences in lexicographic
//!   order over application-order segment lists, with per-enumeration
//!   segment ranks chosen so the conventional listings are reproduced:
//!   the six-row shortcut table additionally applies a fixed display
//!   permutation (see [`enumerate_shortcut`]).
//! * **Signs.** Majorana operators square to one and anticommute pairwise,
//!   and every dot operator anticommutes with every other elementary
//!   generator appearing in the same product. Each sequence's printed
//!   operator word is stably sorted into canonical generator order, counting
//!   one sign flip per transposition of distinct generators
//!   ([`normal_order`]); equal Majorana pairs then contract to the identity.
//!   Within one enumeration all sequences reduce to the same canonical word;
//!   the table rows carry their sign *relative to the first row* (this is
//!   what printed tables show — for the loop enumerations all rows share one
//!   sign, so their tables show none), while the enumeration result records
//!   the absolute sign of the canonical word once.
//! * **Propagator signs.** Each intermediate state contributes a free
//!   propagator −1/X, so a k-segment sequence carries (−1)^(k−1) on top of
//!   its denominator. These signs are applied in the returned summed
//!   amplitudes, never in the printed tables.
//! * **Hermitian-conjugate doubling.** The ring-exchange coefficient of the
//!   four-island loop doubles the one-direction amplitude (the reverse
//!   orientation is its Hermitian conjugate and the loop operator is
//!   Hermitian), so the effective energy is −Re(c)·Ẑ with
//!   c = −2 × (one-direction amplitude).
//!
//! Enumeration is pure and the sequence sets are tiny (at most 120 rows), so
//! everything here is single-threaded and deterministic.

mod config;
mod enumerate;
mod ops;
mod sequence;
mod table;

pub use config::{
    gate_offset_factor_rational, shortcut_closed_form, stabilizer_denominator_closed_form,
    IslandChargeConfig,
};
pub use enumerate::{
    enumerate_code_loop, enumerate_qubit_2nd_order, enumerate_shortcut,
    enumerate_stabilizer_loop, BridgeAmplitudes, CodeLoopEnumeration, QubitEnumeration,
    ShortcutEnumeration, StabilizerEnumeration,
};
pub use ops::{normal_order, Generator, NormalOrderedProduct, SegmentOp};
pub use sequence::{ChargeSign, EnergyFactor, EnergyTerm, TransferSequence};
pub use table::{emit_sequence_table, parse_sequence_table, ParsedRow, SEQUENCE_TABLE_HEADER};

use thiserror::Error;

/// Errors produced by configuration validation, enumeration entry points,
/// and the table parser.
#[derive(Debug, Error, PartialEq)]
pub enum PerturbationError {
    /// A gate offset was non-finite or not strictly inside (−1/2, 1/2); the
    /// island excitation energies (1 ∓ 2Δn)E_C must stay positive.
    #[error("gate offset {value} on island {island} must satisfy |Δn| < 1/2")]
    InvalidGateOffset {
        /// 1-based island index.
        island: usize,
        /// Offending offset value.
        value: f64,
    },
    /// The charging energy was non-finite or not strictly positive.
    #[error("charging energy {value} must be finite and positive")]
    InvalidChargingEnergy {
        /// Offending value.
        value: f64,
    },
    /// An enumeration was invoked with a configuration for the wrong number
    /// of islands.
    #[error("configuration describes {actual} island(s) but this enumeration needs {expected}")]
    WrongIslandCount {
        /// Island count the enumeration requires.
        expected: usize,
        /// Island count the configuration holds.
        actual: usize,
    },
    /// A tunnel or dot coupling amplitude was non-finite.
    #[error("coupling amplitude {name} must be finite")]
    InvalidCoupling {
        /// Which amplitude was rejected.
        name: &'static str,
    },
    /// A sequence table could not be parsed back into rows.
    #[error("sequence table parse error on line {line}: {message}")]
    TableParse {
        /// 1-based line number in the CSV text.
        line: usize,
        /// What went wrong.
        message: String,
    },
}
