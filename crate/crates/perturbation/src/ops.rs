//! Elementary fermionic generators, transfer-segment operators, and the
//! mechanical normal-ordering of their products.

/// One elementary fermionic generator appearing in a segment operator.
///
/// The canonical order used by [`normal_order`] is: the eight Majorana
/// operators γ₁…γ₈ ascending, then d₁†, d₁, d₂†, d₂. Every pair of distinct
/// generators anticommutes (Majoranas pairwise; dot operators with every
/// Majorana and with each other — a dot operator never meets its own adjoint
/// inside one sequence product), and a repeated Majorana squares to one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// Majorana operator γ_k, k ∈ 1..=8.
    Gamma(u8),
    /// Dot creation operator d_j†, j ∈ {1, 2}.
    DotCreate(u8),
    /// Dot annihilation operator d_j, j ∈ {1, 2}.
    DotAnnihilate(u8),
}

impl Generator {
    /// Position in the canonical generator order.
    fn rank(self) -> u8 {
        match self {
            Generator::Gamma(k) => {
                debug_assert!((1..=8).contains(&k));
                k - 1
            }
            Generator::DotCreate(1) => 8,
            Generator::DotAnnihilate(1) => 9,
            Generator::DotCreate(2) => 10,
            Generator::DotAnnihilate(2) => 11,
            Generator::DotCreate(j) | Generator::DotAnnihilate(j) => {
                unreachable!("dot index {j} out of range")
            }
        }
    }
}

/// A normal-ordered operator product: an overall sign and the surviving
/// generators in canonical order after repeated Majoranas have contracted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalOrderedProduct {
    /// (−1) per transposition of distinct generators performed by the sort.
    pub sign: i8,
    /// Canonical-order word with γ² = 1 pairs removed.
    pub word: Vec<Generator>,
}

/// Sorts an operator word into canonical generator order and contracts
/// repeated Majoranas.
///
/// The sort is a stable bubble sort that swaps only strictly-misordered
/// neighbors, flipping the sign once per swap; identical generators never
/// cross each other, so the anticommutation rule is applied exclusively to
/// distinct pairs. Adjacent equal Majoranas in the sorted word then contract
/// to the identity (γ² = 1).
///
/// # Panics
///
/// If the sorted word contains an adjacent repeated dot operator: d² = 0
/// would annihilate the product, which no transfer sequence produces.
pub fn normal_order(word: &[Generator]) -> NormalOrderedProduct {
    let mut sorted = word.to_vec();
    let mut sign = 1i8;
    loop {
        let mut swapped = false;
        for i in 1..sorted.len() {
            if sorted[i - 1].rank() > sorted[i].rank() {
                sorted.swap(i - 1, i);
                sign = -sign;
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    let mut contracted: Vec<Generator> = Vec::with_capacity(sorted.len());
    for generator in sorted {
        if contracted.last() == Some(&generator) {
            assert!(
                matches!(generator, Generator::Gamma(_)),
                "repeated dot operator {generator:?} squares to zero"
            );
            contracted.pop();
        } else {
            contracted.push(generator);
        }
    }
    NormalOrderedProduct {
        sign,
        word: contracted,
    }
}

/// One segment of a transfer sequence: a dot–island hop or an island–island
/// bridge hop, each an even product of two elementary generators.
///
/// The single-island (second-order) process uses `M1`/`M2Dagger`; the
/// multi-island processes use `L1`/`L2Dagger` for the dot attachments and
/// the `A`-operators for the bridges, where `Amn` is the product γ_mγ_n
/// moving one charge from the island holding γ_n to the island holding γ_m.
/// Islands own Majorana pairs (γ₈, γ₁), (γ₂, γ₃), (γ₄, γ₅), (γ₆, γ₇) for
/// islands 1–4 respectively.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentOp {
    /// d₁γ₁ — dot 1 electron enters the single island (amplitude λ₁).
    M1,
    /// γ₂d₂† — island electron exits to dot 2 (amplitude −iλ₂; the phase is
    /// fixed by the sector-readout convention of the single-island model).
    M2Dagger,
    /// d₁†γ₁ — island 1 electron exits to dot 1 (amplitude λ₁).
    L1,
    /// γ₂d₂ — dot 2 electron enters island 2 (amplitude λ₂).
    L2Dagger,
    /// γ₁γ₂ — island 2 → island 1 bridge hop (amplitude −t₁₂/2).
    A12,
    /// γ₃γ₄ — island 3 → island 2 bridge hop (amplitude −t₃₄/2).
    A34,
    /// γ₄γ₃ — island 2 → island 3 bridge hop (amplitude −t₃₄*/2).
    A43,
    /// γ₅γ₆ — island 4 → island 3 bridge hop (amplitude −t₅₆/2).
    A56,
    /// γ₆γ₅ — island 3 → island 4 bridge hop (amplitude −t₅₆*/2).
    A65,
    /// γ₇γ₈ — island 1 → island 4 bridge hop (amplitude −t₇₈/2).
    A78,
    /// γ₈γ₇ — island 4 → island 1 bridge hop (amplitude −t₇₈*/2).
    A87,
}

impl SegmentOp {
    /// Token used in sequence strings and parsed back by the table reader.
    pub fn token(self) -> &'static str {
        match self {
            SegmentOp::M1 => "M1",
            SegmentOp::M2Dagger => "M2†",
            SegmentOp::L1 => "L1",
            SegmentOp::L2Dagger => "L2†",
            SegmentOp::A12 => "A12",
            SegmentOp::A34 => "A34",
            SegmentOp::A43 => "A43",
            SegmentOp::A56 => "A56",
            SegmentOp::A65 => "A65",
            SegmentOp::A78 => "A78",
            SegmentOp::A87 => "A87",
        }
    }

    /// Elementary generator content, in printed (left-to-right) order.
    pub fn word(self) -> &'static [Generator] {
        match self {
            SegmentOp::M1 => &[Generator::DotAnnihilate(1), Generator::Gamma(1)],
            SegmentOp::M2Dagger => &[Generator::Gamma(2), Generator::DotCreate(2)],
            SegmentOp::L1 => &[Generator::DotCreate(1), Generator::Gamma(1)],
            SegmentOp::L2Dagger => &[Generator::Gamma(2), Generator::DotAnnihilate(2)],
            SegmentOp::A12 => &[Generator::Gamma(1), Generator::Gamma(2)],
            SegmentOp::A34 => &[Generator::Gamma(3), Generator::Gamma(4)],
            SegmentOp::A43 => &[Generator::Gamma(4), Generator::Gamma(3)],
            SegmentOp::A56 => &[Generator::Gamma(5), Generator::Gamma(6)],
            SegmentOp::A65 => &[Generator::Gamma(6), Generator::Gamma(5)],
            SegmentOp::A78 => &[Generator::Gamma(7), Generator::Gamma(8)],
            SegmentOp::A87 => &[Generator::Gamma(8), Generator::Gamma(7)],
        }
    }

    /// Island-charge changes caused by applying this segment, as
    /// (1-based island, ±1) pairs.
    pub fn charge_effects(self) -> &'static [(u8, i8)] {
        match self {
            SegmentOp::M1 => &[(1, 1)],
            SegmentOp::M2Dagger => &[(1, -1)],
            SegmentOp::L1 => &[(1, -1)],
            SegmentOp::L2Dagger => &[(2, 1)],
            SegmentOp::A12 => &[(1, 1), (2, -1)],
            SegmentOp::A34 => &[(2, 1), (3, -1)],
            SegmentOp::A43 => &[(3, 1), (2, -1)],
            SegmentOp::A56 => &[(3, 1), (4, -1)],
            SegmentOp::A65 => &[(4, 1), (3, -1)],
            SegmentOp::A78 => &[(4, 1), (1, -1)],
            SegmentOp::A87 => &[(1, 1), (4, -1)],
        }
    }

    /// Every segment token the table parser recognizes, longest first so a
    /// greedy scan is unambiguous.
    pub(crate) const ALL: [SegmentOp; 11] = [
        SegmentOp::M2Dagger,
        SegmentOp::L2Dagger,
        SegmentOp::A12,
        SegmentOp::A34,
        SegmentOp::A43,
        SegmentOp::A56,
        SegmentOp::A65,
        SegmentOp::A78,
        SegmentOp::A87,
        SegmentOp::M1,
        SegmentOp::L1,
    ];
}
