//! Enumeration of the 120 fifth-order orderings that transfer one charge
//! between the dots around the four-island loop, reading out the loop
//! stabilizer: row listing, exact denominator sum, canonical operator word,
//! and the summed mechanical coupling.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use perturbation::{
    enumerate_stabilizer_loop, stabilizer_denominator_closed_form, BridgeAmplitudes, Generator,
    IslandChargeConfig, PerturbationError,
};
use proptest::prelude::*;

fn ratio(numerator: i64, denominator: i64) -> BigRational {
    BigRational::new(BigInt::from(numerator), BigInt::from(denominator))
}

fn config(offsets: [f64; 4], charging_energy: f64) -> IslandChargeConfig {
    IslandChargeConfig::new(&offsets, charging_energy).unwrap()
}

/// The conventional listing of the first 24 rows: printed sequence and
/// symbolic denominator (all rows carry the same sign, so none is printed).
const EXPECTED_FIRST_ROWS: [(&str, &str); 24] = [
    ("L1A87A65A43L2†", "(E1+E4+E3+E2+)^-1"),
    ("A87L1A65A43L2†", "[(E1-+E4+)E4+E3+E2+]^-1"),
    ("L1A65A87A43L2†", "[E1+(E1++E3++E4-)E3+E2+]^-1"),
    ("A65L1A87A43L2†", "[(E3++E4-)(E1++E3++E4-)E3+E2+]^-1"),
    ("A87A65L1A43L2†", "[(E1-+E4+)(E1-+E3+)E3+E2+]^-1"),
    ("A65A87L1A43L2†", "[(E3++E4-)(E1-+E3+)E3+E2+]^-1"),
    ("L1A87A43A65L2†", "[E1+E4+(E2++E3-+E4+)E2+]^-1"),
    ("A87L1A43A65L2†", "[(E1-+E4+)E4+(E2++E3-+E4+)E2+]^-1"),
    ("L1A43A87A65L2†", "[E1+(E1++E2++E3-)(E2++E3-+E4+)E2+]^-1"),
    (
        "A43L1A87A65L2†",
        "[(E2++E3-)(E1++E2++E3-)(E2++E3-+E4+)E2+]^-1",
    ),
    (
        "A87A43L1A65L2†",
        "[(E1-+E4+)(E1-+E2++E3-+E4+)(E2++E3-+E4+)E2+]^-1",
    ),
    (
        "A43A87L1A65L2†",
        "[(E2++E3-)(E1-+E2++E3-+E4+)(E2++E3-+E4+)E2+]^-1",
    ),
    ("L1A65A43A87L2†", "[E1+(E1++E3++E4-)(E1++E2++E4-)E2+]^-1"),
    (
        "A65L1A43A87L2†",
        "[(E3++E4-)(E1++E3++E4-)(E1++E2++E4-)E2+]^-1",
    ),
    ("L1A43A65A87L2†", "[E1+(E1++E2++E3-)(E1++E2++E4-)E2+]^-1"),
    (
        "A43L1A65A87L2†",
        "[(E2++E3-)(E1++E2++E3-)(E1++E2++E4-)E2+]^-1",
    ),
    ("A65A43L1A87L2†", "[(E3++E4-)(E2++E4-)(E1++E2++E4-)E2+]^-1"),
    ("A43A65L1A87L2†", "[(E2++E3-)(E2++E4-)(E1++E2++E4-)E2+]^-1"),
    ("A87A65A43L1L2†", "[(E1-+E4+)(E1-+E3+)(E1-+E2+)E2+]^-1"),
    ("A65A87A43L1L2†", "[(E3++E4-)(E1-+E3+)(E1-+E2+)E2+]^-1"),
    (
        "A87A43A65L1L2†",
        "[(E1-+E4+)(E1-+E2++E3-+E4+)(E1-+E2+)E2+]^-1",
    ),
    (
        "A43A87A65L1L2†",
        "[(E2++E3-)(E1-+E2++E3-+E4+)(E1-+E2+)E2+]^-1",
    ),
    ("A65A43A87L1L2†", "[(E3++E4-)(E2++E4-)(E1-+E2+)E2+]^-1"),
    ("A43A65A87L1L2†", "[(E2++E3-)(E2++E4-)(E1-+E2+)E2+]^-1"),
];

#[test]
fn lists_one_hundred_twenty_distinct_orderings() {
    let enumeration = enumerate_stabilizer_loop(&config([0.1; 4], 1.0)).unwrap();
    assert_eq!(enumeration.sequences.len(), 120);
    for (i, a) in enumeration.sequences.iter().enumerate() {
        for b in &enumeration.sequences[i + 1..] {
            assert_ne!(a.ops, b.ops);
        }
    }
}

#[test]
fn first_twenty_four_rows_match_the_conventional_listing() {
    let enumeration = enumerate_stabilizer_loop(&config([0.1; 4], 1.0)).unwrap();
    for (index, (sequence, denominator)) in EXPECTED_FIRST_ROWS.iter().enumerate() {
        let row = &enumeration.sequences[index];
        assert_eq!(
            row.sequence_string(),
            *sequence,
            "sequence mismatch in row {}",
            index + 1
        );
        assert_eq!(
            row.denominator_string(),
            *denominator,
            "denominator mismatch in row {}",
            index + 1
        );
    }
}

#[test]
fn every_ordering_reduces_to_the_negative_readout_word() {
    let enumeration = enumerate_stabilizer_loop(&config([0.05, -0.1, 0.2, 0.0], 1.0)).unwrap();
    assert_eq!(enumeration.canonical.sign, -1);
    let mut expected_word: Vec<Generator> = (1..=8).map(Generator::Gamma).collect();
    expected_word.push(Generator::DotCreate(1));
    expected_word.push(Generator::DotAnnihilate(2));
    assert_eq!(enumeration.canonical.word, expected_word);

    for row in &enumeration.sequences {
        assert_eq!(row.sign, 1, "row {} flips sign", row.sequence_string());
        let ordered = row.normal_ordered();
        assert_eq!(ordered.word, enumeration.canonical.word);
        assert_eq!(ordered.sign, -1);
    }
}

#[test]
fn sum_matches_the_product_closed_form_exactly() {
    for (offsets, charging_energy) in [
        ([0.0, 0.0, 0.0, 0.0], 1.0),
        ([0.0, 0.0, 0.0, 0.0], 2.5),
        ([0.1, 0.1, 0.1, 0.1], 1.0),
        ([0.25, -0.125, 0.375, 0.0], 2.0),
        ([0.1, -0.2, 0.05, 0.3], 0.5),
    ] {
        let cfg = config(offsets, charging_energy);
        let enumeration = enumerate_stabilizer_loop(&cfg).unwrap();
        assert_eq!(
            enumeration.denominator_sum,
            stabilizer_denominator_closed_form(&cfg).unwrap(),
            "closed-form mismatch at offsets {offsets:?}, E_C {charging_energy}"
        );
    }
}

#[test]
fn symmetric_gating_sums_to_sixteen_over_charging_energy_fourth() {
    let cfg = config([0.0; 4], 2.0);
    let enumeration = enumerate_stabilizer_loop(&cfg).unwrap();
    assert_eq!(enumeration.denominator_sum, ratio(16, 16)); // 16/2⁴
    assert_eq!(enumeration.denominator_sum, BigRational::one());
}

#[test]
fn sum_is_symmetric_under_any_island_permutation() {
    // The closed form ∏ⱼ(1 − 4Δn_j²)⁻¹ is permutation-symmetric even though
    // the four islands play distinct roles along the transfer path.
    let base = enumerate_stabilizer_loop(&config([0.1, -0.2, 0.05, 0.3], 1.0))
        .unwrap()
        .denominator_sum;
    for permuted in [
        [0.3, 0.05, -0.2, 0.1],
        [-0.2, 0.1, 0.3, 0.05],
        [0.05, 0.3, 0.1, -0.2],
    ] {
        let other = enumerate_stabilizer_loop(&config(permuted, 1.0))
            .unwrap()
            .denominator_sum;
        assert_eq!(base, other);
    }
}

/// Independent oracle: re-derives each row's signed weight by walking the
/// printed sequence string with its own token table, charge bookkeeping,
/// and excitation energies.
mod oracle {
    use num_bigint::BigInt;
    use num_rational::BigRational;

    /// (token, per-island charge changes) — fixed here independently of the
    /// library's segment definitions.
    const TOKENS: [(&str, &[(usize, i64)]); 5] = [
        ("L2†", &[(2, 1)]),
        ("A43", &[(3, 1), (2, -1)]),
        ("A65", &[(4, 1), (3, -1)]),
        ("A87", &[(1, 1), (4, -1)]),
        ("L1", &[(1, -1)]),
    ];

    fn int(value: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(value))
    }

    /// Walks `sequence` (printed order, applied right to left) and returns
    /// the unsigned product of the intermediate excitation energies, with
    /// island j at gate offset `offsets[j-1]` costing (1 ∓ 2Δn_j)E_C per
    /// extra/missing charge.
    pub fn denominator(sequence: &str, offsets: &[BigRational; 4], ec: &BigRational) -> BigRational {
        let mut tokens = Vec::new();
        let mut rest = sequence;
        'outer: while !rest.is_empty() {
            for (token, effects) in TOKENS {
                if let Some(after) = rest.strip_prefix(token) {
                    tokens.push(effects);
                    rest = after;
                    continue 'outer;
                }
            }
            panic!("oracle cannot tokenize {rest:?}");
        }

        let mut charges = [0i64; 4];
        let mut product = int(1);
        for (position, effects) in tokens.iter().rev().enumerate() {
            for &(island, delta) in *effects {
                charges[island - 1] += delta;
            }
            if position + 1 == tokens.len() {
                break;
            }
            let mut energy = int(0);
            for (island, &charge) in charges.iter().enumerate() {
                if charge != 0 {
                    let sign = int(-2 * charge); // ∓2Δn per extra/missing charge
                    energy += (int(1) + sign * &offsets[island]) * ec;
                }
            }
            product *= energy;
        }
        assert_eq!(charges, [0i64; 4], "oracle walk must close every island");
        product
    }
}

#[test]
fn every_row_weight_matches_an_independent_walk_of_its_printed_string() {
    let offsets_f64 = [0.125, -0.25, 0.0625, 0.375];
    let charging_energy = 2.0;
    let cfg = config(offsets_f64, charging_energy);
    let enumeration = enumerate_stabilizer_loop(&cfg).unwrap();

    let offsets = [
        ratio(1, 8),
        ratio(-1, 4),
        ratio(1, 16),
        ratio(3, 8),
    ];
    let ec = ratio(2, 1);
    for row in &enumeration.sequences {
        let expected = oracle::denominator(&row.sequence_string(), &offsets, &ec);
        assert_eq!(
            row.denominator_value(&cfg),
            expected,
            "oracle disagrees on row {}",
            row.sequence_string()
        );
        assert_eq!(row.sign, 1);
        assert_eq!(
            row.signed_weight(&cfg),
            BigRational::one() / expected,
            "signed weight disagrees on row {}",
            row.sequence_string()
        );
    }
}

#[test]
fn mechanical_coupling_matches_its_closed_form() {
    let offsets = [0.1, -0.15, 0.05, 0.2];
    let charging_energy = 1.5;
    let cfg = config(offsets, charging_energy);
    let enumeration = enumerate_stabilizer_loop(&cfg).unwrap();

    let lambda1 = 0.08;
    let lambda2 = 0.12;
    let bridges = BridgeAmplitudes {
        t12: Complex64::new(0.3, -0.1),
        t34: Complex64::new(0.2, 0.05),
        t56: Complex64::new(-0.1, 0.15),
        t78: Complex64::new(0.25, 0.0),
    };
    let coupling = enumeration
        .mechanical_coupling(lambda1, lambda2, &bridges)
        .unwrap();

    // 2 λ₁λ₂ (t₃₄t₅₆t₇₈)* / E_C⁴ · ∏ⱼ (1 − 4Δn_j²)⁻¹
    let mut expected = 2.0 * lambda1 * lambda2 * (bridges.t34 * bridges.t56 * bridges.t78).conj()
        / charging_energy.powi(4);
    for dn in offsets {
        expected /= 1.0 - 4.0 * dn * dn;
    }
    assert!(
        (coupling - expected).norm() <= 1e-14 * expected.norm(),
        "mechanical coupling {coupling} vs closed form {expected}"
    );
}

#[test]
fn mechanical_coupling_scales_with_the_exact_denominator_sum() {
    let cfg = config([0.25, 0.125, -0.125, 0.0], 2.0);
    let enumeration = enumerate_stabilizer_loop(&cfg).unwrap();
    let bridges = BridgeAmplitudes::uniform(Complex64::new(0.2, 0.1));
    let coupling = enumeration.mechanical_coupling(0.1, 0.1, &bridges).unwrap();

    let sum = enumeration.denominator_sum.to_f64().unwrap();
    let expected = 0.1 * 0.1 * (bridges.t34 * bridges.t56 * bridges.t78).conj() / 8.0 * sum;
    assert!((coupling - expected).norm() <= 1e-15 * expected.norm());
}

#[test]
fn rejects_wrong_island_counts_and_bad_couplings() {
    let two_islands = IslandChargeConfig::symmetric(2, 1.0).unwrap();
    assert_eq!(
        enumerate_stabilizer_loop(&two_islands).unwrap_err(),
        PerturbationError::WrongIslandCount {
            expected: 4,
            actual: 2
        }
    );

    let enumeration = enumerate_stabilizer_loop(&config([0.0; 4], 1.0)).unwrap();
    assert_eq!(
        enumeration
            .mechanical_coupling(f64::NAN, 0.1, &BridgeAmplitudes::uniform(Complex64::ONE))
            .unwrap_err(),
        PerturbationError::InvalidCoupling { name: "lambda1" }
    );
    let bad = BridgeAmplitudes {
        t56: Complex64::new(0.0, f64::INFINITY),
        ..BridgeAmplitudes::uniform(Complex64::ONE)
    };
    assert_eq!(
        enumeration.mechanical_coupling(0.1, 0.1, &bad).unwrap_err(),
        PerturbationError::InvalidCoupling { name: "t56" }
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Exact identity between the 120-term mechanical sum and the product
    /// closed form for random rational gate offsets.
    #[test]
    fn mechanical_sum_matches_the_closed_form(
        k1 in -15i64..=15,
        k2 in -15i64..=15,
        k3 in -15i64..=15,
        k4 in -15i64..=15,
        m in 1i64..=32,
    ) {
        let offsets = vec![ratio(k1, 32), ratio(k2, 32), ratio(k3, 32), ratio(k4, 32)];
        let charging_energy = ratio(m, 8);
        let cfg = IslandChargeConfig::from_rationals(offsets, charging_energy).unwrap();
        let enumeration = enumerate_stabilizer_loop(&cfg).unwrap();
        prop_assert_eq!(
            &enumeration.denominator_sum,
            &stabilizer_denominator_closed_form(&cfg).unwrap()
        );
    }
}
