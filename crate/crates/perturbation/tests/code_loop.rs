//! Enumeration of the 24 fourth-order ring-exchange orderings around the
//! four-island loop: the common stabilizer word they produce, the exact
//! denominator partition at symmetric gating, and the summed ring-exchange
//! coefficient.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use perturbation::{
    enumerate_code_loop, BridgeAmplitudes, Generator, IslandChargeConfig, PerturbationError,
};

fn ratio(numerator: i64, denominator: i64) -> BigRational {
    BigRational::new(BigInt::from(numerator), BigInt::from(denominator))
}

fn unit_bridges() -> BridgeAmplitudes {
    BridgeAmplitudes::uniform(Complex64::new(1.0, 0.0))
}

fn symmetric(charging_energy: f64) -> IslandChargeConfig {
    IslandChargeConfig::symmetric(4, charging_energy).unwrap()
}

#[test]
fn lists_all_twenty_four_orderings() {
    let enumeration = enumerate_code_loop(&symmetric(1.0), &unit_bridges()).unwrap();
    assert_eq!(enumeration.sequences.len(), 24);

    // Orderings are pairwise distinct.
    for (i, a) in enumeration.sequences.iter().enumerate() {
        for b in &enumeration.sequences[i + 1..] {
            assert_ne!(a.ops, b.ops);
        }
    }
}

#[test]
fn first_row_is_the_forward_loop() {
    let enumeration = enumerate_code_loop(&symmetric(1.0), &unit_bridges()).unwrap();
    let first = &enumeration.sequences[0];
    assert_eq!(first.sequence_string(), "A12A34A56A78");
    assert_eq!(
        first.denominator_string(),
        "[(E1-+E2+)(E1-+E3+)(E1-+E4+)]^-1"
    );
}

#[test]
fn every_ordering_reduces_to_the_positive_stabilizer_word() {
    let cfg = IslandChargeConfig::new(&[0.1, -0.05, 0.2, 0.0], 1.0).unwrap();
    let enumeration = enumerate_code_loop(&cfg, &unit_bridges()).unwrap();
    assert_eq!(enumeration.canonical.sign, 1);
    assert_eq!(
        enumeration.canonical.word,
        (1..=8).map(Generator::Gamma).collect::<Vec<_>>()
    );
    for row in &enumeration.sequences {
        assert_eq!(row.sign, 1, "row {} flips sign", row.sequence_string());
        let ordered = row.normal_ordered();
        assert_eq!(ordered.word, enumeration.canonical.word);
        assert_eq!(ordered.sign, 1);
    }
}

#[test]
fn symmetric_gating_partitions_the_weights_into_two_classes() {
    // At the symmetric point every excitation energy is E_C, so each weight
    // is 1/(8E_C³) when the three intermediate states hold (2, 2, 2) terms
    // and 1/(16E_C³) when they hold (2, 4, 2).
    let charging_energy = 2.0;
    let cfg = symmetric(charging_energy);
    let enumeration = enumerate_code_loop(&cfg, &unit_bridges()).unwrap();

    let heavy = ratio(1, 8) / (ratio(2, 1) * ratio(2, 1) * ratio(2, 1));
    let light = ratio(1, 16) / (ratio(2, 1) * ratio(2, 1) * ratio(2, 1));
    let mut heavy_count = 0;
    let mut light_count = 0;
    for row in &enumeration.sequences {
        let weight = row.signed_weight(&cfg);
        if weight == heavy {
            heavy_count += 1;
        } else if weight == light {
            light_count += 1;
        } else {
            panic!(
                "row {} has unexpected weight {}",
                row.sequence_string(),
                weight
            );
        }
    }
    assert_eq!(heavy_count, 16);
    assert_eq!(light_count, 8);
    assert_eq!(
        enumeration.denominator_sum,
        ratio(5, 2) / (ratio(2, 1) * ratio(2, 1) * ratio(2, 1))
    );
}

#[test]
fn symmetric_sum_is_five_halves_over_charging_energy_cubed() {
    for charging_energy in [1.0, 0.5, 4.0] {
        let cfg = symmetric(charging_energy);
        let enumeration = enumerate_code_loop(&cfg, &unit_bridges()).unwrap();
        let ec = cfg.charging_energy().clone();
        assert_eq!(enumeration.denominator_sum, ratio(5, 2) / (&ec * &ec * &ec));
    }
}

#[test]
fn uniform_real_bridges_give_the_closed_form_ring_exchange() {
    for (t, charging_energy) in [(1.0, 1.0), (0.3, 1.0), (2.0, 4.0), (0.05, 0.25)] {
        let enumeration = enumerate_code_loop(
            &symmetric(charging_energy),
            &BridgeAmplitudes::uniform(Complex64::new(t, 0.0)),
        )
        .unwrap();
        let expected = 5.0 * t.powi(4) / (16.0 * charging_energy.powi(3));
        assert!(
            (enumeration.ring_exchange.re - expected).abs() <= 1e-15 * expected.abs(),
            "ring exchange {} vs closed form {expected}",
            enumeration.ring_exchange
        );
        assert!(enumeration.ring_exchange.im.abs() <= 1e-18);
    }
}

#[test]
fn complex_bridges_multiply_their_phases_into_the_coefficient() {
    let bridges = BridgeAmplitudes {
        t12: Complex64::new(0.4, 0.1),
        t34: Complex64::new(-0.2, 0.3),
        t56: Complex64::new(0.0, -0.5),
        t78: Complex64::new(0.25, 0.25),
    };
    let cfg = symmetric(1.5);
    let enumeration = enumerate_code_loop(&cfg, &bridges).unwrap();

    let product = bridges.t12 * bridges.t34 * bridges.t56 * bridges.t78;
    let sum = enumeration.denominator_sum.to_f64().unwrap();
    let expected = product * sum / 8.0;
    assert!(
        (enumeration.ring_exchange - expected).norm() <= 1e-15 * expected.norm(),
        "ring exchange {} vs {expected}",
        enumeration.ring_exchange
    );
}

#[test]
fn ring_exchange_matches_the_closed_form_model_coupling() {
    // The model crate carries the same leading-order loop amplitude as a
    // closed form (quoted at the symmetric gate point).
    let bridges = BridgeAmplitudes {
        t12: Complex64::new(0.1, 0.02),
        t34: Complex64::new(0.08, -0.01),
        t56: Complex64::new(0.11, 0.0),
        t78: Complex64::new(0.09, 0.03),
    };
    let charging_energy = 1.0;
    let enumeration = enumerate_code_loop(&symmetric(charging_energy), &bridges).unwrap();

    let coupling = model::stabilizer_effective_coupling(&model::StabilizerParams {
        lambda1: 0.1,
        lambda2: 0.1,
        t12: bridges.t12,
        t34: bridges.t34,
        t56: bridges.t56,
        t78: bridges.t78,
        delta_n1: 0.1,
        delta_n2: 0.1,
        charging_energy,
    })
    .unwrap();

    assert!(
        (enumeration.ring_exchange - coupling.loop_amplitude).norm()
            <= 1e-15 * coupling.loop_amplitude.norm()
    );
}

#[test]
fn sum_is_symmetric_under_island_relabelings_that_preserve_the_loop() {
    // Swaps across the loop (2 ↔ 4, 1 ↔ 3), cyclic rotation, and a global
    // gate-offset sign flip (= traversing every ordering backwards) all map
    // the 24 orderings onto themselves.
    let base = IslandChargeConfig::new(&[0.1, -0.2, 0.05, 0.3], 1.0).unwrap();
    let swapped_24 = IslandChargeConfig::new(&[0.1, 0.3, 0.05, -0.2], 1.0).unwrap();
    let swapped_13 = IslandChargeConfig::new(&[0.05, -0.2, 0.1, 0.3], 1.0).unwrap();

    let rotated = IslandChargeConfig::new(&[0.3, 0.1, -0.2, 0.05], 1.0).unwrap();
    let flipped = IslandChargeConfig::new(&[-0.1, 0.2, -0.05, -0.3], 1.0).unwrap();

    let bridges = unit_bridges();
    let sum = enumerate_code_loop(&base, &bridges).unwrap().denominator_sum;
    for relabeled in [swapped_24, swapped_13, rotated, flipped] {
        assert_eq!(
            sum,
            enumerate_code_loop(&relabeled, &bridges)
                .unwrap()
                .denominator_sum
        );
    }
}

#[test]
fn rejects_wrong_island_counts_and_bad_bridges() {
    let two_islands = IslandChargeConfig::symmetric(2, 1.0).unwrap();
    assert_eq!(
        enumerate_code_loop(&two_islands, &unit_bridges()).unwrap_err(),
        PerturbationError::WrongIslandCount {
            expected: 4,
            actual: 2
        }
    );

    let bad = BridgeAmplitudes {
        t34: Complex64::new(f64::NAN, 0.0),
        ..unit_bridges()
    };
    assert_eq!(
        enumerate_code_loop(&symmetric(1.0), &bad).unwrap_err(),
        PerturbationError::InvalidCoupling { name: "t34" }
    );
}
