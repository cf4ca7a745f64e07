//! Tests of the four-state model: transfer amplitude, operator algebra,
//! spectrum closed form, and the phase/parity covariance that the whole
//! readout scheme rests on.

use linalg_core::{
    C64, CMatrix, hermitian_eigendecompose, hermiticity_defect, identity, kron, max_abs,
};
use model::{ModelError, ModelParams, Sector, build_effective_model};
use proptest::prelude::*;

fn anticommutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    &a.dot(b) + &b.dot(a)
}

#[test]
fn reference_point_transfer_amplitude() {
    // Defaults: λ₀ = 0.01, φ = 0, λ̃₁₂ = 2·0.1·0.1/1 = 0.02, z = +1.
    let params = ModelParams::default();
    let coupling = params.effective_coupling();
    assert!((coupling.direct - C64::new(-0.01, 0.0)).norm() < 1e-15);
    assert!((coupling.mediated - 0.02).abs() < 1e-15);
    assert!((coupling.omega - C64::new(0.01, 0.0)).norm() < 1e-15);
}

#[test]
fn phase_pi_makes_arms_add() {
    let params = ModelParams {
        phi: std::f64::consts::PI,
        ..ModelParams::default()
    };
    // e^{iπ} flips the reference arm: Ω = +λ₀ + λ̃₁₂ = 0.03.
    let omega = params.omega();
    assert!((omega.re - 0.03).abs() < 1e-15);
    assert!(omega.im.abs() < 1e-15);
}

#[test]
fn opposite_sector_flips_island_arm() {
    let params = ModelParams {
        sector: Sector::Minus,
        ..ModelParams::default()
    };
    assert!((params.omega() - C64::new(-0.03, 0.0)).norm() < 1e-15);
}

#[test]
fn sector_swap_equals_phase_shift_in_magnitude() {
    // |Ω(φ, z)| = |Ω(φ+π, −z)| for every φ: the two sectors trace the same
    // interference pattern shifted by π.
    for k in 0..24 {
        let phi = 2.0 * std::f64::consts::PI * k as f64 / 24.0;
        let plus = ModelParams {
            phi,
            ..ModelParams::default()
        };
        let minus = ModelParams {
            phi: phi + std::f64::consts::PI,
            sector: Sector::Minus,
            ..ModelParams::default()
        };
        assert!((plus.omega().norm() - minus.omega().norm()).abs() < 1e-14);
    }
}

#[test]
fn hamiltonian_matches_hand_written_matrix() {
    let params = ModelParams {
        epsilon1: 0.3,
        epsilon2: 0.1,
        phi: 0.7,
        ..ModelParams::default()
    };
    let m = build_effective_model(&params).unwrap();
    let omega = params.omega();

    let mut expected = CMatrix::zeros((4, 4));
    expected[(1, 1)] = C64::new(0.1, 0.0); // |01⟩: ε₂
    expected[(2, 2)] = C64::new(0.3, 0.0); // |10⟩: ε₁
    expected[(3, 3)] = C64::new(0.4, 0.0); // |11⟩: ε₁+ε₂
    expected[(1, 2)] = omega; // ⟨01|H|10⟩
    expected[(2, 1)] = omega.conj();
    assert!(max_abs(&(&m.hamiltonian - &expected)) < 1e-15);
}

#[test]
fn dot_operators_obey_fermion_algebra_exactly() {
    let m = build_effective_model(&ModelParams::default()).unwrap();
    let d1 = &m.d1;
    let d2 = &m.d2;
    let d1d = linalg_core::dagger(d1);
    let d2d = linalg_core::dagger(d2);

    assert_eq!(max_abs(&(&anticommutator(d1, &d1d) - &identity(4))), 0.0);
    assert_eq!(max_abs(&(&anticommutator(d2, &d2d) - &identity(4))), 0.0);
    assert_eq!(max_abs(&anticommutator(d1, d2)), 0.0);
    assert_eq!(max_abs(&anticommutator(d1, &d2d)), 0.0);
    assert_eq!(max_abs(&d1.dot(d1)), 0.0);
    assert_eq!(max_abs(&d2.dot(d2)), 0.0);
}

#[test]
fn dot2_annihilation_carries_fermionic_sign() {
    // d₂|11⟩ = −|10⟩: the Jordan–Wigner string through occupied dot 1.
    let m = build_effective_model(&ModelParams::default()).unwrap();
    assert_eq!(m.d2[(2, 3)], C64::new(-1.0, 0.0));
    // while d₂|01⟩ = +|00⟩ (dot 1 empty).
    assert_eq!(m.d2[(0, 1)], C64::new(1.0, 0.0));
}

#[test]
fn charge_is_conserved_exactly() {
    let params = ModelParams {
        epsilon1: 0.2,
        epsilon2: -0.1,
        phi: 1.3,
        ..ModelParams::default()
    };
    let m = build_effective_model(&params).unwrap();
    let hq = m.hamiltonian.dot(&m.charge);
    let qh = m.charge.dot(&m.hamiltonian);
    assert_eq!(max_abs(&(&hq - &qh)), 0.0);
}

#[test]
fn rejects_unphysical_parameters() {
    let bad_ec = ModelParams {
        charging_energy: 0.0,
        ..ModelParams::default()
    };
    assert!(matches!(
        build_effective_model(&bad_ec),
        Err(ModelError::NonPositiveChargingEnergy { .. })
    ));

    let bad_rate = ModelParams {
        gamma1: -0.1,
        ..ModelParams::default()
    };
    assert!(matches!(
        build_effective_model(&bad_rate),
        Err(ModelError::NegativeRate { name: "gamma1", .. })
    ));

    let bad_amp = ModelParams {
        lambda0: -0.01,
        ..ModelParams::default()
    };
    assert!(matches!(
        build_effective_model(&bad_amp),
        Err(ModelError::NegativeAmplitude { name: "lambda0", .. })
    ));

    let bad_phi = ModelParams {
        phi: f64::NAN,
        ..ModelParams::default()
    };
    assert!(matches!(
        build_effective_model(&bad_phi),
        Err(ModelError::NonFinite { name: "phi" })
    ));
}

#[test]
fn validity_ratio_tracks_largest_scale() {
    assert!((ModelParams::default().validity_ratio() - 0.1).abs() < 1e-15);
    let pushed = ModelParams {
        lambda1: 0.3,
        lambda2: 0.3,
        ..ModelParams::default()
    };
    assert!((pushed.validity_ratio() - 0.3).abs() < 1e-15);
}

#[test]
fn detuning_helpers() {
    let params = ModelParams::default().with_detuning(0.05);
    assert_eq!(params.epsilon1, 0.05);
    assert_eq!(params.epsilon2, 0.0);
    assert!((params.detuning() - 0.05).abs() < 1e-15);
}

#[test]
fn basis_labels_follow_occupation_order() {
    let m = build_effective_model(&ModelParams::default()).unwrap();
    assert_eq!(m.labels, vec!["|00>", "|01>", "|10>", "|11>"]);
    assert_eq!(m.dim, 4);
}

fn arbitrary_params() -> impl Strategy<Value = ModelParams> {
    (
        -1.0_f64..1.0,
        -1.0_f64..1.0,
        0.0_f64..0.5,
        0.0_f64..std::f64::consts::TAU,
        0.0_f64..0.5,
        0.0_f64..0.5,
        prop_oneof![Just(Sector::Plus), Just(Sector::Minus)],
    )
        .prop_map(|(e1, e2, l0, phi, l1, l2, sector)| ModelParams {
            epsilon1: e1,
            epsilon2: e2,
            lambda0: l0,
            phi,
            lambda1: l1,
            lambda2: l2,
            sector,
            ..ModelParams::default()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spectrum_matches_closed_form(params in arbitrary_params()) {
        // Charge blocks: {|00⟩} at 0, {|11⟩} at ε₁+ε₂, and the 2×2
        // single-charge block with eigenvalues (ε₁+ε₂)/2 ± √(δ²/4 + |Ω|²).
        let m = build_effective_model(&params).unwrap();
        let eig = hermitian_eigendecompose(&m.hamiltonian).unwrap();

        let mean = 0.5 * (params.epsilon1 + params.epsilon2);
        let delta = params.detuning();
        let r = (0.25 * delta * delta + params.omega().norm_sqr()).sqrt();
        let mut expected = [0.0, params.epsilon1 + params.epsilon2, mean - r, mean + r];
        expected.sort_by(|a, b| a.partial_cmp(b).unwrap());

        for (k, want) in expected.iter().enumerate() {
            prop_assert!((eig.values[k] - want).abs() < 1e-12);
        }
    }

    #[test]
    fn hamiltonian_is_hermitian(params in arbitrary_params()) {
        let m = build_effective_model(&params).unwrap();
        prop_assert_eq!(hermiticity_defect(&m.hamiltonian), 0.0);
    }

    #[test]
    fn phase_shift_by_pi_equals_sector_flip(params in arbitrary_params()) {
        // (−1)^{n₂} conjugation maps H(φ, z) onto H(φ+π, −z): flipping the
        // measured parity is indistinguishable from shifting the flux by π.
        let here = build_effective_model(&params).unwrap();
        let there = build_effective_model(&ModelParams {
            phi: params.phi + std::f64::consts::PI,
            sector: params.sector.flipped(),
            ..params
        })
        .unwrap();

        let u = kron(&identity(2), &{
            let mut z = CMatrix::zeros((2, 2));
            z[(0, 0)] = C64::new(1.0, 0.0);
            z[(1, 1)] = C64::new(-1.0, 0.0);
            z
        });
        let conjugated = u.dot(&here.hamiltonian).dot(&u); // U = U† = U⁻¹
        prop_assert!(max_abs(&(&conjugated - &there.hamiltonian)) < 1e-14);
    }
}
