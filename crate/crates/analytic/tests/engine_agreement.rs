//! Two-path check: the closed-form steady current must reproduce the
//! numerical steady state of the reduced four-state model at random
//! parameters, in both interference sectors.

use analytic::current_closed_form;
use model::{build_effective_model, ModelParams, Sector};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use redfield_engine::{lead_current, steady_state, transport_liouvillian, LeadRegime};

const POINTS: usize = 200;
const SEED: u64 = 0x5eed_ca5e;

fn random_params(rng: &mut ChaCha8Rng) -> ModelParams {
    let lambda = rng.random_range(0.03..0.12);
    ModelParams {
        epsilon1: rng.random_range(-0.03..0.03),
        epsilon2: rng.random_range(-0.03..0.03),
        gamma1: rng.random_range(0.005..0.05),
        gamma2: rng.random_range(0.005..0.05),
        lambda0: rng.random_range(0.0..0.03),
        phi: rng.random_range(0.0..std::f64::consts::TAU),
        lambda1: lambda,
        lambda2: lambda,
        charging_energy: 1.0,
        sector: if rng.random_range(0..2) == 0 {
            Sector::Plus
        } else {
            Sector::Minus
        },
        dephasing: rng.random_range(0.0..0.06),
    }
}

#[test]
fn closed_form_matches_numerical_steady_current_at_random_parameters() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut worst: (f64, Option<ModelParams>) = (0.0, None);
    for _ in 0..POINTS {
        let params = random_params(&mut rng);
        let analytic = current_closed_form(&params);

        let dot = build_effective_model(&params).unwrap();
        let liouvillian = transport_liouvillian(&dot, &params, LeadRegime::LargeBias).unwrap();
        let steady = steady_state(&liouvillian).unwrap();
        let numeric = lead_current(&liouvillian, 1, &steady.rho).unwrap();

        let scale = analytic.abs().max(numeric.abs()).max(f64::MIN_POSITIVE);
        let deviation = (analytic - numeric).abs() / scale;
        if deviation > worst.0 {
            worst = (deviation, Some(params));
        }
        assert!(
            deviation <= linalg_core::tolerances::ANALYTIC_VS_NUMERIC,
            "relative deviation {deviation:.3e} at {params:?}: \
             closed form {analytic:.15e} vs steady state {numeric:.15e}"
        );
    }
    let (deviation, params) = worst;
    println!(
        "worst relative deviation over {POINTS} random points: {deviation:.3e} at {params:?}"
    );
}

#[test]
fn sector_flip_equals_phase_shift_numerically() {
    // I(φ; z = +1) = I(φ + π; z = −1) for the numerical model, not just the
    // closed form: the two Hamiltonians are identical, so the currents agree
    // to solver precision.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0xffff);
    for _ in 0..24 {
        let params = ModelParams {
            sector: Sector::Plus,
            ..random_params(&mut rng)
        };
        let shifted = ModelParams {
            phi: params.phi + std::f64::consts::PI,
            sector: Sector::Minus,
            ..params
        };
        let mut currents = [0.0_f64; 2];
        for (slot, p) in currents.iter_mut().zip([&params, &shifted]) {
            let dot = build_effective_model(p).unwrap();
            let liouvillian = transport_liouvillian(&dot, p, LeadRegime::LargeBias).unwrap();
            let steady = steady_state(&liouvillian).unwrap();
            *slot = lead_current(&liouvillian, 1, &steady.rho).unwrap();
        }
        let scale = currents[0].abs().max(currents[1].abs()).max(1e-300);
        assert!(
            (currents[0] - currents[1]).abs() / scale <= 1e-8,
            "π-shift violated at {params:?}: {currents:?}"
        );
    }
}
