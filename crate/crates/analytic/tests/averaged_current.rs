//! The window-averaged current: closed form vs quadrature oracle, limits,
//! and monotonicity.

use analytic::{
    adaptive_simpson, averaged_current, averaged_current_quadrature, current_closed_form,
    AnalyticError,
};
use model::{ModelParams, Sector};

/// Level-noise reference point: symmetric Γ = 0.01, λ₀ = Γ, λ̃₁₂ = 2Γ,
/// aligned levels.
fn reference_point() -> ModelParams {
    ModelParams {
        epsilon1: 0.0,
        epsilon2: 0.0,
        gamma1: 0.01,
        gamma2: 0.01,
        lambda0: 0.01,
        phi: 0.0,
        lambda1: 0.1,
        lambda2: 0.1,
        charging_energy: 1.0,
        sector: Sector::Plus,
        dephasing: 0.0,
    }
}

#[test]
fn quadrature_fixtures_anchor_the_integrator() {
    let cubic = |x: f64| x * x;
    assert!((adaptive_simpson(&cubic, 0.0, 1.0, 1e-12) - 1.0 / 3.0).abs() <= 1e-12);
    let sine = |x: f64| x.sin();
    assert!((adaptive_simpson(&sine, 0.0, std::f64::consts::PI, 1e-12) - 2.0).abs() <= 1e-11);
    // A Lorentzian with a known arctan antiderivative.
    let lorentzian = |x: f64| 1.0 / (1.0 + 25.0 * x * x);
    let expected = (5.0_f64).atan() * 2.0 / 5.0;
    assert!((adaptive_simpson(&lorentzian, -1.0, 1.0, 1e-12) - expected).abs() <= 1e-11);
    // Degenerate interval.
    assert_eq!(adaptive_simpson(&sine, 2.0, 2.0, 1e-12), 0.0);
}

#[test]
fn zero_width_defers_to_the_closed_form() {
    let params = ModelParams {
        phi: 1.3,
        dephasing: 0.02,
        ..reference_point()
    };
    let averaged = averaged_current(&params, 0.0).unwrap();
    assert_eq!(averaged, current_closed_form(&params));
    let quad = averaged_current_quadrature(&params, 0.0, 1e-10).unwrap();
    assert_eq!(quad, current_closed_form(&params));
}

#[test]
fn invalid_windows_are_rejected() {
    let params = reference_point();
    assert_eq!(
        averaged_current(&params, -0.01),
        Err(AnalyticError::NegativeAveragingWindow { value: -0.01 })
    );
    assert!(matches!(
        averaged_current(&params, f64::NAN),
        Err(AnalyticError::NonFiniteInput { .. })
    ));
    let dephased = ModelParams {
        dephasing: 0.01,
        ..params
    };
    assert_eq!(
        averaged_current(&dephased, 0.01),
        Err(AnalyticError::AveragingRequiresZeroDephasing { dephasing: 0.01 })
    );
    assert!(matches!(
        averaged_current_quadrature(&params, 0.01, 0.0),
        Err(AnalyticError::NonFiniteInput { .. })
    ));
}

#[test]
fn narrow_window_recovers_the_unaveraged_current() {
    // Δ = 1e-6 Γ: the average must agree with the point value to high
    // relative accuracy at representative phases.
    for phi in [0.0, 0.9, std::f64::consts::PI, 4.4] {
        let params = ModelParams {
            phi,
            ..reference_point()
        };
        let point = current_closed_form(&params);
        let averaged = averaged_current(&params, 1e-8).unwrap();
        assert!(
            (averaged - point).abs() <= 1e-8 * point.abs().max(1e-12),
            "φ={phi}: averaged {averaged:.15e} vs point {point:.15e}"
        );
    }
}

#[test]
fn arctan_form_matches_adaptive_quadrature() {
    // Windows from 0.01Γ to 10Γ across the phase grid; the two evaluations
    // are independent (closed antiderivative vs adaptive Simpson).
    let widths = [1e-4, 0.01, 0.05, 0.1];
    for width in widths {
        for k in 0..13 {
            let phi = std::f64::consts::TAU * k as f64 / 13.0;
            let params = ModelParams {
                phi,
                ..reference_point()
            };
            let arctan = averaged_current(&params, width).unwrap();
            let quad = averaged_current_quadrature(&params, width, 1e-13).unwrap();
            let scale = arctan.abs().max(1e-30);
            assert!(
                (arctan - quad).abs() <= 1e-8 * scale,
                "Δ={width}, φ={phi}: arctan {arctan:.15e} vs quadrature {quad:.15e}"
            );
        }
    }
}

#[test]
fn detuned_window_still_matches_quadrature() {
    // The arctan form also covers windows not centered on resonance.
    for delta in [-0.015, 0.007, 0.025] {
        let params = ModelParams {
            phi: 2.2,
            ..reference_point().with_detuning(delta)
        };
        for width in [0.003, 0.02, 0.08] {
            let arctan = averaged_current(&params, width).unwrap();
            let quad = averaged_current_quadrature(&params, width, 1e-13).unwrap();
            let scale = arctan.abs().max(1e-30);
            assert!(
                (arctan - quad).abs() <= 1e-8 * scale,
                "δ={delta}, Δ={width}: arctan {arctan:.15e} vs quadrature {quad:.15e}"
            );
        }
    }
}

#[test]
fn averaging_washes_out_the_current_monotonically() {
    // At δ = 0 the unaveraged current is maximal at the window center, so
    // widening the window can only reduce the average.
    for phi in [0.0, 0.7, 2.5, std::f64::consts::PI] {
        let params = ModelParams {
            phi,
            ..reference_point()
        };
        let mut previous = current_closed_form(&params);
        for k in 1..=40 {
            let width = 0.0025 * k as f64;
            let averaged = averaged_current(&params, width).unwrap();
            assert!(
                averaged < previous,
                "φ={phi}: Ī(Δ={width}) = {averaged:.12e} did not decrease from {previous:.12e}"
            );
            previous = averaged;
        }
    }
}

#[test]
fn interference_extrema_stay_put_as_the_window_widens() {
    // The φ-positions of the current extrema are set by |Ω|(φ), which the
    // level average does not touch.
    let count = 129;
    let locate_extrema = |width: f64| -> (usize, usize) {
        let mut max_at = 0;
        let mut min_at = 0;
        let mut max_val = f64::MIN;
        let mut min_val = f64::MAX;
        for k in 0..count {
            let phi = std::f64::consts::TAU * k as f64 / (count - 1) as f64;
            let params = ModelParams {
                phi,
                ..reference_point()
            };
            let value = averaged_current(&params, width).unwrap();
            if value > max_val {
                max_val = value;
                max_at = k;
            }
            if value < min_val {
                min_val = value;
                min_at = k;
            }
        }
        (max_at, min_at)
    };
    let narrow = locate_extrema(1e-4);
    for width in [0.01, 0.05, 0.1] {
        let wide = locate_extrema(width);
        assert!(
            wide.0.abs_diff(narrow.0) <= 1,
            "Δ={width}: maximum moved from grid point {} to {}",
            narrow.0,
            wide.0
        );
        assert!(
            wide.1.abs_diff(narrow.1) <= 1,
            "Δ={width}: minimum moved from grid point {} to {}",
            narrow.1,
            wide.1
        );
    }
}

#[test]
fn blocked_interferometer_averages_to_zero() {
    // Dyadic couplings so the two arms cancel exactly in floating point:
    // λ̃₁₂ = 2(0.125)²= 0.03125 = λ₀ and cos φ = 1 give Ω = 0.
    let params = ModelParams {
        lambda0: 0.03125,
        lambda1: 0.125,
        lambda2: 0.125,
        ..reference_point()
    };
    assert_eq!(averaged_current(&params, 0.05).unwrap(), 0.0);
}
