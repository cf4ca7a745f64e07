//! Fixed-step time propagation of the master equation.

use crate::liouvillian::Liouvillian;
use crate::EngineError;
use linalg_core::{check_finite, devectorize, max_abs, tolerances, vectorize, CMatrix, CVector, C64};

/// Result of a propagation run.
#[derive(Debug, Clone)]
pub struct Evolution {
    /// The state at the final time (not hermitized; propagation is linear).
    pub rho: CMatrix,
    /// |Tr ρ(t_final) − Tr ρ(0)| accumulated over the run.
    pub trace_drift: f64,
    /// Number of steps taken.
    pub steps: usize,
    /// Step size used.
    pub dt: f64,
}

/// The maximally mixed state 1/d — a convenient, always-valid initial state.
pub fn maximally_mixed(dim: usize) -> CMatrix {
    let mut rho = CMatrix::zeros((dim, dim));
    let p = C64::new(1.0 / dim as f64, 0.0);
    for k in 0..dim {
        rho[(k, k)] = p;
    }
    rho
}

fn trace_of(v: &CVector, dim: usize) -> C64 {
    (0..dim).map(|k| v[k * dim + k]).sum()
}

/// Propagate ρ̇ = L(ρ) from `rho0` over `t_final` in `steps` equal
/// fourth-order Runge–Kutta steps.
///
/// Two guards protect the result: the step must satisfy
/// dt · max|L| ≤ [`tolerances::STEP_GUARD`] (stability/accuracy of the fixed
/// step), and the trace may not drift by more than
/// [`tolerances::EVOLVE_TRACE_DRIFT`] over the whole run (accumulated
/// integration error).
pub fn evolve(
    liouvillian: &Liouvillian,
    rho0: &CMatrix,
    t_final: f64,
    steps: usize,
) -> Result<Evolution, EngineError> {
    if rho0.nrows() != liouvillian.dim || rho0.ncols() != liouvillian.dim {
        return Err(EngineError::ShapeMismatch {
            context: format!(
                "initial state is {}×{} but generator acts on {}×{} matrices",
                rho0.nrows(),
                rho0.ncols(),
                liouvillian.dim,
                liouvillian.dim
            ),
        });
    }
    check_finite(rho0).map_err(EngineError::Linalg)?;
    if !t_final.is_finite() || t_final < 0.0 {
        return Err(EngineError::NonFiniteInput {
            context: format!("final time must be finite and non-negative, got {t_final}"),
        });
    }
    if steps == 0 {
        return Err(EngineError::NonFiniteInput {
            context: "step count must be at least one".to_string(),
        });
    }

    let dt = t_final / steps as f64;
    let rate_scale = max_abs(&liouvillian.total);
    let product = dt * rate_scale;
    if product > tolerances::STEP_GUARD {
        return Err(EngineError::StepTooLarge {
            dt,
            product,
            guard: tolerances::STEP_GUARD,
        });
    }

    let l = &liouvillian.total;
    let mut v = vectorize(rho0);
    let trace_initial = trace_of(&v, liouvillian.dim);

    let half = C64::new(0.5 * dt, 0.0);
    let full = C64::new(dt, 0.0);
    let sixth = C64::new(dt / 6.0, 0.0);
    let two = C64::new(2.0, 0.0);
    for _ in 0..steps {
        let k1 = l.dot(&v);
        let k2 = l.dot(&(&v + &k1.mapv(|z| z * half)));
        let k3 = l.dot(&(&v + &k2.mapv(|z| z * half)));
        let k4 = l.dot(&(&v + &k3.mapv(|z| z * full)));
        let increment = (&k1 + &k2.mapv(|z| z * two) + &k3.mapv(|z| z * two) + &k4)
            .mapv(|z| z * sixth);
        v += &increment;
    }

    let trace_drift = (trace_of(&v, liouvillian.dim) - trace_initial).norm();
    if trace_drift > tolerances::EVOLVE_TRACE_DRIFT {
        return Err(EngineError::TraceDrift {
            drift: trace_drift,
            bound: tolerances::EVOLVE_TRACE_DRIFT,
        });
    }

    Ok(Evolution {
        rho: devectorize(&v).map_err(EngineError::Linalg)?,
        trace_drift,
        steps,
        dt,
    })
}
