//! Steady state via the generator null space with trace normalization.

use crate::liouvillian::Liouvillian;
use crate::EngineError;
use linalg_core::{
    hermitian_eigendecompose, hermitize, max_abs, tolerances, vectorize, CMatrix, CVector, C64,
    LinalgError, LuDecomposition,
};

/// A solved steady state plus the diagnostics used to accept it.
#[derive(Debug, Clone)]
pub struct SteadyState {
    /// The steady density matrix (hermitized, trace one).
    pub rho: CMatrix,
    /// Largest entry of |L vec(ρ)| — how well ρ annihilates the generator.
    pub residual: f64,
    /// |Tr ρ − 1|.
    pub trace_error: f64,
    /// Smallest eigenvalue of ρ. Zero or slightly negative at numerical
    /// precision is normal; a value below the positivity floor indicates
    /// an unphysical state and is surfaced in `positivity_warning`.
    pub min_eigenvalue: f64,
    /// Set when `min_eigenvalue` falls below the accepted floor; carries the
    /// offending eigenvalue. A warning rather than an error: callers decide
    /// whether the run can still be used.
    pub positivity_warning: Option<f64>,
}

/// Solve L(ρ) = 0 with Tr ρ = 1 by replacing the redundant first row of the
/// vectorized generator with the trace functional.
///
/// The first row is the equation for ρ̇_(0,0); since every column of a
/// trace-preserving generator sums to zero over the diagonal positions, that
/// row is linearly dependent on the others and can carry the normalization
/// instead. If the modified system is still singular the steady state is not
/// unique and [`EngineError::DegenerateSteadyState`] is returned.
pub fn steady_state(liouvillian: &Liouvillian) -> Result<SteadyState, EngineError> {
    let d = liouvillian.dim;
    let dd = d * d;

    let mut a = liouvillian.total.clone();
    for col in 0..dd {
        a[(0, col)] = C64::new(0.0, 0.0);
    }
    for k in 0..d {
        a[(0, k * d + k)] = C64::new(1.0, 0.0);
    }
    let mut b = CVector::zeros(dd);
    b[0] = C64::new(1.0, 0.0);

    let lu = LuDecomposition::new(&a).map_err(EngineError::Linalg)?;
    let v = match lu.solve(&b) {
        Ok(v) => v,
        Err(LinalgError::Singular { estimated_rank, dim }) => {
            return Err(EngineError::DegenerateSteadyState {
                dim,
                estimated_rank,
            })
        }
        Err(e) => return Err(EngineError::Linalg(e)),
    };

    let mut rho = CMatrix::zeros((d, d));
    for col in 0..d {
        for row in 0..d {
            rho[(row, col)] = v[col * d + row];
        }
    }
    let rho = hermitize(&rho);

    // Residual against the untouched generator.
    let residual = liouvillian
        .total
        .dot(&vectorize(&rho))
        .iter()
        .fold(0.0_f64, |acc, z| acc.max(z.norm()));
    let residual_bound =
        tolerances::RELATIVE_RESIDUAL * f64::max(1.0, max_abs(&liouvillian.total));
    if residual > residual_bound {
        return Err(EngineError::ResidualTooLarge {
            residual,
            bound: residual_bound,
        });
    }

    let trace: C64 = (0..d).map(|k| rho[(k, k)]).sum();
    let trace_error = (trace - C64::new(1.0, 0.0)).norm();
    if trace_error > tolerances::TRACE_UNITY {
        return Err(EngineError::TraceNotUnity {
            trace_error,
            bound: tolerances::TRACE_UNITY,
        });
    }

    let eigen = hermitian_eigendecompose(&rho).map_err(EngineError::Linalg)?;
    let min_eigenvalue = eigen.values[0];
    let positivity_warning = if min_eigenvalue < tolerances::POSITIVITY_FLOOR {
        Some(min_eigenvalue)
    } else {
        None
    };

    Ok(SteadyState {
        rho,
        residual,
        trace_error,
        min_eigenvalue,
        positivity_warning,
    })
}
