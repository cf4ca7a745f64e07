//! Particle currents into the leads.

use crate::liouvillian::Liouvillian;
use crate::EngineError;
use linalg_core::{dagger, CMatrix, C64};

/// The complex trace x = Tr[(d† D⁻ − D⁺ d†) ρ] whose Hermitian average is
/// the lead current. Exposed so callers can inspect the imaginary part,
/// which cancels in the physical current.
pub fn lead_current_trace(
    liouvillian: &Liouvillian,
    lead_index: usize,
    rho: &CMatrix,
) -> Result<C64, EngineError> {
    let ops = liouvillian
        .dissipators
        .get(lead_index)
        .ok_or(EngineError::LeadIndexOutOfRange {
            index: lead_index,
            count: liouvillian.dissipators.len(),
        })?;
    let d = liouvillian.dim;
    if rho.nrows() != d || rho.ncols() != d {
        return Err(EngineError::ShapeMismatch {
            context: format!(
                "state is {}×{} but generator acts on {}×{} matrices",
                rho.nrows(),
                rho.ncols(),
                d,
                d
            ),
        });
    }

    let coupling_dag = dagger(&ops.coupling);
    let m = &coupling_dag.dot(&ops.d_minus) - &ops.d_plus.dot(&coupling_dag);
    // Tr[M ρ] without forming the full product.
    let mut x = C64::new(0.0, 0.0);
    for i in 0..d {
        for j in 0..d {
            x += m[(i, j)] * rho[(j, i)];
        }
    }
    Ok(x)
}

/// Particle current into lead `lead_index`:
///
/// ```text
///     I_j = ½ Tr[ (d_j† D_j⁻ − D_j⁺ d_j†) ρ + h.c. ]
/// ```
///
/// Positive values mean electrons flow from the system into the lead, so at
/// steady state a drain lead reports a positive transport current and the
/// source lead reports its negative.
pub fn lead_current(
    liouvillian: &Liouvillian,
    lead_index: usize,
    rho: &CMatrix,
) -> Result<f64, EngineError> {
    // ½(x + x̄) is exactly the real part of the trace.
    Ok(lead_current_trace(liouvillian, lead_index, rho)?.re)
}
