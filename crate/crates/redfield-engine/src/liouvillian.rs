//! Assembly of the master-equation generator as a dense superoperator.

use crate::dissipator::DissipatorOperators;
use crate::leads::LeadSpec;
use crate::EngineError;
use linalg_core::{
    check_finite, check_square, dagger, devectorize, hermitian_eigendecompose,
    hermiticity_defect, identity, max_abs, sandwich_superoperator, tolerances, vectorize,
    CMatrix, C64, LinalgError,
};

/// The generator of the master equation, stored per channel.
///
/// All blocks are (d²×d²) superoperators acting on column-stacked density
/// matrices; `total` is always the exact sum of the parts.
#[derive(Debug, Clone)]
pub struct Liouvillian {
    /// Hilbert-space dimension d.
    pub dim: usize,
    /// Coherent part −i[H, ·].
    pub coherent: CMatrix,
    /// One dissipative component per lead, in the order the leads were given.
    pub lead_components: Vec<CMatrix>,
    /// Pure-dephasing component γ𝒟[ŝ], if a dephasing channel was attached.
    pub dephasing: Option<CMatrix>,
    /// Sum of every component above.
    pub total: CMatrix,
    /// The frequency-weighted lead operators, kept for current evaluation.
    pub dissipators: Vec<DissipatorOperators>,
}

impl Liouvillian {
    /// Apply the generator to a density matrix: ρ̇ = L(ρ).
    pub fn apply(&self, rho: &CMatrix) -> Result<CMatrix, EngineError> {
        if rho.nrows() != self.dim || rho.ncols() != self.dim {
            return Err(EngineError::ShapeMismatch {
                context: format!(
                    "state is {}×{} but generator acts on {}×{} matrices",
                    rho.nrows(),
                    rho.ncols(),
                    self.dim,
                    self.dim
                ),
            });
        }
        let v = vectorize(rho);
        let out = self.total.dot(&v);
        devectorize(&out).map_err(EngineError::Linalg)
    }
}

/// Accumulate `coeff · vec(X ρ Y)` into a superoperator under construction.
fn accumulate(acc: &mut CMatrix, coeff: C64, x: &CMatrix, y: &CMatrix) {
    let term = sandwich_superoperator(x, y);
    acc.zip_mut_with(&term, |a, t| *a += coeff * *t);
}

/// Superoperator of the coherent part −i[H, ·].
fn coherent_superoperator(hamiltonian: &CMatrix) -> CMatrix {
    let n = hamiltonian.nrows();
    let id = identity(n);
    let mut out = CMatrix::zeros((n * n, n * n));
    let minus_i = C64::new(0.0, -1.0);
    accumulate(&mut out, minus_i, hamiltonian, &id); // −i Hρ
    accumulate(&mut out, -minus_i, &id, hamiltonian); // +i ρH
    out
}

/// Superoperator of one lead's dissipative part,
/// −½{ [d†, D⁻ρ − ρD⁺] + h.c. },
/// expanded into its eight sandwich terms with A = d†, B = D⁻, C = D⁺.
fn lead_superoperator(ops: &DissipatorOperators) -> CMatrix {
    let n = ops.coupling.nrows();
    let id = identity(n);
    let a = dagger(&ops.coupling);
    let b = &ops.d_minus;
    let c = &ops.d_plus;
    let a_dag = dagger(&a);
    let b_dag = dagger(b);
    let c_dag = dagger(c);

    let half = C64::new(-0.5, 0.0);
    let mut out = CMatrix::zeros((n * n, n * n));
    // [A, Bρ − ρC] = ABρ − AρC − BρA + ρCA
    accumulate(&mut out, half, &a.dot(b), &id);
    accumulate(&mut out, -half, &a, c);
    accumulate(&mut out, -half, b, &a);
    accumulate(&mut out, half, &id, &c.dot(&a));
    // Hermitian conjugate of the four maps above.
    accumulate(&mut out, half, &id, &b_dag.dot(&a_dag));
    accumulate(&mut out, -half, &c_dag, &a_dag);
    accumulate(&mut out, -half, &a_dag, &b_dag);
    accumulate(&mut out, half, &a_dag.dot(&c_dag), &id);
    out
}

/// Superoperator of the pure-dephasing channel γ𝒟[ŝ], with
/// 𝒟[s]ρ = sρs† − ½{s†s, ρ}.
fn dephasing_superoperator(rate: f64, op: &CMatrix) -> CMatrix {
    let n = op.nrows();
    let id = identity(n);
    let op_dag = dagger(op);
    let op_sq = op_dag.dot(op);
    let g = C64::new(rate, 0.0);
    let half_g = C64::new(-0.5 * rate, 0.0);
    let mut out = CMatrix::zeros((n * n, n * n));
    accumulate(&mut out, g, op, &op_dag);
    accumulate(&mut out, half_g, &op_sq, &id);
    accumulate(&mut out, half_g, &id, &op_sq);
    out
}

/// Build the full generator from a Hamiltonian, a set of leads, and an
/// optional dephasing channel.
///
/// Each lead is a `(coupling operator, lead description)` pair; the coupling
/// operator is the system operator d_j whose quanta the lead exchanges. The
/// Hamiltonian eigenbasis is computed once and shared by all thermal leads;
/// deep-bias (flat-occupation) leads never touch it, so their components are
/// exact Lindblad dissipators by construction.
pub fn build_liouvillian(
    hamiltonian: &CMatrix,
    leads: &[(&CMatrix, LeadSpec)],
    dephasing: Option<(f64, &CMatrix)>,
) -> Result<Liouvillian, EngineError> {
    check_square(hamiltonian).map_err(EngineError::Linalg)?;
    check_finite(hamiltonian).map_err(EngineError::Linalg)?;
    let defect = hermiticity_defect(hamiltonian);
    let scale = max_abs(hamiltonian).max(f64::MIN_POSITIVE);
    if defect > tolerances::HERMITICITY * scale {
        return Err(EngineError::Linalg(LinalgError::NotHermitian {
            max_asymmetry: defect,
            bound: tolerances::HERMITICITY * scale,
            tolerance: tolerances::HERMITICITY,
            scale,
        }));
    }
    let n = hamiltonian.nrows();

    for (coupling, _) in leads {
        if coupling.nrows() != n || coupling.ncols() != n {
            return Err(EngineError::ShapeMismatch {
                context: format!(
                    "lead coupling is {}×{} but the Hamiltonian is {n}×{n}",
                    coupling.nrows(),
                    coupling.ncols()
                ),
            });
        }
    }

    // One shared eigendecomposition, computed only if some lead needs
    // frequency weighting.
    let needs_eigen = leads.iter().any(|(_, spec)| !spec.occupation.is_flat());
    let eigen = if needs_eigen {
        Some(hermitian_eigendecompose(hamiltonian).map_err(EngineError::Linalg)?)
    } else {
        None
    };

    let mut dissipators = Vec::with_capacity(leads.len());
    let mut lead_components = Vec::with_capacity(leads.len());
    for (coupling, spec) in leads {
        let ops = DissipatorOperators::build(coupling, *spec, eigen.as_ref())?;
        lead_components.push(lead_superoperator(&ops));
        dissipators.push(ops);
    }

    let dephasing_component = match dephasing {
        Some((rate, op)) => {
            if !rate.is_finite() || rate < 0.0 {
                return Err(EngineError::InvalidRate {
                    name: "dephasing rate",
                    value: rate,
                });
            }
            if op.nrows() != n || op.ncols() != n {
                return Err(EngineError::ShapeMismatch {
                    context: format!(
                        "dephasing operator is {}×{} but the Hamiltonian is {n}×{n}",
                        op.nrows(),
                        op.ncols()
                    ),
                });
            }
            check_finite(op).map_err(EngineError::Linalg)?;
            Some(dephasing_superoperator(rate, op))
        }
        None => None,
    };

    let coherent = coherent_superoperator(hamiltonian);
    let mut total = coherent.clone();
    for component in &lead_components {
        total.zip_mut_with(component, |t, c| *t += *c);
    }
    if let Some(component) = &dephasing_component {
        total.zip_mut_with(component, |t, c| *t += *c);
    }

    Ok(Liouvillian {
        dim: n,
        coherent,
        lead_components,
        dephasing: dephasing_component,
        total,
        dissipators,
    })
}
