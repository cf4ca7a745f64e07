//! Hermitian eigendecomposition via fixed-order cyclic Jacobi rotations.
//!
//! Jacobi is chosen over tridiagonalization+QR because at dim ≤ 24 it is
//! plenty fast, it is simple enough to audit, and — crucially for
//! reproducible test fixtures — it is fully deterministic: rotations are
//! applied in a fixed (p, q) sweep order with no pivot searches, so the same
//! input bytes produce the same output bytes on every run and host.

use crate::matrix::{check_finite, check_square, dagger, hermiticity_defect, max_abs};
use crate::tolerances;
use crate::{C64, CMatrix, LinalgError};

/// Result of a Hermitian eigendecomposition: `A = V · diag(values) · V†`.
#[derive(Debug, Clone)]
pub struct EigenSystem {
    /// Real eigenvalues in ascending order.
    pub values: Vec<f64>,
    /// Unitary matrix whose k-th **column** is the eigenvector of
    /// `values[k]`.
    pub vectors: CMatrix,
}

impl EigenSystem {
    /// Reconstructs V · diag(values) · V† (used by residual checks).
    pub fn reconstruct(&self) -> CMatrix {
        let n = self.values.len();
        let mut vl = self.vectors.clone();
        for k in 0..n {
            let lambda = C64::new(self.values[k], 0.0);
            for i in 0..n {
                vl[(i, k)] *= lambda;
            }
        }
        vl.dot(&dagger(&self.vectors))
    }

    /// Transforms an operator into the eigenbasis: `V† · M · V`.
    pub fn to_eigenbasis(&self, m: &CMatrix) -> CMatrix {
        dagger(&self.vectors).dot(m).dot(&self.vectors)
    }

    /// Transforms an operator back from the eigenbasis: `V · M · V†`.
    pub fn from_eigenbasis(&self, m: &CMatrix) -> CMatrix {
        self.vectors.dot(m).dot(&dagger(&self.vectors))
    }
}

/// Frobenius norm of the strictly off-diagonal part.
fn off_diagonal_norm(a: &CMatrix) -> f64 {
    let n = a.nrows();
    let mut s = 0.0_f64;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Contract (checked, not assumed):
/// - input must pass the [`tolerances::HERMITICITY`] gate, else
///   [`LinalgError::NotHermitian`] with the measured defect;
/// - returned eigenvalues are real and ascending; ties keep the iteration's
///   deterministic ordering;
/// - ‖V·Λ·V† − A‖max ≤ [`tolerances::RELATIVE_RESIDUAL`] × max|A| and
///   ‖V†V − I‖max ≲ dim × machine ε (verified by the test suite).
pub fn hermitian_eigendecompose(a: &CMatrix) -> Result<EigenSystem, LinalgError> {
    let n = check_square(a)?;
    check_finite(a)?;
    let scale = max_abs(a);
    if scale > 0.0 {
        let defect = hermiticity_defect(a);
        let bound = tolerances::HERMITICITY * scale;
        if defect > bound {
            return Err(LinalgError::NotHermitian {
                max_asymmetry: defect,
                bound,
                tolerance: tolerances::HERMITICITY,
                scale,
            });
        }
    }

    // Work on the exactly-Hermitian projection so rounding asymmetry in the
    // input cannot seed drift in the rotations.
    let mut m = crate::matrix::hermitize(a);
    let mut v: CMatrix = ndarray::Array2::eye(n);

    let threshold = tolerances::JACOBI_OFF_DIAGONAL * scale.max(f64::MIN_POSITIVE) * n as f64;
    let mut converged = scale == 0.0 || off_diagonal_norm(&m) <= threshold;
    let mut sweeps_used = 0;

    while !converged && sweeps_used < tolerances::JACOBI_MAX_SWEEPS {
        sweeps_used += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
        converged = off_diagonal_norm(&m) <= threshold;
    }
    if !converged {
        return Err(LinalgError::NoConvergence {
            sweeps: sweeps_used,
            off_norm: off_diagonal_norm(&m),
            threshold,
        });
    }

    // Ascending sort with a stable permutation applied to the columns of V.
    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| m[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).expect("finite eigenvalues"));

    let values: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let mut vectors = CMatrix::zeros((n, n));
    for (dst, &src) in order.iter().enumerate() {
        for i in 0..n {
            vectors[(i, dst)] = v[(i, src)];
        }
    }
    Ok(EigenSystem { values, vectors })
}

/// One complex Jacobi rotation annihilating the (p, q) element.
///
/// With a_pq = |a_pq|·e^{iβ}, the 2×2 block is phase-reduced to a real
/// symmetric problem and rotated by the classical smaller-angle choice
/// t = sgn(τ)/(|τ| + √(1+τ²)), τ = (a_qq − a_pp)/(2|a_pq|). The full unitary
/// is J = 1 except J_pp = c, J_pq = s, J_qp = −s·e^{−iβ}, J_qq = c·e^{−iβ};
/// the update is A ← J†AJ, V ← V·J, touching only rows/columns p and q.
fn rotate(m: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let apq = m[(p, q)];
    let aabs = apq.norm();
    if aabs == 0.0 || !aabs.is_normal() {
        // Nothing to annihilate (or subnormal noise): keep exact zeros exact.
        return;
    }
    let n = m.nrows();
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;
    let phase = apq / aabs; // e^{iβ}
    let tau = (aqq - app) / (2.0 * aabs);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let jpp = C64::new(c, 0.0);
    let jpq = C64::new(s, 0.0);
    let jqp = -C64::new(s, 0.0) * phase.conj();
    let jqq = C64::new(c, 0.0) * phase.conj();

    // A ← A·J (columns p, q), then A ← J†·A (rows p, q).
    for k in 0..n {
        let akp = m[(k, p)];
        let akq = m[(k, q)];
        m[(k, p)] = akp * jpp + akq * jqp;
        m[(k, q)] = akp * jpq + akq * jqq;
    }
    for k in 0..n {
        let apk = m[(p, k)];
        let aqk = m[(q, k)];
        m[(p, k)] = jpp.conj() * apk + jqp.conj() * aqk;
        m[(q, k)] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    // Pin the annihilated pair and the rotated diagonal to exact values:
    // they are real/zero analytically, and keeping them so stops error
    // accumulation across sweeps.
    m[(p, q)] = C64::new(0.0, 0.0);
    m[(q, p)] = C64::new(0.0, 0.0);
    m[(p, p)] = C64::new(m[(p, p)].re, 0.0);
    m[(q, q)] = C64::new(m[(q, q)].re, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * jpp + vkq * jqp;
        v[(k, q)] = vkp * jpq + vkq * jqq;
    }
}
