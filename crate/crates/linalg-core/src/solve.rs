//! Dense complex linear solvers.
//!
//! [`LuDecomposition`] is a partial-pivoted LU factorization used for the
//! square systems that dominate this workspace (steady-state equations after
//! the trace-normalization row replacement). [`solve_linear`] wraps it with
//! an explicit residual contract so a silently ill-conditioned solve turns
//! into a hard error instead of a wrong number. [`solve_least_squares`] is a
//! pseudo-inverse fallback (via the normal equations and the crate's own
//! Hermitian eigensolver) for diagnostics on singular systems.

use crate::eigen::hermitian_eigendecompose;
use crate::matrix::{check_finite, check_square, dagger, max_abs};
use crate::tolerances;
use crate::{C64, CMatrix, CVector, LinalgError};

/// Partial-pivoted LU factorization `P·A = L·U` of a square complex matrix.
///
/// The factorization always completes (exactly singular columns yield zero
/// pivots); rank problems surface when [`LuDecomposition::solve`] is called.
#[derive(Debug, Clone)]
pub struct LuDecomposition {
    /// Packed factors: U on and above the diagonal, unit-L strictly below.
    lu: CMatrix,
    /// Row permutation: `pivots[k]` is the original row index that ended up
    /// in row k.
    pivots: Vec<usize>,
    /// max|A| of the input, retained for relative singularity thresholds.
    scale: f64,
}

impl LuDecomposition {
    /// Factorizes `a`. Fails only on shape/finiteness problems; an exactly
    /// singular matrix factorizes with zero pivots and is reported by
    /// [`Self::solve`].
    pub fn new(a: &CMatrix) -> Result<Self, LinalgError> {
        let n = check_square(a)?;
        check_finite(a)?;
        let scale = max_abs(a);
        let mut lu = a.clone();
        let mut pivots: Vec<usize> = (0..n).collect();

        for k in 0..n {
            // Partial pivot: largest modulus on or below the diagonal.
            let mut best = k;
            let mut best_abs = lu[(k, k)].norm();
            for i in (k + 1)..n {
                let v = lu[(i, k)].norm();
                if v > best_abs {
                    best = i;
                    best_abs = v;
                }
            }
            if best != k {
                for j in 0..n {
                    let tmp = lu[(k, j)];
                    lu[(k, j)] = lu[(best, j)];
                    lu[(best, j)] = tmp;
                }
                pivots.swap(k, best);
            }
            let pivot = lu[(k, k)];
            if pivot.norm() == 0.0 {
                continue; // exactly singular column; leave zeros in place
            }
            for i in (k + 1)..n {
                let factor = lu[(i, k)] / pivot;
                lu[(i, k)] = factor;
                for j in (k + 1)..n {
                    let lkj = lu[(k, j)];
                    lu[(i, j)] -= factor * lkj;
                }
            }
        }
        Ok(Self { lu, pivots, scale })
    }

    /// Dimension of the factorized matrix.
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Number of pivots exceeding the relative rank cutoff
    /// [`tolerances::RANK_CUTOFF`] × max|A|.
    pub fn estimated_rank(&self) -> usize {
        let cutoff = tolerances::RANK_CUTOFF * self.scale.max(f64::MIN_POSITIVE);
        (0..self.dim())
            .filter(|&k| self.lu[(k, k)].norm() > cutoff)
            .count()
    }

    /// Solves `A·x = b` by forward/back substitution.
    ///
    /// Returns [`LinalgError::Singular`] (with the estimated rank) if any
    /// pivot falls below the relative cutoff — the substitution would
    /// otherwise amplify noise without bound.
    pub fn solve(&self, b: &CVector) -> Result<CVector, LinalgError> {
        let n = self.dim();
        if b.len() != n {
            return Err(LinalgError::DimensionMismatch {
                context: format!("rhs length {} for {n}×{n} system", b.len()),
            });
        }
        let rank = self.estimated_rank();
        if rank < n {
            return Err(LinalgError::Singular {
                estimated_rank: rank,
                dim: n,
            });
        }
        // Forward substitution on the permuted rhs (L has unit diagonal).
        let mut x = CVector::zeros(n);
        for i in 0..n {
            let mut sum = b[self.pivots[i]];
            for j in 0..i {
                sum -= self.lu[(i, j)] * x[j];
            }
            x[i] = sum;
        }
        // Back substitution through U.
        for i in (0..n).rev() {
            let mut sum = x[i];
            for j in (i + 1)..n {
                sum -= self.lu[(i, j)] * x[j];
            }
            x[i] = sum / self.lu[(i, i)];
        }
        Ok(x)
    }
}

/// Solves the square system `A·x = b` and **verifies** the solution.
///
/// After the LU solve the residual `max|A·x − b|` is measured against
/// [`tolerances::RELATIVE_RESIDUAL`] × max(max|A|·max|x|, max|b|); a breach
/// returns [`LinalgError::ResidualTooLarge`] rather than a quietly inaccurate
/// vector.
pub fn solve_linear(a: &CMatrix, b: &CVector) -> Result<CVector, LinalgError> {
    let lu = LuDecomposition::new(a)?;
    let x = lu.solve(b)?;

    let ax = a.dot(&x);
    let mut residual = 0.0_f64;
    for i in 0..b.len() {
        residual = residual.max((ax[i] - b[i]).norm());
    }
    let x_scale = x.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()));
    let b_scale = b.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()));
    let bound = tolerances::RELATIVE_RESIDUAL
        * (max_abs(a) * x_scale).max(b_scale).max(f64::MIN_POSITIVE);
    if residual > bound {
        return Err(LinalgError::ResidualTooLarge { residual, bound });
    }
    Ok(x)
}

/// Minimum-norm least-squares solution of `A·x ≈ b` via the normal equations.
///
/// `A†A` is Hermitian positive semidefinite; its eigendecomposition gives the
/// pseudo-inverse with eigenvalues below [`tolerances::RANK_CUTOFF`] × λ_max
/// truncated. Intended for diagnostics on (near-)singular systems — for
/// well-posed square systems prefer [`solve_linear`], which is cheaper and
/// carries a residual guarantee.
pub fn solve_least_squares(a: &CMatrix, b: &CVector) -> Result<CVector, LinalgError> {
    if a.nrows() != b.len() {
        return Err(LinalgError::DimensionMismatch {
            context: format!(
                "rhs length {} for {}×{} matrix",
                b.len(),
                a.nrows(),
                a.ncols()
            ),
        });
    }
    check_finite(a)?;
    let adag = dagger(a);
    let ata = adag.dot(a);
    let atb = adag.dot(b);
    let eig = hermitian_eigendecompose(&ata)?;
    let lambda_max = eig.values.last().copied().unwrap_or(0.0).max(0.0);
    let cutoff = tolerances::RANK_CUTOFF * lambda_max.max(f64::MIN_POSITIVE);

    // x = Σ_k (v_k† · A†b / λ_k) v_k over retained eigenpairs.
    let n = a.ncols();
    let mut x = CVector::zeros(n);
    for k in 0..n {
        let lambda = eig.values[k];
        if lambda <= cutoff {
            continue;
        }
        let mut coeff = C64::new(0.0, 0.0);
        for i in 0..n {
            coeff += eig.vectors[(i, k)].conj() * atb[i];
        }
        coeff /= C64::new(lambda, 0.0);
        for i in 0..n {
            x[i] += coeff * eig.vectors[(i, k)];
        }
    }
    Ok(x)
}
