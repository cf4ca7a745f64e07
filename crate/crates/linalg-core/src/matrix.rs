//! Small dense-matrix helpers shared by every crate in the workspace.

use crate::{C64, CMatrix, LinalgError};
use crate::tolerances;

/// Conjugate transpose A†.
pub fn dagger(a: &CMatrix) -> CMatrix {
    a.t().mapv(|z| z.conj())
}

/// Largest elementwise modulus max_ij |A_ij| (0 for an empty matrix).
pub fn max_abs(a: &CMatrix) -> f64 {
    a.iter().fold(0.0_f64, |m, z| m.max(z.norm()))
}

/// n×n complex identity.
pub fn identity(n: usize) -> CMatrix {
    ndarray::Array2::eye(n)
}

/// Kronecker product A ⊗ B (row-major block convention:
/// (A⊗B)[(i·p+k, j·q+l)] = A[(i,j)]·B[(k,l)] for B of shape p×q).
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (ar, ac) = a.dim();
    let (br, bc) = b.dim();
    let mut out = CMatrix::zeros((ar * br, ac * bc));
    for i in 0..ar {
        for j in 0..ac {
            let aij = a[(i, j)];
            if aij == C64::new(0.0, 0.0) {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    out[(i * br + k, j * bc + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Errors unless the matrix is square.
pub fn check_square(a: &CMatrix) -> Result<usize, LinalgError> {
    let (r, c) = a.dim();
    if r != c {
        return Err(LinalgError::NotSquare { rows: r, cols: c });
    }
    Ok(r)
}

/// Errors if any entry is NaN or infinite.
pub fn check_finite(a: &CMatrix) -> Result<(), LinalgError> {
    if a.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Ok(())
    } else {
        Err(LinalgError::NonFinite)
    }
}

/// max_ij |A_ij − conj(A_ji)|, the absolute Hermiticity defect.
pub fn hermiticity_defect(a: &CMatrix) -> f64 {
    let n = a.nrows();
    let mut worst = 0.0_f64;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((a[(i, j)] - a[(j, i)].conj()).norm());
        }
    }
    worst
}

/// Whether A passes the workspace Hermiticity gate
/// (max|A − A†| ≤ [`tolerances::HERMITICITY`] × max|A|).
pub fn is_hermitian(a: &CMatrix) -> bool {
    let scale = max_abs(a).max(f64::MIN_POSITIVE);
    hermiticity_defect(a) <= tolerances::HERMITICITY * scale
}

/// Exactly Hermitian projection (A + A†)/2, used to strip rounding noise
/// before handing a matrix to the eigensolver.
pub fn hermitize(a: &CMatrix) -> CMatrix {
    let ad = dagger(a);
    (a + &ad).mapv(|z| 0.5 * z)
}
