//! Column-stacking vectorization and the superoperator sandwich identity.
//!
//! Density matrices live in d×d space; master-equation generators act on
//! them linearly, so they are d²×d² matrices over the **column-stacked**
//! vector `vec(ρ)`: element (i, j) of ρ lands at flat index `j·d + i`
//! (column j is contiguous). Under that convention the sandwich identity is
//!
//! ```text
//! vec(X · ρ · Y) = (Yᵀ ⊗ X) · vec(ρ)
//! ```
//!
//! (`Yᵀ` is the plain transpose, *not* the adjoint), which is the single
//! identity every Liouvillian builder in the workspace is assembled from.

use crate::matrix::kron;
use crate::{CMatrix, CVector, LinalgError};

/// Column-stacks a square matrix: (i, j) ↦ flat index `j·d + i`.
pub fn vectorize(m: &CMatrix) -> CVector {
    let d = m.nrows();
    let mut v = CVector::zeros(d * d);
    for j in 0..d {
        for i in 0..d {
            v[j * d + i] = m[(i, j)];
        }
    }
    v
}

/// Inverse of [`vectorize`]: rebuilds the d×d matrix from a length-d² vector.
///
/// Returns [`LinalgError::NotSquareLength`] when the length has no integer
/// square root.
pub fn devectorize(v: &CVector) -> Result<CMatrix, LinalgError> {
    let len = v.len();
    let d = (len as f64).sqrt().round() as usize;
    if d * d != len {
        return Err(LinalgError::NotSquareLength { len });
    }
    let mut m = CMatrix::zeros((d, d));
    for j in 0..d {
        for i in 0..d {
            m[(i, j)] = v[j * d + i];
        }
    }
    Ok(m)
}

/// The d²×d² matrix of the map ρ ↦ X·ρ·Y under column stacking: `Yᵀ ⊗ X`.
pub fn sandwich_superoperator(x: &CMatrix, y: &CMatrix) -> CMatrix {
    kron(&y.t().to_owned(), x)
}
