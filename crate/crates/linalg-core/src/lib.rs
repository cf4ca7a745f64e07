//! Dense complex linear algebra for small quantum systems.
//!
//! The simulator works with Hamiltonians of dimension ≤ 24 and superoperators
//! of dimension ≤ 576, a regime where cache-friendly dense kernels with no
//! external backend are both fastest and fully deterministic. This crate
//! provides the three primitives everything else is built on:
//!
//! - [`hermitian_eigendecompose`] — fixed-order cyclic Jacobi iteration for
//!   Hermitian matrices (deterministic, quadratically convergent),
//! - [`solve_linear`] / [`solve_least_squares`] — LU with partial pivoting,
//!   with explicit rank reporting on singular input,
//! - [`vectorize`] / [`devectorize`] / [`sandwich_superoperator`] —
//!   column-stacking between d×d matrices and d²-vectors, and the
//!   vec(A·X·B) = (Bᵀ⊗A)·vec(X) superoperator construction.
//!
//! All numerical gates (residual bounds, Hermiticity thresholds, rank
//! cutoffs) live in [`tolerances`] so that every crate in the workspace reads
//! the same named constants.

pub mod eigen;
pub mod matrix;
pub mod solve;
pub mod tolerances;
pub mod vecops;

pub use eigen::{hermitian_eigendecompose, EigenSystem};
pub use matrix::{
    check_finite, check_square, dagger, hermiticity_defect, hermitize, identity, is_hermitian,
    kron, max_abs,
};
pub use solve::{solve_least_squares, solve_linear, LuDecomposition};
pub use vecops::{devectorize, sandwich_superoperator, vectorize};

/// Dense square complex matrix used throughout the workspace.
pub type CMatrix = ndarray::Array2<num_complex::Complex64>;
/// Dense complex vector (e.g. a vectorized density matrix).
pub type CVector = ndarray::Array1<num_complex::Complex64>;
/// Double-precision complex scalar.
pub type C64 = num_complex::Complex64;

/// Errors from the linear-algebra kernels.
///
/// Every failure carries the diagnostic the caller needs to act on it
/// (asymmetry magnitudes, estimated ranks, residual values) rather than a
/// bare message.
#[derive(Debug, thiserror::Error)]
pub enum LinalgError {
    /// The operation requires a square matrix.
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    /// NaN or infinite entries were found.
    #[error("matrix contains non-finite entries")]
    NonFinite,

    /// Input failed the Hermiticity gate.
    #[error(
        "matrix is not Hermitian: max |A - A\u{2020}| = {max_asymmetry:.3e} exceeds \
         {bound:.3e} (= {tolerance:.1e} x max|A| = {tolerance:.1e} x {scale:.3e})"
    )]
    NotHermitian {
        max_asymmetry: f64,
        bound: f64,
        tolerance: f64,
        scale: f64,
    },

    /// The Jacobi iteration did not reach the off-diagonal threshold.
    #[error(
        "Jacobi eigensolver did not converge within {sweeps} sweeps \
         (off-diagonal norm {off_norm:.3e}, threshold {threshold:.3e})"
    )]
    NoConvergence {
        sweeps: usize,
        off_norm: f64,
        threshold: f64,
    },

    /// Direct solve requested on a numerically singular system.
    #[error(
        "matrix is numerically singular (estimated rank {estimated_rank} of {dim}); \
         use solve_least_squares for a minimum-norm solution"
    )]
    Singular { estimated_rank: usize, dim: usize },

    /// Shape mismatch between operands.
    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },

    /// A vector that should hold a square matrix has non-square length.
    #[error("vector length {len} is not a perfect square")]
    NotSquareLength { len: usize },

    /// The computed solution failed the advertised residual contract.
    #[error("linear solve residual {residual:.3e} exceeds contract bound {bound:.3e}")]
    ResidualTooLarge { residual: f64, bound: f64 },
}
