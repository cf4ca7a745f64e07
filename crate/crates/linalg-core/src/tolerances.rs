//! Named numerical tolerances for the whole workspace.
//!
//! Every threshold used by the solvers, model builders, and test oracles is
//! defined here once, with its rationale, so that a tolerance change is a
//! one-line diff and tests can never drift out of sync with the library.
//! The values fall into three tiers:
//!
//! 1. **machine-precision identities** (≈ 1e-12 … 1e-14): quantities that are
//!    algebraically exact and only accumulate rounding error,
//! 2. **solver contracts** (≈ 1e-8 … 1e-10): bounds the iterative/direct
//!    solvers are required to meet on well-conditioned input,
//! 3. **modeling agreements** (≥ 1e-6): physically motivated comparisons
//!    between independent methods or between models of different fidelity.

/// Relative residual contract for direct solves and eigen-reconstruction:
/// ‖A·x − b‖∞ ≤ [`RELATIVE_RESIDUAL`]·(max|A|·‖x‖∞ + ‖b‖∞) and
/// ‖V·Λ·V† − A‖max ≤ [`RELATIVE_RESIDUAL`]·max|A|. Partial-pivot LU and a
/// converged Jacobi iteration beat this by orders of magnitude at dim ≤ 576;
/// exceeding it indicates pathological conditioning and is surfaced as an
/// error instead of silently returned.
pub const RELATIVE_RESIDUAL: f64 = 1e-10;

/// Hermiticity gate, relative to max|A|: inputs to the Hermitian eigensolver
/// and constructed Hamiltonians must satisfy max|A − A†| ≤ this × max|A|.
/// Hamiltonians are assembled from sums of X + X†, so their defect is pure
/// rounding noise (≲ 1e-15); 1e-12 leaves margin without masking bugs.
pub const HERMITICITY: f64 = 1e-12;

/// Relative cutoff for rank decisions: an LU pivot (or an A†A eigenvalue in
/// the least-squares path) below this × the largest one counts as zero.
pub const RANK_CUTOFF: f64 = 1e-12;

/// Off-diagonal convergence threshold for the cyclic Jacobi iteration,
/// relative to max|A|: iteration stops when the off-diagonal Frobenius norm
/// drops below this × max|A| × dim. Quadratic convergence makes the final
/// sweep overshoot this bound by several orders of magnitude.
pub const JACOBI_OFF_DIAGONAL: f64 = 1e-14;

/// Hard cap on Jacobi sweeps. Hermitian matrices of dim ≤ 24 converge in
/// ≤ ~12 sweeps; hitting this cap means non-finite input slipped through and
/// is reported as an error.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Absolute tolerance on |Tr ρ − 1| for a valid density matrix produced by
/// the steady-state solver (the trace row is solved exactly, so the defect
/// is rounding noise from the LU back-substitution).
pub const TRACE_UNITY: f64 = 1e-10;

/// Per-application trace-preservation bound for a Liouvillian:
/// |Tr L(ρ)| ≤ this for any unit-scale ρ. The generator's columns sum to
/// zero analytically; the bound only absorbs rounding in the assembly.
pub const TRACE_PRESERVATION: f64 = 1e-12;

/// Density-matrix positivity monitor: steady-state eigenvalues may dip to
/// −1e-8 from solver residuals before a warning is raised. Redfield
/// generators are not completely positive, so small transient negativity is
/// expected physics, not an error — it is reported, never "fixed".
pub const POSITIVITY_FLOOR: f64 = -1e-8;

/// Agreement bound between independent steady-state methods (null-space LU
/// vs long-time RK4 propagation) and between analytic closed forms and the
/// numerical engine, element-wise / relative respectively.
pub const SOLVER_EQUIVALENCE: f64 = 1e-8;

/// The drain current is an expectation of a Hermitian functional: its
/// imaginary part after the explicit +h.c. symmetrization must vanish to
/// rounding noise.
pub const CURRENT_REALNESS: f64 = 1e-12;

/// Agreement between a closed form and a dense-grid scan of the same
/// quantity (visibility vs 1001-point φ sweep, ∂I/∂γ vs finite difference).
/// Limited by grid resolution / finite-difference truncation, not by the
/// solvers, hence the looser bound.
pub const GRID_ORACLE: f64 = 1e-6;

/// Relative step for the finite-difference check of the dephasing slope
/// ∂I/∂γ (central difference with h = this × Γ̃ balances truncation against
/// cancellation for the smooth rational closed form).
pub const FINITE_DIFF_STEP: f64 = 1e-4;

/// Allowed |Tr ρ(t) − 1| drift across an entire fixed-step RK4 propagation.
pub const EVOLVE_TRACE_DRIFT: f64 = 1e-8;

/// RK4 stability guard: the step must satisfy dt × max|L| ≤ this, far inside
/// the classical RK4 stability region (|λ·dt| ≲ 2.8) so that accuracy, not
/// stability, limits the result.
pub const STEP_GUARD: f64 = 0.1;

/// Tolerance for identities that hold exactly in real arithmetic and are
/// evaluated in a handful of floating-point operations (π-shift sector map,
/// closed-form special cases, frozen rational expectations).
pub const EXACT_IDENTITY: f64 = 1e-12;

/// Absolute error target for the adaptive Simpson quadrature used as the
/// independent oracle for the level-averaged current.
pub const QUADRATURE_ABS: f64 = 1e-10;

/// Relative agreement required between the analytic closed forms and the
/// Redfield engine on the four-state effective model (same physics, two
/// routes; limited by steady-state solver residuals).
pub const ANALYTIC_VS_NUMERIC: f64 = 1e-8;

/// Relative agreement required between the 12-state microscopic model and
/// the 4-state effective model at reference parameters (λ/E_C = 0.1): the
/// neglected terms are O(λ²/E_C²) ≈ 1%, so 5% is a faithful-but-robust bound.
pub const FULL_VS_EFFECTIVE: f64 = 5e-2;

/// Warning threshold on max(|λ₁|,|λ₂|)/E_C above which the 2nd-order
/// effective model is no longer trustworthy and results are flagged.
pub const VALIDITY_RATIO_WARN: f64 = 0.2;
