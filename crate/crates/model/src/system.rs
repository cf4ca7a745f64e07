//! The operator bundle consumed by the transport engine.

use linalg_core::CMatrix;

/// A concrete system: Hamiltonian plus the operators through which anything
/// else couples to it.
///
/// Both the four-state and the twelve-state builders return this same
/// bundle, so the transport engine is agnostic to which representation it is
/// driving. Basis conventions are documented by [`DotModel::labels`].
#[derive(Debug, Clone)]
pub struct DotModel {
    /// Hilbert-space dimension.
    pub dim: usize,
    /// System Hamiltonian (Hermitian, `dim`×`dim`).
    pub hamiltonian: CMatrix,
    /// Annihilation operator of dot 1 — the operator the **source lead**
    /// couples to.
    pub d1: CMatrix,
    /// Annihilation operator of dot 2 — the operator the **drain lead**
    /// couples to.
    pub d2: CMatrix,
    /// Occupation n₁ = d₁†d₁ of dot 1 — the operator pure charge dephasing
    /// couples to.
    pub occupation1: CMatrix,
    /// Total conserved charge (dot occupations plus, for the twelve-state
    /// model, the island's excess charge). Commutes with the Hamiltonian
    /// exactly; kept for structural checks.
    pub charge: CMatrix,
    /// Human-readable basis-state labels, index-aligned with the matrices.
    pub labels: Vec<String>,
}
