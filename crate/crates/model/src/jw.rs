//! Single-site matrix primitives and Jordan–Wigner assembly helpers.
//!
//! Fermionic operators on a tensor product of sites are represented by
//! ordinary matrices with parity strings: the annihilation operator of site
//! k is Z ⊗ … ⊗ Z ⊗ a ⊗ 1 ⊗ … ⊗ 1 (k−1 parity factors first). Site order
//! here: dot 1, dot 2, then (for the twelve-state model) the island charge
//! ladder, which is not a fermionic site and never needs a string of its
//! own.

use linalg_core::{C64, CMatrix, kron};

/// 2×2 annihilation operator: a|1⟩ = |0⟩ with basis order (|0⟩, |1⟩).
pub(crate) fn lower() -> CMatrix {
    let mut a = CMatrix::zeros((2, 2));
    a[(0, 1)] = C64::new(1.0, 0.0);
    a
}

/// 2×2 fermion parity (−1)^n = diag(+1, −1).
pub(crate) fn parity() -> CMatrix {
    let mut z = CMatrix::zeros((2, 2));
    z[(0, 0)] = C64::new(1.0, 0.0);
    z[(1, 1)] = C64::new(-1.0, 0.0);
    z
}

/// Three-factor Kronecker product (dot 1 ⊗ dot 2 ⊗ island).
pub(crate) fn kron3(a: &CMatrix, b: &CMatrix, c: &CMatrix) -> CMatrix {
    kron(&kron(a, b), c)
}

/// Scales a matrix by a complex coefficient.
pub(crate) fn scaled(m: &CMatrix, coefficient: C64) -> CMatrix {
    m.mapv(|z| z * coefficient)
}

/// A + A†: appends the Hermitian conjugate of a transfer term.
pub(crate) fn plus_hc(m: &CMatrix) -> CMatrix {
    m + &linalg_core::dagger(m)
}
