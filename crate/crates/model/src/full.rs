//! Twelve-state model: the dot pair with the island's charge ladder kept
//! explicit, used to verify the four-state reduction instead of assuming it.
//!
//! The island is floating, so moving a charge on or off it costs the
//! charging energy. Three island charge states matter at second order:
//!
//! | island index | label | excess charge | energy |
//! |--------------|-------|---------------|--------|
//! | 0            | g     | 0             | 0      |
//! | 1            | e+    | +1            | E_C    |
//! | 2            | e−    | −1            | E_C    |
//!
//! Full basis: |n₁n₂; island⟩ with flat index (2n₁+n₂)·3 + island, i.e. the
//! four-state ordering refined by the ladder.
//!
//! Tunneling between a dot and the island goes through the island's subgap
//! modes, which absorb a charge while flipping nothing else — that is what
//! makes the island a usable qubit. Their matrix structure on the charge
//! ladder is the truncated charge-raising operator; the island mode coupled
//! to dot 2 carries the pair-parity eigenvalue z as a relative phase between
//! raising from g and returning from e−, which is how z survives into the
//! second-order interdot amplitude. Dot-side Jordan–Wigner strings (Z⊗Z) keep
//! all dot operators exactly anticommuting with the tunneling terms.

use crate::jw::{kron3, lower, parity, plus_hc, scaled};
use crate::{DotModel, ModelError, ModelParams};
use linalg_core::{C64, CMatrix, dagger, identity};

/// Truncated island charge-raising operator: g → e+, e− → g.
fn island_raise_neutral() -> CMatrix {
    let mut m = CMatrix::zeros((3, 3));
    m[(1, 0)] = C64::new(1.0, 0.0); // |e+⟩⟨g|
    m[(0, 2)] = C64::new(1.0, 0.0); // |g⟩⟨e−|
    m
}

/// Charge-raising operator of the island mode coupled to dot 2; the parity
/// eigenvalue z enters as the relative sign between its two steps.
fn island_raise_parity(z: f64) -> CMatrix {
    let mut m = CMatrix::zeros((3, 3));
    m[(1, 0)] = C64::new(0.0, z); // iz·|e+⟩⟨g|
    m[(0, 2)] = C64::new(0.0, -z); // −iz·|g⟩⟨e−|
    m
}

/// Excess island charge diag(0, +1, −1).
fn island_charge() -> CMatrix {
    let mut m = CMatrix::zeros((3, 3));
    m[(1, 1)] = C64::new(1.0, 0.0);
    m[(2, 2)] = C64::new(-1.0, 0.0);
    m
}

/// Island charging Hamiltonian diag(0, E_C, E_C).
fn island_energy(ec: f64) -> CMatrix {
    let mut m = CMatrix::zeros((3, 3));
    m[(1, 1)] = C64::new(ec, 0.0);
    m[(2, 2)] = C64::new(ec, 0.0);
    m
}

/// Builds the twelve-state model.
pub fn build_full_model(params: &ModelParams) -> Result<DotModel, ModelError> {
    params.validate()?;
    let z = params.sector.sign();

    let id2 = identity(2);
    let id3 = identity(3);

    // Dot operators extended over the island factor.
    let d1 = kron3(&lower(), &id2, &id3);
    let d2 = kron3(&parity(), &lower(), &id3);
    let n1 = dagger(&d1).dot(&d1);
    let n2 = dagger(&d2).dot(&d2);

    // Island-mode charge-raising operators with dot-side parity strings.
    let raise1 = kron3(&parity(), &parity(), &island_raise_neutral());
    let raise2 = kron3(&parity(), &parity(), &island_raise_parity(z));

    // Diagonal part: dot levels plus the charging cost of island excursions.
    let mut h: CMatrix = scaled(&n1, C64::new(params.epsilon1, 0.0));
    h = &h + &scaled(&n2, C64::new(params.epsilon2, 0.0));
    h = &h + &kron3(&id2, &id2, &island_energy(params.charging_energy));

    // Reference arm: −λ₀e^{iφ}·d₂†d₁ + h.c. (island untouched).
    let direct = -C64::new(params.lambda0, 0.0) * C64::new(0.0, params.phi).exp();
    h = &h + &plus_hc(&scaled(&dagger(&d2).dot(&d1), direct));

    // Island arm: taking a charge off a dot pushes one onto the island and
    // vice versa, so each term pairs a dot annihilator with an island raiser.
    h = &h + &plus_hc(&scaled(&d1.dot(&raise1), C64::new(params.lambda1, 0.0)));
    h = &h + &plus_hc(&scaled(&d2.dot(&raise2), C64::new(0.0, params.lambda2)));

    let charge = &(&n1 + &n2) + &kron3(&id2, &id2, &island_charge());

    let island_labels = ["g", "e+", "e-"];
    let dot_labels = ["00", "01", "10", "11"];
    let labels = dot_labels
        .iter()
        .flat_map(|d| island_labels.iter().map(move |i| format!("|{d};{i}>")))
        .collect();

    Ok(DotModel {
        dim: 12,
        hamiltonian: h,
        d1,
        d2,
        occupation1: n1,
        charge,
        labels,
    })
}
