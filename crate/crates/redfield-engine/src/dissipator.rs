//! Frequency-weighted lead operators D± in the site basis.

use crate::leads::LeadSpec;
use crate::EngineError;
use linalg_core::{check_finite, check_square, CMatrix, EigenSystem, C64};

/// The pair of frequency-weighted operators for one lead, kept alongside the
/// bare coupling so currents can be evaluated later.
///
/// In the energy eigenbasis of the system Hamiltonian,
/// `(D⁺)_nm = Γ f(ω_mn) d_nm` and `(D⁻)_nm = Γ [1 − f(ω_mn)] d_nm` with
/// ω_mn = E_m − E_n; both are stored rotated back to the site basis.
/// They always satisfy `D⁺ + D⁻ = Γ d` exactly as built.
#[derive(Debug, Clone)]
pub struct DissipatorOperators {
    /// Bare coupling operator d (site basis).
    pub coupling: CMatrix,
    /// Lead description this pair was built from.
    pub spec: LeadSpec,
    /// D⁺ = Γ f(ω) ∘ d — mediates processes that put an electron onto
    /// the system from the lead.
    pub d_plus: CMatrix,
    /// D⁻ = Γ (1 − f(ω)) ∘ d — mediates processes that send an electron
    /// out into the lead.
    pub d_minus: CMatrix,
}

impl DissipatorOperators {
    /// Build the weighted pair for one lead.
    ///
    /// `eigen` is the eigendecomposition of the system Hamiltonian; it is
    /// only consulted for frequency-dependent (thermal) occupations. Flat
    /// occupations (deep-bias source/drain) are assembled directly in the
    /// site basis, so they stay exact even when `eigen` is `None`.
    pub fn build(
        coupling: &CMatrix,
        spec: LeadSpec,
        eigen: Option<&EigenSystem>,
    ) -> Result<Self, EngineError> {
        spec.validate()?;
        check_square(coupling).map_err(EngineError::Linalg)?;
        check_finite(coupling).map_err(EngineError::Linalg)?;
        let rate = C64::new(spec.rate, 0.0);

        if spec.occupation.is_flat() {
            let f = spec.occupation.occupation(0.0);
            let d_plus = coupling.mapv(|z| z * rate * f);
            let d_minus = coupling.mapv(|z| z * rate * (1.0 - f));
            return Ok(DissipatorOperators {
                coupling: coupling.clone(),
                spec,
                d_plus,
                d_minus,
            });
        }

        let eigen = eigen.ok_or_else(|| EngineError::ShapeMismatch {
            context: "thermal lead requires the Hamiltonian eigendecomposition".to_string(),
        })?;
        let n = coupling.nrows();
        if eigen.values.len() != n {
            return Err(EngineError::ShapeMismatch {
                context: format!(
                    "coupling operator is {n}×{n} but eigensystem has {} levels",
                    eigen.values.len()
                ),
            });
        }

        // Weight element-wise in the eigenbasis: ω_mn = E_m − E_n for the
        // entry in row n, column m.
        let d_eigen = eigen.to_eigenbasis(coupling);
        let mut plus_eigen = CMatrix::zeros((n, n));
        let mut minus_eigen = CMatrix::zeros((n, n));
        for row in 0..n {
            for col in 0..n {
                let omega = eigen.values[col] - eigen.values[row];
                let f = spec.occupation.occupation(omega);
                let base = d_eigen[(row, col)] * rate;
                plus_eigen[(row, col)] = base * f;
                minus_eigen[(row, col)] = base * (1.0 - f);
            }
        }
        Ok(DissipatorOperators {
            coupling: coupling.clone(),
            spec,
            d_plus: eigen.from_eigenbasis(&plus_eigen),
            d_minus: eigen.from_eigenbasis(&minus_eigen),
        })
    }
}
