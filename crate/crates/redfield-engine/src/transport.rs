//! Convenience wiring of the interferometer models into the engine.

use crate::leads::LeadSpec;
use crate::liouvillian::{build_liouvillian, Liouvillian};
use crate::EngineError;
use model::{DotModel, ModelParams};

/// How the two transport leads are biased.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LeadRegime {
    /// Deep bias: the source is filled and the drain empty at every
    /// frequency. Exact for models whose spectrum lies entirely inside the
    /// bias window (the reduced four-state model).
    LargeBias,
    /// Cold (T = 0) leads at finite chemical potentials. Transitions below
    /// `mu_source` are fed by the source; transitions above `mu_drain` are
    /// emptied by the drain.
    ColdFinite {
        /// Source chemical potential.
        mu_source: f64,
        /// Drain chemical potential.
        mu_drain: f64,
    },
}

impl LeadRegime {
    /// The standard window for models that carry the charging island
    /// explicitly: μ_source = +E_C/2, μ_drain = −E_C/2.
    ///
    /// Dot-level transitions (|ω| ≪ E_C) sit deep inside the window and see
    /// a filled source and an empty drain, while island-excitation lines at
    /// ω ≈ E_C fall outside it, so the island is never pumped by the leads
    /// and stays in its ground state apart from virtual excursions.
    pub fn island_window(charging_energy: f64) -> Self {
        LeadRegime::ColdFinite {
            mu_source: 0.5 * charging_energy,
            mu_drain: -0.5 * charging_energy,
        }
    }

    fn source_spec(&self, rate: f64) -> LeadSpec {
        match *self {
            LeadRegime::LargeBias => LeadSpec::source(rate),
            LeadRegime::ColdFinite { mu_source, .. } => LeadSpec::thermal(rate, 0.0, mu_source),
        }
    }

    fn drain_spec(&self, rate: f64) -> LeadSpec {
        match *self {
            LeadRegime::LargeBias => LeadSpec::drain(rate),
            LeadRegime::ColdFinite { mu_drain, .. } => LeadSpec::thermal(rate, 0.0, mu_drain),
        }
    }
}

/// Build the transport generator for a dot model: lead 1 (rate Γ₁, coupled
/// through d₁) is the source, lead 2 (rate Γ₂, through d₂) is the drain, and
/// a dephasing channel on the dot-1 occupation is attached when the
/// dephasing rate is nonzero.
///
/// The drain is always lead index 1, so the transport current is
/// `lead_current(&liouvillian, 1, &rho)`.
pub fn transport_liouvillian(
    dot_model: &DotModel,
    params: &ModelParams,
    regime: LeadRegime,
) -> Result<Liouvillian, EngineError> {
    params.validate().map_err(EngineError::Model)?;
    let leads = [
        (&dot_model.d1, regime.source_spec(params.gamma1)),
        (&dot_model.d2, regime.drain_spec(params.gamma2)),
    ];
    let dephasing = if params.dephasing > 0.0 {
        Some((params.dephasing, &dot_model.occupation1))
    } else {
        None
    };
    build_liouvillian(&dot_model.hamiltonian, &leads, dephasing)
}
