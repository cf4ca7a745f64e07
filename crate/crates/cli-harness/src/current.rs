//! The three ways to compute a steady current, behind one tag.

use crate::CliError;
use linalg_core::CMatrix;
use model::{build_effective_model, build_full_model, DotModel, ModelParams, Sector};
use redfield_engine::{lead_current, steady_state, transport_liouvillian, LeadRegime};

/// Index of the drain lead in the transport wiring (source is 0).
const DRAIN_LEAD: usize = 1;

/// Which current model evaluates a grid point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ModelKind {
    /// Closed-form steady current of the four-state model.
    Analytic,
    /// Numeric steady state of the four-state model under deep bias.
    EffectiveNumeric,
    /// Numeric steady state of the twelve-state model (dots plus one
    /// virtual island charge either way) with cold leads biased to cover
    /// the dot band but not the island excitations.
    FullNumeric,
}

impl ModelKind {
    /// Every model, in canonical report order.
    pub const ALL: [ModelKind; 3] = [
        ModelKind::Analytic,
        ModelKind::EffectiveNumeric,
        ModelKind::FullNumeric,
    ];

    /// The tag used in CLI flags and CSV cells.
    pub fn tag(self) -> &'static str {
        match self {
            ModelKind::Analytic => "analytic",
            ModelKind::EffectiveNumeric => "effective-numeric",
            ModelKind::FullNumeric => "full-numeric",
        }
    }

    /// Parses one tag.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        match text {
            "analytic" => Ok(ModelKind::Analytic),
            "effective-numeric" => Ok(ModelKind::EffectiveNumeric),
            "full-numeric" => Ok(ModelKind::FullNumeric),
            other => Err(CliError::Usage(format!(
                "unknown model `{other}`; expected analytic, effective-numeric, or full-numeric"
            ))),
        }
    }
}

/// Parses a comma-separated model list (e.g. `analytic,effective-numeric`),
/// rejecting duplicates and returning the models in canonical order
/// regardless of how the flag ordered them.
pub fn parse_model_list(text: &str) -> Result<Vec<ModelKind>, CliError> {
    let mut seen = Vec::new();
    for item in text.split(',') {
        let kind = ModelKind::parse(item.trim())?;
        if seen.contains(&kind) {
            return Err(CliError::Usage(format!(
                "model `{}` listed twice",
                kind.tag()
            )));
        }
        seen.push(kind);
    }
    if seen.is_empty() {
        return Err(CliError::Usage("the model list is empty".to_string()));
    }
    seen.sort();
    Ok(seen)
}

/// Parses a comma-separated sector list (e.g. `+1,-1`), rejecting
/// duplicates and returning sectors in canonical order (+1 first).
pub fn parse_sector_list(text: &str) -> Result<Vec<Sector>, CliError> {
    let mut seen = Vec::new();
    for item in text.split(',') {
        let sector = match item.trim() {
            "+1" | "1" => Sector::Plus,
            "-1" => Sector::Minus,
            other => {
                return Err(CliError::Usage(format!(
                    "unknown sector `{other}`; expected +1 or -1"
                )))
            }
        };
        if seen.contains(&sector) {
            return Err(CliError::Usage(format!(
                "sector `{}` listed twice",
                crate::format::sector_cell(sector)
            )));
        }
        seen.push(sector);
    }
    if seen.is_empty() {
        return Err(CliError::Usage("the sector list is empty".to_string()));
    }
    seen.sort_by_key(|&z| z != Sector::Plus);
    Ok(seen)
}

/// Steady drain current of `params` under the chosen model.
///
/// The numeric models build their Hamiltonian and lead wiring, solve the
/// generator null space, and read the drain-lead current off the steady
/// density matrix; the analytic model evaluates the closed form directly.
pub fn steady_current(params: &ModelParams, kind: ModelKind) -> Result<f64, CliError> {
    match kind {
        ModelKind::Analytic => {
            params.validate()?;
            Ok(analytic::current_closed_form(params))
        }
        ModelKind::EffectiveNumeric => {
            let dot_model = build_effective_model(params)?;
            let liouvillian = transport_liouvillian(&dot_model, params, LeadRegime::LargeBias)?;
            let steady = steady_state(&liouvillian)?;
            Ok(lead_current(&liouvillian, DRAIN_LEAD, &steady.rho)?)
        }
        ModelKind::FullNumeric => {
            let mut dot_model = build_full_model(params)?;
            // With both island couplings exactly zero the island sector is
            // inert: island charge is conserved, the generator splits into
            // disconnected blocks, and the global null space is degenerate.
            // The physical steady state lives in the island-ground block
            // (nothing can pay the charging energy), so restrict to it —
            // the restriction is exact, every coupling operator is
            // block-diagonal in the island index there.
            if params.lambda1 == 0.0 && params.lambda2 == 0.0 {
                dot_model = island_ground_block(&dot_model);
            }
            let regime = LeadRegime::island_window(params.charging_energy);
            let liouvillian = transport_liouvillian(&dot_model, params, regime)?;
            let steady = steady_state(&liouvillian)?;
            Ok(lead_current(&liouvillian, DRAIN_LEAD, &steady.rho)?)
        }
    }
}

/// Restriction of the twelve-state model to the four states with a neutral
/// island. Twelve-state basis: |n₁n₂; island⟩ at flat index
/// `(2n₁+n₂)·3 + island`, island index 0 being the neutral ground.
fn island_ground_block(full: &DotModel) -> DotModel {
    let keep: Vec<usize> = (0..4).map(|dots| 3 * dots).collect();
    let sub = |m: &CMatrix| {
        CMatrix::from_shape_fn((keep.len(), keep.len()), |(i, j)| m[(keep[i], keep[j])])
    };
    DotModel {
        dim: keep.len(),
        hamiltonian: sub(&full.hamiltonian),
        d1: sub(&full.d1),
        d2: sub(&full.d2),
        occupation1: sub(&full.occupation1),
        charge: sub(&full.charge),
        labels: keep.iter().map(|&k| full.labels[k].clone()).collect(),
    }
}
