//! Shared text-formatting conventions of every report.

use model::ModelParams;
use std::fmt::Write as _;

/// Formats a floating-point data cell with 17 significant digits
/// (`{:.16e}`), which round-trips `f64` exactly and is byte-deterministic.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// First metadata line: tool name, command, and artifact version.
pub(crate) fn version_line(command: &str) -> String {
    format!("# ddsim {command} v{}", env!("CARGO_PKG_VERSION"))
}

/// The units convention all physical columns share.
pub(crate) const UNITS_LINE: &str = "# units: energies and rates share one fixed energy unit \
     (hbar = 1); currents are electrons per unit time";

/// Metadata echo of a complete parameter set. Fixed parameters are printed
/// even when a sweep overrides one of them per row; the `symbol=` line of
/// the command says which one that is.
pub(crate) fn params_line(params: &ModelParams) -> String {
    let mut line = String::from("#");
    for (name, value) in [
        ("gamma1", params.gamma1),
        ("gamma2", params.gamma2),
        ("lambda0", params.lambda0),
        ("lambda1", params.lambda1),
        ("lambda2", params.lambda2),
        ("charging_energy", params.charging_energy),
        ("epsilon1", params.epsilon1),
        ("epsilon2", params.epsilon2),
        ("dephasing", params.dephasing),
        ("phi", params.phi),
    ] {
        let _ = write!(line, " {name}={value}");
    }
    line
}

/// Renders a sector as its CSV cell: `+1` or `-1`.
pub(crate) fn sector_cell(sector: model::Sector) -> &'static str {
    match sector {
        model::Sector::Plus => "+1",
        model::Sector::Minus => "-1",
    }
}

/// Joins sectors for a metadata line: `+1,-1`.
pub(crate) fn sectors_meta(sectors: &[model::Sector]) -> String {
    sectors
        .iter()
        .map(|&z| sector_cell(z))
        .collect::<Vec<_>>()
        .join(",")
}
