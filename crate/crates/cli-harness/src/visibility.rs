//! Interference-visibility maps over dephasing and detuning.

use crate::format::{fmt_float, params_line, version_line, UNITS_LINE};
use crate::grid::{collect_points, map_grid, Grid};
use crate::{validity_warning, CliError, CmdOutput};
use model::ModelParams;
use std::fmt::Write as _;

/// A visibility-map request: a dephasing grid crossed with a detuning list.
#[derive(Debug, Clone)]
pub struct VisibilitySpec {
    /// Every parameter that is not scanned; `dephasing` and the detuning
    /// (ε₁, ε₂) are overridden per row, and φ is swept internally.
    pub base: ModelParams,
    /// Dephasing-rate grid (inner loop of the report).
    pub gamma_grid: Grid,
    /// Detuning values (outer loop of the report).
    pub deltas: Vec<f64>,
    /// Number of φ points of the sweep that measures the contrast
    /// directly; the closed form is reported next to it.
    pub phi_points: usize,
}

/// One row of the visibility report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VisibilityRow {
    /// Dephasing rate γ.
    pub dephasing: f64,
    /// Detuning δ.
    pub detuning: f64,
    /// Closed-form visibility.
    pub closed_form: f64,
    /// Contrast (I_max − I_min)/(I_max + I_min) measured on the φ grid.
    pub swept: f64,
}

fn validate(spec: &VisibilitySpec) -> Result<(), CliError> {
    spec.base.validate()?;
    if spec.deltas.is_empty() {
        return Err(CliError::Usage("the detuning list is empty".to_string()));
    }
    if spec.deltas.iter().any(|d| !d.is_finite()) {
        return Err(CliError::Usage(
            "every detuning in the list must be finite".to_string(),
        ));
    }
    if spec.phi_points < 3 {
        return Err(CliError::Usage(format!(
            "the phase sweep needs at least 3 points, got {}",
            spec.phi_points
        )));
    }
    if spec.gamma_grid.min() < 0.0 {
        return Err(CliError::Usage(format!(
            "dephasing rates must be non-negative, but the grid reaches {}",
            spec.gamma_grid.min()
        )));
    }
    Ok(())
}

fn visibility_row(
    spec: &VisibilitySpec,
    detuning: f64,
    dephasing: f64,
) -> Result<VisibilityRow, CliError> {
    let mut params = spec.base.with_detuning(detuning);
    params.dephasing = dephasing;
    let closed_form = analytic::visibility_closed_form(&params)?;

    let mut maximum = f64::NEG_INFINITY;
    let mut minimum = f64::INFINITY;
    for i in 0..spec.phi_points {
        params.phi =
            std::f64::consts::TAU * (i as f64) / ((spec.phi_points - 1) as f64);
        let current = analytic::current_closed_form(&params);
        maximum = maximum.max(current);
        minimum = minimum.min(current);
    }
    let swept = (maximum - minimum) / (maximum + minimum);
    Ok(VisibilityRow {
        dephasing,
        detuning,
        closed_form,
        swept,
    })
}

/// Computes the visibility map and renders the CSV report: one row per
/// (δ, γ) pair, detuning outermost, columns
/// `gamma,delta,v_closed_form,v_swept`.
pub fn cmd_visibility(spec: &VisibilitySpec) -> Result<CmdOutput, CliError> {
    validate(spec)?;
    let gammas = spec.gamma_grid.values();
    let pairs: Vec<(f64, f64)> = spec
        .deltas
        .iter()
        .flat_map(|&d| gammas.iter().map(move |&g| (d, g)))
        .collect();
    let rows = collect_points(map_grid(pairs.len(), |i| {
        let (detuning, dephasing) = pairs[i];
        visibility_row(spec, detuning, dephasing)
    }))?;

    let mut csv = String::new();
    csv.push_str(&version_line("visibility"));
    csv.push('\n');
    csv.push_str(UNITS_LINE);
    csv.push('\n');
    let delta_list = spec
        .deltas
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(",");
    let _ = writeln!(
        csv,
        "# gamma_from={} gamma_to={} gamma_count={} deltas={} phi_points={}",
        spec.gamma_grid.start(),
        spec.gamma_grid.stop(),
        spec.gamma_grid.count(),
        delta_list,
        spec.phi_points
    );
    csv.push_str(&params_line(&spec.base));
    csv.push('\n');
    csv.push_str("gamma,delta,v_closed_form,v_swept\n");
    for row in &rows {
        let _ = writeln!(
            csv,
            "{},{},{},{}",
            fmt_float(row.dephasing),
            fmt_float(row.detuning),
            fmt_float(row.closed_form),
            fmt_float(row.swept)
        );
    }
    Ok(CmdOutput {
        csv,
        warnings: validity_warning(&spec.base).into_iter().collect(),
        all_pass: true,
    })
}
