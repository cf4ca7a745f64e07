//! One-symbol parameter sweeps of the steady current.

use crate::current::{steady_current, ModelKind};
use crate::format::{fmt_float, params_line, sector_cell, sectors_meta, version_line, UNITS_LINE};
use crate::grid::{collect_points, map_grid, map_grid_serial, Grid};
use crate::{validity_warning, CliError, CmdOutput};
use model::{ModelParams, Sector};
use std::fmt::Write as _;

/// Which scalar a sweep varies. Tags are case-sensitive: `delta` is the
/// level detuning δ, `Delta` the gate-averaging half-width Δ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepSymbol {
    /// Interference phase φ.
    Phi,
    /// Level detuning δ = ε₁ − ε₂ (applied as ε₁ = δ, ε₂ = 0).
    Detuning,
    /// Charge-dephasing rate γ.
    Dephasing,
    /// Gate-averaging half-width Δ of the detuning-averaged current
    /// (analytic model only).
    AverageWidth,
    /// Reference-arm amplitude λ₀.
    Lambda0,
}

impl SweepSymbol {
    /// The tag used in CLI flags and as the first CSV column name.
    pub fn tag(self) -> &'static str {
        match self {
            SweepSymbol::Phi => "phi",
            SweepSymbol::Detuning => "delta",
            SweepSymbol::Dephasing => "gamma",
            SweepSymbol::AverageWidth => "Delta",
            SweepSymbol::Lambda0 => "lambda0",
        }
    }

    /// Parses one tag (case-sensitive — see the type docs).
    pub fn parse(text: &str) -> Result<Self, CliError> {
        match text {
            "phi" => Ok(SweepSymbol::Phi),
            "delta" => Ok(SweepSymbol::Detuning),
            "gamma" => Ok(SweepSymbol::Dephasing),
            "Delta" => Ok(SweepSymbol::AverageWidth),
            "lambda0" => Ok(SweepSymbol::Lambda0),
            other => Err(CliError::Usage(format!(
                "unknown sweep symbol `{other}`; expected phi, delta, gamma, Delta, or lambda0"
            ))),
        }
    }
}

/// A complete sweep request.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    /// The swept scalar.
    pub symbol: SweepSymbol,
    /// Grid of swept values.
    pub grid: Grid,
    /// Every parameter that is not swept. The `sector` field is overridden
    /// per row by `sectors`.
    pub base: ModelParams,
    /// Models to evaluate, in canonical order.
    pub models: Vec<ModelKind>,
    /// Qubit sectors to evaluate, in canonical order (+1 first).
    pub sectors: Vec<Sector>,
    /// When positive, report the gate-averaged current with this
    /// half-width instead of the bare current (analytic model only;
    /// ignored and rejected when the symbol itself is `Delta`).
    pub average_half_width: f64,
}

/// One output row of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    /// The swept value.
    pub value: f64,
    /// Qubit sector.
    pub sector: Sector,
    /// Which model produced the current.
    pub model: ModelKind,
    /// Steady (or gate-averaged) drain current.
    pub current: f64,
}

fn validate(spec: &SweepSpec) -> Result<(), CliError> {
    spec.base.validate()?;
    if spec.models.is_empty() {
        return Err(CliError::Usage("the model list is empty".to_string()));
    }
    if spec.sectors.is_empty() {
        return Err(CliError::Usage("the sector list is empty".to_string()));
    }
    if !spec.average_half_width.is_finite() || spec.average_half_width < 0.0 {
        return Err(CliError::Usage(format!(
            "the averaging half-width must be finite and non-negative, got {}",
            spec.average_half_width
        )));
    }
    let averaged = spec.symbol == SweepSymbol::AverageWidth || spec.average_half_width > 0.0;
    if averaged && spec.models != [ModelKind::Analytic] {
        return Err(CliError::Usage(
            "the gate-averaged current has a closed form only in the analytic model; \
             use --models analytic"
                .to_string(),
        ));
    }
    if spec.symbol == SweepSymbol::AverageWidth && spec.average_half_width > 0.0 {
        return Err(CliError::Usage(
            "--avg-width conflicts with sweeping the half-width itself (symbol Delta)".to_string(),
        ));
    }
    let non_negative = matches!(
        spec.symbol,
        SweepSymbol::Dephasing | SweepSymbol::Lambda0 | SweepSymbol::AverageWidth
    );
    if non_negative && spec.grid.min() < 0.0 {
        return Err(CliError::Usage(format!(
            "swept values of `{}` must be non-negative, but the grid reaches {}",
            spec.symbol.tag(),
            spec.grid.min()
        )));
    }
    Ok(())
}

/// Applies the swept value to the fixed parameter set. The averaging
/// half-width is not a model parameter, so for `Delta` the base set is
/// returned unchanged and the value is consumed by the current evaluation.
fn point_params(spec: &SweepSpec, value: f64) -> ModelParams {
    let mut params = spec.base;
    match spec.symbol {
        SweepSymbol::Phi => params.phi = value,
        SweepSymbol::Detuning => params = params.with_detuning(value),
        SweepSymbol::Dephasing => params.dephasing = value,
        SweepSymbol::AverageWidth => {}
        SweepSymbol::Lambda0 => params.lambda0 = value,
    }
    params
}

fn point_rows(spec: &SweepSpec, index: usize) -> Result<Vec<SweepRow>, CliError> {
    let value = spec.grid.value(index);
    let mut rows = Vec::with_capacity(spec.sectors.len() * spec.models.len());
    for &sector in &spec.sectors {
        let mut params = point_params(spec, value);
        params.sector = sector;
        for &model in &spec.models {
            let current = match spec.symbol {
                SweepSymbol::AverageWidth => analytic::averaged_current(&params, value)?,
                _ if spec.average_half_width > 0.0 => {
                    analytic::averaged_current(&params, spec.average_half_width)?
                }
                _ => steady_current(&params, model)?,
            };
            rows.push(SweepRow {
                value,
                sector,
                model,
                current,
            });
        }
    }
    Ok(rows)
}

/// Evaluates the sweep, in parallel across grid points when the `parallel`
/// feature is enabled, and returns rows in deterministic order: grid value
/// outermost, then sector, then model.
pub fn sweep_rows(spec: &SweepSpec) -> Result<Vec<SweepRow>, CliError> {
    validate(spec)?;
    let per_point = map_grid(spec.grid.count(), |i| point_rows(spec, i));
    Ok(collect_points(per_point)?.into_iter().flatten().collect())
}

/// Single-threaded variant of [`sweep_rows`] with identical output; the
/// benchmark suite compares the two.
pub fn sweep_rows_serial(spec: &SweepSpec) -> Result<Vec<SweepRow>, CliError> {
    validate(spec)?;
    let per_point = map_grid_serial(spec.grid.count(), |i| point_rows(spec, i));
    Ok(collect_points(per_point)?.into_iter().flatten().collect())
}

/// Runs a sweep and renders the CSV report.
pub fn cmd_sweep(spec: &SweepSpec) -> Result<CmdOutput, CliError> {
    let rows = sweep_rows(spec)?;
    let mut csv = String::new();
    csv.push_str(&version_line("sweep"));
    csv.push('\n');
    csv.push_str(UNITS_LINE);
    csv.push('\n');
    let _ = writeln!(
        csv,
        "# symbol={} from={} to={} count={} average_half_width={}",
        spec.symbol.tag(),
        spec.grid.start(),
        spec.grid.stop(),
        spec.grid.count(),
        spec.average_half_width
    );
    csv.push_str(&params_line(&spec.base));
    csv.push('\n');
    let model_tags: Vec<&str> = spec.models.iter().map(|m| m.tag()).collect();
    let _ = writeln!(
        csv,
        "# models={} sectors={}",
        model_tags.join(","),
        sectors_meta(&spec.sectors)
    );
    let _ = writeln!(csv, "{},z,model,current", spec.symbol.tag());
    for row in &rows {
        let _ = writeln!(
            csv,
            "{},{},{},{}",
            fmt_float(row.value),
            sector_cell(row.sector),
            row.model.tag(),
            fmt_float(row.current)
        );
    }
    Ok(CmdOutput {
        csv,
        warnings: validity_warning(&spec.base).into_iter().collect(),
        all_pass: true,
    })
}
