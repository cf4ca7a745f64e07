//! Cross-validation of the three current models over a phase grid.

use crate::current::{steady_current, ModelKind};
use crate::format::{fmt_float, params_line, sector_cell, sectors_meta, version_line, UNITS_LINE};
use crate::grid::{collect_points, map_grid, Grid};
use crate::{validity_warning, CliError};
use linalg_core::tolerances;
use model::{ModelParams, Sector};
use std::fmt::Write as _;

/// A cross-validation request: all three models on one φ grid.
#[derive(Debug, Clone)]
pub struct CompareSpec {
    /// Every parameter except the swept phase and the sector.
    pub base: ModelParams,
    /// Phase grid the models are compared on.
    pub grid: Grid,
    /// Qubit sectors to check, in canonical order.
    pub sectors: Vec<Sector>,
}

/// Deviation statistics of one model pair in one sector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairDeviation {
    /// Tag of the checked pair; the second-named model is the reference
    /// the deviation is measured against.
    pub pair: &'static str,
    /// Qubit sector.
    pub sector: Sector,
    /// Largest per-point relative deviation.
    pub max_rel_dev: f64,
    /// Arithmetic mean of the per-point relative deviations.
    pub mean_rel_dev: f64,
    /// Threshold this pair is held to.
    pub threshold: f64,
    /// φ value of the largest deviation.
    pub worst_phi: f64,
}

impl PairDeviation {
    fn pass(&self) -> bool {
        self.max_rel_dev <= self.threshold
    }
}

/// The worst threshold breach of a failed comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct WorstPoint {
    /// Pair tag of the breach.
    pub pair: &'static str,
    /// Sector of the breach.
    pub sector: Sector,
    /// φ at the breach.
    pub phi: f64,
    /// The offending relative deviation.
    pub deviation: f64,
    /// The threshold it breached.
    pub threshold: f64,
}

impl std::fmt::Display for WorstPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "worst offending point: pair={} z={} phi={:.16e} deviation={:.3e} threshold={:.0e}",
            self.pair,
            sector_cell(self.sector),
            self.phi,
            self.deviation,
            self.threshold
        )
    }
}

/// A finished comparison: the CSV report plus the verdict.
#[derive(Debug, Clone)]
pub struct CompareReport {
    /// The report, ready to write to `--out` or stdout.
    pub csv: String,
    /// Diagnostics for stderr.
    pub warnings: Vec<String>,
    /// Whether every pair met its threshold in every sector.
    pub all_pass: bool,
    /// On failure, the single worst breach across all pairs and sectors,
    /// measured in multiples of the respective threshold.
    pub worst: Option<WorstPoint>,
}

/// Relative deviation of `candidate` against `reference`. Exact agreement
/// (including 0 vs 0) is zero; a deviation from a vanishing reference is
/// infinite — honest, and visible in the report.
fn relative_deviation(candidate: f64, reference: f64) -> f64 {
    let diff = (candidate - reference).abs();
    if diff == 0.0 {
        0.0
    } else {
        diff / reference.abs()
    }
}

fn pair_deviation(
    pair: &'static str,
    sector: Sector,
    grid: &Grid,
    candidate: &[f64],
    reference: &[f64],
    threshold: f64,
) -> PairDeviation {
    let mut max_rel_dev = 0.0_f64;
    let mut worst_phi = grid.value(0);
    let mut total = 0.0_f64;
    for i in 0..grid.count() {
        let dev = relative_deviation(candidate[i], reference[i]);
        total += dev;
        if dev > max_rel_dev {
            max_rel_dev = dev;
            worst_phi = grid.value(i);
        }
    }
    PairDeviation {
        pair,
        sector,
        max_rel_dev,
        mean_rel_dev: total / grid.count() as f64,
        threshold,
        worst_phi,
    }
}

/// Compares the closed form, the four-state numeric model, and the
/// twelve-state numeric model over the phase grid.
///
/// Two pairs are checked per sector, each against the acceptance threshold
/// of the workspace: `effective-vs-analytic` (the numeric four-state
/// current against the closed form, which must agree to numerical
/// precision) and `full-vs-effective` (the twelve-state current against
/// the four-state one, which agree only to the perturbative reduction
/// error). The report carries max and mean relative deviation per pair per
/// sector; `all_pass` reflects the max against the threshold.
pub fn cmd_compare_models(spec: &CompareSpec) -> Result<CompareReport, CliError> {
    spec.base.validate()?;
    if spec.sectors.is_empty() {
        return Err(CliError::Usage("the sector list is empty".to_string()));
    }

    let mut deviations: Vec<PairDeviation> = Vec::new();
    for &sector in &spec.sectors {
        let currents_for = |kind: ModelKind| -> Result<Vec<f64>, CliError> {
            collect_points(map_grid(spec.grid.count(), |i| {
                let mut params = spec.base;
                params.sector = sector;
                params.phi = spec.grid.value(i);
                steady_current(&params, kind)
            }))
        };
        let analytic_currents = currents_for(ModelKind::Analytic)?;
        let effective_currents = currents_for(ModelKind::EffectiveNumeric)?;
        let full_currents = currents_for(ModelKind::FullNumeric)?;

        deviations.push(pair_deviation(
            "effective-vs-analytic",
            sector,
            &spec.grid,
            &effective_currents,
            &analytic_currents,
            tolerances::ANALYTIC_VS_NUMERIC,
        ));
        deviations.push(pair_deviation(
            "full-vs-effective",
            sector,
            &spec.grid,
            &full_currents,
            &effective_currents,
            tolerances::FULL_VS_EFFECTIVE,
        ));
    }
    // Report pairs grouped together (all sectors of a pair consecutively).
    deviations.sort_by_key(|d| (d.pair, d.sector != Sector::Plus));

    let mut csv = String::new();
    csv.push_str(&version_line("compare-models"));
    csv.push('\n');
    csv.push_str(UNITS_LINE);
    csv.push('\n');
    let _ = writeln!(
        csv,
        "# symbol=phi from={} to={} count={}",
        spec.grid.start(),
        spec.grid.stop(),
        spec.grid.count()
    );
    csv.push_str(&params_line(&spec.base));
    csv.push('\n');
    let _ = writeln!(csv, "# sectors={}", sectors_meta(&spec.sectors));
    csv.push_str("pair,z,max_rel_dev,mean_rel_dev,threshold,status\n");
    for d in &deviations {
        let _ = writeln!(
            csv,
            "{},{},{},{},{},{}",
            d.pair,
            sector_cell(d.sector),
            fmt_float(d.max_rel_dev),
            fmt_float(d.mean_rel_dev),
            fmt_float(d.threshold),
            if d.pass() { "PASS" } else { "FAIL" }
        );
    }

    let worst = deviations
        .iter()
        .filter(|d| !d.pass())
        .max_by(|a, b| {
            let ra = a.max_rel_dev / a.threshold;
            let rb = b.max_rel_dev / b.threshold;
            ra.partial_cmp(&rb).unwrap_or(std::cmp::Ordering::Equal)
        })
        .map(|d| WorstPoint {
            pair: d.pair,
            sector: d.sector,
            phi: d.worst_phi,
            deviation: d.max_rel_dev,
            threshold: d.threshold,
        });

    Ok(CompareReport {
        csv,
        warnings: validity_warning(&spec.base).into_iter().collect(),
        all_pass: worst.is_none(),
        worst,
    })
}
