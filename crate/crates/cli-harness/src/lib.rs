//! Command-line front end over the transport stack: parameter sweeps,
//! visibility maps, virtual-transfer enumeration tables, and cross-model
//! validation, all emitted as deterministic CSV.
//!
//! Every command is a pure function from a spec struct to text, so the
//! binary is a thin shell: parse flags, call the command, write the bytes,
//! map the outcome to an exit code. The contract shared by all outputs:
//!
//! - **Metadata first.** Lines starting with `#` record the tool version
//!   and the complete parameter set of the run, so a data file is
//!   self-describing. No timestamps or host details — identical invocations
//!   must produce identical bytes.
//! - **17 significant digits.** Every floating-point data cell is printed
//!   with `{:.16e}`, which round-trips `f64` exactly.
//! - **Determinism under parallelism.** Sweep grids are evaluated point by
//!   point, in parallel when the `parallel` feature (default) is enabled,
//!   and merged back in grid order. The serial path is always compiled;
//!   both produce the same bytes.
//!
//! Exit-code contract of the `ddsim` binary:
//!
//! | code | meaning |
//! |------|---------|
//! | 0    | success |
//! | 1    | a validation threshold was breached (`compare-models`, or a FAIL summary in `enumerate`) |
//! | 2    | usage error: unknown flags, malformed lists, parameters outside their domain |
//! | 3    | solver failure: the steady state could not be computed for valid parameters |

mod compare;
mod current;
mod enumerate;
mod format;
mod grid;
mod sweep;
mod visibility;

pub use compare::{cmd_compare_models, CompareReport, CompareSpec, PairDeviation, WorstPoint};
pub use current::{parse_model_list, parse_sector_list, steady_current, ModelKind};
pub use enumerate::{cmd_enumerate, EnumerateSpec, EnumerateTarget};
pub use format::fmt_float;
pub use grid::{map_grid, map_grid_serial, Grid};
pub use sweep::{cmd_sweep, sweep_rows, sweep_rows_serial, SweepRow, SweepSpec, SweepSymbol};
pub use visibility::{cmd_visibility, VisibilityRow, VisibilitySpec};

use thiserror::Error;

/// Failure modes of a command, mapped to process exit codes by the binary.
///
/// A breached validation threshold is **not** an error — commands that
/// check thresholds report the outcome in their result so the caller can
/// still write the full report before exiting nonzero.
#[derive(Debug, Error, PartialEq)]
pub enum CliError {
    /// The request itself is malformed: unknown names, empty lists,
    /// parameters outside their domain. Exit code 2.
    #[error("{0}")]
    Usage(String),

    /// The request was well-formed but the solver could not deliver:
    /// degenerate steady state, failed factorization. Exit code 3.
    #[error("{0}")]
    Solver(String),
}

impl CliError {
    /// The process exit code this error maps to.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit_code::USAGE,
            CliError::Solver(_) => exit_code::SOLVER,
        }
    }
}

impl From<model::ModelError> for CliError {
    fn from(err: model::ModelError) -> Self {
        CliError::Usage(err.to_string())
    }
}

impl From<analytic::AnalyticError> for CliError {
    fn from(err: analytic::AnalyticError) -> Self {
        CliError::Usage(err.to_string())
    }
}

impl From<perturbation::PerturbationError> for CliError {
    fn from(err: perturbation::PerturbationError) -> Self {
        CliError::Usage(err.to_string())
    }
}

impl From<redfield_engine::EngineError> for CliError {
    fn from(err: redfield_engine::EngineError) -> Self {
        match err {
            // Parameter rejection surfacing through the engine is still a
            // usage problem; everything else is the solver failing on a
            // request it accepted.
            redfield_engine::EngineError::Model(inner) => CliError::Usage(inner.to_string()),
            other => CliError::Solver(other.to_string()),
        }
    }
}

/// The process exit codes of the `ddsim` binary.
pub mod exit_code {
    /// The command ran and every checked threshold held.
    pub const SUCCESS: i32 = 0;
    /// The command ran but a validation threshold was breached.
    pub const THRESHOLD: i32 = 1;
    /// The request was malformed or out of domain.
    pub const USAGE: i32 = 2;
    /// The solver failed on a well-formed request.
    pub const SOLVER: i32 = 3;
}

/// A finished command: the CSV payload plus any diagnostics for stderr.
#[derive(Debug, Clone)]
pub struct CmdOutput {
    /// The report, ready to write to `--out` or stdout.
    pub csv: String,
    /// Human-readable warnings (regime-validity notices); the binary prints
    /// them to stderr so the data stream stays clean.
    pub warnings: Vec<String>,
    /// Whether every summary check inside the report passed. Commands
    /// without internal checks always report `true`.
    pub all_pass: bool,
}

/// Warns when the perturbative parameter regime is stretched: the
/// four-state reduction (and every closed form on top of it) assumes all
/// couplings and rates are small against the charging energy.
pub fn validity_warning(params: &model::ModelParams) -> Option<String> {
    let ratio = params.validity_ratio();
    let bound = linalg_core::tolerances::VALIDITY_RATIO_WARN;
    if ratio > bound {
        Some(format!(
            "validity ratio {ratio:.3} exceeds {bound}: couplings are not small against the \
             charging energy, so the four-state reduction (and its closed forms) degrades"
        ))
    } else {
        None
    }
}
