//! `ddsim` — deterministic CSV reports over the transport stack.
//!
//! Thin shell around the library commands: parse flags, build a spec, run
//! the command, write the bytes to `--out` or stdout, map the outcome to
//! the exit-code contract (0 success, 1 threshold breach, 2 usage error,
//! 3 solver failure). All diagnostics go to stderr; stdout carries data
//! only.

use clap::{Args, Parser, Subcommand};
use cli_harness::{
    cmd_compare_models, cmd_enumerate, cmd_sweep, cmd_visibility, exit_code, parse_model_list,
    parse_sector_list, CliError, CompareSpec, EnumerateSpec, EnumerateTarget, Grid, SweepSpec,
    SweepSymbol, VisibilitySpec,
};
use model::{ModelParams, Sector};
use std::io::Write as _;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "ddsim",
    version,
    about = "Steady transport currents through a two-arm double-dot interferometer \
             with a charge-island arm",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep one symbol and report steady currents per sector and model.
    Sweep(SweepArgs),
    /// Map interference visibility over a dephasing grid and detuning list.
    Visibility(VisibilityArgs),
    /// Emit a virtual-transfer sequence table with an exact summary.
    Enumerate(EnumerateArgs),
    /// Cross-validate the three current models on a phase grid.
    CompareModels(CompareArgs),
}

/// Couplings and energies shared by every physics command.
#[derive(Args, Clone)]
struct CoreArgs {
    /// Source-lead tunnel rate Γ₁.
    #[arg(long, default_value_t = 0.01)]
    gamma1: f64,
    /// Drain-lead tunnel rate Γ₂.
    #[arg(long, default_value_t = 0.01)]
    gamma2: f64,
    /// Reference-arm amplitude λ₀.
    #[arg(long, default_value_t = 0.01)]
    lambda0: f64,
    /// Island coupling λ₁ (dot 1 side).
    #[arg(long, default_value_t = 0.1)]
    lambda1: f64,
    /// Island coupling λ₂ (dot 2 side).
    #[arg(long, default_value_t = 0.1)]
    lambda2: f64,
    /// Island charging energy E_C.
    #[arg(long, default_value_t = 1.0)]
    ec: f64,
}

impl CoreArgs {
    fn params(&self, detuning: f64, dephasing: f64, phi: f64) -> ModelParams {
        ModelParams {
            epsilon1: detuning,
            epsilon2: 0.0,
            gamma1: self.gamma1,
            gamma2: self.gamma2,
            lambda0: self.lambda0,
            phi,
            lambda1: self.lambda1,
            lambda2: self.lambda2,
            charging_energy: self.ec,
            sector: Sector::Plus,
            dephasing,
        }
    }
}

#[derive(Args)]
struct SweepArgs {
    /// Swept symbol: phi, delta (detuning), gamma (dephasing),
    /// Delta (gate-averaging half-width), or lambda0.
    #[arg(long)]
    symbol: String,
    /// First grid value.
    #[arg(long, allow_negative_numbers = true)]
    from: f64,
    /// Last grid value.
    #[arg(long, allow_negative_numbers = true)]
    to: f64,
    /// Number of grid points (at least 2).
    #[arg(long)]
    count: usize,
    /// Comma-separated models: analytic, effective-numeric, full-numeric.
    #[arg(long, default_value = "analytic")]
    models: String,
    /// Comma-separated qubit sectors: +1, -1.
    #[arg(long, default_value = "+1,-1", allow_hyphen_values = true)]
    z: String,
    /// Report the gate-averaged current with this half-width instead of
    /// the bare current (analytic model only).
    #[arg(long, default_value_t = 0.0)]
    avg_width: f64,
    /// Fixed level detuning δ = ε₁ − ε₂ (when not swept).
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    delta: f64,
    /// Fixed charge-dephasing rate γ (when not swept).
    #[arg(long, default_value_t = 0.0)]
    dephasing: f64,
    /// Fixed interference phase φ (when not swept).
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    phi: f64,
    #[command(flatten)]
    core: CoreArgs,
    /// Write the report to this path instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VisibilityArgs {
    /// First dephasing rate of the grid.
    #[arg(long, default_value_t = 0.0)]
    gamma_from: f64,
    /// Last dephasing rate of the grid.
    #[arg(long, default_value_t = 0.2)]
    gamma_to: f64,
    /// Number of dephasing grid points (at least 2).
    #[arg(long, default_value_t = 81)]
    gamma_count: usize,
    /// Comma-separated detuning values, one report block per value.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    deltas: String,
    /// Number of φ points of the direct contrast sweep.
    #[arg(long, default_value_t = 1001)]
    phi_points: usize,
    #[command(flatten)]
    core: CoreArgs,
    /// Write the report to this path instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Sequence family: qubit, shortcut, code, or stabilizer.
    #[arg(long)]
    target: String,
    /// Comma-separated gate offsets Δn_g, one per island, each in
    /// (-1/2, 1/2).
    #[arg(long, allow_hyphen_values = true)]
    dng: String,
    /// Charging energy E_C.
    #[arg(long, default_value_t = 1.0)]
    ec: f64,
    /// Write the report to this path instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    /// First φ of the comparison grid.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    from: f64,
    /// Last φ of the comparison grid.
    #[arg(long, default_value_t = std::f64::consts::TAU)]
    to: f64,
    /// Number of φ grid points (at least 2).
    #[arg(long, default_value_t = 129)]
    count: usize,
    /// Comma-separated qubit sectors: +1, -1.
    #[arg(long, default_value = "+1,-1", allow_hyphen_values = true)]
    z: String,
    /// Level detuning δ = ε₁ − ε₂.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    delta: f64,
    /// Charge-dephasing rate γ.
    #[arg(long, default_value_t = 0.0)]
    dephasing: f64,
    #[command(flatten)]
    core: CoreArgs,
    /// Write the report to this path instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_f64_list(text: &str, what: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|item| {
            item.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Usage(format!("cannot parse {what} value `{item}`")))
        })
        .collect()
}

fn write_output(path: Option<&Path>, csv: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, csv)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(csv.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Solver(format!("cannot write to stdout: {e}")))
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Sweep(args) => {
            let spec = SweepSpec {
                symbol: SweepSymbol::parse(&args.symbol)?,
                grid: Grid::new(args.from, args.to, args.count)?,
                base: args.core.params(args.delta, args.dephasing, args.phi),
                models: parse_model_list(&args.models)?,
                sectors: parse_sector_list(&args.z)?,
                average_half_width: args.avg_width,
            };
            let output = cmd_sweep(&spec)?;
            for warning in &output.warnings {
                eprintln!("warning: {warning}");
            }
            write_output(args.out.as_deref(), &output.csv)?;
            Ok(exit_code::SUCCESS)
        }
        Command::Visibility(args) => {
            let spec = VisibilitySpec {
                base: args.core.params(0.0, 0.0, 0.0),
                gamma_grid: Grid::new(args.gamma_from, args.gamma_to, args.gamma_count)?,
                deltas: parse_f64_list(&args.deltas, "detuning")?,
                phi_points: args.phi_points,
            };
            let output = cmd_visibility(&spec)?;
            for warning in &output.warnings {
                eprintln!("warning: {warning}");
            }
            write_output(args.out.as_deref(), &output.csv)?;
            Ok(exit_code::SUCCESS)
        }
        Command::Enumerate(args) => {
            let spec = EnumerateSpec {
                target: EnumerateTarget::parse(&args.target)?,
                offsets: parse_f64_list(&args.dng, "gate offset")?,
                charging_energy: args.ec,
            };
            let output = cmd_enumerate(&spec)?;
            write_output(args.out.as_deref(), &output.csv)?;
            if output.all_pass {
                Ok(exit_code::SUCCESS)
            } else {
                eprintln!("error: the exact summary check FAILed; see the report");
                Ok(exit_code::THRESHOLD)
            }
        }
        Command::CompareModels(args) => {
            let spec = CompareSpec {
                base: args.core.params(args.delta, args.dephasing, 0.0),
                grid: Grid::new(args.from, args.to, args.count)?,
                sectors: parse_sector_list(&args.z)?,
            };
            let report = cmd_compare_models(&spec)?;
            for warning in &report.warnings {
                eprintln!("warning: {warning}");
            }
            write_output(args.out.as_deref(), &report.csv)?;
            match &report.worst {
                None => Ok(exit_code::SUCCESS),
                Some(worst) => {
                    eprintln!("{worst}");
                    Ok(exit_code::THRESHOLD)
                }
            }
        }
    }
}

fn main() {
    // Flag-parse failures make clap exit with code 2 (usage) on its own.
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}
