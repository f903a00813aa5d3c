use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use uncertainty_cli::audit::run_haar_audit;
use uncertainty_cli::bounds::{bounds_to_csv, bounds_to_json, run_bounds, PerpMode};
use uncertainty_cli::cvcheck::{run_cv_check, CvParams};
use uncertainty_cli::io::{merge_documents, parse_problem_document};
use uncertainty_cli::sweep::{
    plot_script, run_sweep, sweep_to_csv, sweep_to_json, ObservablePair, RunConfig,
};
use uncertainty_cli::{CliError, Result};

#[derive(Parser)]
#[command(
    name = "ulab",
    version,
    about = "Numerical laboratory for product and sum uncertainty relations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// θ-sweep over the spin state family, with random ψ⊥ samples per row
    Sweep {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 0.0)]
        theta_min: f64,
        #[arg(long, default_value_t = std::f64::consts::TAU)]
        theta_max: f64,
        #[arg(long, default_value_t = 200)]
        steps: usize,
        #[arg(long, default_value_t = 30)]
        perp_samples: usize,
        /// Spin quantum number (half-integer)
        #[arg(long, default_value_t = 1.0)]
        j: f64,
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
        /// Observable pair as two spin axes, A then B (e.g. zy, zx, yx)
        #[arg(long, default_value = "zy")]
        pair: String,
        /// Output file for the sweep table
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        /// Also write a matplotlib script rendering the curves
        #[arg(long)]
        plot_script: Option<PathBuf>,
    },
    /// Evaluate product, Maccone–Pati and weak-sum bounds on a state and
    /// operator pair loaded from JSON files
    Bounds {
        /// JSON file holding the "state" key
        state: PathBuf,
        /// JSON file holding the "A" and "B" keys (and "psi_perp" for
        /// --perp-mode file)
        ops: PathBuf,
        /// How to pick ψ⊥: random, saturating or file
        #[arg(long, default_value = "random")]
        perp_mode: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Verify the position–momentum Gaussians and their differential
    /// equations on a finite-difference grid
    CvCheck {
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
        #[arg(long, default_value_t = 1.0)]
        a_mean: f64,
        #[arg(long, default_value_t = 0.5)]
        b_mean: f64,
        #[arg(long, default_value_t = uncertainty_core::cvgrid::DEFAULT_N)]
        grid_n: usize,
        #[arg(long, default_value_t = uncertainty_core::cvgrid::DEFAULT_HALFWIDTH)]
        grid_halfwidth: f64,
        /// Fock truncation for the consistency cross-check
        #[arg(long, default_value_t = 20)]
        fock_dim: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Statistical audit of the Haar-random unitary sampler
    HaarAudit {
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn write_output(path: Option<&Path>, contents: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, contents)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Sweep {
            seed,
            theta_min,
            theta_max,
            steps,
            perp_samples,
            j,
            hbar,
            pair,
            out,
            format,
            plot_script: script_path,
        } => {
            let pair: ObservablePair = pair.parse().map_err(CliError::Validation)?;
            let config = RunConfig {
                seed,
                theta_min,
                theta_max,
                steps,
                perp_samples,
                j,
                hbar,
                pair,
            };
            let records = run_sweep(&config)?;
            let rendered = match format {
                OutputFormat::Csv => sweep_to_csv(&records),
                OutputFormat::Json => sweep_to_json(&records),
            };
            write_output(Some(&out), &rendered)?;
            if let Some(script) = script_path {
                let csv_name = out.to_string_lossy();
                write_output(Some(&script), &plot_script(&csv_name))?;
            }
            Ok(())
        }
        Command::Bounds {
            state,
            ops,
            perp_mode,
            seed,
            out,
            format,
        } => {
            let mode: PerpMode = perp_mode.parse().map_err(CliError::Validation)?;
            let state_bytes = fs::read(&state)
                .map_err(|e| CliError::Io(format!("cannot read {}: {e}", state.display())))?;
            let ops_bytes = fs::read(&ops)
                .map_err(|e| CliError::Io(format!("cannot read {}: {e}", ops.display())))?;
            let doc = merge_documents(
                parse_problem_document(&state_bytes)?,
                parse_problem_document(&ops_bytes)?,
            );
            let output = run_bounds(&doc, mode, seed)?;
            for w in &output.warnings {
                eprintln!("warning: {w}");
            }
            let rendered = match format {
                OutputFormat::Json => bounds_to_json(&output),
                OutputFormat::Csv => bounds_to_csv(&output),
            };
            write_output(out.as_deref(), &rendered)
        }
        Command::CvCheck {
            hbar,
            a_mean,
            b_mean,
            grid_n,
            grid_halfwidth,
            fock_dim,
            out,
        } => {
            let report = run_cv_check(&CvParams {
                hbar,
                a_mean,
                b_mean,
                grid_n,
                grid_halfwidth,
                fock_dim,
            })?;
            let mut rendered = serde_json::to_string_pretty(&report).expect("cv report serializes");
            rendered.push('\n');
            write_output(out.as_deref(), &rendered)
        }
        Command::HaarAudit {
            dim,
            samples,
            seed,
            out,
        } => {
            let report = run_haar_audit(dim, samples, seed)?;
            let mut rendered = serde_json::to_string_pretty(&report).expect("audit serializes");
            rendered.push('\n');
            write_output(out.as_deref(), &rendered)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(u8::try_from(e.exit_code()).unwrap_or(1))
        }
    }
}
