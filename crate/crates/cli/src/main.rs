//! Command-line front end. Every subcommand resolves its parameters from
//! flags, then an optional `key = value` config file, then built-in defaults,
//! and emits deterministic CSV/text artifacts: identical inputs produce
//! byte-identical outputs.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error.

mod cmd_classical;
mod cmd_gates;
mod cmd_pipeline;
mod cmd_scatter;
mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use config::ConfigMap;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl From<entangler_core::Error> for CliError {
    fn from(e: entangler_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "entangler",
    version,
    about = "Waveguide-qubit gate-network sweeps, barrier scattering amplitudes and the GaAs coupler chain"
)]
struct Cli {
    /// Plain-text `key = value` config file; explicit flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Subcommand)]
enum Command {
    /// Two-qubit network sweeps and the matrix-convention audit.
    Gates(cmd_gates::GatesArgs),
    /// Reflection/transmission amplitudes over a relative-wavevector grid.
    Scatter(cmd_scatter::ScatterArgs),
    /// Classical collision trajectories and the relative-motion phase portrait.
    Classical(cmd_classical::ClassicalArgs),
    /// GaAs parameter chain: E0, channel window, thermal kinematics, phase spread.
    Pipeline(cmd_pipeline::PipelineArgs),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprintln!("usage error: {e}");
                    ExitCode::from(1)
                }
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("domain error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = match &cli.config {
        Some(path) => ConfigMap::load(path)?,
        None => ConfigMap::default(),
    };
    match cli.command {
        Command::Gates(args) => cmd_gates::run(args, &cfg),
        Command::Scatter(args) => cmd_scatter::run(args, &cfg),
        Command::Classical(args) => cmd_classical::run(args, &cfg),
        Command::Pipeline(args) => cmd_pipeline::run(args, &cfg),
    }
}
