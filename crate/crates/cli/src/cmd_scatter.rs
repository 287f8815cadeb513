//! `scatter`: reflection phase and probabilities over a relative-wavevector
//! grid.

use std::path::PathBuf;

use clap::ValueEnum;
use entangler_core::scatter::phase_sweep;
use entangler_core::Grid;

use crate::config::{resolve, resolve_opt, ConfigMap};
use crate::output::{fmt_float, write_meta, CsvFile};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Spacing {
    Log,
    Linear,
}

impl std::str::FromStr for Spacing {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        <Spacing as ValueEnum>::from_str(s, true)
    }
}

#[derive(Debug, clap::Args)]
pub struct ScatterArgs {
    /// Barrier height [E0].
    #[arg(long, allow_negative_numbers = true)]
    v0: Option<f64>,
    /// Inverse interaction width α [1/ω0].
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    #[arg(long)]
    k_min: Option<f64>,
    #[arg(long)]
    k_max: Option<f64>,
    #[arg(long)]
    k_steps: Option<usize>,
    #[arg(long, value_enum)]
    spacing: Option<Spacing>,
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn run(args: ScatterArgs, cfg: &ConfigMap) -> Result<(), CliError> {
    let v0 = resolve(args.v0, cfg, "v0", 32.14)?;
    let alpha = resolve(args.alpha, cfg, "alpha", 2.0)?;
    let k_min = resolve(args.k_min, cfg, "k_min", 1e-4)?;
    let k_max = resolve(args.k_max, cfg, "k_max", 2.0)?;
    let k_steps = resolve(args.k_steps, cfg, "k_steps", 400)?;
    let spacing = resolve(args.spacing, cfg, "spacing", Spacing::Log)?;
    let out = resolve_opt(args.out, cfg, "out")?
        .ok_or_else(|| CliError::Usage("scatter: --out <FILE> is required".into()))?;

    let grid = match spacing {
        Spacing::Log => Grid::log(k_min, k_max, k_steps),
        Spacing::Linear => Grid::linear(k_min, k_max, k_steps),
    }
    .map_err(|e| CliError::Usage(format!("k grid: {e}")))?;

    let rows = phase_sweep(v0, alpha, &grid.values())?;
    let mut csv = CsvFile::create(&out, "k,argR,R2,T2")?;
    for row in &rows {
        csv.row(&[
            fmt_float(row.k),
            fmt_float(row.arg_r),
            fmt_float(row.r2),
            fmt_float(row.t2),
        ])?;
    }
    csv.finish()?;
    write_meta(
        &out,
        &[
            ("command", "scatter".into()),
            ("v0", fmt_float(v0)),
            ("alpha", fmt_float(alpha)),
            ("k_min", fmt_float(k_min)),
            ("k_max", fmt_float(k_max)),
            ("k_steps", k_steps.to_string()),
            (
                "spacing",
                match spacing {
                    Spacing::Log => "log".into(),
                    Spacing::Linear => "linear".into(),
                },
            ),
        ],
    )
}
