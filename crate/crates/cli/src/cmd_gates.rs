//! `gates`: θ and φ₁ sweeps of the testing network plus the convention audit.

use std::f64::consts::TAU;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use entangler_core::qubit::{convention_audit, sweep, AuditReport, SweepMode};
use entangler_core::{Convention, Grid};
use num_complex::Complex64;

use crate::config::{resolve, resolve_opt, ConfigMap};
use crate::output::{fmt_float, write_meta, write_text, CsvFile};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// θ sweep; emits basis probabilities, qubit-A marginals and the TVD.
    Fig3,
    /// Alias of fig3 (the same table carries the marginal columns).
    Fig4,
    /// φ₁ sweep at fixed θ with φ₂ = θ − φ₁ on the non-entangling side.
    Phi1,
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        <Mode as ValueEnum>::from_str(s, true)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Literal,
    ReversedV,
    SwappedBasis,
    QSwap,
    /// Run the audit and emit one sweep CSV per convention.
    Audit,
}

impl std::str::FromStr for ConventionArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        <ConventionArg as ValueEnum>::from_str(s, true)
    }
}

impl ConventionArg {
    fn single(&self) -> Option<Convention> {
        match self {
            ConventionArg::Literal => Some(Convention::Literal),
            ConventionArg::ReversedV => Some(Convention::ReversedV),
            ConventionArg::SwappedBasis => Some(Convention::SwappedBasis),
            ConventionArg::QSwap => Some(Convention::QSwap),
            ConventionArg::Audit => None,
        }
    }
}

#[derive(Debug, clap::Args)]
pub struct GatesArgs {
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    #[arg(long, allow_negative_numbers = true)]
    theta_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    theta_max: Option<f64>,
    #[arg(long)]
    theta_steps: Option<usize>,
    /// Fixed θ for phi1 mode.
    #[arg(long, allow_negative_numbers = true)]
    theta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    phi1_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    phi1_max: Option<f64>,
    #[arg(long)]
    phi1_steps: Option<usize>,
    #[arg(long, value_enum)]
    convention: Option<ConventionArg>,
    /// Sweep CSV path; with --convention audit the convention name is
    /// inserted before the extension.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Plain-text audit report path (stdout if the audit runs without it).
    #[arg(long)]
    audit_out: Option<PathBuf>,
    /// CSV audit table path.
    #[arg(long)]
    audit_csv: Option<PathBuf>,
}

struct Resolved {
    mode: Mode,
    grid: Grid,
    theta: f64,
    convention: ConventionArg,
    out: PathBuf,
    audit_out: Option<PathBuf>,
    audit_csv: Option<PathBuf>,
}

fn resolve_args(args: GatesArgs, cfg: &ConfigMap) -> Result<Resolved, CliError> {
    let mode = resolve(args.mode, cfg, "mode", Mode::Fig3)?;
    let theta = resolve(args.theta, cfg, "theta", std::f64::consts::PI)?;
    let (min, max, steps) = match mode {
        Mode::Fig3 | Mode::Fig4 => (
            resolve(args.theta_min, cfg, "theta_min", 0.0)?,
            resolve(args.theta_max, cfg, "theta_max", TAU)?,
            resolve(args.theta_steps, cfg, "theta_steps", 201)?,
        ),
        Mode::Phi1 => (
            resolve(args.phi1_min, cfg, "phi1_min", 0.0)?,
            resolve(args.phi1_max, cfg, "phi1_max", TAU)?,
            resolve(args.phi1_steps, cfg, "phi1_steps", 201)?,
        ),
    };
    let grid =
        Grid::linear(min, max, steps).map_err(|e| CliError::Usage(format!("sweep grid: {e}")))?;
    let out = resolve_opt(args.out, cfg, "out")?
        .ok_or_else(|| CliError::Usage("gates: --out <FILE> is required".into()))?;
    Ok(Resolved {
        mode,
        grid,
        theta,
        convention: resolve(args.convention, cfg, "convention", ConventionArg::Literal)?,
        out,
        audit_out: resolve_opt(args.audit_out, cfg, "audit_out")?,
        audit_csv: resolve_opt(args.audit_csv, cfg, "audit_csv")?,
    })
}

pub fn run(args: GatesArgs, cfg: &ConfigMap) -> Result<(), CliError> {
    let r = resolve_args(args, cfg)?;
    match r.convention.single() {
        Some(convention) => {
            write_sweep(&r, convention, &r.out)?;
        }
        None => {
            for convention in Convention::ALL {
                let path = suffixed_path(&r.out, convention.name());
                write_sweep(&r, convention, &path)?;
            }
            run_audit(r.audit_out.as_deref(), r.audit_csv.as_deref(), true)?;
            return Ok(());
        }
    }
    if r.audit_out.is_some() || r.audit_csv.is_some() {
        run_audit(r.audit_out.as_deref(), r.audit_csv.as_deref(), false)?;
    }
    Ok(())
}

fn suffixed_path(base: &Path, tag: &str) -> PathBuf {
    let stem = base.file_stem().unwrap_or_default().to_string_lossy();
    let name = match base.extension() {
        Some(ext) => format!("{stem}.{tag}.{}", ext.to_string_lossy()),
        None => format!("{stem}.{tag}"),
    };
    base.with_file_name(name)
}

fn write_sweep(r: &Resolved, convention: Convention, path: &Path) -> Result<(), CliError> {
    let (core_mode, angle_label) = match r.mode {
        Mode::Fig3 | Mode::Fig4 => (SweepMode::Theta, "theta"),
        Mode::Phi1 => (SweepMode::Phi1 { theta: r.theta }, "phi1"),
    };
    let rows = sweep(core_mode, &r.grid, convention)?;
    let header = format!(
        "{angle_label},P11_ent,P10_ent,P01_ent,P00_ent,P11_non,P10_non,P01_non,P00_non,probA1_ent,probA1_non,tvd"
    );
    let mut csv = CsvFile::create(path, &header)?;
    for row in &rows {
        let mut fields = Vec::with_capacity(12);
        fields.push(fmt_float(row.angle));
        fields.extend(row.probs_entangling.iter().map(|p| fmt_float(*p)));
        fields.extend(row.probs_non_entangling.iter().map(|p| fmt_float(*p)));
        fields.push(fmt_float(row.prob_a1_entangling));
        fields.push(fmt_float(row.prob_a1_non_entangling));
        fields.push(fmt_float(row.tvd));
        csv.row(&fields)?;
    }
    debug_assert_eq!(csv.rows_written(), r.grid.len());
    csv.finish()?;

    let mut meta = vec![
        ("command", "gates".to_string()),
        ("mode", format!("{:?}", r.mode).to_lowercase()),
        ("convention", convention.name().to_string()),
        ("angle", angle_label.to_string()),
        ("steps", r.grid.len().to_string()),
    ];
    if matches!(r.mode, Mode::Phi1) {
        meta.push(("theta", fmt_float(r.theta)));
    }
    write_meta(path, &meta)
}

fn run_audit(
    text_path: Option<&Path>,
    csv_path: Option<&Path>,
    text_to_stdout_if_unset: bool,
) -> Result<(), CliError> {
    let report = convention_audit()?;
    let rendered = render_audit_text(&report);
    if text_path.is_some() || text_to_stdout_if_unset {
        write_text(text_path, &rendered)?;
    }
    if let Some(path) = csv_path {
        write_audit_csv(&report, path)?;
    }
    Ok(())
}

/// Renders amplitudes that are exact quarter turns as e^(i n pi/2) labels.
fn phase_label(phase: Complex64) -> String {
    const TOL: f64 = 1e-9;
    let candidates: [(Complex64, &str); 4] = [
        (Complex64::new(1.0, 0.0), "+1"),
        (Complex64::new(0.0, 1.0), "e^(i pi/2)"),
        (Complex64::new(-1.0, 0.0), "e^(i pi)"),
        (Complex64::new(0.0, -1.0), "e^(i 3pi/2)"),
    ];
    for (value, label) in candidates {
        if (phase - value).norm() < TOL {
            return label.to_string();
        }
    }
    format!("e^(i {})", fmt_float(phase.arg()))
}

const BASIS: [&str; 4] = ["|1,1>", "|1,0>", "|0,1>", "|0,0>"];

pub fn render_audit_text(report: &AuditReport) -> String {
    let mut s = String::new();
    s.push_str("convention audit: network output N|1,1> at theta = pi\n");
    s.push_str("reference outputs under test: e^(i 3pi/2)|0,1> (ideal gate), e^(i 3pi/2)|1,0> (non-entangling gate)\n\n");
    s.push_str(&format!(
        "{:<14} {:<16} {:<34} {}\n",
        "convention", "gate", "output state", "matches reference"
    ));
    for case in &report.cases {
        let rendered = match (case.basis_slot, case.phase) {
            (Some(slot), Some(phase)) => {
                format!("{} {}", phase_label(phase), BASIS[slot - 1])
            }
            _ => case
                .output
                .iter()
                .map(|a| format!("{:+.6}{:+.6}i", a.re, a.im))
                .collect::<Vec<_>>()
                .join(" "),
        };
        s.push_str(&format!(
            "{:<14} {:<16} {:<34} {}\n",
            case.convention.name(),
            case.gate.name(),
            rendered,
            if case.matches_reference { "yes" } else { "no" }
        ));
    }
    s.push('\n');
    if report.any_reference_match {
        s.push_str("at least one audited convention reproduces a reference output.\n");
    } else {
        s.push_str(
            "no audited convention reproduces the reference outputs; \
             every convention returns the input |1,1> up to a global phase.\n",
        );
    }
    s
}

fn write_audit_csv(report: &AuditReport, path: &Path) -> Result<(), CliError> {
    let header = "convention,gate,c1_re,c1_im,c2_re,c2_im,c3_re,c3_im,c4_re,c4_im,basis_slot,matches_reference";
    let mut csv = CsvFile::create(path, header)?;
    for case in &report.cases {
        let mut fields = vec![
            case.convention.name().to_string(),
            case.gate.name().to_string(),
        ];
        for a in &case.output {
            fields.push(fmt_float(a.re));
            fields.push(fmt_float(a.im));
        }
        fields.push(
            case.basis_slot
                .map(|s| s.to_string())
                .unwrap_or_else(|| "none".into()),
        );
        fields.push(if case.matches_reference { "yes" } else { "no" }.into());
        csv.row(&fields)?;
    }
    csv.finish()?;
    write_meta(
        path,
        &[
            ("command", "gates".into()),
            ("artifact", "convention-audit".into()),
            ("cases", report.cases.len().to_string()),
        ],
    )
}
