//! `pipeline`: the GaAs parameter chain from material constants to the
//! coupler's reflection phase at the thermal relative wavevector.

use std::path::PathBuf;

use entangler_core::gaas::{entangler_report, EntanglerReport, MaterialConfig, RelativeMomentum};

use crate::config::{resolve, resolve_opt, ConfigMap};
use crate::output::{fmt_float, write_meta, write_text, CsvFile};
use crate::CliError;

#[derive(Debug, clap::Args)]
pub struct PipelineArgs {
    /// Temperature [K].
    #[arg(long, allow_negative_numbers = true)]
    temperature: Option<f64>,
    /// Fermi energy [E0].
    #[arg(long, allow_negative_numbers = true)]
    fermi: Option<f64>,
    /// Unit of length ω0 [nm].
    #[arg(long)]
    omega0: Option<f64>,
    /// Effective-mass ratio m*/me.
    #[arg(long)]
    mass_ratio: Option<f64>,
    /// Lead width [nm].
    #[arg(long)]
    width: Option<f64>,
    /// Barrier height [E0].
    #[arg(long, allow_negative_numbers = true)]
    v0: Option<f64>,
    /// Interaction length 1/α [ω0].
    #[arg(long)]
    alpha_inv: Option<f64>,
    /// Feed k = (kA − kB)/2 to the barrier instead of the full difference.
    #[arg(long)]
    half_relative: bool,
    /// Report path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Optional single-row CSV of the same numbers.
    #[arg(long)]
    csv: Option<PathBuf>,
}

pub fn run(args: PipelineArgs, cfg: &ConfigMap) -> Result<(), CliError> {
    let defaults = MaterialConfig::default();
    let material = MaterialConfig {
        omega0_nm: resolve(args.omega0, cfg, "omega0", defaults.omega0_nm)?,
        mass_ratio: resolve(args.mass_ratio, cfg, "mass_ratio", defaults.mass_ratio)?,
        width_nm: resolve(args.width, cfg, "width", defaults.width_nm)?,
        fermi_e0: resolve(args.fermi, cfg, "fermi", defaults.fermi_e0)?,
        temperature_k: resolve(args.temperature, cfg, "temperature", defaults.temperature_k)?,
        v0_e0: resolve(args.v0, cfg, "v0", defaults.v0_e0)?,
        alpha_inv_w0: resolve(args.alpha_inv, cfg, "alpha_inv", defaults.alpha_inv_w0)?,
    };
    let momentum = if args.half_relative || cfg.get::<bool>("half_relative")?.unwrap_or(false) {
        RelativeMomentum::HalfDifference
    } else {
        RelativeMomentum::FullDifference
    };
    let report = entangler_report(&material, momentum)?;

    let text = render_report(&material, &report, momentum);
    write_text(args.out.as_deref(), &text)?;

    if let Some(path) = resolve_opt(args.csv, cfg, "csv")? {
        let header = "E0_eV,channel_min_E0,channel_max_E0,fermi_in_window,delta_E_E0,kA_per_w0,kB_per_w0,delta_k_per_w0,delta_k_per_nm,k_rel_per_w0,argR,delta_theta,R2";
        let mut csv = CsvFile::create(&path, header)?;
        csv.row(&[
            fmt_float(report.e0_ev),
            fmt_float(report.window_e0.0),
            fmt_float(report.window_e0.1),
            report.fermi_in_window.to_string(),
            fmt_float(report.kin.delta_e_e0),
            fmt_float(report.kin.k_a_w0),
            fmt_float(report.kin.k_b_w0),
            fmt_float(report.kin.delta_k_w0),
            fmt_float(report.delta_k_per_nm),
            fmt_float(report.k_rel_w0),
            fmt_float(report.arg_r),
            fmt_float(report.delta_theta),
            fmt_float(report.r2),
        ])?;
        csv.finish()?;
        write_meta(&path, &[("command", "pipeline".into())])?;
    }
    Ok(())
}

fn render_report(
    material: &MaterialConfig,
    report: &EntanglerReport,
    momentum: RelativeMomentum,
) -> String {
    let mut s = String::new();
    let mut kv = |key: &str, value: String| {
        s.push_str(&format!("{key:<18} = {value}\n"));
    };
    kv("omega0_nm", fmt_float(material.omega0_nm));
    kv("mass_ratio", fmt_float(material.mass_ratio));
    kv("width_nm", fmt_float(material.width_nm));
    kv("fermi_E0", fmt_float(material.fermi_e0));
    kv("temperature_K", fmt_float(material.temperature_k));
    kv("v0_E0", fmt_float(material.v0_e0));
    kv("alpha_inv_w0", fmt_float(material.alpha_inv_w0));
    kv(
        "k_rel_convention",
        match momentum {
            RelativeMomentum::FullDifference => "full-difference".into(),
            RelativeMomentum::HalfDifference => "half-difference".into(),
        },
    );
    kv("E0_eV", fmt_float(report.e0_ev));
    kv("channel_min_E0", fmt_float(report.window_e0.0));
    kv("channel_max_E0", fmt_float(report.window_e0.1));
    kv("fermi_in_window", report.fermi_in_window.to_string());
    kv("delta_E_E0", fmt_float(report.kin.delta_e_e0));
    kv("kA_per_w0", fmt_float(report.kin.k_a_w0));
    kv("kB_per_w0", fmt_float(report.kin.k_b_w0));
    kv("delta_k_per_w0", fmt_float(report.kin.delta_k_w0));
    kv("delta_k_per_nm", fmt_float(report.delta_k_per_nm));
    kv("k_rel_per_w0", fmt_float(report.k_rel_w0));
    kv("argR", fmt_float(report.arg_r));
    kv("delta_theta", fmt_float(report.delta_theta));
    kv("R2", fmt_float(report.r2));
    s
}
