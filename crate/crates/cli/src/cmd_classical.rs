//! `classical`: phase portrait of the relative motion and collision
//! trajectory dumps (RK4 and, below the separatrix, the closed form).

use std::path::PathBuf;

use entangler_core::classical::{
    classify, closed_form_momenta, closed_form_positions, integrate, phase_portrait,
    ClassicalState, ComCoords, Regime,
};

use crate::config::{resolve, resolve_opt, ConfigMap};
use crate::output::{fmt_float, write_meta, CsvFile};
use crate::CliError;

#[derive(Debug, clap::Args)]
pub struct ClassicalArgs {
    /// Barrier height [E0].
    #[arg(long, allow_negative_numbers = true)]
    v0: Option<f64>,
    /// Inverse interaction width α [1/ω0].
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,

    /// Phase-portrait CSV path.
    #[arg(long)]
    portrait_out: Option<PathBuf>,
    /// Comma-separated relative energies [E0] for the portrait.
    #[arg(long)]
    energies: Option<String>,
    #[arg(long)]
    x_max: Option<f64>,
    #[arg(long)]
    x_steps: Option<usize>,

    /// Trajectory CSV path (RK4).
    #[arg(long)]
    trajectory_out: Option<PathBuf>,
    /// Relative energy [E0] of the trajectory run.
    #[arg(long, allow_negative_numbers = true)]
    er: Option<f64>,
    /// Center-of-mass energy [E0].
    #[arg(long, allow_negative_numbers = true)]
    ecm: Option<f64>,
    #[arg(long)]
    dt: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    t0: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    t_max: Option<f64>,
    /// Closed-form trajectory CSV (only valid below the separatrix).
    #[arg(long)]
    exact_out: Option<PathBuf>,
}

pub fn run(args: ClassicalArgs, cfg: &ConfigMap) -> Result<(), CliError> {
    let v0 = resolve(args.v0, cfg, "v0", 32.14)?;
    let alpha = resolve(args.alpha, cfg, "alpha", 2.0)?;

    let portrait_out = resolve_opt(args.portrait_out, cfg, "portrait_out")?;
    let trajectory_out = resolve_opt(args.trajectory_out, cfg, "trajectory_out")?;
    let exact_out = resolve_opt(args.exact_out, cfg, "exact_out")?;
    if portrait_out.is_none() && trajectory_out.is_none() && exact_out.is_none() {
        return Err(CliError::Usage(
            "classical: need --portrait-out and/or --trajectory-out/--exact-out".into(),
        ));
    }

    if let Some(path) = portrait_out {
        // default curves bracket the separatrix at v0
        let energies = match resolve_opt(args.energies.clone(), cfg, "energies")? {
            Some(raw) => parse_energies(&raw)?,
            None => [0.25, 0.5, 0.75, 1.5, 2.0].iter().map(|r| r * v0).collect(),
        };
        let x_max = resolve(args.x_max, cfg, "x_max", 3.0)?;
        let x_steps = resolve(args.x_steps, cfg, "x_steps", 201)?;
        if x_steps < 2 {
            return Err(CliError::Usage(format!(
                "portrait grid needs at least 2 steps, got {x_steps}"
            )));
        }
        let curves = phase_portrait(v0, alpha, &energies, x_max, x_steps)?;
        let mut csv = CsvFile::create(&path, "er,regime,x,p")?;
        for curve in &curves {
            for (x, p) in &curve.points {
                csv.row(&[
                    fmt_float(curve.e_r),
                    curve.regime.name().to_string(),
                    fmt_float(*x),
                    fmt_float(*p),
                ])?;
            }
        }
        csv.finish()?;
        let energy_list = energies
            .iter()
            .map(|e| fmt_float(*e))
            .collect::<Vec<_>>()
            .join(",");
        write_meta(
            &path,
            &[
                ("command", "classical".into()),
                ("artifact", "phase-portrait".into()),
                ("v0", fmt_float(v0)),
                ("alpha", fmt_float(alpha)),
                ("x_max", fmt_float(x_max)),
                ("x_steps", x_steps.to_string()),
                ("energies_e0", energy_list),
            ],
        )?;
    }

    if trajectory_out.is_some() || exact_out.is_some() {
        let er = resolve(args.er, cfg, "er", v0 / 2.0)?;
        let ecm = resolve(args.ecm, cfg, "ecm", 25.0)?;
        let dt = resolve(args.dt, cfg, "dt", 1e-3)?;
        let t0 = resolve(args.t0, cfg, "t0", -20.0)?;
        let t_max = resolve(args.t_max, cfg, "t_max", 20.0)?;

        if let Some(path) = trajectory_out {
            let initial = initial_state(er, ecm, v0, alpha, t0)?;
            let traj = integrate(&initial, v0, alpha, dt, t0, t_max)?;
            let mut csv = CsvFile::create(&path, "t,xA,xB,pA,pB")?;
            for (t, s) in traj.times.iter().zip(&traj.states) {
                csv.row(&[
                    fmt_float(*t),
                    fmt_float(s.x_a),
                    fmt_float(s.x_b),
                    fmt_float(s.p_a),
                    fmt_float(s.p_b),
                ])?;
            }
            csv.finish()?;
            write_meta(
                &path,
                &[
                    ("command", "classical".into()),
                    ("artifact", "trajectory-rk4".into()),
                    ("v0", fmt_float(v0)),
                    ("alpha", fmt_float(alpha)),
                    ("er", fmt_float(er)),
                    ("ecm", fmt_float(ecm)),
                    ("dt", fmt_float(dt)),
                    ("t0", fmt_float(t0)),
                    ("t_max", fmt_float(t_max)),
                    ("regime", classify(er, v0)?.name().into()),
                ],
            )?;
        }

        if let Some(path) = exact_out {
            let steps = ((t_max - t0) / dt).ceil() as usize;
            let mut csv = CsvFile::create(&path, "t,xA,xB")?;
            for i in 0..=steps {
                let t = if i == steps {
                    t_max
                } else {
                    t0 + i as f64 * dt
                };
                let (xa, xb) = closed_form_positions(t, er, ecm, v0, alpha)?;
                csv.row(&[fmt_float(t), fmt_float(xa), fmt_float(xb)])?;
            }
            csv.finish()?;
            write_meta(
                &path,
                &[
                    ("command", "classical".into()),
                    ("artifact", "trajectory-exact".into()),
                    ("v0", fmt_float(v0)),
                    ("alpha", fmt_float(alpha)),
                    ("er", fmt_float(er)),
                    ("ecm", fmt_float(ecm)),
                    ("dt", fmt_float(dt)),
                    ("t0", fmt_float(t0)),
                    ("t_max", fmt_float(t_max)),
                ],
            )?;
        }
    }
    Ok(())
}

/// Initial condition at t0. Below the separatrix it comes from the closed
/// form, so integrator and exact dumps describe the same orbit; above it the
/// pair starts far apart approaching with the requested relative energy.
fn initial_state(
    er: f64,
    ecm: f64,
    v0: f64,
    alpha: f64,
    t0: f64,
) -> Result<ClassicalState, CliError> {
    match classify(er, v0)? {
        Regime::BelowSeparatrix => {
            let (x_a, x_b) = closed_form_positions(t0, er, ecm, v0, alpha)?;
            let (p_a, p_b) = closed_form_momenta(t0, er, ecm, v0, alpha)?;
            Ok(ClassicalState { x_a, x_b, p_a, p_b })
        }
        Regime::Separatrix => Err(CliError::Domain(format!(
            "er = {er} sits on the separatrix: the approach time diverges"
        ))),
        Regime::AboveSeparatrix => Ok(ComCoords {
            total_momentum: 2.0 * ecm.sqrt(),
            center: ecm.sqrt() * t0,
            rel_momentum: er.sqrt(),
            separation: 2.0 * er.sqrt() * t0,
        }
        .to_state()),
    }
}

fn parse_energies(raw: &str) -> Result<Vec<f64>, CliError> {
    let mut out = Vec::new();
    for part in raw.split(',') {
        let trimmed = part.trim();
        if trimmed.is_empty() {
            continue;
        }
        let energy: f64 = trimmed
            .parse()
            .map_err(|_| CliError::Usage(format!("energies: cannot parse `{trimmed}`")))?;
        out.push(energy);
    }
    if out.is_empty() {
        return Err(CliError::Usage("energies: empty list".into()));
    }
    Ok(out)
}
