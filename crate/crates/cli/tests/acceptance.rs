//! Acceptance suite: one test per release criterion, each printing a
//! `criterion N PASS` line (visible with `--nocapture`). Tolerances are
//! pinned here, not configurable.
//!
//! Run with: cargo test -p entangler-cli --test acceptance -- --nocapture

use std::process::Command;
use std::time::Instant;

use entangler_core::classical::{
    closed_form_momenta, closed_form_positions, integrate, turning_separation, ClassicalState,
};
use entangler_core::gaas::{
    channel_window, entangler_report, kinematics, unit_energy_ev, MaterialConfig, RelativeMomentum,
};
use entangler_core::qubit::{
    classify, convention_audit, is_separable_diagonal, sweep, GateClass, SweepMode,
};
use entangler_core::scatter::{amplitudes, closed_form_t2, phase_sweep, ScatterParams};
use entangler_core::{Convention, Gate, Grid, Network, Qubit, TwoQubitState, VParams};
use num_complex::Complex64;
use std::f64::consts::{PI, TAU};
use tempfile::TempDir;

#[test]
fn c01_unit_energy_reproduction() {
    let e0 = unit_energy_ev(&MaterialConfig::default());
    let reference = 0.000_355;
    let rel = (e0 - reference).abs() / reference;
    assert!(rel < 5e-3, "E0 = {e0} eV is {rel:e} away from {reference}");
    println!("criterion 01 PASS: E0 = {e0:.6e} eV, {rel:.2e} relative from 0.000355");
}

#[test]
fn c02_channel_window() {
    let (lo, hi) = channel_window(&MaterialConfig::default());
    let rel_lo = (lo - 61.7).abs() / 61.7;
    let rel_hi = (hi - 246.8).abs() / 246.8;
    assert!(rel_lo < 1e-3, "lower edge {lo} off by {rel_lo:e}");
    assert!(rel_hi < 1e-3, "upper edge {hi} off by {rel_hi:e}");
    println!("criterion 02 PASS: window = ({lo:.4}, {hi:.4}) E0, within 0.1% of (61.7, 246.8)");
}

#[test]
fn c03_delta_k_reproduction() {
    let cfg = MaterialConfig::default();
    let kin = kinematics(&cfg, 1.0).unwrap();
    let dk_nm = kin.delta_k_w0 / cfg.omega0_nm;
    let rel = (dk_nm - 0.0027).abs() / 0.0027;
    assert!(rel < 0.03, "delta_k = {dk_nm} 1/nm is {rel:e} from 0.0027");
    // the exact surd value
    assert!((dk_nm - 0.002_660_295).abs() < 1e-8);
    println!(
        "criterion 03 PASS: delta_k = {dk_nm:.6e} 1/nm, {:.2}% from 0.0027",
        rel * 100.0
    );
}

#[test]
fn c04_delta_theta_reproduction() {
    let start = Instant::now();
    let report =
        entangler_report(&MaterialConfig::default(), RelativeMomentum::FullDifference).unwrap();
    let elapsed = start.elapsed();
    assert!(
        (report.delta_theta - 0.13).abs() <= 0.01,
        "delta_theta = {}",
        report.delta_theta
    );
    assert!(elapsed.as_secs_f64() < 1.0, "report took {elapsed:?}");
    println!(
        "criterion 04 PASS: delta_theta = {:.5} rad (0.13 ± 0.01) in {elapsed:?}",
        report.delta_theta
    );
}

#[test]
fn c05_small_k_limit() {
    let amps = amplitudes(&ScatterParams::new(1e-6, 32.14, 2.0).unwrap()).unwrap();
    let r_dev = (amps.reflection + 1.0).norm();
    let t_mag = amps.transmission.norm();
    assert!(r_dev < 1e-4, "|R + 1| = {r_dev:e}");
    assert!(t_mag < 1e-4, "|T| = {t_mag:e}");
    println!("criterion 05 PASS: at k = 1e-6, |R+1| = {r_dev:.3e}, |T| = {t_mag:.3e}");
}

#[test]
fn c06_unitarity_and_oracle_grid() {
    let ks = Grid::log(1e-4, 10.0, 400).unwrap().values();
    let mut worst_flux = 0.0_f64;
    let mut worst_oracle = 0.0_f64;
    let mut oracle_points = 0usize;
    for v0 in [5.0, 32.14, 100.0] {
        for alpha in [1.0, 2.0, 4.0] {
            for &k in &ks {
                let p = ScatterParams::new(k, v0, alpha).unwrap();
                let amps = amplitudes(&p).unwrap();
                worst_flux = worst_flux.max((amps.flux() - 1.0).abs());
                if let Ok(oracle) = closed_form_t2(&p) {
                    let t2 = amps.transmission.norm_sqr();
                    worst_oracle = worst_oracle.max((t2 - oracle).abs() / oracle);
                    oracle_points += 1;
                }
            }
        }
    }
    assert!(
        worst_flux < 1e-10,
        "worst | |R|²+|T|² − 1 | = {worst_flux:e}"
    );
    assert!(
        worst_oracle < 1e-8,
        "worst closed-form deviation {worst_oracle:e}"
    );
    assert_eq!(
        oracle_points,
        8 * 400,
        "eight of nine combinations are over-barrier"
    );
    println!(
        "criterion 06 PASS: worst flux defect {worst_flux:.2e}, worst |T|² oracle deviation {worst_oracle:.2e} over 3x3x400 grid"
    );
}

#[test]
fn c07_phase_and_reflection_monotone() {
    let ks = Grid::log(1e-4, 2.0, 400).unwrap().values();
    let rows = phase_sweep(32.14, 2.0, &ks).unwrap();
    assert!(
        (rows[0].arg_r - PI).abs() < 1e-3,
        "arg R starts at {}",
        rows[0].arg_r
    );
    for w in rows.windows(2) {
        assert!(
            w[1].arg_r < w[0].arg_r,
            "arg R not decreasing at k = {}",
            w[1].k
        );
        assert!(w[1].r2 < w[0].r2, "|R|² not decreasing at k = {}", w[1].k);
    }
    println!(
        "criterion 07 PASS: arg R falls monotonically {:.5} → {:.5} and |R|² {:.6} → {:.6} over k ∈ [1e-4, 2]",
        rows[0].arg_r,
        rows.last().unwrap().arg_r,
        rows[0].r2,
        rows.last().unwrap().r2
    );
}

#[test]
fn c08_trajectory_oracle_equivalence() {
    let (v0, alpha) = (32.14, 2.0);
    let (e_r, e_cm) = (v0 / 2.0, 25.0);
    let t0 = -10.0;
    let (x_a, x_b) = closed_form_positions(t0, e_r, e_cm, v0, alpha).unwrap();
    let (p_a, p_b) = closed_form_momenta(t0, e_r, e_cm, v0, alpha).unwrap();
    let initial = ClassicalState { x_a, x_b, p_a, p_b };
    let traj = integrate(&initial, v0, alpha, 1e-3, t0, -t0).unwrap();

    let mut worst = 0.0_f64;
    for (t, s) in traj.times.iter().zip(&traj.states) {
        let (xa, xb) = closed_form_positions(*t, e_r, e_cm, v0, alpha).unwrap();
        worst = worst.max((s.x_a - xa).abs()).max((s.x_b - xb).abs());
    }
    assert!(worst < 1e-6, "worst RK4-vs-closed-form deviation {worst:e}");

    let end = traj.last();
    let exchange = (end.p_a - p_b).abs().max((end.p_b - p_a).abs());
    assert!(exchange < 1e-6, "momentum exchange defect {exchange:e}");

    let turn = turning_separation(e_r, v0, alpha).unwrap();
    let gap = (traj.min_separation() - turn).abs();
    assert!(gap < 1e-9, "turning separation defect {gap:e}");
    println!(
        "criterion 08 PASS: max position dev {worst:.2e}, momentum-exchange dev {exchange:.2e}, turning-gap dev {gap:.2e}"
    );
}

#[test]
fn c09_gate_algebra() {
    let qa = Gate::sqrt_not(Qubit::A);
    let qb = Gate::sqrt_not(Qubit::B);
    // Q² is the NOT on its qubit: couples c1↔c3, c2↔c4
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let not_a = Gate::from_entries_unchecked([
        [zero, zero, one, zero],
        [zero, zero, zero, one],
        [one, zero, zero, zero],
        [zero, one, zero, zero],
    ]);
    assert!((&qa * &qa).max_entry_diff(&not_a) < 1e-12);
    let q4 = &(&qa * &qa) * &(&qa * &qa);
    assert!(q4.max_entry_diff(&Gate::identity()) < 1e-12);
    let q4b = &(&qb * &qb) * &(&qb * &qb);
    assert!(q4b.max_entry_diff(&Gate::identity()) < 1e-12);

    for g in [
        qa,
        qb,
        Gate::sqrt_not_cubed(Qubit::A),
        Gate::sqrt_not_cubed(Qubit::B),
        Gate::phase_gate(&VParams::new(0.7, -0.2, 2.9)),
    ] {
        assert!(g.unitarity_deviation() < 1e-12);
    }

    let reduced = Network::testing_network(&Gate::identity()).compose();
    assert!(reduced.max_entry_diff(&(&qb * &qa)) < 1e-12);
    let out = reduced
        .apply(&TwoQubitState::basis_state(1).unwrap())
        .unwrap();
    for p in out.probabilities() {
        assert!((p - 0.25).abs() < 1e-12);
    }
    println!("criterion 09 PASS: Q² = NOT, Q⁴ = I, gates unitary, V = I network gives uniform 1/4");
}

#[test]
fn c10_separability_classification() {
    let n = 50;
    let uniform = TwoQubitState::uniform_product();
    let mut agreements = 0usize;
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let p = VParams::new(
                    TAU * i as f64 / n as f64,
                    TAU * j as f64 / n as f64,
                    TAU * l as f64 / n as f64,
                );
                let by_angle = classify(&p) == GateClass::NonEntangling;
                let gate = Gate::phase_gate(&p);
                let by_structure = is_separable_diagonal(&gate, 1e-12);
                let by_concurrence = gate.apply(&uniform).unwrap().concurrence() < 1e-12;
                assert_eq!(by_angle, by_structure, "structure disagrees at {p:?}");
                assert_eq!(by_angle, by_concurrence, "concurrence disagrees at {p:?}");
                agreements += 1;
            }
        }
    }
    assert_eq!(agreements, n * n * n);
    println!("criterion 10 PASS: three separability tests agree on all {agreements} grid points");
}

#[test]
fn c11_quarter_bound() {
    let grid = Grid::linear(0.0, TAU, 20_001).unwrap();
    let rows = sweep(SweepMode::Phi1 { theta: PI }, &grid, Convention::Literal).unwrap();
    let max_p01 = rows
        .iter()
        .map(|r| r.probs_non_entangling[2])
        .fold(f64::NEG_INFINITY, f64::max);
    assert!(max_p01 <= 0.25 + 1e-9, "max P(|0,1>) = {max_p01}");
    println!(
        "criterion 11 PASS: max P(|0,1>) over 20001 phi1 points = {max_p01:.12} ≤ 0.25 + 1e-9"
    );
}

#[test]
fn c12_convention_audit() {
    let report = convention_audit().unwrap();
    let get = |conv: Convention, ideal: bool| {
        report
            .cases
            .iter()
            .find(|c| {
                c.convention == conv && (c.gate == entangler_core::qubit::VKind::Ideal) == ideal
            })
            .unwrap()
    };
    // literal + ideal: e^{iπ/2}|1,1>
    let c = get(Convention::Literal, true);
    assert_eq!(c.basis_slot, Some(1));
    assert!((c.phase.unwrap() - Complex64::new(0.0, 1.0)).norm() < 1e-10);
    // reversed-v + ideal: e^{i3π/2}|1,1>
    let c = get(Convention::ReversedV, true);
    assert_eq!(c.basis_slot, Some(1));
    assert!((c.phase.unwrap() - Complex64::new(0.0, -1.0)).norm() < 1e-10);
    // reversed-v + non-entangling: +|1,1>
    let c = get(Convention::ReversedV, false);
    assert_eq!(c.basis_slot, Some(1));
    assert!((c.phase.unwrap() - Complex64::new(1.0, 0.0)).norm() < 1e-10);
    // no convention reproduces the reference outputs
    assert!(!report.any_reference_match);

    // the CLI audit artifact states it and emits per-convention sweeps
    let dir = TempDir::new().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_entangler"))
        .current_dir(dir.path())
        .args([
            "gates",
            "--theta-steps",
            "21",
            "--out",
            "sweep.csv",
            "--convention",
            "audit",
            "--audit-out",
            "audit.txt",
            "--audit-csv",
            "audit.csv",
        ])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = std::fs::read_to_string(dir.path().join("audit.txt")).unwrap();
    assert!(text.contains("no audited convention reproduces the reference outputs"));
    assert!(text.contains("e^(i pi/2) |1,1>"));
    assert!(text.contains("e^(i 3pi/2) |1,1>"));
    assert!(text.contains("+1 |1,1>"));
    for tag in ["literal", "reversed-v", "swapped-basis", "q-swap"] {
        assert!(
            dir.path().join(format!("sweep.{tag}.csv")).exists(),
            "missing per-convention sweep for {tag}"
        );
    }
    println!("criterion 12 PASS: audit reproduces the three oracle outputs and reports no reference match");
}

#[test]
fn c13_cli_determinism() {
    let dir_a = TempDir::new().unwrap();
    let dir_b = TempDir::new().unwrap();
    let runs: &[&[&str]] = &[
        &["gates", "--theta-steps", "51", "--out", "fig3.csv"],
        &["scatter", "--k-steps", "60", "--out", "scatter.csv"],
        &[
            "classical",
            "--portrait-out",
            "portrait.csv",
            "--x-steps",
            "41",
            "--trajectory-out",
            "traj.csv",
            "--dt",
            "0.01",
            "--t0",
            "-5",
            "--t-max",
            "5",
            "--exact-out",
            "exact.csv",
        ],
        &["pipeline", "--csv", "pipeline.csv"],
    ];
    for dir in [&dir_a, &dir_b] {
        for args in runs {
            let out = Command::new(env!("CARGO_BIN_EXE_entangler"))
                .current_dir(dir.path())
                .args(*args)
                .output()
                .unwrap();
            assert_eq!(
                out.status.code(),
                Some(0),
                "{}",
                String::from_utf8_lossy(&out.stderr)
            );
        }
    }
    let mut compared = 0;
    for entry in std::fs::read_dir(dir_a.path()).unwrap() {
        let name = entry.unwrap().file_name();
        let a = std::fs::read(dir_a.path().join(&name)).unwrap();
        let b = std::fs::read(dir_b.path().join(&name)).unwrap();
        assert_eq!(a, b, "outputs differ for {name:?}");
        compared += 1;
    }
    assert!(compared >= 7, "only {compared} artifacts compared");
    println!("criterion 13 PASS: {compared} artifacts byte-identical across reruns");
}
