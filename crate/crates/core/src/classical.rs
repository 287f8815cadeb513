//! Classical two-electron collision through a repulsive sech² interaction.
//!
//! Dimensionless variables throughout: positions in ω₀, momenta in √(mE₀),
//! energies in E₀ and time in ω₀√(m/E₀). With that scaling the equations of
//! motion read ẋ = p for each particle and the full Hamiltonian is
//!
//!   H = p_A²/2 + p_B²/2 + v0 / cosh²(α(x_A − x_B)).

use crate::error::{Error, Result};

const MAX_STEPS: u64 = 50_000_000;

/// Phase-space point of the electron pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalState {
    pub x_a: f64,
    pub x_b: f64,
    pub p_a: f64,
    pub p_b: f64,
}

impl ClassicalState {
    pub fn total_energy(&self, v0: f64, alpha: f64) -> f64 {
        0.5 * (self.p_a * self.p_a + self.p_b * self.p_b)
            + v0 * sech_sq(alpha * (self.x_a - self.x_b))
    }
}

/// Center-of-mass and relative coordinates: P = p_A + p_B, X = (x_A + x_B)/2,
/// x = x_A − x_B, p = (p_A − p_B)/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComCoords {
    pub total_momentum: f64,
    pub center: f64,
    pub rel_momentum: f64,
    pub separation: f64,
}

impl ComCoords {
    /// Inverse map back to particle coordinates.
    pub fn to_state(&self) -> ClassicalState {
        ClassicalState {
            x_a: self.center + 0.5 * self.separation,
            x_b: self.center - 0.5 * self.separation,
            p_a: 0.5 * self.total_momentum + self.rel_momentum,
            p_b: 0.5 * self.total_momentum - self.rel_momentum,
        }
    }
}

/// E_cm = P²/4 and E_r = p² + v0 sech²(αx).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergySplit {
    pub e_cm: f64,
    pub e_r: f64,
}

pub fn split_coords(s: &ClassicalState, v0: f64, alpha: f64) -> (ComCoords, EnergySplit) {
    let coords = ComCoords {
        total_momentum: s.p_a + s.p_b,
        center: 0.5 * (s.x_a + s.x_b),
        rel_momentum: 0.5 * (s.p_a - s.p_b),
        separation: s.x_a - s.x_b,
    };
    let split = EnergySplit {
        e_cm: coords.total_momentum * coords.total_momentum / 4.0,
        e_r: coords.rel_momentum * coords.rel_momentum + v0 * sech_sq(alpha * coords.separation),
    };
    (coords, split)
}

fn sech_sq(z: f64) -> f64 {
    let e = (-z.abs()).exp();
    let s = 2.0 * e / (1.0 + e * e);
    s * s
}

/// asinh(a · cosh(u)) without overflowing cosh for large |u|.
fn asinh_of_scaled_cosh(a: f64, u: f64) -> f64 {
    let u = u.abs();
    if u < 350.0 {
        (a * u.cosh()).asinh()
    } else {
        a.ln() + u + (-2.0 * u).exp().ln_1p()
    }
}

fn check_positive(name: &'static str, value: f64) -> Result<()> {
    if value <= 0.0 || !value.is_finite() {
        return Err(Error::NotPositive { name, value });
    }
    Ok(())
}

/// Closed-form particle positions for the momentum-exchange branch
/// 0 < E_r < v0, with the collision centred at x = 0, t = 0:
///
///   x_{A,B}(t) = √(E_cm) t ∓ (1/2α) asinh(√(v0/E_r − 1) cosh(α√(4E_r) t))
pub fn closed_form_positions(
    t: f64,
    e_r: f64,
    e_cm: f64,
    v0: f64,
    alpha: f64,
) -> Result<(f64, f64)> {
    check_positive("v0", v0)?;
    check_positive("alpha", alpha)?;
    if e_cm < 0.0 || e_cm.is_nan() {
        return Err(Error::NotPositive {
            name: "e_cm",
            value: e_cm,
        });
    }
    if e_r <= 0.0 || e_r.is_nan() || e_r >= v0 {
        return Err(Error::EnergyBranch { er: e_r, v0 });
    }
    let drift = e_cm.sqrt() * t;
    let a = (v0 / e_r - 1.0).sqrt();
    let beta = alpha * (4.0 * e_r).sqrt();
    let half_gap = asinh_of_scaled_cosh(a, beta * t) / (2.0 * alpha);
    Ok((drift - half_gap, drift + half_gap))
}

/// Momenta of the closed-form trajectory, from dx/dt.
pub fn closed_form_momenta(t: f64, e_r: f64, e_cm: f64, v0: f64, alpha: f64) -> Result<(f64, f64)> {
    closed_form_positions(t, e_r, e_cm, v0, alpha)?;
    let a = (v0 / e_r - 1.0).sqrt();
    let beta = alpha * (4.0 * e_r).sqrt();
    let u = beta * t;
    // d/dt of asinh(a cosh(βt)): a β sinh(u) / √(1 + a² cosh²(u)), saturating
    // to ±β once cosh would overflow
    let gap_rate = if u.abs() < 350.0 {
        a * beta * u.sinh() / (1.0 + a * a * u.cosh() * u.cosh()).sqrt()
    } else {
        beta * u.signum()
    };
    let drift_rate = e_cm.sqrt();
    let p_a = drift_rate - gap_rate / (2.0 * alpha);
    let p_b = drift_rate + gap_rate / (2.0 * alpha);
    Ok((p_a, p_b))
}

/// Turning separation of the exchange branch: (1/α) asinh(√(v0/E_r − 1)).
pub fn turning_separation(e_r: f64, v0: f64, alpha: f64) -> Result<f64> {
    check_positive("v0", v0)?;
    check_positive("alpha", alpha)?;
    if e_r <= 0.0 || e_r.is_nan() || e_r >= v0 {
        return Err(Error::EnergyBranch { er: e_r, v0 });
    }
    Ok((v0 / e_r - 1.0).sqrt().asinh() / alpha)
}

/// A fixed-step trajectory sample.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<ClassicalState>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn last(&self) -> &ClassicalState {
        self.states
            .last()
            .expect("trajectory has at least the initial state")
    }

    /// Largest relative deviation of the conserved energy along the run.
    pub fn max_energy_drift(&self, v0: f64, alpha: f64) -> f64 {
        let e0 = self.states[0].total_energy(v0, alpha);
        self.states
            .iter()
            .map(|s| ((s.total_energy(v0, alpha) - e0) / e0).abs())
            .fold(0.0, f64::max)
    }

    pub fn min_separation(&self) -> f64 {
        self.states
            .iter()
            .map(|s| s.x_b - s.x_a)
            .fold(f64::INFINITY, f64::min)
    }
}

fn flow(s: &ClassicalState, v0: f64, alpha: f64) -> [f64; 4] {
    let x = s.x_a - s.x_b;
    let z = alpha * x;
    let force = 2.0 * alpha * v0 * sech_sq(z) * z.tanh();
    [s.p_a, s.p_b, force, -force]
}

/// Fixed-step 4th-order Runge–Kutta on the pair Hamiltonian from t0 to t_max.
/// The returned trajectory includes the initial state; sample i sits at
/// t0 + i·dt with a final partial step onto t_max. v0 = 0 is allowed and
/// gives free motion.
pub fn integrate(
    initial: &ClassicalState,
    v0: f64,
    alpha: f64,
    dt: f64,
    t0: f64,
    t_max: f64,
) -> Result<Trajectory> {
    if v0 < 0.0 || !v0.is_finite() {
        return Err(Error::NotPositive {
            name: "v0",
            value: v0,
        });
    }
    check_positive("alpha", alpha)?;
    check_positive("dt", dt)?;
    if t_max <= t0 || t_max.is_nan() || t0.is_nan() {
        return Err(Error::GridBounds {
            min: t0,
            max: t_max,
        });
    }
    let span = t_max - t0;
    let steps = (span / dt).ceil() as u64;
    if steps > MAX_STEPS {
        return Err(Error::StepOverflow {
            steps,
            max: MAX_STEPS,
        });
    }

    let mut times = Vec::with_capacity(steps as usize + 1);
    let mut states = Vec::with_capacity(steps as usize + 1);
    let mut state = *initial;
    let mut t = t0;
    times.push(t);
    states.push(state);
    for i in 0..steps {
        let h = if i == steps - 1 { t_max - t } else { dt };
        state = rk4_step(&state, v0, alpha, h);
        t = if i == steps - 1 {
            t_max
        } else {
            t0 + (i + 1) as f64 * dt
        };
        times.push(t);
        states.push(state);
    }
    Ok(Trajectory { times, states })
}

fn rk4_step(s: &ClassicalState, v0: f64, alpha: f64, h: f64) -> ClassicalState {
    let y = [s.x_a, s.x_b, s.p_a, s.p_b];
    let k1 = flow(s, v0, alpha);
    let k2 = flow(&offset(&y, &k1, h / 2.0), v0, alpha);
    let k3 = flow(&offset(&y, &k2, h / 2.0), v0, alpha);
    let k4 = flow(&offset(&y, &k3, h), v0, alpha);
    let mut out = [0.0; 4];
    for i in 0..4 {
        out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    ClassicalState {
        x_a: out[0],
        x_b: out[1],
        p_a: out[2],
        p_b: out[3],
    }
}

fn offset(y: &[f64; 4], k: &[f64; 4], h: f64) -> ClassicalState {
    ClassicalState {
        x_a: y[0] + h * k[0],
        x_b: y[1] + h * k[1],
        p_a: y[2] + h * k[2],
        p_b: y[3] + h * k[3],
    }
}

/// Relation of the relative energy to the separatrix at E_r = v0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// E_r < v0: momentum exchange, no crossing.
    BelowSeparatrix,
    /// E_r = v0 within 1e-12 relative.
    Separatrix,
    /// E_r > v0: position exchange.
    AboveSeparatrix,
}

impl Regime {
    pub fn name(&self) -> &'static str {
        match self {
            Regime::BelowSeparatrix => "below-separatrix",
            Regime::Separatrix => "separatrix",
            Regime::AboveSeparatrix => "above-separatrix",
        }
    }
}

pub fn classify(e_r: f64, v0: f64) -> Result<Regime> {
    check_positive("v0", v0)?;
    if e_r < 0.0 || e_r.is_nan() {
        return Err(Error::NotPositive {
            name: "e_r",
            value: e_r,
        });
    }
    if (e_r - v0).abs() <= 1e-12 * v0 {
        Ok(Regime::Separatrix)
    } else if e_r < v0 {
        Ok(Regime::BelowSeparatrix)
    } else {
        Ok(Regime::AboveSeparatrix)
    }
}

/// One constant-energy contour of the relative motion, p ≥ 0 branch;
/// the p ≤ 0 branch is its mirror image.
#[derive(Debug, Clone)]
pub struct PortraitCurve {
    pub e_r: f64,
    pub regime: Regime,
    pub points: Vec<(f64, f64)>,
}

/// Samples p(x) = +√(E_r − v0 sech²(αx)) for each energy. Curves at or above
/// the separatrix span [−x_max, x_max] with `steps` points and cross the
/// p-axis. Below the separatrix the barrier excludes |x| < x_turn, so the
/// contour has two branches, each sampled with `steps` points from the window
/// edge to its turning point, where it touches the x-axis. The separatrix
/// contour at E_r = v0 is appended when the energy list lacks it.
pub fn phase_portrait(
    v0: f64,
    alpha: f64,
    energies: &[f64],
    x_max: f64,
    steps: usize,
) -> Result<Vec<PortraitCurve>> {
    check_positive("v0", v0)?;
    check_positive("alpha", alpha)?;
    check_positive("x_max", x_max)?;
    if steps < 2 {
        return Err(Error::GridSteps(steps));
    }
    let mut curves = Vec::with_capacity(energies.len() + 1);
    for &e_r in energies {
        check_positive("e_r", e_r)?;
        curves.push(portrait_curve(e_r, v0, alpha, x_max, steps)?);
    }
    if !energies
        .iter()
        .any(|&e| classify(e, v0).unwrap() == Regime::Separatrix)
    {
        curves.push(portrait_curve(v0, v0, alpha, x_max, steps)?);
    }
    Ok(curves)
}

fn portrait_curve(
    e_r: f64,
    v0: f64,
    alpha: f64,
    x_max: f64,
    steps: usize,
) -> Result<PortraitCurve> {
    let regime = classify(e_r, v0)?;
    let momentum = |x: f64| (e_r - v0 * sech_sq(alpha * x)).max(0.0).sqrt();
    let linspace = |lo: f64, hi: f64, out: &mut Vec<(f64, f64)>| {
        for i in 0..steps {
            let x = lo + (hi - lo) * i as f64 / (steps - 1) as f64;
            out.push((x, momentum(x)));
        }
    };
    let mut points = Vec::new();
    if regime == Regime::BelowSeparatrix {
        let x_turn = turning_separation(e_r, v0, alpha)?;
        if x_turn >= x_max {
            return Err(Error::GridBounds {
                min: x_turn,
                max: x_max,
            });
        }
        linspace(-x_max, -x_turn, &mut points);
        linspace(x_turn, x_max, &mut points);
    } else {
        linspace(-x_max, x_max, &mut points);
    }
    Ok(PortraitCurve {
        e_r,
        regime,
        points,
    })
}
