//! Exact reflection and transmission amplitudes of the sech² barrier felt by
//! the relative coordinate of two colliding electrons.
//!
//! Everything is expressed in the shared unit convention: lengths in ω₀,
//! energies in E₀ = ħ²/(2mω₀²), wavevectors in 1/ω₀. The relative-motion
//! kinetic term is p²/m, so k·ω₀ = √(E_r / 2E₀) and the barrier-strength
//! combination 4mV₀/(α²ħ²) becomes 2(V₀/E₀)/(αω₀)².

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::special::{gamma, hyp2f1};

/// Parameters of one scattering evaluation: relative wavevector k [1/ω₀],
/// barrier height v0 [E₀] and inverse interaction width alpha [1/ω₀].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatterParams {
    k: f64,
    v0: f64,
    alpha: f64,
}

impl ScatterParams {
    pub fn new(k: f64, v0: f64, alpha: f64) -> Result<Self> {
        for (name, value) in [("k", k), ("v0", v0), ("alpha", alpha)] {
            if value <= 0.0 || !value.is_finite() {
                return Err(Error::NotPositive { name, value });
            }
        }
        Ok(Self { k, v0, alpha })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn v0(&self) -> f64 {
        self.v0
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn with_k(&self, k: f64) -> Result<Self> {
        Self::new(k, self.v0, self.alpha)
    }

    /// s = ½(−1 + √(1 − 2 v0/α²)). For 2 v0/α² > 1 this is −½ + iλ.
    pub fn s(&self) -> Complex64 {
        let q = 2.0 * self.v0 / (self.alpha * self.alpha);
        if q <= 1.0 {
            Complex64::new(0.5 * (-1.0 + (1.0 - q).sqrt()), 0.0)
        } else {
            Complex64::new(-0.5, 0.5 * (q - 1.0).sqrt())
        }
    }

    /// λ = Im s in the over-barrier regime; errors when s is real.
    pub fn barrier_lambda(&self) -> Result<f64> {
        let s = self.s();
        if s.im == 0.0 {
            return Err(Error::RealBranch(s.re));
        }
        Ok(s.im)
    }
}

/// Reflection amplitude R (momentum exchange) and transmission amplitude T
/// (position exchange, i.e. tunneling of the relative coordinate).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudePair {
    pub reflection: Complex64,
    pub transmission: Complex64,
}

impl AmplitudePair {
    /// |R|² + |T|²; equals 1 for a flux-conserving barrier.
    pub fn flux(&self) -> f64 {
        self.reflection.norm_sqr() + self.transmission.norm_sqr()
    }
}

/// Evaluates the gamma-function expressions
///
///   T = Γ(−ik/α − s) Γ(−ik/α + s + 1) / (Γ(−ik/α) Γ(−ik/α + 1))
///   R = Γ(ik/α) Γ(−ik/α − s) Γ(−ik/α + s + 1) / (Γ(−ik/α) Γ(−s) Γ(s + 1))
///
/// which are the asymptotic connection coefficients of the hypergeometric
/// wavefunction evaluated by [`wavefunction_probe`]. k = 0 is rejected (the
/// gamma factors hit their poles); take the limit at small positive k instead.
pub fn amplitudes(p: &ScatterParams) -> Result<AmplitudePair> {
    let s = p.s();
    let ika = Complex64::new(0.0, p.k / p.alpha);
    let g_shared = gamma(-ika - s)? * gamma(-ika + s + 1.0)?;
    let g_mika = gamma(-ika)?;
    let transmission = g_shared / (g_mika * gamma(-ika + 1.0)?);
    let reflection = gamma(ika)? * g_shared / (g_mika * gamma(-s)? * gamma(s + 1.0)?);
    Ok(AmplitudePair {
        reflection,
        transmission,
    })
}

/// Independent closed form for the transmission probability in the
/// over-barrier regime (s = −½ + iλ):
///
///   |T|² = sinh²(πk/α) / (sinh²(πk/α) + cosh²(πλ))
pub fn closed_form_t2(p: &ScatterParams) -> Result<f64> {
    let lambda = p.barrier_lambda()?;
    let sh = (PI * p.k / p.alpha).sinh();
    let ch = (PI * lambda).cosh();
    Ok(sh * sh / (sh * sh + ch * ch))
}

/// One row of a phase sweep: unwrapped arg R together with |R|² and |T|².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseRow {
    pub k: f64,
    pub arg_r: f64,
    pub r2: f64,
    pub t2: f64,
}

/// Sweeps the amplitudes over an ascending positive k-grid. arg R is reported
/// continuously, anchored near +π at the smallest k.
pub fn phase_sweep(v0: f64, alpha: f64, kgrid: &[f64]) -> Result<Vec<PhaseRow>> {
    if kgrid.is_empty() {
        return Err(Error::GridSteps(0));
    }
    let mut rows = Vec::with_capacity(kgrid.len());
    let mut prev: Option<f64> = None;
    for (i, &k) in kgrid.iter().enumerate() {
        if i > 0 && k <= kgrid[i - 1] {
            return Err(Error::GridBounds {
                min: k,
                max: kgrid[i - 1],
            });
        }
        let amps = amplitudes(&ScatterParams::new(k, v0, alpha)?)?;
        let mut arg = amps.reflection.arg();
        match prev {
            None => {
                if arg < 0.0 {
                    arg += 2.0 * PI;
                }
            }
            Some(p) => {
                while arg - p > PI {
                    arg -= 2.0 * PI;
                }
                while p - arg > PI {
                    arg += 2.0 * PI;
                }
            }
        }
        prev = Some(arg);
        rows.push(PhaseRow {
            k,
            arg_r: arg,
            r2: amps.reflection.norm_sqr(),
            t2: amps.transmission.norm_sqr(),
        });
    }
    Ok(rows)
}

/// Largest |x| accepted by [`wavefunction_probe`], in units of 1/α.
pub const PROBE_RANGE_ALPHA: f64 = 50.0;

/// The relative-motion scattering wavefunction
///
///   φ(x) = (1 − ζ²)^{−ik/2α} F(−ik/α − s, −ik/α + s + 1; −ik/α + 1; (1−ζ)/2),
///   ζ = tanh(αx)
///
/// normalized so that φ(x→+∞) = T e^{ikx} and φ(x→−∞) = e^{ikx} + R e^{−ikx}.
/// Evaluating the hypergeometric series and fitting those asymptotic forms at
/// |x| ≳ 10/α recovers the amplitudes of [`amplitudes`] through an independent
/// code path.
pub fn wavefunction_probe(p: &ScatterParams, x: f64) -> Result<Complex64> {
    let max = PROBE_RANGE_ALPHA / p.alpha;
    if x.abs() > max || x.is_nan() {
        return Err(Error::PositionRange { x: x.abs(), max });
    }
    let s = p.s();
    let kappa = p.k / p.alpha;
    let ika = Complex64::new(0.0, kappa);
    // u = (1 − tanh(αx))/2 computed without cancellation
    let u = 1.0 / (1.0 + (2.0 * p.alpha * x).exp());
    let one_minus_u = 1.0 / (1.0 + (-2.0 * p.alpha * x).exp());
    let series = hyp2f1(-ika - s, -ika + s + 1.0, -ika + 1.0, u)?;
    // (1 − ζ²)^{−ik/2α} with 1 − ζ² = 4u(1−u)
    let prefactor = Complex64::new(4.0 * u * one_minus_u, 0.0).powc(-ika / 2.0);
    // raw asymptote at +∞ is 4^{−ik/2α} e^{ikx}; rescale onto T e^{ikx}
    let norm = Complex64::new(0.0, kappa / 2.0 * 4.0_f64.ln()).exp();
    let t = amplitudes(p)?.transmission;
    Ok(prefactor * series * t * norm)
}

/// Which asymptotic region of the pair wavefunction to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Both electrons far to the left of the interaction: incident product
    /// plane wave.
    Incident,
    /// Both electrons far to the right: transmitted plus momentum-exchanged
    /// terms.
    Outgoing,
}

/// Asymptotic two-electron wavefunction for electrons with wavevectors
/// kA > kB. The barrier amplitudes are evaluated at the relative wavevector
/// k = (kA − kB)/2, matching the relative momentum p = ½(p_A − p_B).
pub fn total_wavefunction(
    barrier_v0: f64,
    barrier_alpha: f64,
    ka: f64,
    kb: f64,
    xa: f64,
    xb: f64,
    side: Side,
) -> Result<Complex64> {
    let k_rel = relative_wavevector(ka, kb)?;
    let plane = |k1: f64, k2: f64| Complex64::new(0.0, k1 * xa + k2 * xb).exp();
    match side {
        Side::Incident => Ok(plane(ka, kb)),
        Side::Outgoing => {
            let amps = amplitudes(&ScatterParams::new(k_rel, barrier_v0, barrier_alpha)?)?;
            Ok(amps.transmission * plane(ka, kb) + amps.reflection * plane(kb, ka))
        }
    }
}

/// k = (kA − kB)/2; requires kA > kB.
pub fn relative_wavevector(ka: f64, kb: f64) -> Result<f64> {
    if ka <= kb || ka.is_nan() || kb.is_nan() {
        return Err(Error::MomentumOrdering { ka, kb });
    }
    Ok((ka - kb) / 2.0)
}

/// k·ω₀ = √(E_r / 2E₀): the relative kinetic term is p²/m, not p²/2m.
pub fn wavevector_from_relative_energy(e_r: f64) -> Result<f64> {
    if e_r <= 0.0 || !e_r.is_finite() {
        return Err(Error::NotPositive {
            name: "e_r",
            value: e_r,
        });
    }
    Ok((e_r / 2.0).sqrt())
}

/// Inverse of [`wavevector_from_relative_energy`]: E_r = 2k² in E₀.
pub fn relative_energy_from_wavevector(k: f64) -> Result<f64> {
    if k <= 0.0 || !k.is_finite() {
        return Err(Error::NotPositive {
            name: "k",
            value: k,
        });
    }
    Ok(2.0 * k * k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn default_params(k: f64) -> ScatterParams {
        ScatterParams::new(k, 32.14, 2.0).unwrap()
    }

    #[test]
    fn barrier_strength_unit_conversion() {
        // 2 (V₀/E₀)/(αω₀)² = 16.07 at the default barrier → λ = √15.07/2
        let p = default_params(0.1);
        let s = p.s();
        assert_relative_eq!(s.re, -0.5, epsilon = 1e-15);
        assert_relative_eq!(s.im, 15.07_f64.sqrt() / 2.0, epsilon = 1e-12);
        assert_relative_eq!(
            p.barrier_lambda().unwrap(),
            1.941_004_894_38,
            max_relative = 1e-11
        );
    }

    #[test]
    fn wavevector_energy_round_trip() {
        // k·ω₀ = √(E_r/2E₀); a unit relative energy maps to k = 1/√2
        let k = wavevector_from_relative_energy(1.0).unwrap();
        assert_relative_eq!(k, std::f64::consts::FRAC_1_SQRT_2, epsilon = 1e-15);
        let e_r = relative_energy_from_wavevector(0.1065).unwrap();
        assert_relative_eq!(e_r, 2.0 * 0.1065 * 0.1065, epsilon = 1e-16);
        assert_relative_eq!(
            wavevector_from_relative_energy(e_r).unwrap(),
            0.1065,
            max_relative = 1e-15
        );
        assert!(wavevector_from_relative_energy(0.0).is_err());
    }

    #[test]
    fn real_branch_detected_for_weak_barrier() {
        let p = ScatterParams::new(0.1, 5.0, 4.0).unwrap();
        assert!(p.s().im == 0.0);
        assert!(matches!(p.barrier_lambda(), Err(Error::RealBranch(_))));
        assert!(matches!(closed_form_t2(&p), Err(Error::RealBranch(_))));
        // amplitudes still evaluate and conserve flux there
        let amps = amplitudes(&p).unwrap();
        assert_relative_eq!(amps.flux(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn small_k_limit_full_momentum_exchange() {
        let amps = amplitudes(&default_params(1e-6)).unwrap();
        assert!((amps.reflection + 1.0).norm() < 1e-4);
        assert!(amps.transmission.norm() < 1e-4);
    }

    #[test]
    fn reference_point_near_unit_reflection() {
        let amps = amplitudes(&default_params(0.1065)).unwrap();
        let t2 = amps.transmission.norm_sqr();
        assert_relative_eq!(t2, 5.708_467_884_05e-7, max_relative = 1e-9);
        assert!(amps.reflection.norm_sqr() > 0.999_999);
        // arg R = π − δ with δ ≈ 0.13
        let delta = PI - amps.reflection.arg();
        assert!((delta - 0.13).abs() < 0.01, "delta = {delta}");
        assert_relative_eq!(
            amps.reflection.re,
            -0.991_467_285_006_941_5,
            max_relative = 1e-11
        );
        assert_relative_eq!(
            amps.reflection.im,
            0.130_353_565_022_885_9,
            max_relative = 1e-10
        );
    }

    #[test]
    fn closed_form_matches_gamma_route() {
        for k in [1e-4, 1e-2, 0.1065, 0.5, 1.0, 2.0] {
            let p = default_params(k);
            let t2 = amplitudes(&p).unwrap().transmission.norm_sqr();
            assert_relative_eq!(t2, closed_form_t2(&p).unwrap(), max_relative = 1e-10);
        }
    }

    #[test]
    fn closed_form_reference_value() {
        // k/α = 0.054, λ = 1.9410
        let p = ScatterParams::new(0.108, 32.14, 2.0).unwrap();
        let sh = (PI * 0.054_f64).sinh();
        let ch = (PI * p.barrier_lambda().unwrap()).cosh();
        let direct = sh * sh / (sh * sh + ch * ch);
        assert_relative_eq!(closed_form_t2(&p).unwrap(), direct, max_relative = 1e-12);
        assert_relative_eq!(closed_form_t2(&p).unwrap(), 5.872e-7, max_relative = 1e-3);
    }

    #[test]
    fn rejects_nonpositive_parameters() {
        assert!(matches!(
            ScatterParams::new(0.0, 32.14, 2.0),
            Err(Error::NotPositive { name: "k", .. })
        ));
        assert!(matches!(
            ScatterParams::new(0.5, -1.0, 2.0),
            Err(Error::NotPositive { name: "v0", .. })
        ));
        assert!(matches!(
            ScatterParams::new(0.5, 32.14, 0.0),
            Err(Error::NotPositive { name: "alpha", .. })
        ));
    }

    #[test]
    fn phase_sweep_anchored_at_pi_and_flux_conserving() {
        let kgrid: Vec<f64> = (0..50)
            .map(|i| 1e-4 * (2.0_f64 / 1e-4).powf(i as f64 / 49.0))
            .collect();
        let rows = phase_sweep(32.14, 2.0, &kgrid).unwrap();
        assert!((rows[0].arg_r - PI).abs() < 1e-3);
        for w in rows.windows(2) {
            assert!(
                w[1].arg_r < w[0].arg_r,
                "arg R not decreasing at k = {}",
                w[1].k
            );
            assert!(w[1].r2 < w[0].r2, "|R|² not decreasing at k = {}", w[1].k);
        }
        for r in &rows {
            assert_relative_eq!(r.r2 + r.t2, 1.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn phase_sweep_rejects_bad_grids() {
        assert!(matches!(
            phase_sweep(32.14, 2.0, &[]),
            Err(Error::GridSteps(0))
        ));
        assert!(phase_sweep(32.14, 2.0, &[0.2, 0.1]).is_err());
    }

    #[test]
    fn probe_prefactor_is_one_at_origin() {
        let p = default_params(0.1065);
        let phi0 = wavefunction_probe(&p, 0.0).unwrap();
        // at x = 0: prefactor 1, so φ(0) = T · 4^{ik/2α} · F(..., 1/2)
        let s = p.s();
        let ika = Complex64::new(0.0, p.k() / p.alpha());
        let f_half = hyp2f1(-ika - s, -ika + s + 1.0, -ika + 1.0, 0.5).unwrap();
        let t = amplitudes(&p).unwrap().transmission;
        let norm = Complex64::new(0.0, p.k() / p.alpha() / 2.0 * 4.0_f64.ln()).exp();
        assert!((phi0 - f_half * t * norm).norm() < 1e-12);
    }

    #[test]
    fn probe_recovers_amplitudes_at_ten_widths() {
        let p = default_params(0.1065);
        let amps = amplitudes(&p).unwrap();
        let x = 10.0 / p.alpha();
        let plus = wavefunction_probe(&p, x).unwrap();
        let t_ext = plus * Complex64::new(0.0, -p.k() * x).exp();
        assert!(
            (t_ext - amps.transmission).norm() < 1e-6,
            "transmission mismatch {:e}",
            (t_ext - amps.transmission).norm()
        );
        let minus = wavefunction_probe(&p, -x).unwrap();
        let incident = Complex64::new(0.0, -p.k() * x).exp();
        let r_ext = (minus - incident) * Complex64::new(0.0, -p.k() * x).exp();
        assert!(
            (r_ext - amps.reflection).norm() < 1e-6,
            "reflection mismatch {:e}",
            (r_ext - amps.reflection).norm()
        );
        assert!((r_ext.arg() - amps.reflection.arg()).abs() < 1e-6);
    }

    #[test]
    fn probe_range_guard() {
        let p = default_params(0.1);
        assert!(wavefunction_probe(&p, 25.0).is_ok());
        assert!(matches!(
            wavefunction_probe(&p, 25.1),
            Err(Error::PositionRange { .. })
        ));
    }

    #[test]
    fn pair_wavefunction_asymptotics() {
        let (v0, alpha) = (32.14, 2.0);
        let incident = total_wavefunction(v0, alpha, 9.45, 9.34, 0.0, 0.0, Side::Incident).unwrap();
        assert!((incident - Complex64::new(1.0, 0.0)).norm() < 1e-15);

        let k_rel = relative_wavevector(9.45, 9.34).unwrap();
        assert_relative_eq!(k_rel, 0.055, epsilon = 1e-12);
        let amps = amplitudes(&ScatterParams::new(k_rel, v0, alpha).unwrap()).unwrap();
        assert_relative_eq!(amps.flux(), 1.0, epsilon = 1e-10);

        // k→0: outgoing wave tends to −e^{ik_B x_A} e^{ik_A x_B}
        let (ka, kb) = (9.45, 9.45 - 2e-6);
        let (xa, xb) = (3.0, 7.0);
        let out = total_wavefunction(v0, alpha, ka, kb, xa, xb, Side::Outgoing).unwrap();
        let swapped = Complex64::new(0.0, kb * xa + ka * xb).exp();
        assert!((out + swapped).norm() < 1e-4);

        assert!(matches!(
            total_wavefunction(v0, alpha, 1.0, 2.0, 0.0, 0.0, Side::Outgoing),
            Err(Error::MomentumOrdering { .. })
        ));
    }
}
