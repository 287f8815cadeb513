//! GaAs/AlGaAs parameter chain: from material inputs to the reflection phase
//! of the coupler at the thermal relative wavevector.

use crate::error::{Error, Result};
use crate::scatter::{amplitudes, ScatterParams};
use std::f64::consts::PI;

/// ħ²/(2 mₑ) = 3.80998 eV·Å² (CODATA-derived, 6 significant digits).
pub const HBAR_SQ_OVER_2ME_EV_A2: f64 = 3.80998;

/// Boltzmann constant, eV/K (CODATA).
pub const BOLTZMANN_EV_PER_K: f64 = 8.61733e-5;

/// Material and device inputs. Lengths in nm, energies in units of E₀ except
/// where noted, temperature in kelvin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaterialConfig {
    /// Unit of length ω₀ [nm].
    pub omega0_nm: f64,
    /// Effective-mass ratio m*/mₑ.
    pub mass_ratio: f64,
    /// Transverse lead width [nm].
    pub width_nm: f64,
    /// Fermi energy [E₀].
    pub fermi_e0: f64,
    /// Temperature [K].
    pub temperature_k: f64,
    /// Barrier height [E₀].
    pub v0_e0: f64,
    /// Interaction length 1/α [ω₀].
    pub alpha_inv_w0: f64,
}

impl Default for MaterialConfig {
    fn default() -> Self {
        Self {
            omega0_nm: 40.0,
            mass_ratio: 0.067,
            width_nm: 16.0,
            fermi_e0: 150.0,
            temperature_k: 4.0,
            v0_e0: 32.14,
            alpha_inv_w0: 0.5,
        }
    }
}

impl MaterialConfig {
    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("omega0_nm", self.omega0_nm),
            ("mass_ratio", self.mass_ratio),
            ("width_nm", self.width_nm),
            ("fermi_e0", self.fermi_e0),
            ("temperature_k", self.temperature_k),
            ("v0_e0", self.v0_e0),
            ("alpha_inv_w0", self.alpha_inv_w0),
        ] {
            if value <= 0.0 || !value.is_finite() {
                return Err(Error::NotPositive { name, value });
            }
        }
        Ok(())
    }

    /// Lead width in units of ω₀.
    pub fn width_w0(&self) -> f64 {
        self.width_nm / self.omega0_nm
    }

    /// α in units of 1/ω₀.
    pub fn alpha_w0(&self) -> f64 {
        1.0 / self.alpha_inv_w0
    }
}

/// E₀ = ħ²/(2 m* ω₀²) in eV.
pub fn unit_energy_ev(cfg: &MaterialConfig) -> f64 {
    let omega0_a = cfg.omega0_nm * 10.0; // Å
    HBAR_SQ_OVER_2ME_EV_A2 / (cfg.mass_ratio * omega0_a * omega0_a)
}

/// Single-channel window (E_min, E_max) = ((πω₀/w)², (2πω₀/w)²) in E₀.
pub fn channel_window(cfg: &MaterialConfig) -> (f64, f64) {
    let base = PI / cfg.width_w0();
    (base * base, 4.0 * base * base)
}

/// Thermal energy spread δ_E = k_B T / E₀.
pub fn thermal_energy_spread(cfg: &MaterialConfig) -> f64 {
    BOLTZMANN_EV_PER_K * cfg.temperature_k / unit_energy_ev(cfg)
}

/// Longitudinal wavevectors of the two electrons and their difference,
/// all in 1/ω₀.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Kinematics {
    pub delta_e_e0: f64,
    pub k_a_w0: f64,
    pub k_b_w0: f64,
    pub delta_k_w0: f64,
}

/// k_{A,B} = √(E_f ± δ_E − E_min) in 1/ω₀ for a given energy spread.
pub fn kinematics(cfg: &MaterialConfig, delta_e_e0: f64) -> Result<Kinematics> {
    cfg.validate()?;
    if delta_e_e0 < 0.0 {
        return Err(Error::NotPositive {
            name: "delta_e_e0",
            value: delta_e_e0,
        });
    }
    let (e_min, _) = channel_window(cfg);
    let low = cfg.fermi_e0 - delta_e_e0;
    if low <= e_min {
        return Err(Error::BelowChannel {
            fermi: low,
            bottom: e_min,
        });
    }
    let k_a_w0 = (cfg.fermi_e0 + delta_e_e0 - e_min).sqrt();
    let k_b_w0 = (low - e_min).sqrt();
    Ok(Kinematics {
        delta_e_e0,
        k_a_w0,
        k_b_w0,
        delta_k_w0: k_a_w0 - k_b_w0,
    })
}

/// Kinematics at the thermal spread δ_E = k_B T / E₀.
pub fn thermal_kinematics(cfg: &MaterialConfig) -> Result<Kinematics> {
    kinematics(cfg, thermal_energy_spread(cfg))
}

/// Which relative wavevector feeds the barrier amplitudes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelativeMomentum {
    /// k = k_A − k_B. Default: reproduces the quoted δ_k and δ_θ figures.
    FullDifference,
    /// k = (k_A − k_B)/2, matching the relative coordinate p = ½(p_A − p_B).
    HalfDifference,
}

/// Everything the coupler chain derives from a [`MaterialConfig`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglerReport {
    pub e0_ev: f64,
    pub window_e0: (f64, f64),
    pub fermi_in_window: bool,
    pub kin: Kinematics,
    pub delta_k_per_nm: f64,
    pub k_rel_w0: f64,
    /// arg R in [0, 2π); π means a perfect mutual phase flip.
    pub arg_r: f64,
    /// δ_θ = |π − arg R|.
    pub delta_theta: f64,
    /// |R|², the momentum-exchange probability.
    pub r2: f64,
}

pub fn entangler_report(
    cfg: &MaterialConfig,
    momentum: RelativeMomentum,
) -> Result<EntanglerReport> {
    let kin = thermal_kinematics(cfg)?;
    let window = channel_window(cfg);
    let k_rel_w0 = match momentum {
        RelativeMomentum::FullDifference => kin.delta_k_w0,
        RelativeMomentum::HalfDifference => kin.delta_k_w0 / 2.0,
    };
    let amps = amplitudes(&ScatterParams::new(k_rel_w0, cfg.v0_e0, cfg.alpha_w0())?)?;
    let mut arg_r = amps.reflection.arg();
    if arg_r < 0.0 {
        arg_r += 2.0 * PI;
    }
    Ok(EntanglerReport {
        e0_ev: unit_energy_ev(cfg),
        window_e0: window,
        fermi_in_window: cfg.fermi_e0 > window.0 && cfg.fermi_e0 < window.1,
        kin,
        delta_k_per_nm: kin.delta_k_w0 / cfg.omega0_nm,
        k_rel_w0,
        arg_r,
        delta_theta: (PI - arg_r).abs(),
        r2: amps.reflection.norm_sqr(),
    })
}
