//! Gauss hypergeometric function ₂F₁(a, b; c; z) for complex parameters and
//! real argument z ∈ [0, 1), which is the range the scattering wavefunction
//! needs (z = (1 − tanh αx)/2).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special::gamma::{gamma, reciprocal_gamma};

const MAX_TERMS: usize = 100_000;
const TERM_EPS: f64 = 1e-15;
const INTEGER_EPS: f64 = 1e-9;

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.floor()
}

fn is_near_integer(z: Complex64) -> bool {
    z.im.abs() < INTEGER_EPS && (z.re - z.re.round()).abs() < INTEGER_EPS
}

/// ₂F₁(a, b; c; z) by power series, switching to the z → 1−z linear
/// transformation for z > 1/2. The transformation requires c − a − b to be
/// non-integer, which holds for the scattering parameters (c − a − b = ik/α).
pub fn hyp2f1(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    if is_nonpositive_integer(c) {
        return Err(Error::HypParameter("c is a non-positive integer"));
    }
    if !(0.0..1.0).contains(&z) {
        return Err(Error::HypArgument(z));
    }
    if z == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    // Terminating (polynomial) series converges for any z in [0, 1).
    if z <= 0.5 || is_nonpositive_integer(a) || is_nonpositive_integer(b) {
        series(a, b, c, z)
    } else {
        transformed(a, b, c, z)
    }
}

fn series(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut small_streak = 0u32;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        sum += term;
        if term.norm() <= TERM_EPS * sum.norm() {
            small_streak += 1;
            if small_streak >= 2 {
                return Ok(sum);
            }
        } else {
            small_streak = 0;
        }
    }
    Err(Error::SeriesNoConvergence(MAX_TERMS))
}

/// F(a,b;c;z) = Γc Γ(c−a−b) / (Γ(c−a) Γ(c−b)) · F(a,b; a+b−c+1; 1−z)
///            + (1−z)^{c−a−b} Γc Γ(a+b−c) / (Γa Γb) · F(c−a, c−b; c−a−b+1; 1−z)
fn transformed(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    let cab = c - a - b;
    if is_near_integer(cab) {
        return Err(Error::HypParameter(
            "c - a - b nearly integer: z > 1/2 transformation degenerate",
        ));
    }
    let w = 1.0 - z;
    let gc = gamma(c)?;
    let first = gc
        * gamma(cab)?
        * reciprocal_gamma(c - a)
        * reciprocal_gamma(c - b)
        * series(a, b, a + b - c + 1.0, w)?;
    let second = Complex64::new(w, 0.0).powc(cab)
        * gc
        * gamma(-cab)?
        * reciprocal_gamma(a)
        * reciprocal_gamma(b)
        * series(c - a, c - b, cab + 1.0, w)?;
    Ok(first + second)
}
