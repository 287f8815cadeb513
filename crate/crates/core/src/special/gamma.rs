//! Complex gamma function via the Lanczos approximation (g = 7, 9 terms),
//! with the reflection formula for Re z < 1/2.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};

const G: f64 = 7.0;

// Coefficient set from the GNU Scientific Library (g = 7, n = 9).
#[allow(clippy::excessive_precision)]
const COEFFS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.floor()
}

/// Γ(z) for complex z. Poles at z = 0, −1, −2, … are reported as errors.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::GammaPole { re: z.re, im: z.im });
    }
    Ok(gamma_unchecked(z))
}

/// 1/Γ(z); entire, returns 0 at the poles of Γ.
pub fn reciprocal_gamma(z: Complex64) -> Complex64 {
    if is_nonpositive_integer(z) {
        Complex64::new(0.0, 0.0)
    } else {
        1.0 / gamma_unchecked(z)
    }
}

fn gamma_unchecked(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Γ(z) Γ(1−z) = π / sin(πz)
        let pi_z = z * PI;
        Complex64::new(PI, 0.0) / (pi_z.sin() * gamma_unchecked(Complex64::new(1.0, 0.0) - z))
    } else {
        let z = z - 1.0;
        let mut acc = Complex64::new(COEFFS[0], 0.0);
        for (i, &c) in COEFFS.iter().enumerate().skip(1) {
            acc += c / (z + i as f64);
        }
        let t = z + G + 0.5;
        (2.0 * PI).sqrt() * t.powc(z + 0.5) * (-t).exp() * acc
    }
}
