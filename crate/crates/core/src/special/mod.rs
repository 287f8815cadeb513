//! Special functions needed by the scattering amplitudes.

mod gamma;
mod hyp2f1;

pub use gamma::{gamma, reciprocal_gamma};
pub use hyp2f1::hyp2f1;
