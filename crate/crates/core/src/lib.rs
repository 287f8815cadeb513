//! Simulation kernels for a two-qubit ballistic-waveguide entangling network
//! and the Coulomb coupler that drives it.
//!
//! The crate has four parts:
//!
//! * [`qubit`] — exact 4×4 algebra of the entanglement-testing gate sequence,
//!   output sweeps, separability classification and a brute-force audit of
//!   matrix-convention variants;
//! * [`scatter`] — reflection/transmission amplitudes of the sech² barrier
//!   seen by the relative coordinate of two colliding electrons, via complex
//!   gamma functions, with an independent closed form and a hypergeometric
//!   wavefunction cross-check;
//! * [`classical`] — the classical limit of the same collision: closed-form
//!   trajectories, an RK4 integrator oracle and the phase portrait;
//! * [`gaas`] — the GaAs/AlGaAs parameter chain from material constants to
//!   the thermal reflection-phase spread of the coupler.
//!
//! One unit convention is shared everywhere: lengths in ω₀, energies in
//! E₀ = ħ²/(2mω₀²), wavevectors in 1/ω₀, momenta in √(mE₀) and time in
//! ω₀√(m/E₀).

pub mod classical;
pub mod error;
pub mod gaas;
pub mod grid;
pub mod qubit;
pub mod scatter;
pub mod special;

pub use error::{Error, Result};
pub use gaas::{entangler_report, EntanglerReport, MaterialConfig, RelativeMomentum};
pub use grid::Grid;
pub use qubit::{
    classify, convention_audit, sweep, AuditReport, Convention, Gate, GateClass, Level, Network,
    Qubit, SweepMode, SweepRow, TwoQubitState, VParams,
};
pub use scatter::{amplitudes, AmplitudePair, ScatterParams};
