use thiserror::Error;

/// Errors produced by the numeric and algebraic routines of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
#[non_exhaustive]
pub enum Error {
    #[error("state vector norm is {norm:.17}, not 1 within {tol:e}")]
    NotNormalized { norm: f64, tol: f64 },

    #[error("gate is not unitary: max |G\u{2020}G - I| entry = {deviation:e}")]
    NotUnitary { deviation: f64 },

    #[error("basis index {0} out of range 1..=4")]
    BasisIndex(usize),

    #[error("network contains no gates")]
    EmptyNetwork,

    #[error("grid needs at least 2 steps, got {0}")]
    GridSteps(usize),

    #[error("grid minimum {min} must lie below maximum {max}")]
    GridBounds { min: f64, max: f64 },

    #[error("log-spaced grid requires a positive minimum, got {0}")]
    GridLogMin(f64),

    #[error("gamma function pole at {re}{im:+}i")]
    GammaPole { re: f64, im: f64 },

    #[error("hypergeometric series did not converge within {0} terms")]
    SeriesNoConvergence(usize),

    #[error("hypergeometric argument {0} outside [0, 1)")]
    HypArgument(f64),

    #[error("hypergeometric parameters degenerate: {0}")]
    HypParameter(&'static str),

    #[error("{name} must be positive, got {value}")]
    NotPositive { name: &'static str, value: f64 },

    #[error("wavevectors must satisfy kA > kB, got kA = {ka}, kB = {kb}")]
    MomentumOrdering { ka: f64, kb: f64 },

    #[error("closed form needs an over-barrier interaction (complex s); got real s = {0}")]
    RealBranch(f64),

    #[error("position |x| = {x} outside the guarded range |x| <= {max}")]
    PositionRange { x: f64, max: f64 },

    #[error("relative energy {er} outside the exchange branch (0, {v0})")]
    EnergyBranch { er: f64, v0: f64 },

    #[error("integration needs {steps} steps, above the {max} cap")]
    StepOverflow { steps: u64, max: u64 },

    #[error(
        "Fermi level minus thermal spread ({fermi} E0) lies below the channel bottom ({bottom} E0)"
    )]
    BelowChannel { fermi: f64, bottom: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
