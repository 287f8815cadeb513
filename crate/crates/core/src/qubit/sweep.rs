//! Output sweeps comparing the entangling and non-entangling networks.

use crate::error::Result;
use crate::grid::Grid;
use crate::qubit::{Convention, Level, Qubit, TwoQubitState, VParams};

/// What the sweep varies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SweepMode {
    /// θ varies; the non-entangling gate splits its angle symmetrically.
    Theta,
    /// φ₁ varies at fixed θ; the non-entangling gate uses φ₂ = θ − φ₁.
    Phi1 { theta: f64 },
}

/// One grid point: output distributions of both networks from input |1,1⟩.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    /// The swept angle (θ or φ₁ depending on the mode).
    pub angle: f64,
    pub probs_entangling: [f64; 4],
    pub probs_non_entangling: [f64; 4],
    pub prob_a1_entangling: f64,
    pub prob_a1_non_entangling: f64,
    /// Total-variation distance ½ Σ|p_i − q_i| between the two distributions.
    pub tvd: f64,
}

pub fn sweep(mode: SweepMode, grid: &Grid, convention: Convention) -> Result<Vec<SweepRow>> {
    let input = TwoQubitState::basis_state(1)?;
    let mut rows = Vec::with_capacity(grid.len());
    for angle in grid.iter() {
        let (ent_params, non_params) = match mode {
            SweepMode::Theta => (
                VParams::entangling(angle),
                VParams::non_entangling_symmetric(angle),
            ),
            SweepMode::Phi1 { theta } => (
                VParams::entangling(theta),
                VParams::non_entangling_split(theta, angle),
            ),
        };
        let ent_out = convention.network(&ent_params).apply(&input)?;
        let non_out = convention.network(&non_params).apply(&input)?;
        let p = ent_out.probabilities();
        let q = non_out.probabilities();
        let tvd = p.iter().zip(q).map(|(a, b)| (a - b).abs()).sum::<f64>() / 2.0;
        rows.push(SweepRow {
            angle,
            probs_entangling: p,
            probs_non_entangling: q,
            prob_a1_entangling: ent_out.marginal(Qubit::A, Level::One),
            prob_a1_non_entangling: non_out.marginal(Qubit::A, Level::One),
            tvd,
        });
    }
    Ok(rows)
}
