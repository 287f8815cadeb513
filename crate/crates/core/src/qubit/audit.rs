//! Brute-force audit of the matrix-convention variants.
//!
//! Reference input→output pairs quoted for the testing network are
//! N|1,1⟩ = e^{i3π/2}|0,1⟩ for the ideal gate and N|1,1⟩ = e^{i3π/2}|1,0⟩
//! for the symmetric non-entangling gate at θ = π. The audit evaluates both
//! products under every convention and records whether any of them lands on
//! those outputs.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::Result;
use crate::qubit::{Convention, TwoQubitState, VParams};

/// Which of the two audited phase gates a case exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VKind {
    /// φ₁ = φ₂ = 0, θ = π.
    Ideal,
    /// φ₁ = φ₂ = π/2, θ = π.
    NonEntangling,
}

impl VKind {
    pub fn name(&self) -> &'static str {
        match self {
            VKind::Ideal => "ideal",
            VKind::NonEntangling => "non-entangling",
        }
    }

    fn params(&self) -> VParams {
        match self {
            VKind::Ideal => VParams::entangling(PI),
            VKind::NonEntangling => VParams::non_entangling_symmetric(PI),
        }
    }

    /// 1-based basis slot of the reference output for this gate
    /// (3 = |0,1⟩ ideal, 2 = |1,0⟩ non-entangling).
    fn reference_slot(&self) -> usize {
        match self {
            VKind::Ideal => 3,
            VKind::NonEntangling => 2,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct AuditCase {
    pub convention: Convention,
    pub gate: VKind,
    /// Output amplitudes of N|1,1⟩.
    pub output: [Complex64; 4],
    /// 1-based slot when the output is a basis state up to a global phase.
    pub basis_slot: Option<usize>,
    /// The amplitude sitting on that slot.
    pub phase: Option<Complex64>,
    /// Whether the output basis slot equals the reference slot for this gate.
    pub matches_reference: bool,
}

#[derive(Debug, Clone)]
pub struct AuditReport {
    pub cases: Vec<AuditCase>,
    /// True iff some convention reproduces a reference output slot.
    pub any_reference_match: bool,
}

const PURE_SLOT_TOL: f64 = 1e-9;

fn pure_basis_slot(amps: &[Complex64; 4]) -> Option<(usize, Complex64)> {
    let mut found = None;
    for (i, a) in amps.iter().enumerate() {
        if a.norm() > PURE_SLOT_TOL {
            if found.is_some() {
                return None;
            }
            found = Some((i + 1, *a));
        }
    }
    found.filter(|(_, a)| (a.norm() - 1.0).abs() < PURE_SLOT_TOL)
}

/// Runs all four conventions against both audited gates at θ = π.
pub fn convention_audit() -> Result<AuditReport> {
    let input = TwoQubitState::basis_state(1)?;
    let mut cases = Vec::with_capacity(8);
    for convention in Convention::ALL {
        for gate in [VKind::Ideal, VKind::NonEntangling] {
            let network = convention.network(&gate.params());
            let out = network.apply(&input)?;
            let slot = pure_basis_slot(out.amplitudes());
            cases.push(AuditCase {
                convention,
                gate,
                output: *out.amplitudes(),
                basis_slot: slot.map(|(i, _)| i),
                phase: slot.map(|(_, a)| a),
                matches_reference: slot.map(|(i, _)| i) == Some(gate.reference_slot()),
            });
        }
    }
    let any_reference_match = cases.iter().any(|c| c.matches_reference);
    Ok(AuditReport {
        cases,
        any_reference_match,
    })
}
