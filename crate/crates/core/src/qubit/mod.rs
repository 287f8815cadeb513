//! Exact linear algebra for the two-qubit entanglement-testing network.
//!
//! States live in the fixed basis order (|1,1⟩, |1,0⟩, |0,1⟩, |0,0⟩) with the
//! first slot belonging to qubit A. Amplitude indices are 1-based to match the
//! c₁..c₄ naming used throughout.

mod audit;
mod sweep;

pub use audit::{convention_audit, AuditCase, AuditReport, VKind};
pub use sweep::{sweep, SweepMode, SweepRow};

use num_complex::Complex64;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Tolerance for the unitarity and normalization invariants.
pub const UNITARITY_TOL: f64 = 1e-12;

/// Angle tolerance for the separability classification (mod 2π).
pub const CLASSIFY_TOL: f64 = 1e-9;

pub const BASIS_LABELS: [&str; 4] = ["|1,1>", "|1,0>", "|0,1>", "|0,0>"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Qubit {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Zero,
    One,
}

/// Normalized four-amplitude state of the qubit pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitState {
    amps: [Complex64; 4],
}

impl TwoQubitState {
    /// Builds a state from amplitudes, requiring unit norm within 1e-12.
    pub fn new(amps: [Complex64; 4]) -> Result<Self> {
        let norm = amps.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > UNITARITY_TOL {
            return Err(Error::NotNormalized {
                norm,
                tol: UNITARITY_TOL,
            });
        }
        Ok(Self { amps })
    }

    /// The basis state c_index = 1 for index in 1..=4.
    pub fn basis_state(index: usize) -> Result<Self> {
        if !(1..=4).contains(&index) {
            return Err(Error::BasisIndex(index));
        }
        let mut amps = [Complex64::new(0.0, 0.0); 4];
        amps[index - 1] = Complex64::new(1.0, 0.0);
        Ok(Self { amps })
    }

    /// Product state (a|1⟩ + b|0⟩)_A ⊗ (c|1⟩ + d|0⟩)_B.
    pub fn product(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        Self::new([a * c, a * d, b * c, b * d])
    }

    /// The uniform product state with every amplitude 1/2.
    pub fn uniform_product() -> Self {
        let h = Complex64::new(0.5, 0.0);
        Self { amps: [h, h, h, h] }
    }

    pub fn amplitudes(&self) -> &[Complex64; 4] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> Result<Complex64> {
        if !(1..=4).contains(&index) {
            return Err(Error::BasisIndex(index));
        }
        Ok(self.amps[index - 1])
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// |c_index|² for index in 1..=4.
    pub fn probability(&self, index: usize) -> Result<f64> {
        Ok(self.amplitude(index)?.norm_sqr())
    }

    pub fn probabilities(&self) -> [f64; 4] {
        [
            self.amps[0].norm_sqr(),
            self.amps[1].norm_sqr(),
            self.amps[2].norm_sqr(),
            self.amps[3].norm_sqr(),
        ]
    }

    /// Probability of finding the given qubit in the given level.
    pub fn marginal(&self, qubit: Qubit, level: Level) -> f64 {
        let p = self.probabilities();
        match (qubit, level) {
            (Qubit::A, Level::One) => p[0] + p[1],
            (Qubit::A, Level::Zero) => p[2] + p[3],
            (Qubit::B, Level::One) => p[0] + p[2],
            (Qubit::B, Level::Zero) => p[1] + p[3],
        }
    }

    /// C = 2 |c₁c₄ − c₂c₃|; 0 for product states, 1 for maximally entangled.
    pub fn concurrence(&self) -> f64 {
        2.0 * (self.amps[0] * self.amps[3] - self.amps[1] * self.amps[2]).norm()
    }
}

/// 4×4 complex gate, unitary within [`UNITARITY_TOL`] on checked construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gate {
    m: [[Complex64; 4]; 4],
}

impl Gate {
    pub fn new(entries: [[Complex64; 4]; 4]) -> Result<Self> {
        let g = Self { m: entries };
        let dev = g.unitarity_deviation();
        if dev > UNITARITY_TOL {
            return Err(Error::NotUnitary { deviation: dev });
        }
        Ok(g)
    }

    /// Skips the unitarity check; products of checked gates stay unitary to
    /// rounding, which is far below the tolerance.
    pub fn from_entries_unchecked(entries: [[Complex64; 4]; 4]) -> Self {
        Self { m: entries }
    }

    pub fn identity() -> Self {
        let mut m = [[Complex64::new(0.0, 0.0); 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Complex64::new(1.0, 0.0);
        }
        Self { m }
    }

    pub fn diagonal(d: [Complex64; 4]) -> Self {
        let mut m = [[Complex64::new(0.0, 0.0); 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = d[i];
        }
        Self { m }
    }

    /// The single-qubit √NOT gate acting on the chosen qubit.
    pub fn sqrt_not(qubit: Qubit) -> Self {
        let p = Complex64::new(0.5, 0.5); // (1+i)/2
        let q = Complex64::new(0.5, -0.5); // (1−i)/2
        let z = Complex64::new(0.0, 0.0);
        match qubit {
            // couples c₁↔c₃ and c₂↔c₄
            Qubit::A => Self {
                m: [[p, z, q, z], [z, p, z, q], [q, z, p, z], [z, q, z, p]],
            },
            // couples c₁↔c₂ and c₃↔c₄
            Qubit::B => Self {
                m: [[p, q, z, z], [q, p, z, z], [z, z, p, q], [z, z, q, p]],
            },
        }
    }

    /// The literal matrix cube of the √NOT gate.
    pub fn sqrt_not_cubed(qubit: Qubit) -> Self {
        let q = Self::sqrt_not(qubit);
        &(&q * &q) * &q
    }

    /// Diagonal two-qubit phase gate diag(1, e^{iφ₁}, e^{iφ₂}, e^{iθ}).
    pub fn phase_gate(p: &VParams) -> Self {
        Self::diagonal([
            Complex64::new(1.0, 0.0),
            Complex64::from_polar(1.0, p.phi1),
            Complex64::from_polar(1.0, p.phi2),
            Complex64::from_polar(1.0, p.theta),
        ])
    }

    /// Same gate with the diagonal reversed: diag(e^{iθ}, e^{iφ₂}, e^{iφ₁}, 1),
    /// placing θ on |1,1⟩. Used by the convention audit.
    pub fn phase_gate_reversed(p: &VParams) -> Self {
        Self::diagonal([
            Complex64::from_polar(1.0, p.theta),
            Complex64::from_polar(1.0, p.phi2),
            Complex64::from_polar(1.0, p.phi1),
            Complex64::new(1.0, 0.0),
        ])
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.m[row][col]
    }

    pub fn entries(&self) -> &[[Complex64; 4]; 4] {
        &self.m
    }

    pub fn adjoint(&self) -> Self {
        let mut m = [[Complex64::new(0.0, 0.0); 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = self.m[j][i].conj();
            }
        }
        Self { m }
    }

    /// max entry of |G†G − I|.
    pub fn unitarity_deviation(&self) -> f64 {
        let prod = &self.adjoint() * self;
        let mut dev: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                let target = if i == j { 1.0 } else { 0.0 };
                dev = dev.max((prod.m[i][j] - target).norm());
            }
        }
        dev
    }

    /// max entry of |G − H|.
    pub fn max_entry_diff(&self, other: &Self) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                dev = dev.max((self.m[i][j] - other.m[i][j]).norm());
            }
        }
        dev
    }

    /// Conjugation by the basis-reversal permutation (c₁..c₄ ↦ c₄..c₁).
    pub fn basis_reversed(&self) -> Self {
        let mut m = [[Complex64::new(0.0, 0.0); 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = self.m[3 - i][3 - j];
            }
        }
        Self { m }
    }

    /// Matrix–vector product. Rejects a gate whose unitarity has degraded.
    pub fn apply(&self, state: &TwoQubitState) -> Result<TwoQubitState> {
        let dev = self.unitarity_deviation();
        if dev > UNITARITY_TOL {
            return Err(Error::NotUnitary { deviation: dev });
        }
        let mut out = [Complex64::new(0.0, 0.0); 4];
        for (i, o) in out.iter_mut().enumerate() {
            for (j, a) in state.amps.iter().enumerate() {
                *o += self.m[i][j] * a;
            }
        }
        Ok(TwoQubitState { amps: out })
    }
}

impl Mul for &Gate {
    type Output = Gate;

    fn mul(self, rhs: &Gate) -> Gate {
        let mut m = [[Complex64::new(0.0, 0.0); 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                for k in 0..4 {
                    *e += self.m[i][k] * rhs.m[k][j];
                }
            }
        }
        Gate { m }
    }
}

/// Phase parameters of the two-qubit gate, in radians, stored unreduced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VParams {
    pub phi1: f64,
    pub phi2: f64,
    pub theta: f64,
}

impl VParams {
    pub fn new(phi1: f64, phi2: f64, theta: f64) -> Self {
        Self { phi1, phi2, theta }
    }

    /// The ideal entangling choice φ₁ = φ₂ = 0 for a given θ.
    pub fn entangling(theta: f64) -> Self {
        Self::new(0.0, 0.0, theta)
    }

    /// The symmetric non-entangling split φ₁ = φ₂ = θ/2.
    pub fn non_entangling_symmetric(theta: f64) -> Self {
        Self::new(theta / 2.0, theta / 2.0, theta)
    }

    /// The general non-entangling split φ₂ = θ − φ₁.
    pub fn non_entangling_split(theta: f64, phi1: f64) -> Self {
        Self::new(phi1, theta - phi1, theta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateClass {
    Entangling,
    NonEntangling,
}

/// Distance between two angles on the circle, in [0, π].
fn angle_distance(a: f64, b: f64) -> f64 {
    let tau = std::f64::consts::TAU;
    let mut d = (a - b) % tau;
    if d < 0.0 {
        d += tau;
    }
    d.min(tau - d)
}

/// Non-entangling iff φ₁ + φ₂ ≡ θ (mod 2π), within [`CLASSIFY_TOL`].
pub fn classify(p: &VParams) -> GateClass {
    if angle_distance(p.phi1 + p.phi2, p.theta) < CLASSIFY_TOL {
        GateClass::NonEntangling
    } else {
        GateClass::Entangling
    }
}

/// Attempts to factor a diagonal 4×4 gate as diag(a,b) ⊗ diag(c,d); returns
/// the factors when |v₁v₄ − v₂v₃| < tol and all off-diagonal entries vanish.
pub fn diagonal_tensor_factors(g: &Gate, tol: f64) -> Option<([Complex64; 2], [Complex64; 2])> {
    for i in 0..4 {
        for j in 0..4 {
            if i != j && g.m[i][j].norm() > tol {
                return None;
            }
        }
    }
    let v = [g.m[0][0], g.m[1][1], g.m[2][2], g.m[3][3]];
    if (v[0] * v[3] - v[1] * v[2]).norm() > tol {
        return None;
    }
    // fix a = 1: c = v₁, d = v₂, b = v₃/c
    let a = Complex64::new(1.0, 0.0);
    let c = v[0];
    let d = v[1];
    let b = v[2] / c;
    Some(([a, b], [c, d]))
}

pub fn is_separable_diagonal(g: &Gate, tol: f64) -> bool {
    diagonal_tensor_factors(g, tol).is_some()
}

/// Ordered gate sequence; `gates[0]` is applied to the input state first.
#[derive(Debug, Clone)]
pub struct Network {
    gates: Vec<Gate>,
}

impl Network {
    pub fn new(gates: Vec<Gate>) -> Result<Self> {
        if gates.is_empty() {
            return Err(Error::EmptyNetwork);
        }
        Ok(Self { gates })
    }

    /// The eight-gate testing sequence around a two-qubit phase gate:
    /// split, couple, unsplit (cubed), couple again, split again.
    pub fn testing_network(v: &Gate) -> Self {
        let qa = Gate::sqrt_not(Qubit::A);
        let qb = Gate::sqrt_not(Qubit::B);
        let qa3 = Gate::sqrt_not_cubed(Qubit::A);
        let qb3 = Gate::sqrt_not_cubed(Qubit::B);
        Self {
            gates: vec![qa, qb, *v, qa3, qb3, *v, qa, qb],
        }
    }

    /// Same sequence with the plain and cubed gates swapped. Used by the
    /// convention audit.
    pub fn testing_network_q_swapped(v: &Gate) -> Self {
        let qa = Gate::sqrt_not(Qubit::A);
        let qb = Gate::sqrt_not(Qubit::B);
        let qa3 = Gate::sqrt_not_cubed(Qubit::A);
        let qb3 = Gate::sqrt_not_cubed(Qubit::B);
        Self {
            gates: vec![qa3, qb3, *v, qa, qb, *v, qa3, qb3],
        }
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    /// The composed matrix product; the first gate of the sequence is the
    /// rightmost factor.
    pub fn compose(&self) -> Gate {
        let mut acc = Gate::identity();
        for g in &self.gates {
            acc = g * &acc;
        }
        acc
    }

    pub fn apply(&self, state: &TwoQubitState) -> Result<TwoQubitState> {
        self.compose().apply(state)
    }
}

/// Matrix-convention variants audited against the reference outputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// Gates exactly as printed, θ on |0,0⟩.
    Literal,
    /// Phase-gate diagonal reversed, θ on |1,1⟩.
    ReversedV,
    /// Whole basis order reversed.
    SwappedBasis,
    /// Plain and cubed single-qubit gates exchanged in the sequence.
    QSwap,
}

impl Convention {
    pub const ALL: [Convention; 4] = [
        Convention::Literal,
        Convention::ReversedV,
        Convention::SwappedBasis,
        Convention::QSwap,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Convention::Literal => "literal",
            Convention::ReversedV => "reversed-v",
            Convention::SwappedBasis => "swapped-basis",
            Convention::QSwap => "q-swap",
        }
    }

    /// The composed testing network under this convention, expressed in the
    /// standard basis labels.
    pub fn network(&self, p: &VParams) -> Gate {
        match self {
            Convention::Literal => Network::testing_network(&Gate::phase_gate(p)).compose(),
            Convention::ReversedV => {
                Network::testing_network(&Gate::phase_gate_reversed(p)).compose()
            }
            Convention::SwappedBasis => Network::testing_network(&Gate::phase_gate(p))
                .compose()
                .basis_reversed(),
            Convention::QSwap => Network::testing_network_q_swapped(&Gate::phase_gate(p)).compose(),
        }
    }
}
