// Copyright 2026 The qcond Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Dense state-vector simulation with the elementary gate set.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::event::Event;
use crate::amps::{self, Matrix2};
use crate::label::{OutcomeLabel, QubitCount};
use crate::PROJECTION_EPSILON;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A 2x2 unitary, validated to within [`NORM_TOLERANCE`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Unitary2(Matrix2);

impl Unitary2 {
    /// Validates a row-major 2x2 matrix.
    pub fn new(m: [[Complex64; 2]; 2]) -> Result<Self> {
        if amps::is_unitary(&m) {
            Ok(Self(m))
        } else {
            Err(Error::NonUnitary)
        }
    }

    /// The two-parameter family `[[u1, u2*], [u2, -u1*]]` with `|u1|² + |u2|² = 1`.
    pub fn from_pair(u1: Complex64, u2: Complex64) -> Result<Self> {
        Self::new([[u1, u2.conj()], [u2, -u1.conj()]])
    }

    /// Identity.
    pub fn identity() -> Self {
        Self([[ONE, ZERO], [ZERO, ONE]])
    }

    /// Hadamard.
    pub fn hadamard() -> Self {
        let h = Complex64::new(core::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self([[h, h], [h, -h]])
    }

    /// Pauli X.
    pub fn pauli_x() -> Self {
        Self([[ZERO, ONE], [ONE, ZERO]])
    }

    /// Row-major entries.
    pub fn matrix(&self) -> &[[Complex64; 2]; 2] {
        &self.0
    }

    /// Applies the matrix to a 2-vector.
    pub fn apply_to(&self, v: [Complex64; 2]) -> [Complex64; 2] {
        let m = &self.0;
        [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
    }
}

/// An elementary gate. Qubit indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Gate {
    /// Single-qubit unitary on `target`.
    U {
        /// Target qubit.
        target: usize,
        /// The unitary.
        u: Unitary2,
    },
    /// `u` on `target` when `control` reads `control_value`.
    CU {
        /// Control qubit.
        control: usize,
        /// Control value that activates the gate (`true` is the usual |1⟩ control).
        control_value: bool,
        /// Target qubit.
        target: usize,
        /// The unitary.
        u: Unitary2,
    },
    /// Controlled NOT.
    Cnot {
        /// Control qubit.
        control: usize,
        /// Target qubit.
        target: usize,
    },
    /// Toffoli gate.
    Ccnot {
        /// Both control qubits.
        controls: [usize; 2],
        /// Target qubit.
        target: usize,
    },
}

impl Gate {
    /// Qubits touched, controls first and target last.
    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Gate::U { target, .. } => vec![target],
            Gate::CU { control, target, .. } | Gate::Cnot { control, target } => {
                vec![control, target]
            }
            Gate::Ccnot { controls, target } => vec![controls[0], controls[1], target],
        }
    }

    /// Checks indices against `n` and for duplicates.
    pub fn validate(&self, n: QubitCount) -> Result<()> {
        let qubits = self.qubits();
        for (i, &q) in qubits.iter().enumerate() {
            n.qubit_bit(q)?;
            if qubits[..i].contains(&q) {
                return Err(Error::DuplicateQubit(q));
            }
        }
        Ok(())
    }

    fn apply(&self, n: QubitCount, amps: &mut [Complex64]) -> Result<()> {
        self.validate(n)?;
        let bit = |q| n.qubit_bit(q).expect("validated");
        match *self {
            Gate::U { target, u } => amps::apply_2x2(amps, bit(target), 0, 0, &u.0),
            Gate::CU { control, control_value, target, u } => {
                let c = bit(control);
                let cv = if control_value { c } else { 0 };
                amps::apply_2x2(amps, bit(target), c, cv, &u.0)
            }
            Gate::Cnot { control, target } => {
                let c = bit(control);
                amps::apply_flip(amps, bit(target), c, c)
            }
            Gate::Ccnot { controls, target } => {
                let c = bit(controls[0]) | bit(controls[1]);
                amps::apply_flip(amps, bit(target), c, c)
            }
        }
        Ok(())
    }
}

/// An ordered gate list over `n` qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct Circuit {
    n: QubitCount,
    gates: Vec<Gate>,
}

impl Circuit {
    /// Empty circuit.
    pub fn empty(n: QubitCount) -> Self {
        Self { n, gates: Vec::new() }
    }

    /// Validates every gate against `n`.
    pub fn new(n: QubitCount, gates: Vec<Gate>) -> Result<Self> {
        for g in &gates {
            g.validate(n)?;
        }
        Ok(Self { n, gates })
    }

    /// Appends a validated gate.
    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.n)?;
        self.gates.push(gate);
        Ok(())
    }

    /// Register size.
    pub fn n(&self) -> QubitCount {
        self.n
    }

    /// Gates in application order.
    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    /// Number of gates.
    pub fn len(&self) -> usize {
        self.gates.len()
    }

    /// Whether the circuit has no gates.
    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }
}

/// A normalized state of `n` qubits with amplitudes `C_h`, `h` in `0..2^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n: QubitCount,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Validates length `2^n` and unit norm.
    pub fn new(n: QubitCount, amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() != n.dim() {
            return Err(Error::NotPowerOfTwo(amps.len()));
        }
        amps::check_normalized(&amps)?;
        Ok(Self { n, amps })
    }

    /// Like [`new`](Self::new) but infers `n` from the length.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let len = amps.len();
        if !len.is_power_of_two() || len < 2 {
            return Err(Error::NotPowerOfTwo(len));
        }
        Self::new(QubitCount::new(len.trailing_zeros())?, amps)
    }

    pub(crate) fn from_raw(n: QubitCount, amps: Vec<Complex64>) -> Self {
        debug_assert_eq!(amps.len(), n.dim());
        Self { n, amps }
    }

    /// The computational basis state `|v⟩`.
    pub fn basis(v: &OutcomeLabel) -> Self {
        let mut amps = vec![ZERO; v.n().dim()];
        amps[v.index()] = ONE;
        Self { n: v.n(), amps }
    }

    /// `|0...0⟩`.
    pub fn zero(n: QubitCount) -> Self {
        Self::basis(&OutcomeLabel::zero(n))
    }

    /// Equal-weight superposition of all outcomes.
    pub fn uniform(n: QubitCount) -> Self {
        let a = Complex64::new(1.0 / libm::sqrt(n.dim() as f64), 0.0);
        Self { n, amps: vec![a; n.dim()] }
    }

    /// Haar-random state: independent complex Gaussian amplitudes, normalized.
    pub fn random<R: Rng + ?Sized>(n: QubitCount, rng: &mut R) -> Self {
        loop {
            let amps: Vec<Complex64> = (0..n.dim())
                .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
                .collect();
            let norm = libm::sqrt(amps::norm_sqr(&amps));
            if norm > 0.0 {
                return Self { n, amps: amps.into_iter().map(|c| c / norm).collect() };
            }
        }
    }

    /// The 4-qubit minimal standard state
    ///
    /// ```text
    /// [(a1|00⟩ + a2|11⟩) b1|0⟩ + (a1|01⟩ + a2|10⟩) b2|1⟩] c1|0⟩
    /// + [(a1|00⟩ + a2|11⟩) b1|1⟩ + (a1|01⟩ + a2|10⟩) b2|0⟩] c2|1⟩
    /// ```
    ///
    /// over qubits `q1 q2 | q3 | q4`. Each coefficient pair must be normalized.
    pub fn standard_state_4q(
        a: [Complex64; 2],
        b: [Complex64; 2],
        c: [Complex64; 2],
    ) -> Result<Self> {
        for pair in [&a, &b, &c] {
            amps::check_normalized(pair)?;
        }
        let n = QubitCount::new(4)?;
        let mut amps = vec![ZERO; 16];
        // (q1 q2, amplitude) for the two q1q2 branches
        let even = [(0b00, a[0]), (0b11, a[1])];
        let odd = [(0b01, a[0]), (0b10, a[1])];
        for (q4, cq) in [(0usize, c[0]), (1, c[1])] {
            for q3 in 0..2usize {
                // b1 pairs with the even branch exactly when q3 == q4
                let (branch, bq) = if q3 == q4 { (&even, b[0]) } else { (&odd, b[1]) };
                for &(q12, aq) in branch {
                    amps[(q12 << 2) | (q3 << 1) | q4] += aq * bq * cq;
                }
            }
        }
        Self::new(n, amps)
    }

    /// Register size.
    pub fn n(&self) -> QubitCount {
        self.n
    }

    /// Amplitudes in index order.
    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// Consumes the state, returning its amplitudes.
    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amps
    }

    /// `Σ |C_h|²`.
    pub fn norm_sqr(&self) -> f64 {
        amps::norm_sqr(&self.amps)
    }

    /// Outcome probabilities `|C_h|²`.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|c| c.norm_sqr()).collect()
    }

    /// Returns the state after `gate`.
    pub fn apply(&self, gate: &Gate) -> Result<Self> {
        let mut out = self.clone();
        out.apply_mut(gate)?;
        Ok(out)
    }

    /// Applies `gate` in place.
    pub fn apply_mut(&mut self, gate: &Gate) -> Result<()> {
        gate.apply(self.n, &mut self.amps)
    }

    /// Returns the state after every gate of `circuit`.
    pub fn run(&self, circuit: &Circuit) -> Result<Self> {
        self.n.expect(circuit.n())?;
        let mut out = self.clone();
        for g in circuit.gates() {
            out.apply_mut(g)?;
        }
        Ok(out)
    }

    /// Tensor product with `self` on the high-order (lower-numbered) qubits.
    pub fn tensor(&self, other: &StateVector) -> Result<Self> {
        let n = QubitCount::new(self.n.get() + other.n.get())?;
        Ok(Self { n, amps: amps::kron(&self.amps, &other.amps) })
    }

    /// Exact probability of `event`: `Σ_{h ∈ event} |C_h|²`.
    pub fn event_probability(&self, event: &Event) -> Result<f64> {
        self.n.expect(event.n())?;
        Ok(event.indices().map(|h| self.amps[h].norm_sqr()).sum())
    }

    /// Projects onto `event` and renormalizes.
    ///
    /// Returns the event probability and the post-measurement state, or
    /// [`Error::ZeroProbability`] if the probability is at most [`PROJECTION_EPSILON`].
    pub fn project(&self, event: &Event) -> Result<(f64, StateVector)> {
        let p = self.event_probability(event)?;
        if p <= PROJECTION_EPSILON {
            return Err(Error::ZeroProbability);
        }
        let scale = 1.0 / libm::sqrt(p);
        let amps = self
            .amps
            .iter()
            .enumerate()
            .map(|(h, &c)| if event.contains_index(h) { c * scale } else { ZERO })
            .collect();
        Ok((p, Self { n: self.n, amps }))
    }

    /// Whether every amplitude is within `tol` of `other`'s.
    pub fn approx_eq(&self, other: &StateVector, tol: f64) -> bool {
        self.n == other.n
            && self.amps.iter().zip(&other.amps).all(|(a, b)| (a - b).norm_sqr() <= tol * tol)
    }
}
