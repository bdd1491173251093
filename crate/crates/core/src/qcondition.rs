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

//! The quantum condition space: complex superpositions of condition labels.
//!
//! A basis vector `|j]` stands for the parity condition with coefficient bits
//! `j`. Position `i` of a label reads `|0]_i` (qubit `q_i` missing from the
//! parity sum) or `|1]_i` (present). The `⊕`-product of condition vectors
//! concatenates labels and multiplies amplitudes, exactly like the tensor
//! product of states, so superposed and entangled conditions follow.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::amps;
use crate::label::{ConditionLabel, QubitCount};
use crate::state::Unitary2;
use crate::NORM_TOLERANCE;

/// A normalized vector `Σ_j D_j |j]` over `m` condition positions.
#[derive(Clone, Debug, PartialEq)]
pub struct QConditionVector {
    m: QubitCount,
    amps: Vec<Complex64>,
}

impl QConditionVector {
    /// Validates length `2^m` and unit norm.
    pub fn new(m: QubitCount, amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() != m.dim() {
            return Err(Error::NotPowerOfTwo(amps.len()));
        }
        amps::check_normalized(&amps)?;
        Ok(Self { m, amps })
    }

    pub(crate) fn from_raw(m: QubitCount, amps: Vec<Complex64>) -> Self {
        debug_assert_eq!(amps.len(), m.dim());
        Self { m, amps }
    }

    /// The basis condition `|j]`.
    pub fn basis(j: &ConditionLabel) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); j.n().dim()];
        amps[j.index()] = Complex64::new(1.0, 0.0);
        Self { m: j.n(), amps }
    }

    /// The 1-q-condition `a1|0] + a2|1]`: the qubit is in a superposition of
    /// missing and present.
    pub fn one_position(a1: Complex64, a2: Complex64) -> Result<Self> {
        Self::new(QubitCount::new(1)?, vec![a1, a2])
    }

    /// `(|0] + |1]) / √2`.
    pub fn plus() -> Self {
        let h = Complex64::new(core::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self { m: QubitCount::new(1).expect("1 qubit"), amps: vec![h, h] }
    }

    /// `(|0] - |1]) / √2`.
    pub fn minus() -> Self {
        let h = Complex64::new(core::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self { m: QubitCount::new(1).expect("1 qubit"), amps: vec![h, -h] }
    }

    /// The Bell condition `(|00] + |11]) / √2`.
    pub fn bell() -> Self {
        let h = Complex64::new(core::f64::consts::FRAC_1_SQRT_2, 0.0);
        let z = Complex64::new(0.0, 0.0);
        Self { m: QubitCount::new(2).expect("2 qubits"), amps: vec![h, z, z, h] }
    }

    /// Number of condition positions.
    pub fn m(&self) -> QubitCount {
        self.m
    }

    /// Amplitudes `D_j` in label order.
    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// Consumes the vector, returning its amplitudes.
    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amps
    }

    /// `Σ |D_j|²`.
    pub fn norm_sqr(&self) -> f64 {
        amps::norm_sqr(&self.amps)
    }

    /// The `⊕`-product `self ⊕ other`: amplitude at `j‖k` is `D_j · E_k`.
    pub fn oplus(&self, other: &QConditionVector) -> Result<Self> {
        let m = QubitCount::new(self.m.get() + other.m.get())?;
        Ok(Self { m, amps: amps::kron(&self.amps, &other.amps) })
    }

    /// Hermitian inner product `Σ_j conj(self_j) · other_j`.
    pub fn inner(&self, other: &QConditionVector) -> Result<Complex64> {
        self.m.expect(other.m)?;
        Ok(amps::inner(&self.amps, &other.amps))
    }

    /// Applies `b` at every position, i.e. `b ⊗ b ⊗ ... ⊗ b` on the amplitudes.
    pub fn change_basis(&self, b: &Unitary2) -> Self {
        let mut amps = self.amps.clone();
        for q in 1..=self.m.get() as usize {
            let bit = self.m.qubit_bit(q).expect("q within 1..=m");
            amps::apply_2x2(&mut amps, bit, 0, 0, b.matrix());
        }
        Self { m: self.m, amps }
    }

    /// The entangled condition `b1 (u1 ⊕ v1) + b2 (u2 ⊕ v2)`.
    ///
    /// `u1 ⊥ u2` and `v1 ⊥ v2` must be orthonormal 1-q-conditions and
    /// `|b1|² + |b2|² = 1`.
    pub fn entangled_2q(
        b: [Complex64; 2],
        u: [&QConditionVector; 2],
        v: [&QConditionVector; 2],
    ) -> Result<Self> {
        amps::check_normalized(&b)?;
        for pair in [u, v] {
            for x in pair {
                if x.m.get() != 1 {
                    return Err(Error::PositionMismatch { expected: 1, found: x.m.get() });
                }
                amps::check_normalized(&x.amps)?;
            }
            if pair[0].inner(pair[1])?.norm_sqr() > NORM_TOLERANCE * NORM_TOLERANCE {
                return Err(Error::NotOrthogonal);
            }
        }
        let first = u[0].oplus(v[0])?;
        let second = u[1].oplus(v[1])?;
        let mut amps: Vec<Complex64> =
            first.amps.iter().zip(&second.amps).map(|(x, y)| b[0] * x + b[1] * y).collect();
        let norm = libm::sqrt(amps::norm_sqr(&amps));
        for a in &mut amps {
            *a /= norm;
        }
        Ok(Self { m: first.m, amps })
    }

    /// For two positions: whether the coefficient matrix `[[D00, D01], [D10, D11]]`
    /// has nonzero determinant (Schmidt rank two).
    pub fn is_entangled_2q(&self) -> Result<bool> {
        if self.m.get() != 2 {
            return Err(Error::PositionMismatch { expected: 2, found: self.m.get() });
        }
        let d = &self.amps;
        let det = d[0] * d[3] - d[1] * d[2];
        Ok(det.norm_sqr() > NORM_TOLERANCE * NORM_TOLERANCE)
    }

    /// Whether every amplitude is within `tol` of `other`'s.
    pub fn approx_eq(&self, other: &QConditionVector, tol: f64) -> bool {
        self.m == other.m
            && self.amps.iter().zip(&other.amps).all(|(a, b)| (a - b).norm_sqr() <= tol * tol)
    }
}

/// Meaning of the basis condition `|j]`, e.g. `q1⊕q3⊕q4=0` for `|10110]`.
pub fn interpret_basis(j: &ConditionLabel) -> String {
    j.to_text()
}
