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

//! Shared fixtures and independent oracles for the integration tests.
//!
//! Nothing here calls into the code paths it is used to check: the naive
//! transform sums the exponential kernel directly, the standard-state oracle
//! lists the eight expanded terms by hand, and bit-level oracles work on
//! strings.

#![allow(dead_code)]

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use qcond_core::{Complex64, Gate, QubitCount, StateVector, Unitary2};
use rand::Rng;

pub fn n(k: u32) -> QubitCount {
    QubitCount::new(k).unwrap()
}

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn bell() -> StateVector {
    StateVector::new(n(2), vec![c(FRAC_1_SQRT_2), c(0.0), c(0.0), c(FRAC_1_SQRT_2)]).unwrap()
}

pub fn gaussian<R: Rng>(rng: &mut R) -> f64 {
    // Box-Muller
    let u1: f64 = 1.0 - rng.random::<f64>();
    let u2: f64 = rng.random();
    (-2.0 * u1.ln()).sqrt() * (2.0 * PI * u2).cos()
}

pub fn random_amplitudes<R: Rng>(rng: &mut R, len: usize) -> Vec<Complex64> {
    let v: Vec<Complex64> =
        (0..len).map(|_| Complex64::new(gaussian(rng), gaussian(rng))).collect();
    let norm = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|a| a / norm).collect()
}

pub fn random_state<R: Rng>(rng: &mut R, k: u32) -> StateVector {
    StateVector::new(n(k), random_amplitudes(rng, 1 << k)).unwrap()
}

/// Random `(u1, u2)` with `|u1|² + |u2|² = 1`.
pub fn random_pair<R: Rng>(rng: &mut R) -> (Complex64, Complex64) {
    let v = random_amplitudes(rng, 2);
    (v[0], v[1])
}

/// Random U(2) element: the two-parameter family times a global phase.
pub fn random_unitary<R: Rng>(rng: &mut R) -> Unitary2 {
    let (u1, u2) = random_pair(rng);
    let phase = Complex64::from_polar(1.0, rng.random::<f64>() * 2.0 * PI);
    let m = [[u1 * phase, u2.conj() * phase], [u2 * phase, -u1.conj() * phase]];
    Unitary2::new(m).unwrap()
}

fn distinct<R: Rng>(rng: &mut R, k: usize, count: usize) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    while out.len() < count {
        let q = rng.random_range(1..=k);
        if !out.contains(&q) {
            out.push(q);
        }
    }
    out
}

pub fn random_gate<R: Rng>(rng: &mut R, k: usize) -> Gate {
    let kinds = if k >= 3 { 4 } else if k == 2 { 3 } else { 1 };
    match rng.random_range(0..kinds) {
        0 => Gate::U { target: rng.random_range(1..=k), u: random_unitary(rng) },
        1 => {
            let q = distinct(rng, k, 2);
            Gate::CU { control: q[0], control_value: rng.random(), target: q[1], u: random_unitary(rng) }
        }
        2 => {
            let q = distinct(rng, k, 2);
            Gate::Cnot { control: q[0], target: q[1] }
        }
        _ => {
            let q = distinct(rng, k, 3);
            Gate::Ccnot { controls: [q[0], q[1]], target: q[2] }
        }
    }
}

/// Direct `O(N²)` evaluation of `D_j = 2^{-n/2} Σ_h C_h exp(iπ Σ_m h_m j_m)`.
pub fn naive_transform(x: &[Complex64]) -> Vec<Complex64> {
    let len = x.len();
    let bits = len.trailing_zeros();
    let scale = 1.0 / (len as f64).sqrt();
    (0..len)
        .map(|j| {
            x.iter()
                .enumerate()
                .map(|(h, &xh)| {
                    let dot: u32 = (0..bits).map(|m| ((h >> m) & 1) as u32 * ((j >> m) & 1) as u32).sum();
                    let e = Complex64::new(0.0, PI * dot as f64).exp();
                    xh * e * scale
                })
                .sum()
        })
        .collect()
}

/// The eight expanded terms of the 4-qubit standard state, written out by hand.
pub fn standard_state_terms(
    a: [Complex64; 2],
    b: [Complex64; 2],
    c: [Complex64; 2],
) -> Vec<Complex64> {
    let mut amps = vec![Complex64::new(0.0, 0.0); 16];
    let terms = [
        ("0000", a[0] * b[0] * c[0]),
        ("1100", a[1] * b[0] * c[0]),
        ("0110", a[0] * b[1] * c[0]),
        ("1010", a[1] * b[1] * c[0]),
        ("0011", a[0] * b[0] * c[1]),
        ("1111", a[1] * b[0] * c[1]),
        ("0101", a[0] * b[1] * c[1]),
        ("1001", a[1] * b[1] * c[1]),
    ];
    for (ket, amp) in terms {
        amps[usize::from_str_radix(ket, 2).unwrap()] += amp;
    }
    amps
}

/// String-level parity of `v AND f`.
pub fn string_pairing(v: &str, f: &str) -> bool {
    v.chars().zip(f.chars()).filter(|&(a, b)| a == '1' && b == '1').count() % 2 == 1
}

/// String-level XOR.
pub fn string_xor(a: &str, b: &str) -> String {
    a.chars().zip(b.chars()).map(|(x, y)| if x == y { '0' } else { '1' }).collect()
}

pub fn bit_strings(k: usize) -> Vec<String> {
    (0..1usize << k).map(|i| format!("{i:0k$b}")).collect()
}

/// The four 4x4 two-qubit gate matrices exactly as tabulated for the
/// `[[u1, u2*], [u2, -u1*]]` family: `U_1`, `U_2`, `CU_{1→2}`, `CU_{2→1}`.
pub fn tabulated_two_qubit_matrices(u1: Complex64, u2: Complex64) -> [[[Complex64; 4]; 4]; 4] {
    let (o, z) = (c(1.0), c(0.0));
    let (a, b, cc, d) = (u1, u2.conj(), u2, -u1.conj());
    [
        [[a, z, b, z], [z, a, z, b], [cc, z, d, z], [z, cc, z, d]],
        [[a, b, z, z], [cc, d, z, z], [z, z, a, b], [z, z, cc, d]],
        [[o, z, z, z], [z, o, z, z], [z, z, a, b], [z, z, cc, d]],
        [[a, z, b, z], [z, o, z, z], [cc, z, d, z], [z, z, z, o]],
    ]
}

/// Matrix of a gate on two qubits, column `k` = image of basis state `k`.
pub fn gate_matrix(g: &Gate) -> [[Complex64; 4]; 4] {
    let mut m = [[c(0.0); 4]; 4];
    for col in 0..4u32 {
        let input = StateVector::basis(&qcond_core::OutcomeLabel::new(n(2), col).unwrap());
        let out = input.apply(g).unwrap();
        for (row, amp) in out.amplitudes().iter().enumerate() {
            m[row][col as usize] = *amp;
        }
    }
    m
}
