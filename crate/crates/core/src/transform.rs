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

//! The duality transform between the quantum state space and the quantum
//! condition space, and the entropic uncertainty between them.
//!
//! With kernel `E(h, j) = (-1)^{popcount(h & j)}` the condition amplitudes are
//!
//! ```text
//! D_j = 2^{-n/2} Σ_h C_h E(h, j)
//! ```
//!
//! which is the Walsh-Hadamard transform. It is its own inverse, so the same
//! routine maps conditions back to states.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::amps;
use crate::label::{ConditionLabel, OutcomeLabel, QubitCount};
use crate::qcondition::QConditionVector;
use crate::state::StateVector;

/// `E(h, j)`: `+1` when `h` and `j` share an even number of set bits, else `-1`.
pub fn kernel(h: &OutcomeLabel, j: &ConditionLabel) -> Result<f64> {
    Ok(if h.pairing(j)? { -1.0 } else { 1.0 })
}

/// The normalized transform matrix `E(h, j) / √(2^n)`, row `j`, column `h`.
pub fn kernel_matrix(n: QubitCount) -> Vec<Vec<f64>> {
    let scale = 1.0 / libm::sqrt(n.dim() as f64);
    ConditionLabel::all(n)
        .map(|j| {
            OutcomeLabel::all(n)
                .map(|h| kernel(&h, &j).expect("same n") * scale)
                .collect()
        })
        .collect()
}

/// In-place fast Walsh-Hadamard transform, `1/√2` applied at every stage.
///
/// The length must be a power of two. Applying it twice restores the input.
pub fn wht_in_place<T>(x: &mut [T]) -> Result<()>
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T>,
{
    let len = x.len();
    if !len.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(len));
    }
    let s = core::f64::consts::FRAC_1_SQRT_2;
    let mut half = 1;
    while half < len {
        for block in x.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (u, v) = (*a, *b);
                *a = (u + v) * s;
                *b = (u - v) * s;
            }
        }
        half <<= 1;
    }
    Ok(())
}

/// Out-of-place [`wht_in_place`].
pub fn wht<T>(x: &[T]) -> Result<Vec<T>>
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T>,
{
    let mut out = x.to_vec();
    wht_in_place(&mut out)?;
    Ok(out)
}

/// `D = WHT(C)`.
pub fn state_to_condition(s: &StateVector) -> QConditionVector {
    let mut amps = s.amplitudes().to_vec();
    wht_in_place(&mut amps).expect("2^n length");
    QConditionVector::from_raw(s.n(), amps)
}

/// `C = WHT(D)`.
pub fn condition_to_state(phi: &QConditionVector) -> StateVector {
    let mut amps = phi.amplitudes().to_vec();
    wht_in_place(&mut amps).expect("2^n length");
    StateVector::from_raw(phi.m(), amps)
}

/// Logarithm base for entropies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum LogBase {
    /// Natural log (nats).
    #[default]
    E,
    /// Base 2 (bits).
    Two,
}

impl LogBase {
    fn log(self, x: f64) -> f64 {
        match self {
            LogBase::E => libm::log(x),
            LogBase::Two => libm::log2(x),
        }
    }

    /// `n · log 2` in this base: the largest entropy over `2^n` outcomes.
    pub fn max_entropy(self, n: QubitCount) -> f64 {
        n.get() as f64 * self.log(2.0)
    }
}

/// Shannon entropy `-Σ p log p` of `p_i = |x_i|²`, with `0 log 0 = 0`.
///
/// The input must be normalized within tolerance; the probabilities are
/// rescaled to sum to exactly one before the sum is taken.
pub fn entropy(amps: &[Complex64], base: LogBase) -> Result<f64> {
    amps::check_normalized(amps)?;
    let total = amps::norm_sqr(amps);
    let h: f64 = amps
        .iter()
        .map(|c| c.norm_sqr() / total)
        .filter(|&p| p > 0.0)
        .map(|p| -p * base.log(p))
        .sum();
    Ok(h.max(0.0))
}

/// State and condition entropies of one state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EntropyPair {
    /// Entropy of the outcome distribution `|C_h|²`.
    pub h_s: f64,
    /// Entropy of the condition distribution `|D_j|²`.
    pub h_c: f64,
    /// Log base both were computed in.
    pub base: LogBase,
}

impl EntropyPair {
    /// `H_S + H_C`.
    pub fn sum(&self) -> f64 {
        self.h_s + self.h_c
    }
}

/// `H_S` of `s` and `H_C` of its condition-space image.
pub fn uncertainty_sum(s: &StateVector, base: LogBase) -> EntropyPair {
    let phi = state_to_condition(s);
    EntropyPair {
        h_s: entropy(s.amplitudes(), base).expect("state is normalized"),
        h_c: entropy(phi.amplitudes(), base).expect("transform is unitary"),
        base,
    }
}

/// Fixed-width histogram of `H_S + H_C` over `[0, 2 n log 2]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Histogram {
    /// Lower edge of the first bin.
    pub lo: f64,
    /// Upper edge of the last bin.
    pub hi: f64,
    /// Counts per bin.
    pub counts: Vec<u64>,
}

impl Histogram {
    fn new(lo: f64, hi: f64, bins: usize) -> Self {
        Self { lo, hi, counts: vec![0; bins] }
    }

    fn add(&mut self, x: f64) {
        let bins = self.counts.len();
        let t = (x - self.lo) / (self.hi - self.lo);
        let i = ((t * bins as f64) as isize).clamp(0, bins as isize - 1) as usize;
        self.counts[i] += 1;
    }

    /// Width of one bin.
    pub fn bin_width(&self) -> f64 {
        (self.hi - self.lo) / self.counts.len() as f64
    }
}

/// Bins used by [`min_uncertainty_scan`].
pub const SCAN_BINS: usize = 32;

/// Outcome of a random scan over `H_S + H_C`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScanRecord {
    /// Register size.
    pub n: QubitCount,
    /// Seed of the scan.
    pub seed: u64,
    /// Entropy pair of every sampled state, in draw order.
    pub samples: Vec<EntropyPair>,
    /// Smallest observed `H_S + H_C`.
    pub min_sum: f64,
    /// Index of the minimizing sample.
    pub argmin_index: usize,
    /// The minimizing state.
    pub argmin: StateVector,
    /// Distribution of `H_S + H_C`.
    pub histogram: Histogram,
}

/// Draws `samples` random states (normalized complex Gaussian amplitudes,
/// ChaCha8 seeded with `seed`) and records `H_S + H_C` for each.
///
/// Purely empirical: no lower bound beyond positivity is implied.
pub fn min_uncertainty_scan(
    n: QubitCount,
    samples: usize,
    seed: u64,
    base: LogBase,
) -> Result<ScanRecord> {
    if samples == 0 {
        return Err(Error::ZeroShots);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut histogram = Histogram::new(0.0, 2.0 * base.max_entropy(n), SCAN_BINS);
    let mut pairs = Vec::with_capacity(samples);
    let mut best: Option<(usize, f64, StateVector)> = None;
    for i in 0..samples {
        let s = StateVector::random(n, &mut rng);
        let pair = uncertainty_sum(&s, base);
        let sum = pair.sum();
        histogram.add(sum);
        pairs.push(pair);
        if best.as_ref().is_none_or(|(_, m, _)| sum < *m) {
            best = Some((i, sum, s));
        }
    }
    let (argmin_index, min_sum, argmin) = best.expect("samples >= 1");
    Ok(ScanRecord { n, seed, samples: pairs, min_sum, argmin_index, argmin, histogram })
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{FRAC_1_SQRT_2, LN_2};

    fn n(k: u32) -> QubitCount {
        QubitCount::new(k).unwrap()
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn bell_state() -> StateVector {
        StateVector::new(n(2), vec![c(FRAC_1_SQRT_2), c(0.0), c(0.0), c(FRAC_1_SQRT_2)]).unwrap()
    }

    #[test]
    fn kernel_signs() {
        let h = |s: &str| OutcomeLabel::parse(n(2), s).unwrap();
        let j = |s: &str| ConditionLabel::parse(n(2), s).unwrap();
        assert_eq!(kernel(&h("00"), &j("11")), Ok(1.0));
        assert_eq!(kernel(&h("01"), &j("01")), Ok(-1.0));
        assert_eq!(kernel(&h("11"), &j("11")), Ok(1.0));
        assert!(kernel(&h("11"), &ConditionLabel::zero(n(3))).is_err());
    }

    #[test]
    fn wht_examples() {
        let y = wht(&[1.0, 0.0, 0.0, 0.0]).unwrap();
        for v in y {
            assert!((v - 0.5).abs() < 1e-15);
        }
        let y = wht(&[FRAC_1_SQRT_2, 0.0, 0.0, FRAC_1_SQRT_2]).unwrap();
        let want = [FRAC_1_SQRT_2, 0.0, 0.0, FRAC_1_SQRT_2];
        for (a, b) in y.iter().zip(want) {
            assert!((a - b).abs() < 1e-15);
        }
        let y = wht(&vec![0.125; 64]).unwrap();
        assert!((y[0] - 1.0).abs() < 1e-14);
        assert!(y[1..].iter().all(|v| v.abs() < 1e-14));
        assert_eq!(wht(&[1.0, 2.0, 3.0]), Err(Error::NotPowerOfTwo(3)));
        assert_eq!(wht(&[2.0]).unwrap(), vec![2.0]);
    }

    #[test]
    fn state_condition_round_trip() {
        let phi = state_to_condition(&bell_state());
        assert!(phi.approx_eq(&QConditionVector::bell(), 1e-15));
        assert!(condition_to_state(&phi).approx_eq(&bell_state(), 1e-15));
        let basis = StateVector::basis(&OutcomeLabel::parse(n(3), "101").unwrap());
        let d = state_to_condition(&basis);
        assert!(d.amplitudes().iter().all(|a| (a.norm_sqr() - 0.125).abs() < 1e-15));
        let u = condition_to_state(&QConditionVector::basis(&ConditionLabel::zero(n(3))));
        assert!(u.approx_eq(&StateVector::uniform(n(3)), 1e-15));
    }

    #[test]
    fn entropy_examples() {
        let basis = StateVector::zero(n(3));
        assert_eq!(entropy(basis.amplitudes(), LogBase::E), Ok(0.0));
        let u = StateVector::uniform(n(3));
        assert!((entropy(u.amplitudes(), LogBase::E).unwrap() - 3.0 * LN_2).abs() < 1e-12);
        assert!((entropy(u.amplitudes(), LogBase::Two).unwrap() - 3.0).abs() < 1e-12);
        assert!((entropy(bell_state().amplitudes(), LogBase::E).unwrap() - LN_2).abs() < 1e-15);
        assert!(entropy(&[c(1.0), c(1.0)], LogBase::E).is_err());
    }

    #[test]
    fn uncertainty_fixtures() {
        let p = uncertainty_sum(&StateVector::zero(n(2)), LogBase::E);
        assert!(p.h_s.abs() < 1e-12 && (p.h_c - 2.0 * LN_2).abs() < 1e-12);
        let p = uncertainty_sum(&StateVector::uniform(n(2)), LogBase::E);
        assert!((p.h_s - 2.0 * LN_2).abs() < 1e-12 && p.h_c.abs() < 1e-12);
        let p = uncertainty_sum(&bell_state(), LogBase::Two);
        assert!((p.h_s - 1.0).abs() < 1e-12 && (p.h_c - 1.0).abs() < 1e-12);
        assert_eq!(p.base, LogBase::Two);
        assert!((p.sum() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn scan_is_reproducible() {
        let a = min_uncertainty_scan(n(2), 1, 99, LogBase::E).unwrap();
        let b = min_uncertainty_scan(n(2), 1, 99, LogBase::E).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.samples.len(), 1);
        assert_eq!(a.histogram.counts.iter().sum::<u64>(), 1);
        assert!(min_uncertainty_scan(n(2), 0, 99, LogBase::E).is_err());
    }
}
