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

//! Sampled event-probability estimation and the shot-count law
//! `σ_mean = σ / √P`.
//!
//! Every shot draws an outcome from `|C_h|²` with a ChaCha8 generator seeded
//! by `ChaCha8Rng::seed_from_u64(seed)`. The generator is portable, so a given
//! seed produces the same estimate on every platform.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::event::Event;
use crate::state::StateVector;

/// Result of a sampled event-probability estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SamplingEstimate {
    /// Fraction of shots that landed in the event.
    pub p_hat: f64,
    /// Number of shots `P`.
    pub shots: u64,
    /// Number of shots that landed in the event.
    pub hits: u64,
    /// Plug-in standard error of the mean, `sqrt(p_hat (1 - p_hat) / P)`.
    pub sigma_mean_est: f64,
    /// Seed the run was drawn with.
    pub seed: u64,
}

/// Estimates the probability of `event` from `shots` simulated measurements.
pub fn sample_event(
    state: &StateVector,
    event: &Event,
    shots: u64,
    seed: u64,
) -> Result<SamplingEstimate> {
    state.n().expect(event.n())?;
    if shots == 0 {
        return Err(Error::ZeroShots);
    }
    let mut cumulative = Vec::with_capacity(state.n().dim());
    let mut total = 0.0;
    for p in state.probabilities() {
        total += p;
        cumulative.push(total);
    }
    let last = cumulative.len() - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0u64;
    for _ in 0..shots {
        let r = rng.random::<f64>() * total;
        let outcome = cumulative.partition_point(|&c| c <= r).min(last);
        if event.contains_index(outcome) {
            hits += 1;
        }
    }
    let p_hat = hits as f64 / shots as f64;
    Ok(SamplingEstimate {
        p_hat,
        shots,
        hits,
        sigma_mean_est: libm::sqrt(p_hat * (1.0 - p_hat) / shots as f64),
        seed,
    })
}

/// Number of measurements `P = ⌈(σ / σ_mean)²⌉` needed to reach standard error
/// `sigma_mean` for a distribution with standard deviation `sigma`.
///
/// Independent of the qubit count. Never returns less than one shot.
pub fn required_shots(sigma: f64, sigma_mean: f64) -> Result<u64> {
    if sigma_mean.is_nan() || sigma_mean <= 0.0 || sigma.is_nan() || sigma < 0.0 || !sigma.is_finite() {
        return Err(Error::InvalidSigma);
    }
    let ratio = sigma / sigma_mean;
    let p = ratio * ratio;
    let nearest = libm::round(p);
    let shots = if (p - nearest).abs() <= 1e-9 * nearest.max(1.0) { nearest } else { libm::ceil(p) };
    Ok((shots as u64).max(1))
}
