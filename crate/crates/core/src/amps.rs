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

//! Dense amplitude-array primitives shared by state and condition vectors.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::NORM_TOLERANCE;

pub(crate) type Matrix2 = [[Complex64; 2]; 2];

pub(crate) fn norm_sqr(amps: &[Complex64]) -> f64 {
    amps.iter().map(|c| c.norm_sqr()).sum()
}

pub(crate) fn check_normalized(amps: &[Complex64]) -> Result<()> {
    let norm_sqr = norm_sqr(amps);
    if (norm_sqr - 1.0).abs() <= NORM_TOLERANCE {
        Ok(())
    } else {
        Err(Error::NotNormalized { norm_sqr })
    }
}

pub(crate) fn is_unitary(m: &Matrix2) -> bool {
    // M^dagger M == I
    for i in 0..2 {
        for j in 0..2 {
            let dot = m[0][i].conj() * m[0][j] + m[1][i].conj() * m[1][j];
            let want = if i == j { 1.0 } else { 0.0 };
            if (dot.re - want).abs() > NORM_TOLERANCE || dot.im.abs() > NORM_TOLERANCE {
                return false;
            }
        }
    }
    true
}

/// Applies `m` to every amplitude pair that differs in `target` and whose
/// index matches `control_value` on `control_mask`. Other entries are untouched.
pub(crate) fn apply_2x2(
    amps: &mut [Complex64],
    target: usize,
    control_mask: usize,
    control_value: usize,
    m: &Matrix2,
) {
    for i in 0..amps.len() {
        if i & target != 0 || i & control_mask != control_value {
            continue;
        }
        let j = i | target;
        let (a, b) = (amps[i], amps[j]);
        amps[i] = m[0][0] * a + m[0][1] * b;
        amps[j] = m[1][0] * a + m[1][1] * b;
    }
}

/// Controlled bit flip: swaps the pairs selected like [`apply_2x2`].
pub(crate) fn apply_flip(
    amps: &mut [Complex64],
    target: usize,
    control_mask: usize,
    control_value: usize,
) {
    for i in 0..amps.len() {
        if i & target == 0 && i & control_mask == control_value {
            amps.swap(i, i | target);
        }
    }
}

/// Kronecker product with `a` on the high-order bits.
pub(crate) fn kron(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in a {
        out.extend(b.iter().map(|&y| x * y));
    }
    out
}

pub(crate) fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}
