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

//! The outcome space `V` of n-bit strings and its dual, the condition space `V*`.
//!
//! Both spaces hold n-bit labels over GF(2); they differ only in how a label is
//! read. An outcome label `q1 q2 ... qn` is a measurement result. A condition
//! label `f1 f2 ... fn` stands for the parity condition
//! `f1·q1 ⊕ f2·q2 ⊕ ... ⊕ fn·qn = 0`, where `fm = 1` means `qm` is present in
//! the sum. The two spaces are tied together by [`pairing`], and every
//! outcome is bit-identical to exactly one condition through [`Label::dual`].
//!
//! [`pairing`]: Label::pairing

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::marker::PhantomData;

use crate::error::{Error, Result};
use crate::N_MAX;

/// Number of qubits in a register, `1..=N_MAX`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QubitCount(u32);

impl QubitCount {
    /// Validates `n`.
    pub fn new(n: u32) -> Result<Self> {
        if (1..=N_MAX).contains(&n) {
            Ok(Self(n))
        } else {
            Err(Error::InvalidQubitCount(n))
        }
    }

    /// The raw count.
    pub fn get(self) -> u32 {
        self.0
    }

    /// Dimension of the register, `2^n`.
    pub fn dim(self) -> usize {
        1usize << self.0
    }

    /// All-ones mask over the register.
    pub(crate) fn full_mask(self) -> u32 {
        ((1u64 << self.0) - 1) as u32
    }

    /// Index bit belonging to the 1-based qubit `q` (q1 is the most significant bit).
    pub fn qubit_bit(self, q: usize) -> Result<usize> {
        if q == 0 || q > self.0 as usize {
            return Err(Error::QubitOutOfRange { qubit: q, n: self.0 });
        }
        Ok(1usize << (self.0 as usize - q))
    }

    /// Checks that `other` is the same register size.
    pub(crate) fn expect(self, other: QubitCount) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected: self.0, found: other.0 })
        }
    }
}

impl fmt::Display for QubitCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

mod sealed {
    pub trait Sealed {}
}

/// Marker for the two label spaces.
pub trait Space: sealed::Sealed + Copy + Eq + fmt::Debug + core::hash::Hash + Ord {
    /// The dual space.
    type Dual: Space<Dual = Self>;
}

/// Marker for the outcome space `V`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Outcome {}

/// Marker for the condition space `V*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {}

impl sealed::Sealed for Outcome {}
impl sealed::Sealed for Condition {}

impl Space for Outcome {
    type Dual = Condition;
}

impl Space for Condition {
    type Dual = Outcome;
}

/// An n-bit label in the space `S`.
///
/// The integer value stores `q1` (or `f1`) in its most significant bit, so it
/// doubles as the amplitude index of the corresponding basis vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label<S: Space> {
    n: QubitCount,
    bits: u32,
    _space: PhantomData<S>,
}

/// A measurement outcome `q1 ... qn`.
pub type OutcomeLabel = Label<Outcome>;

/// A parity condition `f1 q1 ⊕ ... ⊕ fn qn = 0`, written as its coefficient bits.
pub type ConditionLabel = Label<Condition>;

impl<S: Space> Label<S> {
    /// Label with integer value `bits`; errors if `bits >= 2^n`.
    pub fn new(n: QubitCount, bits: u32) -> Result<Self> {
        if bits & !n.full_mask() != 0 {
            return Err(Error::InvalidLabel);
        }
        Ok(Self { n, bits, _space: PhantomData })
    }

    /// The all-zero label.
    pub fn zero(n: QubitCount) -> Self {
        Self { n, bits: 0, _space: PhantomData }
    }

    /// Parses a string of exactly `n` characters `0`/`1`, leftmost = qubit 1.
    pub fn parse(n: QubitCount, text: &str) -> Result<Self> {
        if text.len() != n.get() as usize {
            return Err(Error::InvalidLabel);
        }
        let mut bits = 0u32;
        for c in text.chars() {
            bits = (bits << 1)
                | match c {
                    '0' => 0,
                    '1' => 1,
                    _ => return Err(Error::InvalidLabel),
                };
        }
        Self::new(n, bits)
    }

    /// Builds a label from the set of 1-based qubit indices whose bit is one.
    pub fn from_qubits(n: QubitCount, qubits: &[usize]) -> Result<Self> {
        let mut bits = 0u32;
        for &q in qubits {
            bits |= n.qubit_bit(q)? as u32;
        }
        Self::new(n, bits)
    }

    /// All `2^n` labels in index order.
    pub fn all(n: QubitCount) -> impl Iterator<Item = Self> {
        (0..n.dim() as u32).map(move |bits| Self { n, bits, _space: PhantomData })
    }

    /// Register size.
    pub fn n(&self) -> QubitCount {
        self.n
    }

    /// Integer value, also the amplitude index.
    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Amplitude index.
    pub fn index(&self) -> usize {
        self.bits as usize
    }

    /// Bit of the 1-based qubit `q`.
    pub fn bit(&self, q: usize) -> Result<bool> {
        Ok(self.index() & self.n.qubit_bit(q)? != 0)
    }

    /// 1-based indices of the set bits, ascending.
    pub fn qubits(&self) -> impl Iterator<Item = usize> + '_ {
        let n = self.n.get() as usize;
        (1..=n).filter(move |q| self.bits >> (n - q) & 1 == 1)
    }

    /// Number of set bits.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Whether this is the zero label.
    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Vector addition: bitwise addition modulo 2.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.n.expect(other.n)?;
        Ok(Self { n: self.n, bits: self.bits ^ other.bits, _space: PhantomData })
    }

    /// The GF(2) bilinear form `⊕_m a_m b_m` between a label and a dual label.
    ///
    /// For an outcome `v` and condition `f`, `false` (zero) means `v` satisfies `f`.
    pub fn pairing(&self, other: &Label<S::Dual>) -> Result<bool> {
        self.n.expect(other.n)?;
        Ok((self.bits & other.bits).count_ones() & 1 == 1)
    }

    /// The bit-identical label in the dual space.
    pub fn dual(&self) -> Label<S::Dual> {
        Label { n: self.n, bits: self.bits, _space: PhantomData }
    }

    /// Every dual label that pairs to zero with `self`.
    ///
    /// For an outcome this is the set of conditions it satisfies; for a
    /// condition it is the set of outcomes that satisfy it. The result is a
    /// subgroup of size `2^(n-1)` (or `2^n` for the zero label), in index order.
    pub fn annihilator(&self) -> Vec<Label<S::Dual>> {
        Label::<S::Dual>::all(self.n)
            .filter(|f| (self.bits & f.bits).count_ones() & 1 == 0)
            .collect()
    }
}

impl<S: Space> fmt::Display for Label<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n.get();
        for shift in (0..n).rev() {
            f.write_str(if self.bits >> shift & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl ConditionLabel {
    /// Human-readable `q1⊕q3⊕q4=0` form of this condition with right-hand side 0.
    pub fn to_text(&self) -> String {
        condition_to_text(self, false)
    }

    /// Like [`to_text`](Self::to_text) with the missing qubits listed, e.g.
    /// `q1⊕q3⊕q4=0 (missing q2, q5)`.
    pub fn to_text_annotated(&self) -> String {
        let mut text = self.to_text();
        let n = self.n.get() as usize;
        let missing: Vec<usize> = (1..=n).filter(|q| self.bits >> (n - q) & 1 == 0).collect();
        if !missing.is_empty() {
            text.push_str(" (missing ");
            for (i, q) in missing.iter().enumerate() {
                if i > 0 {
                    text.push_str(", ");
                }
                text.push_str(&alloc::format!("q{q}"));
            }
            text.push(')');
        }
        text
    }
}

/// Renders the parity condition `mask · q = rhs` as `qi⊕qj⊕...=rhs`.
///
/// An all-zero mask renders as `0=0` or `0=1`.
pub fn condition_to_text(mask: &ConditionLabel, rhs: bool) -> String {
    let mut out = String::new();
    for (i, q) in mask.qubits().enumerate() {
        if i > 0 {
            out.push('⊕');
        }
        out.push_str(&alloc::format!("q{q}"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out.push_str(if rhs { "=1" } else { "=0" });
    out
}
