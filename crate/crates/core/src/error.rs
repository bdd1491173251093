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

use core::fmt;

/// Convenience alias used throughout the crate.
pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors raised by the condition-space and simulation operations.
#[derive(Clone, Debug, PartialEq)]
#[non_exhaustive]
pub enum Error {
    /// Qubit count outside `1..=N_MAX`.
    InvalidQubitCount(u32),
    /// Two operands live in registers of different size.
    LengthMismatch {
        /// Size of the left operand.
        expected: u32,
        /// Size of the right operand.
        found: u32,
    },
    /// A label value or bit string does not fit the register.
    InvalidLabel,
    /// Qubit index outside `1..=n`.
    QubitOutOfRange {
        /// The offending 1-based index.
        qubit: usize,
        /// Register size.
        n: u32,
    },
    /// The same qubit is used twice by one gate.
    DuplicateQubit(usize),
    /// A 2x2 block is not unitary within tolerance.
    NonUnitary,
    /// Amplitudes are not normalized within tolerance.
    NotNormalized {
        /// Observed squared norm.
        norm_sqr: f64,
    },
    /// Amplitude array length is not a power of two.
    NotPowerOfTwo(usize),
    /// Post-selection onto an event with (numerically) zero probability.
    ZeroProbability,
    /// A sampling run was requested with zero shots.
    ZeroShots,
    /// Target standard error must be strictly positive and sigma non-negative.
    InvalidSigma,
    /// A parity condition with an all-zero mask cannot be compiled.
    ZeroMask,
    /// Two 1-position conditions that must be orthogonal are not.
    NotOrthogonal,
    /// A condition vector has the wrong number of positions.
    PositionMismatch {
        /// Required number of positions.
        expected: u32,
        /// Actual number of positions.
        found: u32,
    },
    /// A gate is not allowed in this context.
    UnexpectedGate,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidQubitCount(n) => {
                write!(f, "qubit count {n} outside 1..={}", crate::N_MAX)
            }
            Error::LengthMismatch { expected, found } => {
                write!(f, "register size mismatch: {expected} vs {found}")
            }
            Error::InvalidLabel => f.write_str("label does not fit the register"),
            Error::QubitOutOfRange { qubit, n } => {
                write!(f, "qubit q{qubit} out of range for n = {n}")
            }
            Error::DuplicateQubit(q) => write!(f, "qubit q{q} used twice by one gate"),
            Error::NonUnitary => f.write_str("2x2 block is not unitary"),
            Error::NotNormalized { norm_sqr } => {
                write!(f, "amplitudes not normalized (squared norm {norm_sqr})")
            }
            Error::NotPowerOfTwo(len) => write!(f, "length {len} is not a power of two"),
            Error::ZeroProbability => f.write_str("projection onto a zero-probability event"),
            Error::ZeroShots => f.write_str("at least one shot is required"),
            Error::InvalidSigma => f.write_str("sigma_mean must be > 0 and sigma >= 0"),
            Error::ZeroMask => f.write_str("condition has no qubits to compile"),
            Error::NotOrthogonal => f.write_str("1-q-conditions are not orthogonal"),
            Error::PositionMismatch { expected, found } => {
                write!(f, "expected {expected} condition positions, found {found}")
            }
            Error::UnexpectedGate => f.write_str("gate kind not allowed here"),
        }
    }
}

impl core::error::Error for Error {}
