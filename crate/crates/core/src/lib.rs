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

//! Outcome and condition spaces over GF(2), quantum condition vectors, and the
//! Walsh-Hadamard duality between the quantum state space and the quantum
//! condition space.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the condition
//! expression parser and the command line frontend live in the `qcond` crate.
//!
//! # Conventions
//!
//! Qubits are numbered from 1 in every public API and in every text form.
//! Qubit `q1` is the most significant bit of an amplitude index, so for three
//! qubits the amplitude `C_3` belongs to the outcome `011`.
//!
//! # Quick start
//!
//! ```
//! use qcond_core::{OutcomeLabel, QubitCount};
//!
//! let n = QubitCount::new(3).unwrap();
//! let v = OutcomeLabel::parse(n, "001").unwrap();
//! let satisfied: Vec<String> = v
//!     .annihilator()
//!     .iter()
//!     .map(|f| f.to_string())
//!     .collect();
//! assert_eq!(satisfied, ["000", "010", "100", "110"]);
//! ```

#![no_std]
#![deny(missing_docs)]

extern crate alloc;

pub mod compiler;
pub mod event;
mod error;
mod amps;
pub mod label;
pub mod qcondition;
pub mod sampling;
pub mod state;
pub mod transform;

pub use num_complex::Complex64;

pub use crate::compiler::{
    circuit_condition_trace, compile_parity, gate_support, plan_realization,
    simulate_realization, GateSupport, ParityCircuit, Realization, RealizationPlan, TraceEntry,
};
pub use crate::error::{Error, Result};
pub use crate::event::{ConditionExpr, Event, ParityCondition};
pub use crate::label::{
    condition_to_text, Condition, ConditionLabel, Label, Outcome, OutcomeLabel, QubitCount, Space,
};
pub use crate::qcondition::QConditionVector;
pub use crate::sampling::{required_shots, sample_event, SamplingEstimate};
pub use crate::state::{Circuit, Gate, StateVector, Unitary2};
pub use crate::qcondition::interpret_basis;
pub use crate::transform::{
    condition_to_state, entropy, kernel, kernel_matrix, min_uncertainty_scan, state_to_condition,
    uncertainty_sum, wht, wht_in_place, EntropyPair, Histogram, LogBase, ScanRecord,
};

/// Largest supported register size. Dense `2^n` storage is used everywhere.
pub const N_MAX: u32 = 24;

/// Tolerance for normalization and unitarity checks.
pub const NORM_TOLERANCE: f64 = 1e-9;

/// Smallest event probability that [`StateVector::project`] accepts.
pub const PROJECTION_EPSILON: f64 = 1e-12;
