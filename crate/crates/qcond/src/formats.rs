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

//! JSON and CSV file formats.
//!
//! State file, amplitudes in index order with `q1` as the most significant bit:
//!
//! ```json
//! {"n": 2, "amplitudes": [[0.7071067811865476, 0.0], [0.0, 0.0], [0.0, 0.0], [0.7071067811865476, 0.0]]}
//! ```
//!
//! A quantum condition vector uses the same layout plus `"space": "condition"`.
//!
//! Circuit file, 1-based qubit indices, `u` is a row-major 2x2 matrix of
//! `[re, im]` pairs:
//!
//! ```json
//! {"n": 3, "gates": [
//!   {"kind": "U", "target": 1, "u": [[1,0],[0,0],[0,0],[1,0]]},
//!   {"kind": "CU", "control": 1, "cv": 1, "target": 2, "u": [[0,0],[1,0],[1,0],[0,0]]},
//!   {"kind": "CNOT", "control": 2, "target": 3},
//!   {"kind": "CCNOT", "controls": [1, 2], "target": 3}
//! ]}
//! ```
//!
//! Compiled parity circuits add `"target"` (the measured qubit) and
//! `"condition"` (its text form). Entropy scans are CSV with header
//! `sample_index,H_S,H_C,sum,seed`.

use std::fs;
use std::io::Write;
use std::path::Path;

use qcond_core::{
    Circuit, Complex64, Gate, ParityCircuit, QConditionVector, QubitCount, ScanRecord,
    StateVector, Unitary2,
};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Value of `"space"` for condition vectors.
pub const CONDITION_SPACE: &str = "condition";

/// Value of `"space"` for state vectors (optional on input, omitted on output).
pub const STATE_SPACE: &str = "state";

/// On-disk amplitude array, for states and condition vectors alike.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AmplitudeFile {
    /// Number of qubits (or condition positions).
    pub n: u32,
    /// `[re, im]` per index.
    pub amplitudes: Vec<[f64; 2]>,
    /// `"condition"` for condition vectors, absent or `"state"` for states.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<String>,
}

/// A decoded amplitude file.
#[derive(Clone, Debug, PartialEq)]
pub enum Amplitudes {
    /// Quantum state.
    State(StateVector),
    /// Quantum condition vector.
    Condition(QConditionVector),
}

fn to_pairs(amps: &[Complex64]) -> Vec<[f64; 2]> {
    amps.iter().map(|c| [c.re, c.im]).collect()
}

fn from_pairs(pairs: &[[f64; 2]]) -> Vec<Complex64> {
    pairs.iter().map(|&[re, im]| Complex64::new(re, im)).collect()
}

impl AmplitudeFile {
    /// Encodes a state.
    pub fn from_state(s: &StateVector) -> Self {
        Self { n: s.n().get(), amplitudes: to_pairs(s.amplitudes()), space: None }
    }

    /// Encodes a condition vector.
    pub fn from_condition(phi: &QConditionVector) -> Self {
        Self {
            n: phi.m().get(),
            amplitudes: to_pairs(phi.amplitudes()),
            space: Some(CONDITION_SPACE.into()),
        }
    }

    fn qubits(&self) -> Result<QubitCount> {
        let n = QubitCount::new(self.n).map_err(Error::parse)?;
        if self.amplitudes.len() != n.dim() {
            return Err(Error::parse(format!(
                "expected {} amplitudes for n = {}, found {}",
                n.dim(),
                self.n,
                self.amplitudes.len()
            )));
        }
        Ok(n)
    }

    /// Decodes according to `"space"`.
    pub fn decode(&self) -> Result<Amplitudes> {
        let n = self.qubits()?;
        let amps = from_pairs(&self.amplitudes);
        match self.space.as_deref() {
            None | Some(STATE_SPACE) => Ok(Amplitudes::State(StateVector::new(n, amps)?)),
            Some(CONDITION_SPACE) => Ok(Amplitudes::Condition(QConditionVector::new(n, amps)?)),
            Some(other) => Err(Error::parse(format!("unknown space '{other}'"))),
        }
    }

    /// Decodes, requiring a state.
    pub fn into_state(&self) -> Result<StateVector> {
        match self.decode()? {
            Amplitudes::State(s) => Ok(s),
            Amplitudes::Condition(_) => Err(Error::parse("expected a state, found a condition vector")),
        }
    }

    /// Decodes, requiring a condition vector. A file without `"space"` is accepted.
    pub fn into_condition(&self) -> Result<QConditionVector> {
        let n = self.qubits()?;
        match self.space.as_deref() {
            None | Some(CONDITION_SPACE) => Ok(QConditionVector::new(n, from_pairs(&self.amplitudes))?),
            Some(other) => Err(Error::parse(format!("expected a condition vector, found space '{other}'"))),
        }
    }
}

/// One gate in a circuit file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum GateSpec {
    /// Single-qubit unitary.
    #[serde(rename = "U")]
    U {
        /// 1-based target.
        target: usize,
        /// Row-major `[re, im]` entries.
        u: [[f64; 2]; 4],
    },
    /// Controlled unitary.
    #[serde(rename = "CU")]
    Cu {
        /// 1-based control.
        control: usize,
        /// Control value, 0 or 1.
        cv: u8,
        /// 1-based target.
        target: usize,
        /// Row-major `[re, im]` entries.
        u: [[f64; 2]; 4],
    },
    /// Controlled NOT.
    #[serde(rename = "CNOT")]
    Cnot {
        /// 1-based control.
        control: usize,
        /// 1-based target.
        target: usize,
    },
    /// Toffoli.
    #[serde(rename = "CCNOT")]
    Ccnot {
        /// 1-based controls.
        controls: [usize; 2],
        /// 1-based target.
        target: usize,
    },
}

fn unitary_to_spec(u: &Unitary2) -> [[f64; 2]; 4] {
    let m = u.matrix();
    [m[0][0], m[0][1], m[1][0], m[1][1]].map(|c| [c.re, c.im])
}

fn unitary_from_spec(u: &[[f64; 2]; 4]) -> Result<Unitary2> {
    let c = |i: usize| Complex64::new(u[i][0], u[i][1]);
    Ok(Unitary2::new([[c(0), c(1)], [c(2), c(3)]])?)
}

impl From<&Gate> for GateSpec {
    fn from(g: &Gate) -> Self {
        match *g {
            Gate::U { target, u } => GateSpec::U { target, u: unitary_to_spec(&u) },
            Gate::CU { control, control_value, target, u } => GateSpec::Cu {
                control,
                cv: control_value as u8,
                target,
                u: unitary_to_spec(&u),
            },
            Gate::Cnot { control, target } => GateSpec::Cnot { control, target },
            Gate::Ccnot { controls, target } => GateSpec::Ccnot { controls, target },
        }
    }
}

impl GateSpec {
    /// Converts to a core gate; the unitary block is validated here.
    pub fn to_gate(&self) -> Result<Gate> {
        Ok(match self {
            GateSpec::U { target, u } => Gate::U { target: *target, u: unitary_from_spec(u)? },
            GateSpec::Cu { control, cv, target, u } => {
                let control_value = match cv {
                    0 => false,
                    1 => true,
                    other => return Err(Error::parse(format!("cv must be 0 or 1, found {other}"))),
                };
                Gate::CU { control: *control, control_value, target: *target, u: unitary_from_spec(u)? }
            }
            GateSpec::Cnot { control, target } => Gate::Cnot { control: *control, target: *target },
            GateSpec::Ccnot { controls, target } => Gate::Ccnot { controls: *controls, target: *target },
        })
    }
}

/// On-disk circuit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitFile {
    /// Register size.
    pub n: u32,
    /// Gates in order.
    pub gates: Vec<GateSpec>,
    /// Measured qubit of a compiled parity circuit.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<usize>,
    /// Text of the compiled condition.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub condition: Option<String>,
}

impl CircuitFile {
    /// Encodes a plain circuit.
    pub fn from_circuit(c: &Circuit) -> Self {
        Self { n: c.n().get(), gates: c.gates().iter().map(GateSpec::from).collect(), target: None, condition: None }
    }

    /// Encodes a compiled parity circuit.
    pub fn from_parity(p: &ParityCircuit) -> Self {
        Self {
            target: Some(p.target()),
            condition: Some(p.condition().to_text()),
            ..Self::from_circuit(p.circuit())
        }
    }

    /// Decodes and validates the gate list.
    pub fn to_circuit(&self) -> Result<Circuit> {
        let n = QubitCount::new(self.n).map_err(Error::parse)?;
        let gates = self.gates.iter().map(GateSpec::to_gate).collect::<Result<Vec<_>>>()?;
        Circuit::new(n, gates).map_err(Error::parse)
    }
}

/// Reads and deserializes a JSON file.
pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|e| Error::parse(format!("{}: {e}", path.display())))
}

/// Reads a state file.
pub fn read_state(path: &Path) -> Result<StateVector> {
    read_json::<AmplitudeFile>(path)?.into_state()
}

/// Reads a circuit file.
pub fn read_circuit(path: &Path) -> Result<Circuit> {
    read_json::<CircuitFile>(path)?.to_circuit()
}

/// Writes a JSON value followed by a newline.
pub fn write_json<T: Serialize, W: Write>(value: &T, mut out: W) -> std::io::Result<()> {
    serde_json::to_writer(&mut out, value)?;
    out.write_all(b"\n")
}

/// Writes the per-sample rows of an entropy scan as CSV.
pub fn write_scan_csv<W: Write>(record: &ScanRecord, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["sample_index", "H_S", "H_C", "sum", "seed"])?;
    for (i, p) in record.samples.iter().enumerate() {
        w.write_record([
            i.to_string(),
            p.h_s.to_string(),
            p.h_c.to_string(),
            p.sum().to_string(),
            record.seed.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
