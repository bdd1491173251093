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

//! From conditions to circuits and back.
//!
//! * Parity conditions compile to CNOT chains whose last target holds the
//!   parity, so a single-qubit measurement evaluates the condition.
//! * Any quantum condition over `n` positions is realized with `n` ancillas
//!   prepared in the condition's amplitudes, one Toffoli per working qubit and
//!   a target qubit that collects `⊕_i a_i q_i`. Post-selecting the target on
//!   `0` applies the condition to the working register.
//! * Every elementary gate only touches the amplitudes of a half-set of
//!   outcomes (or, for 1-qubit gates, a pair of complementary half-sets).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::event::{ConditionExpr, Event, ParityCondition};
use crate::label::{ConditionLabel, OutcomeLabel, QubitCount};
use crate::qcondition::QConditionVector;
use crate::state::{Circuit, Gate, StateVector};

/// A CNOT-chain measurement circuit for one parity condition.
#[derive(Clone, Debug, PartialEq)]
pub struct ParityCircuit {
    circuit: Circuit,
    target: usize,
    condition: ParityCondition,
}

/// Compiles `mask · q = rhs` to CNOTs between consecutive qubits of the mask
/// in ascending order; the largest qubit of the mask is the measured target.
///
/// Emits `popcount(mask) - 1` gates.
pub fn compile_parity(pc: &ParityCondition) -> Result<ParityCircuit> {
    let qubits: Vec<usize> = pc.mask.qubits().collect();
    let target = *qubits.last().ok_or(Error::ZeroMask)?;
    let gates = qubits
        .windows(2)
        .map(|w| Gate::Cnot { control: w[0], target: w[1] })
        .collect();
    Ok(ParityCircuit { circuit: Circuit::new(pc.n(), gates)?, target, condition: *pc })
}

impl ParityCircuit {
    /// Assembles a parity circuit from parts. Only CNOT gates are accepted;
    /// whether the circuit actually computes the parity is left to
    /// [`verify`](Self::verify).
    pub fn from_parts(circuit: Circuit, target: usize, condition: ParityCondition) -> Result<Self> {
        circuit.n().expect(condition.n())?;
        circuit.n().qubit_bit(target)?;
        if circuit.gates().iter().any(|g| !matches!(g, Gate::Cnot { .. })) {
            return Err(Error::UnexpectedGate);
        }
        Ok(Self { circuit, target, condition })
    }

    /// The CNOT chain.
    pub fn circuit(&self) -> &Circuit {
        &self.circuit
    }

    /// 1-based qubit to measure.
    pub fn target(&self) -> usize {
        self.target
    }

    /// The compiled condition; it holds when the target reads `condition.rhs`.
    pub fn condition(&self) -> &ParityCondition {
        &self.condition
    }

    /// First basis input whose target bit after the circuit differs from the
    /// masked parity of the input, found by simulating every basis state.
    pub fn first_failure(&self) -> Option<OutcomeLabel> {
        let n = self.circuit.n();
        let target_bit = n.qubit_bit(self.target).expect("validated");
        OutcomeLabel::all(n).find(|h| {
            let out = StateVector::basis(h).run(&self.circuit).expect("validated circuit");
            let index = out
                .amplitudes()
                .iter()
                .position(|a| a.norm_sqr() > 0.5)
                .expect("CNOT circuits map basis states to basis states");
            let measured = index & target_bit != 0;
            measured != h.pairing(&self.condition.mask).expect("same n")
        })
    }

    /// Whether the target carries the parity for all `2^n` basis inputs.
    pub fn verify(&self) -> bool {
        self.first_failure().is_none()
    }

    /// Probability that measuring the target after the circuit reads `rhs`.
    pub fn acceptance_probability(&self, state: &StateVector) -> Result<f64> {
        let after = state.run(&self.circuit)?;
        let read = ParityCondition::single(state.n(), self.target, self.condition.rhs)?;
        after.event_probability(&read.event())
    }
}

/// Ancilla/Toffoli layout realizing a quantum condition on `n` working qubits.
///
/// Joint register order: working `q1..qn`, ancillas `q(n+1)..q(2n)`, target
/// `q(2n+1)`. Gate `i` is `CCNOT(ancilla_i, working_i -> target)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealizationPlan {
    working_n: QubitCount,
    circuit: Circuit,
    ancilla_condition: QConditionVector,
}

/// Lays out the realization circuit for `phi`; the ancilla register is to be
/// prepared with `phi`'s amplitudes and the target with `|0⟩`.
pub fn plan_realization(phi: &QConditionVector) -> Result<RealizationPlan> {
    let n = phi.m().get() as usize;
    let joint = QubitCount::new(2 * n as u32 + 1)?;
    let gates = (1..=n)
        .map(|i| Gate::Ccnot { controls: [n + i, i], target: 2 * n + 1 })
        .collect();
    Ok(RealizationPlan {
        working_n: phi.m(),
        circuit: Circuit::new(joint, gates)?,
        ancilla_condition: phi.clone(),
    })
}

impl RealizationPlan {
    /// Number of working (and ancilla) qubits.
    pub fn working_n(&self) -> QubitCount {
        self.working_n
    }

    /// The Toffoli circuit over the joint register.
    pub fn circuit(&self) -> &Circuit {
        &self.circuit
    }

    /// The condition the ancillas are prepared in.
    pub fn ancilla_condition(&self) -> &QConditionVector {
        &self.ancilla_condition
    }

    /// 1-based joint index of ancilla `i`.
    pub fn ancilla_qubit(&self, i: usize) -> usize {
        self.working_n.get() as usize + i
    }

    /// 1-based joint index of the target.
    pub fn target_qubit(&self) -> usize {
        2 * self.working_n.get() as usize + 1
    }

    /// `working ⊗ ancillas ⊗ |0⟩`.
    pub fn initial_state(&self, working: &StateVector) -> Result<StateVector> {
        self.working_n.expect(working.n())?;
        let ancilla = StateVector::new(
            self.working_n,
            self.ancilla_condition.amplitudes().to_vec(),
        )?;
        let zero = StateVector::zero(QubitCount::new(1)?);
        working.tensor(&ancilla)?.tensor(&zero)
    }
}

/// Post-selected outcome of a realization run.
#[derive(Clone, Debug, PartialEq)]
pub struct Realization {
    /// Probability of the requested target outcome.
    pub probability: f64,
    /// Normalized joint state after post-selection.
    pub joint: StateVector,
    working_n: QubitCount,
}

impl Realization {
    /// The working register conditioned on the ancillas reading `ancilla` and
    /// the target reading `target`: returns the weight of that slice and the
    /// renormalized working state.
    pub fn working_slice(
        &self,
        ancilla: &ConditionLabel,
        target: bool,
    ) -> Result<(f64, StateVector)> {
        self.working_n.expect(ancilla.n())?;
        let n = self.working_n.get();
        let low = ((ancilla.index()) << 1) | target as usize;
        let amps: Vec<Complex64> = (0..self.working_n.dim())
            .map(|w| self.joint.amplitudes()[(w << (n + 1)) | low])
            .collect();
        let weight: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if weight <= crate::PROJECTION_EPSILON {
            return Err(Error::ZeroProbability);
        }
        let scale = 1.0 / libm::sqrt(weight);
        let state = StateVector::new(self.working_n, amps.into_iter().map(|a| a * scale).collect())?;
        Ok((weight, state))
    }
}

/// Runs the realization: prepares `working ⊗ φ ⊗ |0⟩`, applies the Toffolis,
/// and post-selects the target on `target_outcome`.
///
/// For `target_outcome = false` and a basis ancilla `|j]`, the working register
/// ends up projected onto the outcomes satisfying `j`.
pub fn simulate_realization(
    working: &StateVector,
    plan: &RealizationPlan,
    target_outcome: bool,
) -> Result<Realization> {
    let joint = plan.initial_state(working)?.run(&plan.circuit)?;
    let read = ParityCondition::single(joint.n(), plan.target_qubit(), target_outcome)?;
    let (probability, joint) = joint.project(&read.event())?;
    Ok(Realization { probability, joint, working_n: plan.working_n })
}

/// The half-set of outcomes a gate can modify.
#[derive(Clone, Debug, PartialEq)]
pub struct GateSupport {
    /// The analyzed gate.
    pub gate: Gate,
    /// Outcomes whose amplitudes the gate may change.
    pub support: Event,
    /// Condition specifying `support`.
    pub condition: ConditionExpr,
    /// Set for 1-qubit gates: the support is the whole space, the union of
    /// `q=0` and `q=1` acted on by a pair of controlled gates.
    pub full_space: bool,
}

impl GateSupport {
    /// Condition text, e.g. `q1=1` or `q1=0 OR q1=1 (full space, paired CU)`.
    pub fn text(&self) -> String {
        if self.full_space {
            format!("{} (full space, paired CU)", self.condition)
        } else {
            format!("{}", self.condition)
        }
    }
}

/// Support of `gate` on an `n`-qubit register.
pub fn gate_support(gate: &Gate, n: QubitCount) -> Result<GateSupport> {
    gate.validate(n)?;
    let leaf = |q, v| ParityCondition::single(n, q, v).map(ConditionExpr::from);
    let (condition, full_space) = match *gate {
        Gate::U { target, .. } => (leaf(target, false)? | leaf(target, true)?, true),
        Gate::CU { control, control_value, .. } => (leaf(control, control_value)?, false),
        Gate::Cnot { control, .. } => (leaf(control, true)?, false),
        Gate::Ccnot { controls, .. } => (leaf(controls[0], true)? & leaf(controls[1], true)?, false),
    };
    Ok(GateSupport { gate: *gate, support: condition.eval()?, condition, full_space })
}

/// One line of a circuit condition trace.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceEntry {
    /// The gate.
    pub gate: Gate,
    /// Text of the condition selecting its support.
    pub condition: String,
}

/// The sequence of half-set conditions a circuit's gates act on.
pub fn circuit_condition_trace(circuit: &Circuit) -> Vec<TraceEntry> {
    circuit
        .gates()
        .iter()
        .map(|g| TraceEntry {
            gate: *g,
            condition: gate_support(g, circuit.n()).expect("circuit gates are validated").text(),
        })
        .collect()
}
