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

//! The `qcond` command line.
//!
//! Every subcommand reads its inputs, makes the corresponding library call and
//! renders the result. Output is JSON, except `scan`, which defaults to CSV.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use qcond_core::{
    circuit_condition_trace, compile_parity, condition_to_state, gate_support, interpret_basis,
    min_uncertainty_scan, plan_realization, sample_event, simulate_realization,
    state_to_condition, uncertainty_sum, ConditionExpr, ConditionLabel, Event, LogBase,
    OutcomeLabel, QConditionVector, QubitCount, StateVector,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::formats::{
    read_circuit, read_json, read_state, write_json, write_scan_csv, AmplitudeFile, Amplitudes,
    CircuitFile, GateSpec,
};
use crate::parse::parse_condition_expr;

/// Parsed command line.
#[derive(Clone, Debug, Parser)]
#[command(name = "qcond", version, about = "Quantum conditions: outcome/condition duality, simulation and compilation")]
pub struct RunConfig {
    /// What to run.
    #[command(subcommand)]
    pub command: Command,
    /// Number of qubits, for commands without an input file.
    #[arg(long, global = true)]
    pub n: Option<u32>,
    /// RNG seed; required by `estimate` and `scan`.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Number of simulated measurements.
    #[arg(long, global = true)]
    pub shots: Option<u64>,
    /// Logarithm base for entropies.
    #[arg(long, global = true, value_enum, default_value_t = Base::E)]
    pub base: Base,
    /// State file (or condition vector for `transform`).
    #[arg(long, global = true, value_name = "FILE")]
    pub state: Option<PathBuf>,
    /// Circuit file.
    #[arg(long, global = true, value_name = "FILE")]
    pub circuit: Option<PathBuf>,
    /// Condition expression, e.g. `(q1^q2=0) AND NOT (q3=1)`.
    #[arg(long, global = true, value_name = "EXPR")]
    pub condition: Option<String>,
    /// Outcome bit string, `q1` first.
    #[arg(long, global = true, value_name = "BITS")]
    pub outcome: Option<String>,
    /// Number of random states for `scan`.
    #[arg(long, global = true, value_name = "K")]
    pub samples: Option<usize>,
    /// Ancilla condition vector file for `realize`.
    #[arg(long, global = true, value_name = "FILE", conflicts_with = "label")]
    pub ancilla: Option<PathBuf>,
    /// Ancilla basis condition label for `realize`.
    #[arg(long, global = true, value_name = "BITS")]
    pub label: Option<String>,
    /// Target outcome to post-select in `realize`.
    #[arg(long, global = true, value_parser = clap::value_parser!(u8).range(0..=1), default_value_t = 0)]
    pub target: u8,
    /// Write output here instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Emit JSON (the default except for `scan`).
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV (`scan` only).
    #[arg(long, global = true)]
    pub csv: bool,
}

/// Subcommands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Dual condition and annihilator of an outcome (`--n`, `--outcome`).
    Dual,
    /// Outcomes satisfying a condition expression (`--n`, `--condition`).
    Event,
    /// Run a circuit on a state (`--state`, `--circuit`).
    Simulate,
    /// Project a state onto a condition (`--state`, `--condition`).
    Project,
    /// Estimate a condition's probability by sampling (`--state`, `--condition`, `--shots`, `--seed`).
    Estimate,
    /// Map a state to its condition vector, or a condition vector back (`--state`).
    Transform,
    /// Outcome and condition entropies of a state (`--state`, `--base`).
    Entropy,
    /// Entropy sums over random states (`--n`, `--samples`, `--seed`, `--base`).
    Scan,
    /// Compile a parity condition to a CNOT chain (`--n`, `--condition`).
    Compile,
    /// Realize a condition with ancillas and Toffolis (`--state`, `--ancilla` or `--label`, `--target`).
    Realize,
    /// Half-set support of each gate in a circuit (`--circuit`).
    Trace,
}

/// Entropy base flag.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Base {
    /// Nats.
    #[default]
    #[value(name = "e")]
    E,
    /// Bits.
    #[value(name = "2", alias = "two")]
    Two,
}

impl From<Base> for LogBase {
    fn from(b: Base) -> Self {
        match b {
            Base::E => LogBase::E,
            Base::Two => LogBase::Two,
        }
    }
}

fn base_name(b: LogBase) -> &'static str {
    match b {
        LogBase::E => "e",
        LogBase::Two => "2",
    }
}

impl RunConfig {
    fn require<'a, T>(&self, value: &'a Option<T>, flag: &str) -> Result<&'a T> {
        value.as_ref().ok_or_else(|| Error::parse(format!("{:?} requires --{flag}", self.command).to_lowercase()))
    }

    fn qubits(&self) -> Result<QubitCount> {
        let n = *self.require(&self.n, "n")?;
        QubitCount::new(n).map_err(Error::parse)
    }

    fn state_file(&self) -> Result<StateVector> {
        let s = read_state(self.require(&self.state, "state")?)?;
        if let Some(n) = self.n {
            if n != s.n().get() {
                return Err(Error::parse(format!("--n {n} does not match the {}-qubit state", s.n().get())));
            }
        }
        Ok(s)
    }

    fn condition_expr(&self, n: QubitCount) -> Result<ConditionExpr> {
        Ok(parse_condition_expr(self.require(&self.condition, "condition")?, n)?)
    }

    fn wants_csv(&self) -> bool {
        self.csv || (self.command == Command::Scan && !self.json)
    }
}

fn labels_json<S: qcond_core::Space>(labels: impl IntoIterator<Item = qcond_core::Label<S>>) -> Vec<String> {
    labels.into_iter().map(|l| l.to_string()).collect()
}

fn event_outcomes(e: &Event) -> Vec<String> {
    labels_json(e.outcomes())
}

fn to_json_text<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    write_json(value, &mut buf).expect("writing to memory");
    Ok(buf)
}

/// Runs `config` and returns the rendered output.
pub fn run(config: &RunConfig) -> Result<Vec<u8>> {
    if config.csv && config.command != Command::Scan {
        return Err(Error::parse("--csv is only available for scan"));
    }
    let value: Value = match config.command {
        Command::Dual => {
            let n = config.qubits()?;
            let v = OutcomeLabel::parse(n, config.require(&config.outcome, "outcome")?).map_err(Error::parse)?;
            let annihilator: Vec<Value> = v
                .annihilator()
                .iter()
                .map(|f| json!({ "label": f.to_string(), "text": f.to_text() }))
                .collect();
            json!({
                "n": n.get(),
                "outcome": v.to_string(),
                "dual": { "label": v.dual().to_string(), "text": v.dual().to_text() },
                "dual_satisfying_set": event_outcomes(&v.dual().satisfying_set()),
                "annihilator": annihilator,
            })
        }
        Command::Event => {
            let n = config.qubits()?;
            let expr = config.condition_expr(n)?;
            let event = expr.eval()?;
            json!({
                "n": n.get(),
                "condition": expr.to_string(),
                "size": event.len(),
                "outcomes": event_outcomes(&event),
            })
        }
        Command::Simulate => {
            let state = config.state_file()?;
            let circuit = read_circuit(config.require(&config.circuit, "circuit")?)?;
            serde_json::to_value(AmplitudeFile::from_state(&state.run(&circuit)?)).expect("serializable")
        }
        Command::Project => {
            let state = config.state_file()?;
            let expr = config.condition_expr(state.n())?;
            let (probability, post) = state.project(&expr.eval()?)?;
            json!({
                "condition": expr.to_string(),
                "probability": probability,
                "state": AmplitudeFile::from_state(&post),
            })
        }
        Command::Estimate => {
            let state = config.state_file()?;
            let expr = config.condition_expr(state.n())?;
            let shots = *config.require(&config.shots, "shots")?;
            let seed = *config.require(&config.seed, "seed")?;
            let event = expr.eval()?;
            let est = sample_event(&state, &event, shots, seed)?;
            json!({
                "condition": expr.to_string(),
                "p_exact": state.event_probability(&event)?,
                "p_hat": est.p_hat,
                "hits": est.hits,
                "shots": est.shots,
                "sigma_mean_est": est.sigma_mean_est,
                "seed": est.seed,
            })
        }
        Command::Transform => {
            let file: AmplitudeFile = read_json(config.require(&config.state, "state")?)?;
            match file.decode()? {
                Amplitudes::State(s) => serde_json::to_value(AmplitudeFile::from_condition(&state_to_condition(&s))),
                Amplitudes::Condition(phi) => serde_json::to_value(AmplitudeFile::from_state(&condition_to_state(&phi))),
            }
            .expect("serializable")
        }
        Command::Entropy => {
            let state = config.state_file()?;
            let pair = uncertainty_sum(&state, config.base.into());
            json!({
                "n": state.n().get(),
                "base": base_name(pair.base),
                "H_S": pair.h_s,
                "H_C": pair.h_c,
                "sum": pair.sum(),
            })
        }
        Command::Scan => {
            let n = config.qubits()?;
            let samples = *config.require(&config.samples, "samples")?;
            let seed = *config.require(&config.seed, "seed")?;
            let record = min_uncertainty_scan(n, samples, seed, config.base.into())?;
            if config.wants_csv() {
                let mut buf = Vec::new();
                write_scan_csv(&record, &mut buf).map_err(|e| Error::parse(e.to_string()))?;
                return Ok(buf);
            }
            json!({
                "n": n.get(),
                "seed": seed,
                "samples": samples,
                "base": base_name(config.base.into()),
                "min_sum": record.min_sum,
                "argmin_index": record.argmin_index,
                "argmin": AmplitudeFile::from_state(&record.argmin),
                "histogram": {
                    "lo": record.histogram.lo,
                    "hi": record.histogram.hi,
                    "counts": record.histogram.counts,
                },
            })
        }
        Command::Compile => {
            let n = config.qubits()?;
            let expr = config.condition_expr(n)?;
            let ConditionExpr::Leaf(pc) = expr else {
                return Err(Error::parse("compile takes a single parity condition, e.g. q2^q3^q5=0"));
            };
            let compiled = compile_parity(&pc)?;
            serde_json::to_value(CircuitFile::from_parity(&compiled)).expect("serializable")
        }
        Command::Realize => {
            let working = config.state_file()?;
            let (ancilla, label) = match (&config.ancilla, &config.label) {
                (Some(path), None) => (read_json::<AmplitudeFile>(path)?.into_condition()?, None),
                (None, Some(bits)) => {
                    let j = ConditionLabel::parse(working.n(), bits).map_err(Error::parse)?;
                    (QConditionVector::basis(&j), Some(j))
                }
                _ => return Err(Error::parse("realize requires --ancilla or --label")),
            };
            let plan = plan_realization(&ancilla)?;
            let target = config.target == 1;
            let r = simulate_realization(&working, &plan, target)?;
            let mut out = json!({
                "target": config.target,
                "probability": r.probability,
                "joint": AmplitudeFile::from_state(&r.joint),
            });
            if let Some(j) = label {
                let (_, slice) = r.working_slice(&j, target)?;
                out["label"] = json!(j.to_string());
                out["meaning"] = json!(interpret_basis(&j));
                out["working"] = serde_json::to_value(AmplitudeFile::from_state(&slice)).expect("serializable");
            }
            out
        }
        Command::Trace => {
            let circuit = read_circuit(config.require(&config.circuit, "circuit")?)?;
            let entries: Vec<Value> = circuit_condition_trace(&circuit)
                .iter()
                .map(|t| {
                    let support = gate_support(&t.gate, circuit.n()).expect("validated circuit");
                    json!({
                        "gate": GateSpec::from(&t.gate),
                        "condition": t.condition,
                        "support": event_outcomes(&support.support),
                    })
                })
                .collect();
            json!({ "n": circuit.n().get(), "trace": entries })
        }
    };
    to_json_text(&value)
}

/// Runs `config` and writes the output to `--out` or `stdout`.
pub fn execute(config: &RunConfig, stdout: &mut dyn Write) -> Result<()> {
    let bytes = run(config)?;
    match &config.out {
        Some(path) => write_file(path, &bytes),
        None => stdout.write_all(&bytes).map_err(|source| Error::Io { path: "<stdout>".into(), source }),
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).map_err(|source| Error::Io { path: path.into(), source })
}
