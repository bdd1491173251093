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

//! Events as dense outcome bitsets, half-set parity conditions, and the Boolean
//! algebra of condition expressions that specifies arbitrary events.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{BitAnd, BitOr, Not};

use crate::error::Result;
use crate::label::{condition_to_text, ConditionLabel, OutcomeLabel, QubitCount};

/// A set of outcomes, stored as a bitset of length `2^n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Event {
    n: QubitCount,
    words: Vec<u64>,
}

impl Event {
    /// The empty event.
    pub fn empty(n: QubitCount) -> Self {
        Self { n, words: vec![0; n.dim().div_ceil(64)] }
    }

    /// The event containing every outcome.
    pub fn full(n: QubitCount) -> Self {
        let mut e = Self { n, words: vec![u64::MAX; n.dim().div_ceil(64)] };
        e.clear_padding();
        e
    }

    /// Event holding exactly the given outcomes.
    pub fn from_outcomes<'a>(
        n: QubitCount,
        outcomes: impl IntoIterator<Item = &'a OutcomeLabel>,
    ) -> Result<Self> {
        let mut e = Self::empty(n);
        for v in outcomes {
            n.expect(v.n())?;
            e.insert(v.index());
        }
        Ok(e)
    }

    /// Event holding the outcomes whose index satisfies `pred`.
    pub fn from_fn(n: QubitCount, mut pred: impl FnMut(usize) -> bool) -> Self {
        let mut e = Self::empty(n);
        for (w, word) in e.words.iter_mut().enumerate() {
            let base = w * 64;
            let top = (n.dim() - base).min(64);
            let mut acc = 0u64;
            for b in 0..top {
                if pred(base + b) {
                    acc |= 1 << b;
                }
            }
            *word = acc;
        }
        e
    }

    fn clear_padding(&mut self) {
        let dim = self.n.dim();
        if !dim.is_multiple_of(64) {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << (dim % 64)) - 1;
            }
        }
    }

    /// Register size.
    pub fn n(&self) -> QubitCount {
        self.n
    }

    fn insert(&mut self, index: usize) {
        self.words[index / 64] |= 1 << (index % 64);
    }

    /// Whether the outcome with amplitude index `index` is in the event.
    pub fn contains_index(&self, index: usize) -> bool {
        index < self.n.dim() && self.words[index / 64] >> (index % 64) & 1 == 1
    }

    /// Whether `v` is in the event.
    pub fn contains(&self, v: &OutcomeLabel) -> bool {
        v.n() == self.n && self.contains_index(v.index())
    }

    /// Number of outcomes in the event.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Whether the event has no outcomes.
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Member indices in ascending order.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            core::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + b)
            })
        })
    }

    /// Member outcomes in ascending index order.
    pub fn outcomes(&self) -> impl Iterator<Item = OutcomeLabel> + '_ {
        let n = self.n;
        self.indices().map(move |i| OutcomeLabel::new(n, i as u32).expect("index below 2^n"))
    }

    /// Outcomes not in the event.
    pub fn complement(&self) -> Self {
        let mut e = Self { n: self.n, words: self.words.iter().map(|w| !w).collect() };
        e.clear_padding();
        e
    }

    /// Outcomes in both events.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a & b)
    }

    /// Outcomes in either event.
    pub fn union(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a | b)
    }

    fn zip_with(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Result<Self> {
        self.n.expect(other.n)?;
        let words = self.words.iter().zip(&other.words).map(|(&a, &b)| op(a, b)).collect();
        Ok(Self { n: self.n, words })
    }
}

impl fmt::Debug for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.outcomes().map(|v| alloc::format!("{v}"))).finish()
    }
}

impl ConditionLabel {
    /// Outcomes that satisfy this condition (pair to zero with it).
    ///
    /// Holds `2^(n-1)` outcomes for a nonzero label and all of them for zero.
    pub fn satisfying_set(&self) -> Event {
        ParityCondition::new(*self, false).event()
    }
}

/// A half-set condition `mask · q = rhs`.
///
/// With `rhs = false` this is a member of the condition space. `rhs = true`
/// gives its complement, which only appears inside the event algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ParityCondition {
    /// Which qubits enter the parity sum.
    pub mask: ConditionLabel,
    /// Required value of the parity.
    pub rhs: bool,
}

impl ParityCondition {
    /// `mask · q = rhs`.
    pub fn new(mask: ConditionLabel, rhs: bool) -> Self {
        Self { mask, rhs }
    }

    /// `0 = 0`.
    pub fn always_true(n: QubitCount) -> Self {
        Self::new(ConditionLabel::zero(n), false)
    }

    /// `0 = 1`.
    pub fn always_false(n: QubitCount) -> Self {
        Self::new(ConditionLabel::zero(n), true)
    }

    /// `q_qubit = value` for a 1-based qubit index.
    pub fn single(n: QubitCount, qubit: usize, value: bool) -> Result<Self> {
        Ok(Self::new(ConditionLabel::from_qubits(n, &[qubit])?, value))
    }

    /// Register size.
    pub fn n(&self) -> QubitCount {
        self.mask.n()
    }

    /// Whether outcome `v` satisfies the condition.
    pub fn is_satisfied_by(&self, v: &OutcomeLabel) -> Result<bool> {
        Ok(v.pairing(&self.mask)? == self.rhs)
    }

    /// Outcomes whose masked parity equals `rhs`.
    pub fn event(&self) -> Event {
        let mask = self.mask.index();
        let rhs = self.rhs as u32;
        Event::from_fn(self.n(), |i| (i & mask).count_ones() & 1 == rhs)
    }

    /// Text form, e.g. `q1⊕q2=0`.
    pub fn to_text(&self) -> String {
        condition_to_text(&self.mask, self.rhs)
    }
}

impl fmt::Display for ParityCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A Boolean expression over half-set conditions.
///
/// Build trees with `&`, `|` and `!`:
///
/// ```
/// use qcond_core::{ConditionExpr, ParityCondition, QubitCount};
///
/// let n = QubitCount::new(2).unwrap();
/// let q1_zero = ConditionExpr::from(ParityCondition::single(n, 1, false).unwrap());
/// let q2_zero = ConditionExpr::from(ParityCondition::single(n, 2, false).unwrap());
/// let either = q1_zero | q2_zero;
/// assert_eq!(either.eval().unwrap().len(), 3);
/// assert_eq!(either.to_string(), "q1=0 OR q2=0");
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ConditionExpr {
    /// A single half-set condition.
    Leaf(ParityCondition),
    /// Intersection.
    And(Box<ConditionExpr>, Box<ConditionExpr>),
    /// Union.
    Or(Box<ConditionExpr>, Box<ConditionExpr>),
    /// Complement.
    Not(Box<ConditionExpr>),
}

impl From<ParityCondition> for ConditionExpr {
    fn from(pc: ParityCondition) -> Self {
        ConditionExpr::Leaf(pc)
    }
}

impl BitAnd for ConditionExpr {
    type Output = ConditionExpr;

    fn bitand(self, rhs: Self) -> Self {
        ConditionExpr::And(Box::new(self), Box::new(rhs))
    }
}

impl BitOr for ConditionExpr {
    type Output = ConditionExpr;

    fn bitor(self, rhs: Self) -> Self {
        ConditionExpr::Or(Box::new(self), Box::new(rhs))
    }
}

impl Not for ConditionExpr {
    type Output = ConditionExpr;

    fn not(self) -> Self {
        ConditionExpr::Not(Box::new(self))
    }
}

impl ConditionExpr {
    /// The conjunction of single-qubit conditions selecting exactly `{v}`.
    ///
    /// The tree is left-leaning and has `n - 1` `And` nodes.
    pub fn single_outcome(v: &OutcomeLabel) -> Self {
        let n = v.n();
        let mut leaves = (1..=n.get() as usize).map(|q| {
            let bit = v.bit(q).expect("q within 1..=n");
            ConditionExpr::Leaf(ParityCondition::single(n, q, bit).expect("q within 1..=n"))
        });
        let first = leaves.next().expect("n >= 1");
        leaves.fold(first, |acc, leaf| acc & leaf)
    }

    /// Register size shared by every leaf.
    pub fn n(&self) -> Result<QubitCount> {
        match self {
            ConditionExpr::Leaf(pc) => Ok(pc.n()),
            ConditionExpr::And(a, b) | ConditionExpr::Or(a, b) => {
                let n = a.n()?;
                n.expect(b.n()?)?;
                Ok(n)
            }
            ConditionExpr::Not(a) => a.n(),
        }
    }

    /// Evaluates the expression to the event it specifies.
    pub fn eval(&self) -> Result<Event> {
        match self {
            ConditionExpr::Leaf(pc) => Ok(pc.event()),
            ConditionExpr::And(a, b) => a.eval()?.intersection(&b.eval()?),
            ConditionExpr::Or(a, b) => a.eval()?.union(&b.eval()?),
            ConditionExpr::Not(a) => Ok(a.eval()?.complement()),
        }
    }

    /// Number of Boolean operations (`And`, `Or`, `Not` nodes).
    pub fn op_count(&self) -> usize {
        match self {
            ConditionExpr::Leaf(_) => 0,
            ConditionExpr::And(a, b) | ConditionExpr::Or(a, b) => 1 + a.op_count() + b.op_count(),
            ConditionExpr::Not(a) => 1 + a.op_count(),
        }
    }

    /// Number of half-set condition leaves.
    pub fn leaf_count(&self) -> usize {
        match self {
            ConditionExpr::Leaf(_) => 1,
            ConditionExpr::And(a, b) | ConditionExpr::Or(a, b) => a.leaf_count() + b.leaf_count(),
            ConditionExpr::Not(a) => a.leaf_count(),
        }
    }

    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConditionExpr::Leaf(_) | ConditionExpr::Not(_) => write!(f, "{self}"),
            _ => write!(f, "({self})"),
        }
    }
}

/// Prints `AND`/`OR` operands bare when they are leaves or negations and
/// parenthesized otherwise; the operand of `NOT` is always parenthesized.
/// `(q1⊕q2=0) AND NOT (q3=1)` prints as `q1⊕q2=0 AND NOT (q3=1)`.
impl fmt::Display for ConditionExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConditionExpr::Leaf(pc) => write!(f, "{pc}"),
            ConditionExpr::And(a, b) => {
                a.fmt_operand(f)?;
                f.write_str(" AND ")?;
                b.fmt_operand(f)
            }
            ConditionExpr::Or(a, b) => {
                a.fmt_operand(f)?;
                f.write_str(" OR ")?;
                b.fmt_operand(f)
            }
            ConditionExpr::Not(a) => write!(f, "NOT ({a})"),
        }
    }
}
