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

//! Invariants: exhaustive checks over small registers and randomized
//! properties elsewhere.

mod common;

use common::*;
use proptest::prelude::*;
use qcond_core::{
    compile_parity, entropy, gate_support, min_uncertainty_scan, plan_realization,
    simulate_realization, state_to_condition, uncertainty_sum, wht, Complex64, ConditionExpr,
    ConditionLabel, Event, Gate, LogBase, OutcomeLabel, ParityCondition, QConditionVector,
    StateVector, Unitary2,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn pairing_is_bilinear() {
    for k in 1..=6 {
        for v1 in OutcomeLabel::all(n(k)) {
            for v2 in OutcomeLabel::all(n(k)) {
                let sum = v1.add(&v2).unwrap();
                for f in ConditionLabel::all(n(k)) {
                    let lhs = sum.pairing(&f).unwrap();
                    let rhs = v1.pairing(&f).unwrap() ^ v2.pairing(&f).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn annihilator_is_a_subgroup() {
    for k in 1..=6 {
        for v in OutcomeLabel::all(n(k)) {
            let ann = v.annihilator();
            let expected = if v.is_zero() { 1 << k } else { 1 << (k - 1) };
            assert_eq!(ann.len(), expected);
            assert!(ann.contains(&ConditionLabel::zero(n(k))));
            for a in &ann {
                for b in &ann {
                    assert!(ann.contains(&a.add(b).unwrap()));
                }
            }
        }
    }
}

#[test]
fn duality_is_mutual() {
    for k in 1..=6 {
        for v in OutcomeLabel::all(n(k)) {
            let ann = v.annihilator();
            for f in ConditionLabel::all(n(k)) {
                assert_eq!(ann.contains(&f), f.annihilator().contains(&v));
            }
            assert_eq!(v.dual().dual(), v);
        }
    }
}

#[test]
fn satisfying_set_equals_condition_annihilator() {
    for k in 1..=6 {
        for f in ConditionLabel::all(n(k)) {
            let from_set: Vec<_> = f.satisfying_set().outcomes().collect();
            assert_eq!(from_set, f.annihilator());
        }
    }
}

#[test]
fn single_outcome_expressions_select_one_outcome() {
    for k in 1..=8 {
        for v in OutcomeLabel::all(n(k)) {
            let e = ConditionExpr::single_outcome(&v);
            assert_eq!(e.eval().unwrap(), Event::from_outcomes(n(k), [&v]).unwrap());
            assert_eq!(e.op_count(), k as usize - 1);
        }
    }
}

#[test]
fn support_is_tight_for_controlled_gates() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for k in 2..=4u32 {
        for control in 1..=k as usize {
            for target in (1..=k as usize).filter(|&t| t != control) {
                for control_value in [false, true] {
                    let u = Unitary2::from_pair(c(0.6), Complex64::new(0.0, 0.8)).unwrap();
                    let g = Gate::CU { control, control_value, target, u };
                    let support = gate_support(&g, n(k)).unwrap().support;
                    let witness = (0..50).any(|_| {
                        let s = random_state(&mut rng, k);
                        let after = s.apply(&g).unwrap();
                        support.indices().all(|h| s.amplitudes()[h] != after.amplitudes()[h])
                    });
                    assert!(witness, "{g:?} on n={k}");
                    assert_eq!(support.len(), 1 << (k - 1));
                }
            }
        }
    }
}

#[test]
fn gate_count_is_popcount_minus_one() {
    for k in 1..=8 {
        for f in ConditionLabel::all(n(k)).filter(|f| !f.is_zero()) {
            let p = compile_parity(&ParityCondition::new(f, true)).unwrap();
            assert_eq!(p.circuit().len(), f.weight() as usize - 1);
        }
    }
}

#[test]
fn parity_circuit_agrees_with_event_probability() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for k in 1..=5 {
        let s = random_state(&mut rng, k);
        for f in ConditionLabel::all(n(k)).filter(|f| !f.is_zero()) {
            for rhs in [false, true] {
                let pc = ParityCondition::new(f, rhs);
                let via_circuit = compile_parity(&pc).unwrap().acceptance_probability(&s).unwrap();
                let exact = s.event_probability(&pc.event()).unwrap();
                assert!((via_circuit - exact).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn product_realization_matches_superposed_projection() {
    // a superposed ancilla is a mixture of basis conditions; the target-0
    // probability is the weighted sum of their event probabilities
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let w = random_state(&mut rng, 2);
        let phi = QConditionVector::new(n(2), random_amplitudes(&mut rng, 4)).unwrap();
        let r = simulate_realization(&w, &plan_realization(&phi).unwrap(), false).unwrap();
        let expected: f64 = ConditionLabel::all(n(2))
            .map(|j| {
                phi.amplitudes()[j.index()].norm_sqr()
                    * w.event_probability(&j.satisfying_set()).unwrap()
            })
            .sum();
        assert!((r.probability - expected).abs() < 1e-12);
    }
}

#[test]
fn scan_minimum_is_dominated_by_fixtures() {
    let scan = min_uncertainty_scan(n(2), 100_000, 77, LogBase::E).unwrap();
    let fixtures = [
        uncertainty_sum(&StateVector::zero(n(2)), LogBase::E).sum(),
        uncertainty_sum(&StateVector::uniform(n(2)), LogBase::E).sum(),
        uncertainty_sum(&bell(), LogBase::E).sum(),
        uncertainty_sum(
            &StateVector::basis(&OutcomeLabel::parse(n(2), "11").unwrap()),
            LogBase::E,
        )
        .sum(),
    ];
    let floor = fixtures.iter().cloned().fold(f64::INFINITY, f64::min);
    assert!(scan.min_sum >= floor - 1e-12, "{} < {floor}", scan.min_sum);
    assert!((uncertainty_sum(&scan.argmin, LogBase::E).sum() - scan.min_sum).abs() < 1e-12);
    assert_eq!(scan.histogram.counts.iter().sum::<u64>(), 100_000);
}

fn leaf_strategy(k: u32) -> impl Strategy<Value = ConditionExpr> {
    (0..(1u32 << k), any::<bool>()).prop_map(move |(bits, rhs)| {
        ParityCondition::new(ConditionLabel::new(n(k), bits).unwrap(), rhs).into()
    })
}

fn expr_strategy(k: u32) -> impl Strategy<Value = ConditionExpr> {
    leaf_strategy(k).prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a & b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a | b),
            inner.prop_map(|a| !a),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn de_morgan(a in expr_strategy(4), b in expr_strategy(4)) {
        let lhs = (!(a.clone() & b.clone())).eval().unwrap();
        let rhs = ((!a) | (!b)).eval().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn norm_is_preserved_by_random_circuits(k in 1u32..=10, len in 0usize..=100, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut s = random_state(&mut rng, k);
        for _ in 0..len {
            s.apply_mut(&random_gate(&mut rng, k as usize)).unwrap();
        }
        prop_assert!((s.norm_sqr().sqrt() - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn event_and_complement_sum_to_one(k in 1u32..=8, bits: u32, rhs: bool, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_state(&mut rng, k);
        let e = ParityCondition::new(ConditionLabel::new(n(k), bits % (1 << k)).unwrap(), rhs).event();
        let total = s.event_probability(&e).unwrap() + s.event_probability(&e.complement()).unwrap();
        prop_assert!((total - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn projection_is_idempotent(e in expr_strategy(3), seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_state(&mut rng, 3);
        let event = e.eval().unwrap();
        prop_assume!(s.event_probability(&event).unwrap() > 1e-6);
        let (_, once) = s.project(&event).unwrap();
        let (p, twice) = once.project(&event).unwrap();
        prop_assert!((p - 1.0).abs() <= 1e-12);
        prop_assert!(once.approx_eq(&twice, 1e-12));
    }

    #[test]
    fn support_soundness(k in 2u32..=6, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_state(&mut rng, k);
        let g = random_gate(&mut rng, k as usize);
        let support = gate_support(&g, n(k)).unwrap().support;
        let after = s.apply(&g).unwrap();
        for h in support.complement().indices() {
            let (a, b) = (s.amplitudes()[h], after.amplitudes()[h]);
            prop_assert!(a.re.to_bits() == b.re.to_bits() && a.im.to_bits() == b.im.to_bits());
        }
    }

    #[test]
    fn oplus_is_kronecker_and_norm_multiplicative(
        mu in 1u32..=3, mv in 1u32..=3, seed: u64,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = QConditionVector::new(n(mu), random_amplitudes(&mut rng, 1 << mu)).unwrap();
        let v = QConditionVector::new(n(mv), random_amplitudes(&mut rng, 1 << mv)).unwrap();
        let w = u.oplus(&v).unwrap();
        prop_assert!((w.norm_sqr() - 1.0).abs() <= 1e-12);
        for j in 0..(1usize << mu) {
            for k in 0..(1usize << mv) {
                let want = u.amplitudes()[j] * v.amplitudes()[k];
                prop_assert!((w.amplitudes()[(j << mv) | k] - want).norm() <= 1e-15);
            }
        }
    }

    #[test]
    fn oplus_of_basis_concatenates(mu in 1u32..=3, mv in 1u32..=3, a: u32, b: u32) {
        let ja = ConditionLabel::new(n(mu), a % (1 << mu)).unwrap();
        let jb = ConditionLabel::new(n(mv), b % (1 << mv)).unwrap();
        let joined = ConditionLabel::parse(n(mu + mv), &format!("{ja}{jb}")).unwrap();
        let w = QConditionVector::basis(&ja).oplus(&QConditionVector::basis(&jb)).unwrap();
        prop_assert_eq!(w, QConditionVector::basis(&joined));
    }

    #[test]
    fn products_are_not_entangled(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = QConditionVector::new(n(1), random_amplitudes(&mut rng, 2)).unwrap();
        let v = QConditionVector::new(n(1), random_amplitudes(&mut rng, 2)).unwrap();
        prop_assert!(!u.oplus(&v).unwrap().is_entangled_2q().unwrap());
    }

    #[test]
    fn basis_change_preserves_inner_products(m in 1u32..=4, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_unitary(&mut rng);
        let x = QConditionVector::new(n(m), random_amplitudes(&mut rng, 1 << m)).unwrap();
        let y = QConditionVector::new(n(m), random_amplitudes(&mut rng, 1 << m)).unwrap();
        let (bx, by) = (x.change_basis(&b), y.change_basis(&b));
        prop_assert!((bx.norm_sqr() - 1.0).abs() <= 1e-9);
        prop_assert!((bx.inner(&by).unwrap() - x.inner(&y).unwrap()).norm() <= 1e-9);
    }

    #[test]
    fn wht_involution_and_parseval(k in 0u32..=12, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x: Vec<Complex64> = (0..1usize << k)
            .map(|_| Complex64::new(gaussian(&mut rng), gaussian(&mut rng)))
            .collect();
        let y = wht(&x).unwrap();
        let nx: f64 = x.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        let ny: f64 = y.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        prop_assert!((nx - ny).abs() <= 1e-12 * nx.max(1.0));
        for (a, b) in wht(&y).unwrap().iter().zip(&x) {
            prop_assert!((a - b).norm() <= 1e-12);
        }
    }

    #[test]
    fn butterfly_matches_naive(k in 1u32..=8, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_amplitudes(&mut rng, 1 << k);
        for (a, b) in wht(&x).unwrap().iter().zip(naive_transform(&x)) {
            prop_assert!((a - b).norm() <= 1e-12);
        }
    }

    #[test]
    fn entropies_are_bounded_and_sum_positive(k in 1u32..=6, seed: u64, two: bool) {
        let base = if two { LogBase::Two } else { LogBase::E };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_state(&mut rng, k);
        let p = uncertainty_sum(&s, base);
        let max = base.max_entropy(n(k));
        for h in [p.h_s, p.h_c] {
            prop_assert!((0.0..=max + 1e-12).contains(&h));
        }
        prop_assert!(p.sum() > 0.0);
        let phi = state_to_condition(&s);
        prop_assert!((entropy(phi.amplitudes(), base).unwrap() - p.h_c).abs() <= 1e-15);
    }

    #[test]
    fn realization_matches_projection(k in 1u32..=4, bits: u32, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = random_state(&mut rng, k);
        let j = ConditionLabel::new(n(k), bits % (1 << k)).unwrap();
        let r = simulate_realization(&w, &plan_realization(&QConditionVector::basis(&j)).unwrap(), false)
            .unwrap();
        let (p, projected) = w.project(&j.satisfying_set()).unwrap();
        prop_assert!((r.probability - p).abs() <= 1e-9);
        let (_, slice) = r.working_slice(&j, false).unwrap();
        prop_assert!(slice.approx_eq(&projected, 1e-9));
    }
}
