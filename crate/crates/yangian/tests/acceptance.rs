//! Acceptance suite: every criterion is an exact (zero-tolerance) property
//! of the engine. Each test prints one pass/fail line; inconclusive entries
//! are allowed only where a required operator genuinely does not exist (the
//! level-one tower on affine modules) and are asserted to be exactly those.

use std::collections::HashMap;

use yangian::coprod::{omega_plus, Bipartition, DeltaMutation};
use yangian::exact::{Param, Scalar};
use yangian::liemod::algebra::LieAlgebra;
use yangian::liemod::{Op, Space, Verdict, Verma};
use yangian::rootdata::{AlgebraId, Weight};
use yangian::verify::{
    negative_control_delta, negative_control_hx2, run_suite, Backend, Config, Status, Suite,
    SuiteReport,
};
use yangian::yangops::LieOps;

fn line(criterion: &str, ok: bool) -> bool {
    println!("criterion {criterion}: {}", if ok { "PASS" } else { "FAIL" });
    ok
}

fn clean(report: &SuiteReport) -> bool {
    report.summary.fail == 0 && report.summary.inconclusive == 0 && report.summary.pass > 0
}

fn first_failures(report: &SuiteReport) -> Vec<String> {
    report
        .cases
        .iter()
        .filter(|c| c.status != Status::Pass)
        .map(|c| format!("{} {} {:?}", c.relation, c.status_str(), c.params))
        .take(5)
        .collect()
}

trait StatusStr {
    fn status_str(&self) -> &'static str;
}

impl StatusStr for yangian::verify::CaseReport {
    fn status_str(&self) -> &'static str {
        match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }
}

#[test]
fn criterion_1_defining_relation_oracle() {
    let mut ok = true;
    for algebra in [AlgebraId::FiniteA(2), AlgebraId::FiniteA(3)] {
        for seed in [0u64, 1] {
            let mut cfg = Config::new(algebra, Suite::Defining);
            cfg.rmax = 4;
            cfg.seed = seed;
            let report = run_suite(&cfg);
            if !clean(&report) {
                eprintln!("{algebra:?} seed {seed}: {:?}", first_failures(&report));
                ok = false;
            }
        }
        let mut cfg = Config::new(algebra, Suite::Defining);
        cfg.rmax = 4;
        cfg.backend = Backend::Poly;
        let report = run_suite(&cfg);
        if !clean(&report) {
            eprintln!("{algebra:?} symbolic: {:?}", first_failures(&report));
            ok = false;
        }
    }
    assert!(line("1 (defining relations on evaluation towers, sl3 and sl4, r,s <= 4)", ok));
}

#[test]
fn criterion_2_minimalistic_presentation_derivation() {
    let mut ok = true;
    for backend in [Backend::Rational, Backend::Poly] {
        let mut cfg = Config::new(AlgebraId::FiniteA(2), Suite::Derived);
        cfg.rmax = 3;
        cfg.backend = backend;
        let report = run_suite(&cfg);
        if !clean(&report) {
            eprintln!("derived {:?}: {:?}", backend, first_failures(&report));
            ok = false;
        }
    }
    // mutation detection: flipping the degree-three tail of the level-two
    // h-x identity must fail with a concrete witness
    if !matches!(negative_control_hx2(&Scalar::from_frac(1, 2)), Verdict::Fail { .. }) {
        eprintln!("flipped-tail mutation did not fail");
        ok = false;
    }
    assert!(line("2 (derived chain from the minimal generators alone, r,s <= 3)", ok));
}

#[test]
fn criterion_3_coproduct_theorem_finite_type() {
    let mut ok = true;
    for backend in [Backend::Rational, Backend::Poly] {
        let mut cfg = Config::new(AlgebraId::FiniteA(2), Suite::Coproduct);
        cfg.rmax = 3;
        cfg.backend = backend;
        let report = run_suite(&cfg);
        if !clean(&report) {
            eprintln!("coproduct {:?}: {:?}", backend, first_failures(&report));
            ok = false;
        }
    }
    // negative controls: each mutation must produce a failure with a witness
    let a = Scalar::from_frac(1, 2);
    let b = Scalar::from_frac(-2, 3);
    for m in [DeltaMutation::DropCartanTerm, DeltaMutation::FlipOmegaSign] {
        match negative_control_delta(m, &a, &b) {
            Verdict::Fail { value, .. } => {
                if value.is_empty() {
                    ok = false;
                }
            }
            other => {
                eprintln!("mutation {m:?} did not fail: {other:?}");
                ok = false;
            }
        }
    }
    if !matches!(negative_control_delta(DeltaMutation::None, &a, &b), Verdict::Pass { .. }) {
        ok = false;
    }
    assert!(line("3 (coproduct images satisfy the relations; mutations fail with witness)", ok));
}

#[test]
fn criterion_4_coassociativity() {
    let mut ok = true;
    for backend in [Backend::Rational, Backend::Poly] {
        let mut cfg = Config::new(AlgebraId::FiniteA(2), Suite::Coassoc);
        cfg.backend = backend;
        let report = run_suite(&cfg);
        if !clean(&report) {
            eprintln!("coassoc {:?}: {:?}", backend, first_failures(&report));
            ok = false;
        }
    }
    assert!(line("4 (coassociativity on triple evaluation tensors, all nodes)", ok));
}

#[test]
fn criterion_5_affine_pure_lie_suite() {
    let mut cfg = Config::new(AlgebraId::AffineA(2), Suite::Lie);
    cfg.depth = 4;
    let report = run_suite(&cfg);
    let mut ok = report.summary.fail == 0;
    // the only inconclusive entries are the three J-operator identities,
    // which need a level-one tower that no affine module provides
    let inconclusive: Vec<&str> = report
        .cases
        .iter()
        .filter(|c| c.status == Status::Inconclusive)
        .map(|c| c.relation.as_str())
        .collect();
    if inconclusive != vec!["JROOT", "JHV", "CORJJ"] {
        eprintln!("unexpected inconclusive set: {inconclusive:?}");
        ok = false;
    }
    // every asserted family is present and passing on a nonempty window
    for family in ["VW1", "VW2", "VW3", "VW4", "SQ1", "SQ2", "SQ3", "PART2CANCEL", "IMDROP", "OMBASIS", "CASCOMM"] {
        let passed = report
            .cases
            .iter()
            .filter(|c| c.relation == family)
            .all(|c| c.status == Status::Pass);
        let present = report.cases.iter().any(|c| c.relation == family);
        if !(present && passed) {
            eprintln!("family {family} present={present} all-pass={passed}");
            ok = false;
        }
    }
    if !ok {
        eprintln!("{:?}", first_failures(&report));
    }
    assert!(line("5 (affine pure-Lie suite on depth-4 truncated Vermas, symbolic derivation values)", ok));
}

#[test]
fn criterion_6_killing_dual_coxeter_identity() {
    let mut ok = true;
    for (algebra, hv) in [(AlgebraId::FiniteA(2), 3), (AlgebraId::FiniteA(3), 4)] {
        let datum = algebra.datum();
        ok &= datum.dual_coxeter().unwrap() == hv;
        ok &= datum.killing_check().unwrap();
    }
    assert!(line("6 (Killing contraction equals the dual Coxeter pairing, sl3 and sl4)", ok));
}

#[test]
fn criterion_7_j_operators_on_real_roots() {
    let mut cfg = Config::new(AlgebraId::FiniteA(2), Suite::Lie);
    cfg.rmax = 3;
    let report = run_suite(&cfg);
    let jroot: Vec<_> = report.cases.iter().filter(|c| c.relation == "JROOT").collect();
    let mut ok = !jroot.is_empty() && jroot.iter().all(|c| c.status == Status::Pass);
    // all three positive roots of sl3, both signs, all nodes
    if jroot.len() != 3 * 2 * 2 {
        eprintln!("expected 12 JROOT cases, got {}", jroot.len());
        ok = false;
    }
    if report.summary.fail != 0 {
        eprintln!("{:?}", first_failures(&report));
        ok = false;
    }
    assert!(line("7 (J-operators along reduced words satisfy the root commutation law, sl3)", ok));
}

#[test]
fn criterion_8_two_parameter_suite() {
    let mut ok = true;
    for backend in [Backend::Rational, Backend::Poly] {
        let mut cfg = Config::new(AlgebraId::AffineA(2), Suite::TwoParam);
        cfg.depth = 3;
        cfg.backend = backend;
        let report = run_suite(&cfg);
        if !clean(&report) {
            eprintln!("twoparam {:?}: {:?}", backend, first_failures(&report));
            ok = false;
        }
        // base case and braid-class agreement are asserted inside CALPHA
        // cases; the node-sum measurement is recorded on every case
        for c in report.cases.iter().filter(|c| c.relation == "CALPHA") {
            if c.params.get("node_sum_zero").map(String::as_str) != Some("true") {
                ok = false;
            }
        }
    }
    assert!(line("8 (two-parameter constants and deformed templates, A2 affine)", ok));
}

// ---- criterion 9: truncation soundness --------------------------------------

fn affine_weight(seedling: i64, d: Param) -> Weight {
    let mut vals: Vec<Scalar> = (0..3).map(|i| Scalar::from_frac(2 * i + seedling, 3)).collect();
    vals.push(Scalar::param(d));
    Weight::new(vals)
}

/// Compares two operators built over the same algebra at different depth
/// caps: on every certified column of the shallower operator, the entries
/// (keyed by basis label) must agree exactly with the deeper one.
fn agree_on_certified_window(small: &Op, big: &Op) -> bool {
    let big_index: HashMap<String, usize> =
        (0..big.space().dim()).map(|c| (big.space().label(c), c)).collect();
    let mut compared = 0usize;
    for col in 0..small.space().dim() {
        if !small.valid().contains(small.space().depth_tuple(col)) {
            continue;
        }
        compared += 1;
        let Some(&bcol) = big_index.get(&small.space().label(col)) else {
            return false;
        };
        let bentries: HashMap<String, String> = big
            .col(bcol)
            .iter()
            .map(|(r, v)| (big.space().label(*r), v.to_string()))
            .collect();
        let sentries: HashMap<String, String> = small
            .col(col)
            .iter()
            .map(|(r, v)| (small.space().label(*r), v.to_string()))
            .collect();
        if bentries != sentries {
            return false;
        }
    }
    compared > 0
}

#[test]
fn criterion_9_truncation_soundness() {
    let alg = LieAlgebra::new(AlgebraId::AffineA(2)).unwrap();
    let mut ok = true;
    let mut pairs = 0usize;

    // single-module identities at depth 4 versus depth 6
    let spaces: Vec<_> = [4u32, 6]
        .iter()
        .map(|&d| Space::single(Verma::new(alg.clone(), affine_weight(5, Param::D1), d)))
        .collect();
    let lies: Vec<_> = spaces.iter().map(|s| LieOps::new(s.clone(), 8)).collect();
    for i in 0..3 {
        for j in 0..3 {
            // residual of the v-tilde commutation law on both truncations
            let residuals: Vec<Op> = (0..2)
                .map(|k| {
                    let x = spaces[k].factor_op(0, &alg.chevalley_plus(j));
                    let (wp, _) = lies[k].w_ops(j, 0);
                    let d = alg.datum().bilin(i, j);
                    lies[k]
                        .vtilde(i, 0)
                        .commutator(&x)
                        .sub(&wp.scale(&Scalar::from_int(d)))
                })
                .collect();
            let v4 = residuals[0].zero_verdict();
            let v6 = residuals[1].zero_verdict();
            pairs += 1;
            if !(v4.passed() && v6.passed()) {
                eprintln!("VW2 i={i} j={j}: {v4:?} vs {v6:?}");
                ok = false;
            }
        }
        // operator-level stability: v_i at the two depths agrees entry-wise
        // on the shallow certified window
        let small = lies[0].v_op(i, 0);
        let big = lies[1].v_op(i, 0);
        pairs += 1;
        if !agree_on_certified_window(&small, &big) {
            eprintln!("v_{i} disagrees across depths");
            ok = false;
        }
    }

    // tensor identities at depth 3 versus depth 5
    let tensors: Vec<_> = [3u32, 5]
        .iter()
        .map(|&d| {
            Space::new(vec![
                Verma::new(alg.clone(), affine_weight(5, Param::D1), d),
                Verma::new(alg.clone(), affine_weight(7, Param::D2), d),
            ])
        })
        .collect();
    let tlies: Vec<_> = tensors.iter().map(|s| LieOps::new(s.clone(), 7)).collect();
    let part = Bipartition::of_pair();
    for i in 0..3 {
        let verdicts: Vec<Verdict> = (0..2)
            .map(|k| {
                let om = omega_plus(&tlies[k], &part);
                let lhs = tensors[k].boxed(&alg.chevalley_plus(i)).commutator(&om);
                let rhs = tensors[k]
                    .factor_op(1, &alg.cartan(i))
                    .mul(&tensors[k].factor_op(0, &alg.chevalley_plus(i)))
                    .scale(&Scalar::from_int(-1));
                lhs.sub(&rhs).zero_verdict()
            })
            .collect();
        pairs += 1;
        if !(verdicts[0].passed() && verdicts[1].passed()) {
            eprintln!("SQ2 i={i}: {verdicts:?}");
            ok = false;
        }
        // the half Casimir itself agrees across depths on the shallow window
        let small = omega_plus(&tlies[0], &part);
        let big = omega_plus(&tlies[1], &part);
        pairs += 1;
        if !agree_on_certified_window(&small, &big) {
            eprintln!("omega_plus disagrees across depths (i={i})");
            ok = false;
        }
    }
    ok &= pairs >= 10;
    println!("criterion 9: sampled {pairs} window/identity pairs");
    assert!(line("9 (truncation soundness: verdicts and operators stable from depth D to D+2)", ok));
}

#[test]
fn affine_gaps_are_inconclusive_never_silent_passes() {
    // the symbolic completion and a full affine coproduct are not
    // reproducible at module level; the suites must say so explicitly
    let cfg = Config::new(AlgebraId::AffineA(2), Suite::Defining);
    let report = run_suite(&cfg);
    let ok = report.summary.pass == 0
        && report.summary.fail == 0
        && report.summary.inconclusive > 0
        && report.cases.iter().all(|c| c.reason.is_some());
    let mut cfg = Config::new(AlgebraId::AffineA(2), Suite::Coproduct);
    cfg.depth = 2;
    let report = run_suite(&cfg);
    let ok = ok
        && report.summary.fail == 0
        && report
            .cases
            .iter()
            .any(|c| c.status == Status::Inconclusive && c.reason.as_deref().is_some_and(|r| r.contains("level-one")));
    assert!(line("gap accounting (affine tower relations are inconclusive, never silent passes)", ok));
}
