//! Acceptance gate: one test per criterion, each printing a PASS line once
//! its assertions hold (run with `--nocapture` to see them). The final
//! sweep test re-runs every computational criterion under a wall-clock
//! bound.

use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use hodt::domain::{nonempty_subsets, OutcomeValue};
use hodt::order::enumerate_partial_orders;
use hodt::properties::{
    attainment_witness, attains, enumerate_contexts, is_attainable, is_context_independent,
    is_total, reconstruct_choice_function, Witness,
};
use hodt::{
    int, Budget, ChoiceFunction, Error, FiniteDomain, Move, Outcome, PartialOrder, Quantifier,
    SelectionFunction,
};

fn int_domain(values: &[i64]) -> Arc<FiniteDomain<Outcome>> {
    FiniteDomain::outcomes(
        values
            .iter()
            .map(|&v| OutcomeValue::scalar(int(v)))
            .collect(),
    )
    .unwrap()
}

fn move_domain(n: usize) -> Arc<FiniteDomain<Move>> {
    FiniteDomain::moves((1..=n).map(|i| format!("x{i}"))).unwrap()
}

/// Square signature: moves named after integer outcomes 1..n.
fn square_domains(n: usize) -> (Arc<FiniteDomain<Move>>, Arc<FiniteDomain<Outcome>>) {
    let moves = FiniteDomain::moves((1..=n).map(|i| i.to_string())).unwrap();
    (moves, int_domain(&(1..=n as i64).collect::<Vec<_>>()))
}

// --- criterion 1: the attains relations hold exhaustively ----------------

fn run_attains_suite() {
    for x_len in 1..=4usize {
        for r_len in 1..=3usize {
            let x = move_domain(x_len);
            let r = int_domain(&(1..=r_len as i64).collect::<Vec<_>>());
            let report = attains(
                &SelectionFunction::argmax(),
                &Quantifier::max(),
                &x,
                &r,
                Budget::default(),
            )
            .unwrap();
            assert!(
                report.holds(),
                "argmax must attain max on ({x_len},{r_len})"
            );
            assert_eq!(report.contexts_checked, (r_len as u64).pow(x_len as u32));
        }
    }
    for n in 1..=3usize {
        let (x, r) = square_domains(n);
        let report = attains(
            &SelectionFunction::fix(),
            &Quantifier::fix(),
            &x,
            &r,
            Budget::default(),
        )
        .unwrap();
        assert!(report.holds(), "fix must attain itself on square {n}");
        assert_eq!(report.contexts_checked, (n as u64).pow(n as u32));
    }
}

#[test]
fn criterion_1_attains_suite() {
    let start = Instant::now();
    run_attains_suite();
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(1),
        "attains suite took {elapsed:?}, budget is 1 s"
    );
    println!("acceptance criterion 1 (attains suite): PASS");
}

// --- criterion 2: context-independence characterization ------------------

/// Every choice table on the ground set: independently picks, for each
/// nonempty subset, one of its nonempty sub-subsets.
fn all_choice_tables(r: &Arc<FiniteDomain<Outcome>>) -> Vec<ChoiceFunction> {
    let per_subset: Vec<Vec<Vec<usize>>> = nonempty_subsets(r)
        .iter()
        .map(|s| nonempty_subsets_of(s.indices()))
        .collect();
    let mut rows: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for options in &per_subset {
        let mut extended = Vec::with_capacity(rows.len() * options.len());
        for prefix in &rows {
            for option in options {
                let mut row = prefix.clone();
                row.push(option.clone());
                extended.push(row);
            }
        }
        rows = extended;
    }
    rows.into_iter()
        .map(|entries| {
            let mut it = entries.into_iter();
            ChoiceFunction::from_table_fn(r.clone(), |_| Ok(it.next().unwrap())).unwrap()
        })
        .collect()
}

fn nonempty_subsets_of(indices: &[usize]) -> Vec<Vec<usize>> {
    (1u32..(1u32 << indices.len()))
        .map(|mask| {
            indices
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, &i)| i)
                .collect()
        })
        .collect()
}

fn run_choice_round_trip() {
    for r_len in [2usize, 3] {
        let r = int_domain(&(1..=r_len as i64).collect::<Vec<_>>());
        let tables = all_choice_tables(&r);
        let expected_count = if r_len == 2 { 3 } else { 189 };
        assert_eq!(tables.len(), expected_count);
        assert!(tables.len() >= if r_len == 3 { 100 } else { 3 });
        for f in &tables {
            let q = Quantifier::choice(f.clone());
            for x_len in [r_len, r_len + 1] {
                let x = move_domain(x_len);
                assert!(
                    is_context_independent(&q, &x, &r, Budget::default())
                        .unwrap()
                        .holds(),
                    "f ∘ Im must be context-independent"
                );
                let rebuilt = reconstruct_choice_function(&q, &x, &r, Budget::default()).unwrap();
                assert!(
                    rebuilt.extensionally_eq(f).unwrap(),
                    "reconstruction must round-trip exactly"
                );
            }
        }
    }
}

#[test]
fn criterion_2_choice_function_round_trip() {
    run_choice_round_trip();
    println!("acceptance criterion 2 (context-independence characterization): PASS");
}

// --- criterion 3: order-induced quantifiers are attainable ---------------

fn run_order_attainability() {
    let r = int_domain(&[1, 2, 3]);
    let orders = enumerate_partial_orders(&r);
    assert_eq!(orders.len(), 19, "labeled posets on 3 elements");
    for ord in &orders {
        let q = Quantifier::order_max(ord.clone());
        for x_len in [2usize, 3] {
            let x = move_domain(x_len);
            assert!(
                is_attainable(&q, &x, &r, Budget::default())
                    .unwrap()
                    .holds(),
                "maximal-elements quantifier must be attainable"
            );
        }
    }
}

#[test]
fn criterion_3_order_attainability() {
    run_order_attainability();
    println!("acceptance criterion 3 (order attainability over all 19 posets): PASS");
}

// --- criterion 4: context-dependence witnesses ----------------------------

fn run_context_dependence_witnesses() {
    let (fix_x, fix_r) = square_domains(3);
    let cases = vec![
        ("fix", Quantifier::fix(), fix_x, fix_r),
        (
            "weighted-averaging",
            Quantifier::weighted_averaging(),
            move_domain(3),
            int_domain(&[1, 2]),
        ),
        (
            "safe",
            Quantifier::safe(),
            move_domain(3),
            int_domain(&[1, 2]),
        ),
    ];
    for (name, q, x, r) in cases {
        let report = is_context_independent(&q, &x, &r, Budget::default()).unwrap();
        assert!(!report.holds(), "{name} must be context-dependent");
        match report
            .witness
            .as_ref()
            .expect("failed checks carry witnesses")
        {
            Witness::ContextPair(p1, p2) => {
                assert_eq!(p1.image(), p2.image(), "{name}: witness images must agree");
                let out1 = q.eval(p1).unwrap();
                let out2 = q.eval(p2).unwrap();
                assert_ne!(
                    out1, out2,
                    "{name}: witness must reproduce the disagreement"
                );
            }
            w => panic!("{name}: unexpected witness shape {w:?}"),
        }
    }
}

#[test]
fn criterion_4_context_dependence_witnesses() {
    run_context_dependence_witnesses();
    println!("acceptance criterion 4 (context-dependence witnesses): PASS");
}

// --- criterion 5: demo goldens --------------------------------------------

fn demo_stdout(name: &str) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_hodt"))
        .args(["demo", name])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0), "demo `{name}` must exit 0");
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn criterion_5_demo_goldens() {
    let expectations: &[(&str, &str, &[&str])] = &[
        (
            "beaches",
            include_str!("golden/demo_beaches.txt"),
            &["outcomes: [b3]"],
        ),
        (
            "wines",
            include_str!("golden/demo_wines.txt"),
            &["outcomes: [20]"],
        ),
        (
            "honest",
            include_str!("golden/demo_honest.txt"),
            &["outcomes: [7]", "outcomes: [9]"],
        ),
        (
            "judges",
            include_str!("golden/demo_judges.txt"),
            &["outcomes: [A]", "moves: [A, B]", "moves: [A]"],
        ),
        (
            "coordination",
            include_str!("golden/demo_coordination.txt"),
            &["moves: [B]"],
        ),
        (
            "fixpoint",
            include_str!("golden/demo_fixpoint.txt"),
            &["moves: [-1, 0, 1]", "moves: [0]"],
        ),
    ];
    for (name, golden, required_lines) in expectations {
        let text = demo_stdout(name);
        assert_eq!(
            &text, golden,
            "demo `{name}` output drifted from its golden"
        );
        for line in *required_lines {
            assert!(
                text.lines().any(|l| l == *line),
                "demo `{name}` must print `{line}`"
            );
        }
        // Byte stability.
        assert_eq!(text, demo_stdout(name));
    }
    // The honest demo distinguishes the two thresholds in order.
    let honest = demo_stdout("honest");
    let results: Vec<&str> = honest
        .lines()
        .filter(|l| l.starts_with("outcomes: "))
        .collect();
    assert_eq!(
        results,
        vec!["outcomes: [7]", "outcomes: [9]", "outcomes: [7]"]
    );
    println!("acceptance criterion 5 (demo goldens): PASS");
}

// --- criterion 6: attainment witnesses across the zoo ---------------------

fn zoo(
    x: &Arc<FiniteDomain<Move>>,
    r: &Arc<FiniteDomain<Outcome>>,
    square: bool,
) -> Vec<(String, Quantifier)> {
    let first = x.get(0).clone();
    let last = x.get(x.len() - 1).clone();
    let all: Vec<Move> = x.iter().cloned().collect();
    let mut zoo = vec![
        ("max".to_string(), Quantifier::max()),
        ("averaging".to_string(), Quantifier::averaging()),
        (
            "weighted-averaging".to_string(),
            Quantifier::weighted_averaging(),
        ),
        ("safe".to_string(), Quantifier::safe()),
        (
            "honest(first)".to_string(),
            Quantifier::honest(vec![first.clone()]).unwrap(),
        ),
        ("honest(all)".to_string(), Quantifier::honest(all).unwrap()),
        (
            "dishonest(∅, 0)".to_string(),
            Quantifier::dishonest(vec![], int(0)),
        ),
        (
            "ideal-move(ρ=0)".to_string(),
            Quantifier::ideal_move(first.clone(), int(0)).unwrap(),
        ),
        (
            "ideal-move(ρ=2)".to_string(),
            Quantifier::ideal_move(first, int(2)).unwrap(),
        ),
        (
            "order-max(numeric)".to_string(),
            Quantifier::order_max(PartialOrder::numeric(r.clone()).unwrap()),
        ),
    ];
    if x.len() >= 2 {
        // With every move illicit the honest fallback has nothing left, so
        // keep the illicit set a proper subset.
        zoo.push((
            "dishonest({last}, 1)".to_string(),
            Quantifier::dishonest(vec![last], int(1)),
        ));
    }
    if square {
        zoo.push(("fix".to_string(), Quantifier::fix()));
        zoo.push(("keynesian".to_string(), Quantifier::keynesian()));
        zoo.push((
            "voting-judge(numeric)".to_string(),
            Quantifier::voting_judge(PartialOrder::numeric(r.clone()).unwrap()),
        ));
    }
    zoo
}

fn run_attainment_witnesses() {
    for x_len in 1..=3usize {
        for r_len in 1..=3usize {
            let square = x_len == r_len;
            let (x, r) = if square {
                square_domains(x_len)
            } else {
                (
                    move_domain(x_len),
                    int_domain(&(1..=r_len as i64).collect::<Vec<_>>()),
                )
            };
            for (name, q) in zoo(&x, &r, square) {
                let total = is_total(&q, &x, &r, Budget::default()).unwrap();
                if !total.holds() {
                    continue;
                }
                let attainable = is_attainable(&q, &x, &r, Budget::default()).unwrap();
                if !attainable.holds() {
                    continue;
                }
                let witness =
                    attainment_witness(&q, &x, &r, Budget::default()).unwrap_or_else(|e| {
                        panic!("{name} on ({x_len},{r_len}): witness construction failed: {e}")
                    });
                let report = attains(&witness, &q, &x, &r, Budget::default()).unwrap();
                assert!(
                    report.holds(),
                    "{name} on ({x_len},{r_len}): constructed selection must attain"
                );
            }
        }
    }

    // Second-best is knowingly non-total: constant contexts defeat it.
    let x = move_domain(2);
    let r = int_domain(&[1, 2]);
    let report = is_total(&Quantifier::second_best(), &x, &r, Budget::default()).unwrap();
    assert!(!report.holds());
    match report.witness.as_ref().unwrap() {
        Witness::Context(p) => {
            assert_eq!(p.image().len(), 1, "witness must be a constant context");
        }
        w => panic!("unexpected witness shape {w:?}"),
    }
    let err =
        attainment_witness(&Quantifier::second_best(), &x, &r, Budget::default()).unwrap_err();
    assert!(matches!(err, Error::NotAttainable(_)));
}

#[test]
fn criterion_6_attainment_witnesses() {
    run_attainment_witnesses();
    println!("acceptance criterion 6 (attainment-witness construction): PASS");
}

// --- criterion 7: enumeration integrity and the timed sweep ---------------

fn run_enumeration_integrity() {
    let x = move_domain(4);
    let r = int_domain(&[1, 2, 3]);
    let all: Vec<_> = enumerate_contexts(&x, &r, Budget::default())
        .unwrap()
        .collect();
    assert_eq!(all.len(), 81);
    for (i, p) in all.iter().enumerate() {
        for q in &all[i + 1..] {
            assert_ne!(p, q, "enumerated contexts must be pairwise distinct");
        }
    }
    let err = enumerate_contexts(&x, &r, Budget::new(80)).unwrap_err();
    assert_eq!(
        err,
        Error::BudgetExceeded {
            required: "81".into(),
            budget: 80,
        }
    );
}

#[test]
fn criterion_7_enumeration_integrity_and_sweep_time() {
    let start = Instant::now();
    run_enumeration_integrity();
    run_attains_suite();
    run_choice_round_trip();
    run_order_attainability();
    run_context_dependence_witnesses();
    run_attainment_witnesses();
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(10),
        "full property sweep took {elapsed:?}, budget is 10 s"
    );
    println!(
        "acceptance criterion 7 (enumeration integrity, sweep in {:.2?}): PASS",
        elapsed
    );
}
