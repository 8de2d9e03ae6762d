//! Built-in worked examples, reproducible byte for byte.

use anyhow::{bail, Result};

use hodt::domain::OutcomeValue;
use hodt::reflexive::majority;
use hodt::{
    int, Context, FiniteDomain, Move, Outcome, PartialOrder, ProfileRule, Quantifier,
    SelectionFunction,
};

pub const DEMO_NAMES: &[&str] = &[
    "beaches",
    "wines",
    "honest",
    "judges",
    "coordination",
    "fixpoint",
];

pub fn run(name: &str) -> Result<String> {
    match name {
        "beaches" => beaches(),
        "wines" => wines(),
        "honest" => honest(),
        "judges" => judges(),
        "coordination" => coordination(),
        "fixpoint" => fixpoint(),
        other => bail!(
            "unknown demo `{other}` (available: {})",
            DEMO_NAMES.join(", ")
        ),
    }
}

fn sym(name: &str) -> Outcome {
    OutcomeValue::symbol(name)
}

fn beaches() -> Result<String> {
    let moves = FiniteDomain::moves(["h1", "h2", "h3", "h4", "h5", "h6"])?;
    let outcomes = FiniteDomain::outcomes(vec![sym("b1"), sym("b2"), sym("b3")])?;
    let context =
        Context::from_index_assignment(moves.clone(), outcomes.clone(), vec![0, 1, 1, 2, 2, 2]);
    let preferred = Quantifier::safe().eval(&context)?;

    let mut out = String::new();
    out.push_str("demo: beaches\n");
    out.push_str(
        "six highways lead to three beaches: one road reaches b1, two reach b2, three reach b3\n",
    );
    out.push_str("move set: [h1, h2, h3, h4, h5, h6]\n");
    out.push_str("outcome set: [b1, b2, b3]\n");
    out.push_str(&format!("context: {context}\n"));
    out.push_str("agent: safe\n");
    out.push_str(&format!("outcomes: {preferred}\n"));
    Ok(out)
}

fn wines() -> Result<String> {
    let moves = FiniteDomain::moves(["w1", "w2", "w3"])?;
    let outcomes = FiniteDomain::outcomes(vec![
        OutcomeValue::scalar(int(10)),
        OutcomeValue::scalar(int(20)),
        OutcomeValue::scalar(int(30)),
    ])?;
    let context = Context::from_index_assignment(moves, outcomes, vec![0, 1, 2]);
    let preferred = Quantifier::second_best().eval(&context)?;

    let mut out = String::new();
    out.push_str("demo: wines\n");
    out.push_str("three wines priced 10, 20, 30: the heuristic orders the second most expensive\n");
    out.push_str("move set: [w1, w2, w3]\n");
    out.push_str("outcome set: [10, 20, 30]\n");
    out.push_str(&format!("context: {context}\n"));
    out.push_str("agent: second-best\n");
    out.push_str(&format!("outcomes: {preferred}\n"));
    Ok(out)
}

fn honest() -> Result<String> {
    let moves = FiniteDomain::moves(["a", "b", "c"])?;
    let outcomes = FiniteDomain::outcomes(vec![
        OutcomeValue::scalar(int(5)),
        OutcomeValue::scalar(int(7)),
        OutcomeValue::scalar(int(9)),
    ])?;
    let context = Context::from_index_assignment(moves, outcomes, vec![0, 1, 2]);

    let honest = Quantifier::honest(vec![Move::from("a"), Move::from("b")])?;
    let tempted = Quantifier::dishonest(vec![Move::from("c")], int(8));
    let restrained = Quantifier::dishonest(vec![Move::from("c")], int(10));

    let mut out = String::new();
    out.push_str("demo: honest\n");
    out.push_str("moves a and b pay 5 and 7; the illicit move c pays 9\n");
    out.push_str("move set: [a, b, c]\n");
    out.push_str("outcome set: [5, 7, 9]\n");
    out.push_str(&format!("context: {context}\n"));
    out.push_str("agent: honest (permitted [a, b])\n");
    out.push_str(&format!("outcomes: {}\n", honest.eval(&context)?));
    out.push_str("agent: dishonest (illicit [c], threshold 8)\n");
    out.push_str(&format!("outcomes: {}\n", tempted.eval(&context)?));
    out.push_str("agent: dishonest (illicit [c], threshold 10)\n");
    out.push_str(&format!("outcomes: {}\n", restrained.eval(&context)?));
    Ok(out)
}

fn judges_rule() -> Result<ProfileRule> {
    let ballots = FiniteDomain::moves(["A", "B"])?;
    let outcomes = FiniteDomain::outcomes(vec![sym("A"), sym("B")])?;
    let mut entries = Vec::new();
    for v0 in ["A", "B"] {
        for v1 in ["A", "B"] {
            for v2 in ["A", "B"] {
                let winner = majority(&sym(v0), &sym(v1), &sym(v2))?;
                entries.push((vec![Move::from(v0), Move::from(v1), Move::from(v2)], winner));
            }
        }
    }
    Ok(ProfileRule::new(
        vec![ballots.clone(), ballots.clone(), ballots],
        outcomes,
        &entries,
    )?)
}

fn judges() -> Result<String> {
    let rule = judges_rule()?;
    let split = rule.induce(0, &[Move::from("A"), Move::from("B")])?;
    let decided = rule.induce(0, &[Move::from("A"), Move::from("A")])?;

    let prefers_a = PartialOrder::from_pairs(rule.outcomes().clone(), &[(sym("A"), sym("B"))])?;
    let utility_judge = Quantifier::voting_judge(prefers_a);
    let keynesian = SelectionFunction::fix();

    let mut out = String::new();
    out.push_str("demo: judges\n");
    out.push_str("three judges vote A or B and simple majority decides; the focal judge sees the winner as a function of his own vote\n");
    out.push_str("others vote (A, B)\n");
    out.push_str(&format!("context: {split}\n"));
    out.push_str("agent: voting-judge (A over B)\n");
    out.push_str(&format!("outcomes: {}\n", utility_judge.eval(&split)?));
    out.push_str("agent: keynesian\n");
    out.push_str(&format!("moves: {}\n", keynesian.eval(&split)?));
    out.push_str("others vote (A, A)\n");
    out.push_str(&format!("context: {decided}\n"));
    out.push_str("agent: keynesian\n");
    out.push_str(&format!("moves: {}\n", keynesian.eval(&decided)?));
    Ok(out)
}

fn coordination() -> Result<String> {
    let places = FiniteDomain::moves(["A", "B"])?;
    let outcomes =
        FiniteDomain::outcomes(vec![sym("(A,A)"), sym("(A,B)"), sym("(B,A)"), sym("(B,B)")])?;
    let mut entries = Vec::new();
    for m0 in ["A", "B"] {
        for m1 in ["A", "B"] {
            entries.push((
                vec![Move::from(m0), Move::from(m1)],
                sym(&format!("({m0},{m1})")),
            ));
        }
    }
    let rule = ProfileRule::new(vec![places.clone(), places], outcomes, &entries)?;
    let context = rule.induce(0, &[Move::from("B")])?;
    let agent = SelectionFunction::coordinating(&rule, 0)?;
    let chosen = agent.eval(&context)?;

    let mut out = String::new();
    out.push_str("demo: coordination\n");
    out.push_str("two diners pick restaurant A or B and want to end up together; the other diner goes to B\n");
    out.push_str("move set: [A, B]\n");
    out.push_str("outcome set: [(A,A), (A,B), (B,A), (B,B)]\n");
    out.push_str(&format!("context: {context}\n"));
    out.push_str("agent: coordinating (player 0)\n");
    out.push_str(&format!("moves: {chosen}\n"));
    Ok(out)
}

fn fixpoint() -> Result<String> {
    let moves = FiniteDomain::moves(["-1", "0", "1"])?;
    let outcomes = FiniteDomain::outcomes(vec![
        OutcomeValue::scalar(int(-1)),
        OutcomeValue::scalar(int(0)),
        OutcomeValue::scalar(int(1)),
    ])?;
    let identity = Context::from_index_assignment(moves.clone(), outcomes.clone(), vec![0, 1, 2]);
    let negation = Context::from_index_assignment(moves, outcomes, vec![2, 1, 0]);
    let agent = SelectionFunction::fix();

    let mut out = String::new();
    out.push_str("demo: fixpoint\n");
    out.push_str(
        "moves and outcomes share the ground set {-1, 0, 1}: the agent prefers moves the context leaves fixed\n",
    );
    out.push_str(&format!("context: {identity}\n"));
    out.push_str("agent: fix\n");
    out.push_str(&format!("moves: {}\n", agent.eval(&identity)?));
    out.push_str(&format!("context: {negation}\n"));
    out.push_str("agent: fix\n");
    out.push_str(&format!("moves: {}\n", agent.eval(&negation)?));
    Ok(out)
}
