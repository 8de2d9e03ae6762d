//! Deterministic text and JSON rendering of evaluation results and property
//! reports. Witness contexts are emitted in problem-file syntax so they can
//! be fed straight back to `eval`.

use serde_json::{json, Value};

use hodt::domain::OutcomeValue;
use hodt::properties::Witness as GenericWitness;
use hodt::{Context, MoveSubset, Outcome, OutcomeSubset, PropertyReport, Quantifier, Witness};

pub fn value_json(v: &Outcome) -> Value {
    match v {
        OutcomeValue::Symbol(name) => Value::String(name.clone()),
        OutcomeValue::Scalar(s) => Value::String(s.to_string()),
        OutcomeValue::Vector(cs) => {
            Value::Array(cs.iter().map(|c| Value::String(c.to_string())).collect())
        }
    }
}

pub fn outcome_set_json(s: &OutcomeSubset) -> Value {
    Value::Array(s.iter().map(value_json).collect())
}

pub fn move_set_json(s: &MoveSubset) -> Value {
    Value::Array(
        s.iter()
            .map(|m| Value::String(m.name().to_string()))
            .collect(),
    )
}

/// A context in problem-file syntax: `{"moves": [...], "outcomes": [...],
/// "context": {...}}`.
pub fn context_json(p: &Context) -> Value {
    let moves: Vec<Value> = p
        .moves()
        .iter()
        .map(|m| Value::String(m.name().to_string()))
        .collect();
    let outcomes: Vec<Value> = p.outcomes().iter().map(value_json).collect();
    let mut map = serde_json::Map::new();
    for (i, m) in p.moves().iter().enumerate() {
        map.insert(m.name().to_string(), value_json(p.value_at(i)));
    }
    json!({ "moves": moves, "outcomes": outcomes, "context": map })
}

/// What `eval` computed: a preferred-outcome set, a preferred-move set, or
/// both, depending on the agent kind.
pub struct EvalOutput {
    pub outcomes: Option<OutcomeSubset>,
    pub moves: Option<MoveSubset>,
}

pub fn eval_text(out: &EvalOutput) -> String {
    let mut lines = String::new();
    if let Some(s) = &out.outcomes {
        lines.push_str(&format!("outcomes: {s}\n"));
    }
    if let Some(s) = &out.moves {
        lines.push_str(&format!("moves: {s}\n"));
    }
    lines
}

pub fn eval_json(out: &EvalOutput) -> Value {
    let mut map = serde_json::Map::new();
    if let Some(s) = &out.outcomes {
        map.insert("outcomes".into(), outcome_set_json(s));
    }
    if let Some(s) = &out.moves {
        map.insert("moves".into(), move_set_json(s));
    }
    Value::Object(map)
}

/// Everything a check report needs for rendering; `quantifier` is the
/// checked one (for `attains`, the quantifier being attained) and is used to
/// re-evaluate outputs on witness contexts.
pub struct CheckView<'a> {
    pub agent: &'a str,
    pub moves_len: usize,
    pub outcomes_len: usize,
    pub report: &'a PropertyReport,
    pub quantifier: Option<&'a Quantifier>,
}

pub fn check_text(view: &CheckView) -> String {
    let mut out = String::new();
    out.push_str(&format!("property: {}\n", view.report.property));
    out.push_str(&format!("agent: {}\n", view.agent));
    out.push_str(&format!(
        "signature: |X| = {}, |R| = {}\n",
        view.moves_len, view.outcomes_len
    ));
    out.push_str(&format!("verdict: {}\n", view.report.verdict));
    out.push_str(&format!(
        "contexts checked: {}\n",
        view.report.contexts_checked
    ));
    match &view.report.witness {
        None => {}
        Some(Witness::Context(p)) => {
            out.push_str(&format!("witness context: {p}\n"));
            if let Some(q) = view.quantifier {
                if let Ok(s) = q.eval(p) {
                    out.push_str(&format!("quantifier output: {s}\n"));
                    out.push_str(&format!("image: {}\n", p.image()));
                }
            }
        }
        Some(Witness::ContextPair(p1, p2)) => {
            out.push_str(&format!("witness context 1: {p1}\n"));
            out.push_str(&format!("witness context 2: {p2}\n"));
            if let Some(q) = view.quantifier {
                if let (Ok(s1), Ok(s2)) = (q.eval(p1), q.eval(p2)) {
                    out.push_str(&format!("outputs: {s1} vs {s2}\n"));
                }
            }
        }
        Some(Witness::ContextMove(p, m)) => {
            out.push_str(&format!("witness context: {p}\n"));
            out.push_str(&format!("witness move: {m}\n"));
            if let Ok(v) = p.value_of(m) {
                out.push_str(&format!("move outcome: {v}\n"));
            }
            if let Some(q) = view.quantifier {
                if let Ok(s) = q.eval(p) {
                    out.push_str(&format!("quantifier output: {s}\n"));
                }
            }
        }
    }
    out
}

pub fn check_json(view: &CheckView) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("agent".into(), Value::String(view.agent.to_string()));
    map.insert(
        "property".into(),
        Value::String(view.report.property.to_string()),
    );
    map.insert(
        "signature".into(),
        json!({ "moves": view.moves_len, "outcomes": view.outcomes_len }),
    );
    map.insert(
        "verdict".into(),
        Value::String(view.report.verdict.to_string()),
    );
    map.insert(
        "contexts_checked".into(),
        Value::Number(view.report.contexts_checked.into()),
    );
    if let Some(w) = &view.report.witness {
        map.insert("witness".into(), witness_json(w, view.quantifier));
    }
    Value::Object(map)
}

fn witness_json(witness: &Witness, quantifier: Option<&Quantifier>) -> Value {
    match witness {
        GenericWitness::Context(p) => {
            let mut map = serde_json::Map::new();
            map.insert("context".into(), context_json(p));
            if let Some(Ok(s)) = quantifier.map(|q| q.eval(p)) {
                map.insert("quantifier_output".into(), outcome_set_json(&s));
                map.insert("image".into(), outcome_set_json(&p.image()));
            }
            Value::Object(map)
        }
        GenericWitness::ContextPair(p1, p2) => {
            let mut map = serde_json::Map::new();
            map.insert(
                "contexts".into(),
                Value::Array(vec![context_json(p1), context_json(p2)]),
            );
            if let Some(q) = quantifier {
                if let (Ok(s1), Ok(s2)) = (q.eval(p1), q.eval(p2)) {
                    map.insert(
                        "quantifier_outputs".into(),
                        Value::Array(vec![outcome_set_json(&s1), outcome_set_json(&s2)]),
                    );
                }
            }
            Value::Object(map)
        }
        GenericWitness::ContextMove(p, m) => {
            let mut map = serde_json::Map::new();
            map.insert("context".into(), context_json(p));
            map.insert("move".into(), Value::String(m.name().to_string()));
            if let Ok(v) = p.value_of(m) {
                map.insert("move_outcome".into(), value_json(v));
            }
            if let Some(Ok(s)) = quantifier.map(|q| q.eval(p)) {
                map.insert("quantifier_output".into(), outcome_set_json(&s));
            }
            Value::Object(map)
        }
    }
}
