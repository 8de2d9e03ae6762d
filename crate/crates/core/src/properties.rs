//! Exhaustive context enumeration and decision procedures for the structural
//! properties of quantifiers and selection functions.
//!
//! Every check sweeps all `|R|^|X|` contexts of a declared signature in a
//! fixed mixed-radix order and reports either `holds` or `fails` with a
//! counterexample witness that reproduces the violation when re-evaluated.
//! Sweeps refuse to start when the context count exceeds the enumeration
//! budget; a property "verified" on a truncated space is not verified.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::domain::{Context, FiniteDomain, Move, OutcomeSubset, OutcomeValue};
use crate::error::Error;
use crate::order::ChoiceFunction;
use crate::quantifier::{Quantifier, SelectionFunction, SelectionTable};
use crate::scalar::Scalar;
use crate::Result;

/// Cap on the number of contexts a single sweep may enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_contexts: u64,
}

impl Budget {
    pub fn new(max_contexts: u64) -> Self {
        Budget { max_contexts }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_contexts: 1_000_000,
        }
    }
}

/// `|R|^|X|`, exactly.
pub fn context_count(moves: usize, outcomes: usize) -> BigUint {
    BigUint::from(outcomes).pow(moves as u32)
}

fn admit<S: Scalar>(
    moves: &Arc<FiniteDomain<Move>>,
    outcomes: &Arc<FiniteDomain<OutcomeValue<S>>>,
    budget: Budget,
) -> Result<u64> {
    let required = context_count(moves.len(), outcomes.len());
    if required > BigUint::from(budget.max_contexts) {
        return Err(Error::BudgetExceeded {
            required: required.to_string(),
            budget: budget.max_contexts,
        });
    }
    Ok(required.try_into().expect("count fits once under budget"))
}

/// All contexts of the signature, in mixed-radix order (first move most
/// significant, so the first context assigns every move the first outcome).
pub fn enumerate_contexts<S: Scalar>(
    moves: &Arc<FiniteDomain<Move>>,
    outcomes: &Arc<FiniteDomain<OutcomeValue<S>>>,
    budget: Budget,
) -> Result<ContextIter<S>> {
    admit(moves, outcomes, budget)?;
    Ok(ContextIter {
        moves: moves.clone(),
        outcomes: outcomes.clone(),
        next: Some(vec![0; moves.len()]),
    })
}

#[derive(Debug)]
pub struct ContextIter<S> {
    moves: Arc<FiniteDomain<Move>>,
    outcomes: Arc<FiniteDomain<OutcomeValue<S>>>,
    next: Option<Vec<usize>>,
}

impl<S: Scalar> Iterator for ContextIter<S> {
    type Item = Context<S>;

    fn next(&mut self) -> Option<Context<S>> {
        let current = self.next.take()?;
        let context = Context::from_index_assignment(
            self.moves.clone(),
            self.outcomes.clone(),
            current.clone(),
        );
        // Odometer step: last move varies fastest.
        let mut digits = current;
        let radix = self.outcomes.len();
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < radix {
                self.next = Some(digits);
                return Some(context);
            }
            *d = 0;
        }
        self.next = None;
        Some(context)
    }
}

/// Which property a report speaks about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Total,
    Attainable,
    StronglyAttainable,
    ContextIndependent,
    Attains,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Total => "total",
            Property::Attainable => "attainable",
            Property::StronglyAttainable => "strongly-attainable",
            Property::ContextIndependent => "context-independent",
            Property::Attains => "attains",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
        })
    }
}

/// Counterexample payload of a failed check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness<S: Scalar> {
    /// A context violating totality or (strong) attainability.
    Context(Context<S>),
    /// Two image-equal contexts on which the quantifier disagrees.
    ContextPair(Context<S>, Context<S>),
    /// A context and a selected move whose outcome is not preferred.
    ContextMove(Context<S>, Move),
}

/// Outcome of one property check over one signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport<S: Scalar> {
    pub property: Property,
    pub verdict: Verdict,
    pub witness: Option<Witness<S>>,
    pub contexts_checked: u64,
}

impl<S: Scalar> PropertyReport<S> {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    fn pass(property: Property, contexts_checked: u64) -> Self {
        PropertyReport {
            property,
            verdict: Verdict::Holds,
            witness: None,
            contexts_checked,
        }
    }

    fn fail(property: Property, witness: Witness<S>, contexts_checked: u64) -> Self {
        PropertyReport {
            property,
            verdict: Verdict::Fails,
            witness: Some(witness),
            contexts_checked,
        }
    }
}

/// `φ(p) ≠ ∅` for every context.
pub fn is_total<S: Scalar>(
    quantifier: &Quantifier<S>,
    moves: &Arc<FiniteDomain<Move>>,
    outcomes: &Arc<FiniteDomain<OutcomeValue<S>>>,
    budget: Budget,
) -> Result<PropertyReport<S>> {
    sweep(Property::Total, moves, outcomes, budget, |p| {
        Ok(!quantifier.eval(p)?.is_empty())
    })
}

/// `φ(p) ∩ Im(p) ≠ ∅` for every context: some preferred outcome is
/// actually achieved.
pub fn is_attainable<S: Scalar>(
    quantifier: &Quantifier<S>,
    moves: &Arc<FiniteDomain<Move>>,
    outcomes: &Arc<FiniteDomain<OutcomeValue<S>>>,
    budget: Budget,
) -> Result<PropertyReport<S>> {
    sweep(Property::Attainable, moves, outcomes, budget, |p| {
        Ok(!quantifier.eval(p)?.intersection(&p.image())?.is_empty())
    })
}

/// `φ(p) ⊆ Im(p)` for every context: every preferred outcome is achieved.
pub fn is_strongly_attainable<S: Scalar>(
    quantifier: &Quantifier<S>,
    moves: &Arc<FiniteDomain<Move>>,
    outcomes: &Arc<FiniteDomain<OutcomeValue<S>>>,
    budget: Budget,
) -> Result<PropertyReport<S>> {
    sweep(Property::StronglyAttainable, moves, outcomes, budget, |p| {
        quantifier.eval(p)?.is_subset_of(&p.image())
    })
}

fn sweep<S: Scalar>(
    property: Property,
    moves: &Arc<FiniteDomain<Move>>,
    outcomes: &Arc<FiniteDomain<OutcomeValue<S>>>,
    budget: Budget,
    mut ok: impl FnMut(&Context<S>) -> Result<bool>,
) -> Result<PropertyReport<S>> {
    let mut checked = 0u64;
    for p in enumerate_contexts(moves, outcomes, budget)? {
        checked += 1;
        if !ok(&p)? {
            return Ok(PropertyReport::fail(property, Witness::Context(p), checked));
        }
    }
    Ok(PropertyReport::pass(property, checked))
}

/// `Im(p) = Im(p') ⟹ φ(p) = φ(p')` across all context pairs.
///
/// Contexts are grouped by image; within a group every output must match
/// the group's first representative, which avoids the quadratic all-pairs
/// scan.
pub fn is_context_independent<S: Scalar>(
    quantifier: &Quantifier<S>,
    moves: &Arc<FiniteDomain<Move>>,
    outcomes: &Arc<FiniteDomain<OutcomeValue<S>>>,
    budget: Budget,
) -> Result<PropertyReport<S>> {
    let mut groups: HashMap<Vec<usize>, (Context<S>, OutcomeSubset<S>)> = HashMap::new();
    let mut checked = 0u64;
    for p in enumerate_contexts(moves, outcomes, budget)? {
        checked += 1;
        let output = quantifier.eval(&p)?;
        let key = p.image().indices().to_vec();
        match groups.get(&key) {
            None => {
                groups.insert(key, (p, output));
            }
            Some((representative, expected)) => {
                if output != *expected {
                    return Ok(PropertyReport::fail(
                        Property::ContextIndependent,
                        Witness::ContextPair(representative.clone(), p),
                        checked,
                    ));
                }
            }
        }
    }
    Ok(PropertyReport::pass(Property::ContextIndependent, checked))
}

/// `x ∈ ε(p) ⟹ p(x) ∈ φ(p)` for every context and selected move.
///
/// The selection must be total over the enumerated contexts; that is
/// checked first and reported as an error, not a failing verdict.
pub fn attains<S: Scalar>(
    selection: &SelectionFunction<S>,
    quantifier: &Quantifier<S>,
    moves: &Arc<FiniteDomain<Move>>,
    outcomes: &Arc<FiniteDomain<OutcomeValue<S>>>,
    budget: Budget,
) -> Result<PropertyReport<S>> {
    for p in enumerate_contexts(moves, outcomes, budget)? {
        if selection.eval(&p)?.is_empty() {
            return Err(Error::NonTotalSelection(p.to_string()));
        }
    }
    let mut checked = 0u64;
    for p in enumerate_contexts(moves, outcomes, budget)? {
        checked += 1;
        let selected = selection.eval(&p)?;
        let preferred = quantifier.eval(&p)?;
        for &mi in selected.indices() {
            if !preferred.contains_index(p.outcome_index_at(mi)) {
                let m = p.moves().get(mi).clone();
                return Ok(PropertyReport::fail(
                    Property::Attains,
                    Witness::ContextMove(p, m),
                    checked,
                ));
            }
        }
    }
    Ok(PropertyReport::pass(Property::Attains, checked))
}

/// Builds the canonical selection attaining an attainable quantifier:
/// `ε(p) = { x | p(x) ∈ φ(p) }`, tabulated over the signature.
pub fn attainment_witness<S: Scalar>(
    quantifier: &Quantifier<S>,
    moves: &Arc<FiniteDomain<Move>>,
    outcomes: &Arc<FiniteDomain<OutcomeValue<S>>>,
    budget: Budget,
) -> Result<SelectionFunction<S>> {
    let report = is_attainable(quantifier, moves, outcomes, budget)?;
    if let Some(Witness::Context(p)) = &report.witness {
        return Err(Error::NotAttainable(p.to_string()));
    }
    let table = SelectionTable::tabulate(moves.clone(), outcomes.clone(), budget, |p| {
        let preferred = quantifier.eval(p)?;
        Ok((0..moves.len())
            .filter(|&mi| preferred.contains_index(p.outcome_index_at(mi)))
            .collect())
    })?;
    Ok(SelectionFunction::table(table))
}

/// The canonical image witness `u_S`: the first `|S|` moves carry `S`'s
/// elements in ground order, the remaining moves repeat `S`'s first element.
pub fn canonical_witness_context<S: Scalar>(
    moves: &Arc<FiniteDomain<Move>>,
    outcomes: &Arc<FiniteDomain<OutcomeValue<S>>>,
    subset: &OutcomeSubset<S>,
) -> Context<S> {
    assert!(!subset.is_empty(), "image witness needs a nonempty subset");
    assert!(
        moves.len() >= subset.len(),
        "not enough moves to attain the subset"
    );
    let indices = subset.indices();
    let assignment = (0..moves.len())
        .map(|mi| {
            if mi < indices.len() {
                indices[mi]
            } else {
                indices[0]
            }
        })
        .collect();
    Context::from_index_assignment(moves.clone(), outcomes.clone(), assignment)
}

/// Recovers the choice function `f` with `φ = f ∘ Im` from a
/// context-independent quantifier, by evaluating `φ` on one canonical
/// witness context per nonempty outcome subset. The recovered table is
/// validated against `φ` on every enumerated context before it is returned.
pub fn reconstruct_choice_function<S: Scalar>(
    quantifier: &Quantifier<S>,
    moves: &Arc<FiniteDomain<Move>>,
    outcomes: &Arc<FiniteDomain<OutcomeValue<S>>>,
    budget: Budget,
) -> Result<ChoiceFunction<S>> {
    if moves.len() < outcomes.len() {
        return Err(Error::PreconditionViolated(format!(
            "reconstruction needs |X| >= |R|, got |X| = {}, |R| = {}",
            moves.len(),
            outcomes.len()
        )));
    }
    let independence = is_context_independent(quantifier, moves, outcomes, budget)?;
    if !independence.holds() {
        return Err(Error::PreconditionViolated(
            "quantifier is context-dependent".into(),
        ));
    }
    let choice = ChoiceFunction::from_table_fn(outcomes.clone(), |subset| {
        let witness = canonical_witness_context(moves, outcomes, subset);
        Ok(quantifier.eval(&witness)?.indices().to_vec())
    })?;
    for p in enumerate_contexts(moves, outcomes, budget)? {
        if quantifier.eval(&p)? != choice.apply(&p.image())? {
            return Err(Error::ReconstructionMismatch(p.to_string()));
        }
    }
    Ok(choice)
}
