//! Quantifiers and selection functions: evaluable higher-order goals.
//!
//! A [`Quantifier`] maps a context `p : X -> R` to the outcomes the agent
//! considers good; a [`SelectionFunction`] maps it to the agent's preferred
//! moves. Both come in two realizations: named built-ins with parameters,
//! and explicit tables pinned to one `(X, R)` signature. Evaluation is pure
//! and deterministic.

use std::sync::Arc;

use crate::domain::{Context, FiniteDomain, Move, MoveSubset, OutcomeSubset, OutcomeValue, Subset};
use crate::error::Error;
use crate::order::{ChoiceFunction, PartialOrder};
use crate::properties::Budget;
use crate::reflexive::CoordinatingSelection;
use crate::scalar::Scalar;
use crate::Result;

/// An agent's goal: which outcomes are good in each context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Quantifier<S: Scalar> {
    /// Greatest attained scalar outcome.
    Max,
    /// A choice function applied to the image: `f ∘ Im`.
    Choice(ChoiceFunction<S>),
    /// Attained outcomes closest to the average of the image.
    Averaging,
    /// Attained outcomes closest to the move-weighted average.
    WeightedAveraging,
    /// Ground outcomes within `radius` of the distinguished move's outcome.
    IdealMove { center: Move, radius: S },
    /// Second-greatest attained value; empty on single-valued images.
    SecondBest,
    /// Greatest outcome reachable through the permitted moves.
    Honest { permitted: Vec<Move> },
    /// Global maximum when an illicit move pays above the threshold,
    /// honest behaviour over the rest otherwise.
    Dishonest { illicit: Vec<Move>, threshold: S },
    /// Attained outcomes with maximal preimage count.
    Safe,
    /// Fixpoints of the context, totalized to the whole set when none exist.
    Fix,
    /// Outcomes of fixed moves; coincides with `Fix` on square signatures.
    Keynesian,
    /// Maximal attained candidates under the judge's preference order.
    VotingJudge(PartialOrder<S>),
    /// Explicit output per context of one fixed signature.
    Table(QuantifierTable<S>),
}

impl<S: Scalar> Quantifier<S> {
    pub fn max() -> Self {
        Quantifier::Max
    }

    pub fn choice(f: ChoiceFunction<S>) -> Self {
        Quantifier::Choice(f)
    }

    /// Maximal elements of the image under the given order.
    pub fn order_max(order: PartialOrder<S>) -> Self {
        Quantifier::Choice(ChoiceFunction::maximal(order))
    }

    pub fn averaging() -> Self {
        Quantifier::Averaging
    }

    pub fn weighted_averaging() -> Self {
        Quantifier::WeightedAveraging
    }

    pub fn ideal_move(center: Move, radius: S) -> Result<Self> {
        if radius < S::zero() {
            return Err(Error::NegativeRadius(radius.to_string()));
        }
        Ok(Quantifier::IdealMove { center, radius })
    }

    pub fn second_best() -> Self {
        Quantifier::SecondBest
    }

    pub fn honest(permitted: Vec<Move>) -> Result<Self> {
        if permitted.is_empty() {
            return Err(Error::EmptyPermissibleSet);
        }
        let mut deduped = Vec::with_capacity(permitted.len());
        for m in permitted {
            if !deduped.contains(&m) {
                deduped.push(m);
            }
        }
        Ok(Quantifier::Honest { permitted: deduped })
    }

    pub fn dishonest(illicit: Vec<Move>, threshold: S) -> Self {
        Quantifier::Dishonest { illicit, threshold }
    }

    pub fn safe() -> Self {
        Quantifier::Safe
    }

    pub fn fix() -> Self {
        Quantifier::Fix
    }

    pub fn keynesian() -> Self {
        Quantifier::Keynesian
    }

    pub fn voting_judge(order: PartialOrder<S>) -> Self {
        Quantifier::VotingJudge(order)
    }

    pub fn table(table: QuantifierTable<S>) -> Self {
        Quantifier::Table(table)
    }

    /// `φ(p)`: the preferred-outcome set.
    pub fn eval(&self, p: &Context<S>) -> Result<OutcomeSubset<S>> {
        match self {
            Quantifier::Max => crate::order::numeric_max(p),
            Quantifier::Choice(f) => f.apply(&p.image()),
            Quantifier::Averaging => crate::agents::averaging(p),
            Quantifier::WeightedAveraging => crate::agents::weighted_averaging(p),
            Quantifier::IdealMove { center, radius } => {
                crate::agents::ideal_ball(center, radius, p)
            }
            Quantifier::SecondBest => crate::agents::second_best(p),
            Quantifier::Honest { permitted } => crate::agents::honest(permitted, p),
            Quantifier::Dishonest { illicit, threshold } => {
                crate::agents::dishonest(illicit, threshold, p)
            }
            Quantifier::Safe => Ok(crate::agents::safe(p)),
            Quantifier::Fix | Quantifier::Keynesian => crate::reflexive::fix_outcomes(p),
            Quantifier::VotingJudge(ord) => crate::reflexive::voting_judge(ord, p),
            Quantifier::Table(t) => t.lookup(p),
        }
    }
}

/// An agent's operational side: which moves to pick in each context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SelectionFunction<S: Scalar> {
    /// Moves attaining the greatest scalar outcome.
    Argmax,
    /// Moves whose outcome no attained outcome strictly dominates.
    OrderArgmax(PartialOrder<S>),
    /// The constant selection: always the distinguished move.
    Constant(Move),
    /// Fixed moves of the context, totalized when none exist.
    Fix,
    /// Moves that lead both players to the same place.
    Coordinating(CoordinatingSelection<S>),
    /// Explicit output per context of one fixed signature.
    Table(SelectionTable<S>),
}

impl<S: Scalar> SelectionFunction<S> {
    pub fn argmax() -> Self {
        SelectionFunction::Argmax
    }

    pub fn order_argmax(order: PartialOrder<S>) -> Self {
        SelectionFunction::OrderArgmax(order)
    }

    pub fn constant(center: Move) -> Self {
        SelectionFunction::Constant(center)
    }

    pub fn fix() -> Self {
        SelectionFunction::Fix
    }

    pub fn coordinating(rule: &crate::reflexive::ProfileRule<S>, player: usize) -> Result<Self> {
        Ok(SelectionFunction::Coordinating(CoordinatingSelection::new(
            rule, player,
        )?))
    }

    pub fn table(table: SelectionTable<S>) -> Self {
        SelectionFunction::Table(table)
    }

    /// `ε(p)`: the preferred-move set.
    pub fn eval(&self, p: &Context<S>) -> Result<MoveSubset> {
        match self {
            SelectionFunction::Argmax => crate::order::numeric_argmax(p),
            SelectionFunction::OrderArgmax(ord) => crate::order::order_argmax(ord, p),
            SelectionFunction::Constant(center) => {
                let mi = p
                    .moves()
                    .index_of(center)
                    .ok_or_else(|| Error::UnknownMove(center.to_string()))?;
                Ok(Subset::new(p.moves().clone(), vec![mi]))
            }
            SelectionFunction::Fix => crate::reflexive::fix_moves(p),
            SelectionFunction::Coordinating(sel) => sel.eval(p),
            SelectionFunction::Table(t) => t.lookup(p),
        }
    }
}

/// Explicit quantifier: one stored output per context of a fixed signature,
/// indexed by the context's mixed-radix rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantifierTable<S> {
    moves: Arc<FiniteDomain<Move>>,
    outcomes: Arc<FiniteDomain<OutcomeValue<S>>>,
    entries: Vec<Vec<usize>>,
}

impl<S: Scalar> QuantifierTable<S> {
    /// Tabulates `f` over every context of the signature. `f` returns
    /// outcome indices.
    pub fn tabulate(
        moves: Arc<FiniteDomain<Move>>,
        outcomes: Arc<FiniteDomain<OutcomeValue<S>>>,
        budget: Budget,
        mut f: impl FnMut(&Context<S>) -> Result<Vec<usize>>,
    ) -> Result<Self> {
        let mut entries = Vec::new();
        for p in crate::properties::enumerate_contexts(&moves, &outcomes, budget)? {
            let mut out = f(&p)?;
            out.sort_unstable();
            out.dedup();
            assert!(
                out.iter().all(|&i| i < outcomes.len()),
                "table output index out of range"
            );
            entries.push(out);
        }
        Ok(QuantifierTable {
            moves,
            outcomes,
            entries,
        })
    }

    /// Builds from explicit `(context, output)` pairs, which must cover the
    /// signature exactly once each.
    pub fn from_entries(
        moves: Arc<FiniteDomain<Move>>,
        outcomes: Arc<FiniteDomain<OutcomeValue<S>>>,
        entries: Vec<(Context<S>, Vec<usize>)>,
    ) -> Result<Self> {
        let slots = fill_table_slots(&moves, &outcomes, entries)?;
        Ok(QuantifierTable {
            moves,
            outcomes,
            entries: slots,
        })
    }

    pub fn moves(&self) -> &Arc<FiniteDomain<Move>> {
        &self.moves
    }

    pub fn outcomes(&self) -> &Arc<FiniteDomain<OutcomeValue<S>>> {
        &self.outcomes
    }

    fn lookup(&self, p: &Context<S>) -> Result<OutcomeSubset<S>> {
        check_table_signature(&self.moves, &self.outcomes, p)?;
        let members = self.entries[p.rank() as usize].clone();
        Ok(Subset::new(self.outcomes.clone(), members))
    }
}

/// Explicit selection function, stored like [`QuantifierTable`] but with
/// move-index outputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectionTable<S> {
    moves: Arc<FiniteDomain<Move>>,
    outcomes: Arc<FiniteDomain<OutcomeValue<S>>>,
    entries: Vec<Vec<usize>>,
}

impl<S: Scalar> SelectionTable<S> {
    pub fn tabulate(
        moves: Arc<FiniteDomain<Move>>,
        outcomes: Arc<FiniteDomain<OutcomeValue<S>>>,
        budget: Budget,
        mut f: impl FnMut(&Context<S>) -> Result<Vec<usize>>,
    ) -> Result<Self> {
        let mut entries = Vec::new();
        for p in crate::properties::enumerate_contexts(&moves, &outcomes, budget)? {
            let mut out = f(&p)?;
            out.sort_unstable();
            out.dedup();
            assert!(
                out.iter().all(|&i| i < moves.len()),
                "table output index out of range"
            );
            entries.push(out);
        }
        Ok(SelectionTable {
            moves,
            outcomes,
            entries,
        })
    }

    pub fn from_entries(
        moves: Arc<FiniteDomain<Move>>,
        outcomes: Arc<FiniteDomain<OutcomeValue<S>>>,
        entries: Vec<(Context<S>, Vec<usize>)>,
    ) -> Result<Self> {
        let slots = fill_table_slots(&moves, &outcomes, entries)?;
        Ok(SelectionTable {
            moves,
            outcomes,
            entries: slots,
        })
    }

    pub fn moves(&self) -> &Arc<FiniteDomain<Move>> {
        &self.moves
    }

    pub fn outcomes(&self) -> &Arc<FiniteDomain<OutcomeValue<S>>> {
        &self.outcomes
    }

    fn lookup(&self, p: &Context<S>) -> Result<MoveSubset> {
        check_table_signature(&self.moves, &self.outcomes, p)?;
        let members = self.entries[p.rank() as usize].clone();
        Ok(Subset::new(self.moves.clone(), members))
    }
}

fn check_table_signature<S: Scalar>(
    moves: &Arc<FiniteDomain<Move>>,
    outcomes: &Arc<FiniteDomain<OutcomeValue<S>>>,
    p: &Context<S>,
) -> Result<()> {
    if *p.moves() != *moves || *p.outcomes() != *outcomes {
        return Err(Error::SignatureMismatch(
            "context domains differ from the table's signature".into(),
        ));
    }
    Ok(())
}

fn fill_table_slots<S: Scalar>(
    moves: &Arc<FiniteDomain<Move>>,
    outcomes: &Arc<FiniteDomain<OutcomeValue<S>>>,
    entries: Vec<(Context<S>, Vec<usize>)>,
) -> Result<Vec<Vec<usize>>> {
    let total = (outcomes.len() as u128)
        .checked_pow(moves.len() as u32)
        .filter(|&t| t <= (1u128 << 32))
        .ok_or_else(|| Error::PreconditionViolated("table signature too large".into()))?;
    let mut slots: Vec<Option<Vec<usize>>> = vec![None; total as usize];
    for (p, mut out) in entries {
        check_table_signature(moves, outcomes, &p)?;
        let rank = p.rank() as usize;
        if slots[rank].is_some() {
            return Err(Error::DuplicateTableEntry(p.to_string()));
        }
        out.sort_unstable();
        out.dedup();
        slots[rank] = Some(out);
    }
    let mut filled = Vec::with_capacity(slots.len());
    for (rank, slot) in slots.into_iter().enumerate() {
        match slot {
            Some(out) => filled.push(out),
            None => {
                // Reconstruct the missing context for the error message.
                let mut assignment = Vec::with_capacity(moves.len());
                let mut k = rank;
                for _ in 0..moves.len() {
                    assignment.push(k % outcomes.len());
                    k /= outcomes.len();
                }
                assignment.reverse();
                let p = Context::from_index_assignment(moves.clone(), outcomes.clone(), assignment);
                return Err(Error::IncompleteTable(p.to_string()));
            }
        }
    }
    Ok(filled)
}
