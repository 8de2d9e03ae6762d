//! Decision goals as higher-order functions over finite domains.
//!
//! An agent choosing a move from `X` with an eye on outcomes in `R` faces a
//! *context* `p : X -> R`. Its goal is a *quantifier*, a map from contexts
//! to preferred-outcome sets, and its operational counterpart is a
//! *selection function*, mapping contexts to preferred moves. Classical
//! utility maximisation is the pair `max` / `argmax`; this crate also
//! provides goals that maximisation cannot express directly: averaging and
//! satisficing heuristics, second-best choice, honesty constraints, safety
//! (preferring hard-to-miss outcomes), and reflexive fixpoint goals such as
//! voting for the eventual winner.
//!
//! Because every domain is finite and declared up front, the structural
//! properties of these agents (totality, attainability,
//! context-independence, the attains relation between a selection function
//! and a quantifier, and the reconstruction of a choice function from a
//! context-independent quantifier) are decidable. The [`properties`] module
//! decides them by exhaustive enumeration and returns counterexample
//! witnesses on failure.
//!
//! The core is generic over the outcome scalar (any ordered signed ring via
//! [`scalar::Scalar`]); the aliases at the crate root pin the canonical
//! instantiation with arbitrary-precision rationals, so equality and tie
//! detection are exact. No floating point is involved anywhere.

pub mod agents;
pub mod domain;
pub mod order;
pub mod properties;
pub mod quantifier;
pub mod reflexive;
pub mod scalar;

mod error;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Canonical exact scalar: an arbitrary-precision rational.
pub type Rat = num_rational::BigRational;

/// `n / d` as a [`Rat`]. Panics when `d` is zero.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// The integer `n` as a [`Rat`].
pub fn int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub use domain::{FiniteDomain, Move};
pub use properties::{Budget, Property, Verdict};

/// Concrete aliases for the rational instantiation.
pub type Outcome = domain::OutcomeValue<Rat>;
pub type Context = domain::Context<Rat>;
pub type OutcomeSubset = domain::OutcomeSubset<Rat>;
pub type MoveSubset = domain::MoveSubset;
pub type Quantifier = quantifier::Quantifier<Rat>;
pub type SelectionFunction = quantifier::SelectionFunction<Rat>;
pub type QuantifierTable = quantifier::QuantifierTable<Rat>;
pub type SelectionTable = quantifier::SelectionTable<Rat>;
pub type PartialOrder = order::PartialOrder<Rat>;
pub type ChoiceFunction = order::ChoiceFunction<Rat>;
pub type ProfileRule = reflexive::ProfileRule<Rat>;
pub type PropertyReport = properties::PropertyReport<Rat>;
pub type Witness = properties::Witness<Rat>;
