//! Finite ground sets, outcome values, contexts, and subsets.
//!
//! A decision problem lives over two ground sets: the moves `X` the agent can
//! pick and the outcomes `R` it can end up with. A [`Context`] is a total map
//! `X -> R`; everything downstream (quantifiers, selection functions,
//! property checks) consumes contexts. Ground-set construction order is the
//! canonical order used for every set emitted anywhere in the crate, which is
//! what makes reports reproducible byte for byte.

use std::fmt;
use std::sync::Arc;

use crate::error::Error;
use crate::scalar::Scalar;
use crate::Result;

/// A move: a named alternative available to the agent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move(String);

impl Move {
    pub fn new(name: impl Into<String>) -> Self {
        Move(name.into())
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Move {
    fn from(name: &str) -> Self {
        Move::new(name)
    }
}

impl From<String> for Move {
    fn from(name: String) -> Self {
        Move::new(name)
    }
}

/// One outcome value. A ground set holds a single variant throughout:
/// opaque symbols, exact scalars, or fixed-length vectors of scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OutcomeValue<S> {
    Symbol(String),
    Scalar(S),
    Vector(Vec<S>),
}

impl<S: Scalar> OutcomeValue<S> {
    pub fn symbol(name: impl Into<String>) -> Self {
        OutcomeValue::Symbol(name.into())
    }

    pub fn scalar(value: S) -> Self {
        OutcomeValue::Scalar(value)
    }

    pub fn vector(components: Vec<S>) -> Self {
        OutcomeValue::Vector(components)
    }

    pub fn as_scalar(&self) -> Option<&S> {
        match self {
            OutcomeValue::Scalar(s) => Some(s),
            _ => None,
        }
    }

    fn variant_name(&self) -> &'static str {
        match self {
            OutcomeValue::Symbol(_) => "symbol",
            OutcomeValue::Scalar(_) => "scalar",
            OutcomeValue::Vector(_) => "vector",
        }
    }
}

impl<S: Scalar> fmt::Display for OutcomeValue<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OutcomeValue::Symbol(name) => f.write_str(name),
            OutcomeValue::Scalar(s) => write!(f, "{s}"),
            OutcomeValue::Vector(cs) => {
                f.write_str("(")?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// An ordered finite ground set with distinct elements.
///
/// Construction order is fixed for the lifetime of the domain and defines
/// the canonical emission order of every subset over it.
#[derive(Debug, PartialEq, Eq)]
pub struct FiniteDomain<T> {
    elements: Vec<T>,
}

impl<T: Clone + Eq + fmt::Display> FiniteDomain<T> {
    pub(crate) fn new(elements: Vec<T>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptyDomain);
        }
        for (i, e) in elements.iter().enumerate() {
            if elements[..i].contains(e) {
                return Err(Error::DuplicateElement(e.to_string()));
            }
        }
        Ok(FiniteDomain { elements })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, index: usize) -> &T {
        &self.elements[index]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.elements.iter()
    }

    pub fn index_of(&self, element: &T) -> Option<usize> {
        self.elements.iter().position(|e| e == element)
    }

    pub fn contains(&self, element: &T) -> bool {
        self.elements.contains(element)
    }
}

impl FiniteDomain<Move> {
    /// Move ground set from names, in the given order.
    pub fn moves<I, M>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = M>,
        M: Into<Move>,
    {
        Ok(Arc::new(Self::new(
            names.into_iter().map(Into::into).collect(),
        )?))
    }
}

impl<S: Scalar> FiniteDomain<OutcomeValue<S>> {
    /// Outcome ground set. All elements must share one variant and, for
    /// vectors, one length.
    pub fn outcomes(values: Vec<OutcomeValue<S>>) -> Result<Arc<Self>> {
        let domain = Self::new(values)?;
        let first = domain.get(0);
        let expected_len = match first {
            OutcomeValue::Vector(cs) => Some(cs.len()),
            _ => None,
        };
        for value in domain.iter().skip(1) {
            if value.variant_name() != first.variant_name() {
                return Err(Error::MixedOutcomeVariants {
                    first: first.to_string(),
                    other: value.to_string(),
                });
            }
            if let (Some(expected), OutcomeValue::Vector(cs)) = (expected_len, value) {
                if cs.len() != expected {
                    return Err(Error::VectorLengthMismatch {
                        expected,
                        got: cs.len(),
                    });
                }
            }
        }
        Ok(Arc::new(domain))
    }
}

/// A subset of a ground set, stored as sorted element indices and emitted in
/// ground order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subset<T> {
    ground: Arc<FiniteDomain<T>>,
    members: Vec<usize>,
}

pub type OutcomeSubset<S> = Subset<OutcomeValue<S>>;
pub type MoveSubset = Subset<Move>;

impl<T: Clone + Eq + fmt::Display> Subset<T> {
    /// Builds a subset from ground indices; sorts and deduplicates.
    ///
    /// Panics if an index is out of bounds; membership in the ground set is
    /// a construction invariant, not a runtime condition.
    pub fn new(ground: Arc<FiniteDomain<T>>, mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        if let Some(&last) = indices.last() {
            assert!(last < ground.len(), "subset index out of ground range");
        }
        Subset {
            ground,
            members: indices,
        }
    }

    pub fn empty(ground: Arc<FiniteDomain<T>>) -> Self {
        Subset {
            ground,
            members: Vec::new(),
        }
    }

    pub fn full(ground: Arc<FiniteDomain<T>>) -> Self {
        let members = (0..ground.len()).collect();
        Subset { ground, members }
    }

    pub fn ground(&self) -> &Arc<FiniteDomain<T>> {
        &self.ground
    }

    pub fn indices(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains_index(&self, index: usize) -> bool {
        self.members.binary_search(&index).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.members.iter().map(|&i| self.ground.get(i))
    }

    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch);
        }
        Ok(self.members.iter().all(|&i| other.contains_index(i)))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch);
        }
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&i| other.contains_index(i))
            .collect();
        Ok(Subset {
            ground: self.ground.clone(),
            members,
        })
    }

    /// Bitmask over ground indices; only valid for ground sets under 64
    /// elements (choice-function tables are indexed this way).
    pub(crate) fn bitmask(&self) -> u64 {
        assert!(self.ground.len() < 64, "ground set too large for bitmask");
        self.members.iter().fold(0u64, |m, &i| m | (1u64 << i))
    }
}

impl<T: Clone + Eq + fmt::Display> fmt::Display for Subset<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

/// All nonempty subsets of a ground set, in bitmask order.
///
/// Intended for small ground sets (the count is `2^n - 1`).
pub fn nonempty_subsets<T: Clone + Eq + fmt::Display>(
    ground: &Arc<FiniteDomain<T>>,
) -> Vec<Subset<T>> {
    let n = ground.len();
    assert!(n < 64, "ground set too large to enumerate subsets");
    (1u64..(1u64 << n))
        .map(|mask| {
            let indices = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            Subset::new(ground.clone(), indices)
        })
        .collect()
}

/// A total map from moves to outcomes: the input every quantifier and
/// selection function consumes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Context<S> {
    moves: Arc<FiniteDomain<Move>>,
    outcomes: Arc<FiniteDomain<OutcomeValue<S>>>,
    /// Outcome index per move index; total by construction.
    assignment: Vec<usize>,
}

impl<S: Scalar> Context<S> {
    /// Validates that `assignment` covers every move exactly once with
    /// outcomes drawn from the codomain.
    pub fn new(
        moves: Arc<FiniteDomain<Move>>,
        outcomes: Arc<FiniteDomain<OutcomeValue<S>>>,
        assignment: &[(Move, OutcomeValue<S>)],
    ) -> Result<Self> {
        let mut slots: Vec<Option<usize>> = vec![None; moves.len()];
        for (m, v) in assignment {
            let mi = moves
                .index_of(m)
                .ok_or_else(|| Error::UnknownMove(m.to_string()))?;
            let vi = outcomes
                .index_of(v)
                .ok_or_else(|| Error::UnknownOutcome(v.to_string()))?;
            if slots[mi].is_some() {
                return Err(Error::DuplicateMove(m.to_string()));
            }
            slots[mi] = Some(vi);
        }
        let mut built = Vec::with_capacity(moves.len());
        for (i, slot) in slots.into_iter().enumerate() {
            match slot {
                Some(vi) => built.push(vi),
                None => return Err(Error::MissingMove(moves.get(i).to_string())),
            }
        }
        Ok(Context {
            moves,
            outcomes,
            assignment: built,
        })
    }

    /// Builds directly from outcome indices, one per move in move order.
    ///
    /// Panics on length or range violations; used by enumeration and rule
    /// induction, which construct valid assignments by design.
    pub fn from_index_assignment(
        moves: Arc<FiniteDomain<Move>>,
        outcomes: Arc<FiniteDomain<OutcomeValue<S>>>,
        assignment: Vec<usize>,
    ) -> Self {
        assert_eq!(assignment.len(), moves.len(), "assignment must be total");
        assert!(
            assignment.iter().all(|&vi| vi < outcomes.len()),
            "assignment outcome index out of range"
        );
        Context {
            moves,
            outcomes,
            assignment,
        }
    }

    pub fn moves(&self) -> &Arc<FiniteDomain<Move>> {
        &self.moves
    }

    pub fn outcomes(&self) -> &Arc<FiniteDomain<OutcomeValue<S>>> {
        &self.outcomes
    }

    /// Outcome index assigned to move index `i`.
    pub fn outcome_index_at(&self, i: usize) -> usize {
        self.assignment[i]
    }

    /// Outcome value assigned to move index `i`.
    pub fn value_at(&self, i: usize) -> &OutcomeValue<S> {
        self.outcomes.get(self.assignment[i])
    }

    pub fn value_of(&self, m: &Move) -> Result<&OutcomeValue<S>> {
        let mi = self
            .moves
            .index_of(m)
            .ok_or_else(|| Error::UnknownMove(m.to_string()))?;
        Ok(self.value_at(mi))
    }

    /// The scalar assigned to move index `i`; errors on non-scalar outcomes.
    pub(crate) fn scalar_at(&self, i: usize) -> Result<&S> {
        self.value_at(i)
            .as_scalar()
            .ok_or(Error::NonNumericOutcomes)
    }

    /// `Im(p)`: the set of outcomes attained by some move.
    pub fn image(&self) -> OutcomeSubset<S> {
        Subset::new(self.outcomes.clone(), self.assignment.clone())
    }

    /// `n^p_r`: how many moves map to `r`.
    pub fn preimage_count(&self, r: &OutcomeValue<S>) -> Result<usize> {
        let vi = self
            .outcomes
            .index_of(r)
            .ok_or_else(|| Error::UnknownOutcome(r.to_string()))?;
        Ok(self.assignment.iter().filter(|&&a| a == vi).count())
    }

    /// Mixed-radix rank of the assignment: first move most significant,
    /// matching enumeration order.
    pub fn rank(&self) -> u128 {
        let radix = self.outcomes.len() as u128;
        self.assignment
            .iter()
            .fold(0u128, |acc, &vi| acc * radix + vi as u128)
    }

    /// True when this context and `other` range over the same ground sets.
    pub fn same_signature(&self, other: &Context<S>) -> bool {
        self.moves == other.moves && self.outcomes == other.outcomes
    }
}

impl<S: Scalar> fmt::Display for Context<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.moves.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{m} -> {}", self.value_at(i))?;
        }
        f.write_str("}")
    }
}
