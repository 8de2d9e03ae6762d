//! Shared helpers for unit tests.

use std::sync::Arc;

use crate::domain::{Context, FiniteDomain, OutcomeValue};
use crate::{int, Rat};

pub fn sym(name: impl Into<String>) -> OutcomeValue<Rat> {
    OutcomeValue::symbol(name)
}

pub fn int_val(n: i64) -> OutcomeValue<Rat> {
    OutcomeValue::scalar(int(n))
}

pub fn vec_val(components: &[i64]) -> OutcomeValue<Rat> {
    OutcomeValue::vector(components.iter().map(|&c| int(c)).collect())
}

pub fn int_domain(values: &[i64]) -> Arc<FiniteDomain<OutcomeValue<Rat>>> {
    FiniteDomain::outcomes(values.iter().map(|&v| int_val(v)).collect()).unwrap()
}

/// Context over integer outcomes: `assignment` pairs a move index with an
/// outcome index into `values`.
pub fn scalar_context(
    names: &[&str],
    values: &[i64],
    assignment: &[(usize, usize)],
) -> Context<Rat> {
    let moves = FiniteDomain::moves(names.iter().copied()).unwrap();
    let outcomes = int_domain(values);
    let mut indices = vec![usize::MAX; names.len()];
    for &(mi, vi) in assignment {
        indices[mi] = vi;
    }
    Context::from_index_assignment(moves, outcomes, indices)
}
