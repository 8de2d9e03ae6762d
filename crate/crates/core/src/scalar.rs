//! Scalar abstraction for outcome arithmetic.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Signed};

/// Numeric requirements on outcome scalars: an ordered signed ring with
/// exact equality and a total order.
///
/// Agent arithmetic never divides (averages are compared after multiplying
/// through by the relevant cardinality), so both integers and rationals
/// qualify. The total `Ord` bound is what makes maxima and tie detection
/// well defined; approximate float types do not satisfy it, by design.
pub trait Scalar: Clone + Debug + Display + Ord + Signed + FromPrimitive {}

impl<T> Scalar for T where T: Clone + Debug + Display + Ord + Signed + FromPrimitive {}

/// The cardinality of a finite set, lifted into the scalar type.
pub(crate) fn count_as<S: Scalar>(n: usize) -> S {
    S::from_usize(n).expect("set cardinality representable in scalar type")
}
