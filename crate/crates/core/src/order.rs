//! Partial orders on outcomes, choice functions, and the quantifiers and
//! selection functions they induce.
//!
//! A preference relation `⪰` on the outcome ground set yields a choice
//! function (pick the maximal elements of a set) and, composed with the image
//! operator, a quantifier. Orders need not be total: maximal elements of a
//! nonempty finite set always exist, so the induced quantifier stays total
//! even when the preference is incomplete.

use std::fmt;
use std::sync::Arc;

use crate::domain::{Context, FiniteDomain, MoveSubset, OutcomeSubset, OutcomeValue, Subset};
use crate::error::Error;
use crate::scalar::Scalar;
use crate::Result;

/// A reflexive, transitive, antisymmetric relation on an outcome ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialOrder<S> {
    ground: Arc<FiniteDomain<OutcomeValue<S>>>,
    /// Row-major `n x n`; entry `(a, b)` means `a ⪰ b`.
    ge: Vec<bool>,
}

impl<S: Scalar> PartialOrder<S> {
    /// Builds the reflexive-transitive closure of `pairs` (each pair
    /// `(a, b)` declares `a ⪰ b`) and validates antisymmetry.
    pub fn from_pairs(
        ground: Arc<FiniteDomain<OutcomeValue<S>>>,
        pairs: &[(OutcomeValue<S>, OutcomeValue<S>)],
    ) -> Result<Self> {
        let n = ground.len();
        let mut ge = vec![false; n * n];
        for i in 0..n {
            ge[i * n + i] = true;
        }
        for (a, b) in pairs {
            let ai = ground
                .index_of(a)
                .ok_or_else(|| Error::UnknownOutcome(a.to_string()))?;
            let bi = ground
                .index_of(b)
                .ok_or_else(|| Error::UnknownOutcome(b.to_string()))?;
            ge[ai * n + bi] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if ge[i * n + k] {
                    for j in 0..n {
                        if ge[k * n + j] {
                            ge[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Self::from_relation(ground, ge)
    }

    /// Wraps an explicit relation matrix, validating all three order axioms.
    pub fn from_relation(
        ground: Arc<FiniteDomain<OutcomeValue<S>>>,
        ge: Vec<bool>,
    ) -> Result<Self> {
        let n = ground.len();
        if ge.len() != n * n {
            return Err(Error::InvalidOrder(format!(
                "relation matrix has {} entries, expected {}",
                ge.len(),
                n * n
            )));
        }
        for i in 0..n {
            if !ge[i * n + i] {
                return Err(Error::InvalidOrder(format!(
                    "not reflexive at `{}`",
                    ground.get(i)
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && ge[i * n + j] && ge[j * n + i] {
                    return Err(Error::AntisymmetryViolation {
                        a: ground.get(i).to_string(),
                        b: ground.get(j).to_string(),
                    });
                }
                if ge[i * n + j] {
                    for k in 0..n {
                        if ge[j * n + k] && !ge[i * n + k] {
                            return Err(Error::InvalidOrder(format!(
                                "not transitive: `{}` ⪰ `{}` ⪰ `{}`",
                                ground.get(i),
                                ground.get(j),
                                ground.get(k)
                            )));
                        }
                    }
                }
            }
        }
        Ok(PartialOrder { ground, ge })
    }

    /// The total order induced by scalar value comparison.
    pub fn numeric(ground: Arc<FiniteDomain<OutcomeValue<S>>>) -> Result<Self> {
        let n = ground.len();
        let mut ge = vec![false; n * n];
        for i in 0..n {
            let a = ground.get(i).as_scalar().ok_or(Error::NonNumericOutcomes)?;
            for j in 0..n {
                let b = ground.get(j).as_scalar().ok_or(Error::NonNumericOutcomes)?;
                ge[i * n + j] = a >= b;
            }
        }
        Ok(PartialOrder { ground, ge })
    }

    pub fn ground(&self) -> &Arc<FiniteDomain<OutcomeValue<S>>> {
        &self.ground
    }

    /// `a ⪰ b` by ground indices.
    pub fn ge(&self, a: usize, b: usize) -> bool {
        self.ge[a * self.ground.len() + b]
    }

    /// `a ≻ b`: dominates and differs.
    pub fn gt(&self, a: usize, b: usize) -> bool {
        a != b && self.ge(a, b)
    }

    /// True when every pair of ground elements is comparable.
    pub fn is_total(&self) -> bool {
        let n = self.ground.len();
        (0..n).all(|i| (0..n).all(|j| self.ge(i, j) || self.ge(j, i)))
    }

    /// `⪰`-maximal elements of `s`: members no other member strictly
    /// dominates. Nonempty whenever `s` is.
    pub fn maximal(&self, s: &OutcomeSubset<S>) -> Result<OutcomeSubset<S>> {
        if *s.ground() != self.ground {
            return Err(Error::GroundMismatch);
        }
        let kept = s
            .indices()
            .iter()
            .copied()
            .filter(|&i| !s.indices().iter().any(|&j| self.gt(j, i)))
            .collect();
        Ok(Subset::new(self.ground.clone(), kept))
    }

    /// Sub-maximal elements of `s`: the second-greatest element of each
    /// maximal strict chain of length at least two. Empty when no strict
    /// pair exists (in particular on singletons).
    pub fn sub_maximal(&self, s: &OutcomeSubset<S>) -> Result<OutcomeSubset<S>> {
        if *s.ground() != self.ground {
            return Err(Error::GroundMismatch);
        }
        let top = self.maximal(s)?;
        // The second element of a maximal chain is covered (within s) by the
        // chain's maximal top.
        let kept = s
            .indices()
            .iter()
            .copied()
            .filter(|&i| {
                top.indices().iter().any(|&t| {
                    self.gt(t, i) && !s.indices().iter().any(|&u| self.gt(t, u) && self.gt(u, i))
                })
            })
            .collect();
        Ok(Subset::new(self.ground.clone(), kept))
    }
}

/// Every partial order on the given labeled ground set, by brute force over
/// relation matrices. Intended for small ground sets.
pub fn enumerate_partial_orders<S: Scalar>(
    ground: &Arc<FiniteDomain<OutcomeValue<S>>>,
) -> Vec<PartialOrder<S>> {
    let n = ground.len();
    let off_diag: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let bits = off_diag.len();
    assert!(bits < 32, "ground set too large to enumerate orders");
    let mut found = Vec::new();
    for mask in 0u32..(1u32 << bits) {
        let mut ge = vec![false; n * n];
        for i in 0..n {
            ge[i * n + i] = true;
        }
        for (b, &(i, j)) in off_diag.iter().enumerate() {
            if mask & (1 << b) != 0 {
                ge[i * n + j] = true;
            }
        }
        if let Ok(ord) = PartialOrder::from_relation(ground.clone(), ge) {
            found.push(ord);
        }
    }
    found
}

/// A map `f : P(R) -> P(R)` with `f(S) ⊆ S` and `f(S)` nonempty for
/// nonempty `S`, realized either as maximal-elements of a partial order or
/// as an explicit table over every nonempty subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChoiceFunction<S> {
    ground: Arc<FiniteDomain<OutcomeValue<S>>>,
    rule: ChoiceRule<S>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum ChoiceRule<S> {
    Maximal(PartialOrder<S>),
    /// Entry `mask - 1` holds the chosen indices for the subset with that
    /// bitmask.
    Table(Vec<Vec<usize>>),
}

impl<S: Scalar> ChoiceFunction<S> {
    /// The choice function picking `⪰`-maximal elements.
    pub fn maximal(order: PartialOrder<S>) -> Self {
        ChoiceFunction {
            ground: order.ground().clone(),
            rule: ChoiceRule::Maximal(order),
        }
    }

    /// Tabulates `choose` over every nonempty subset of the ground set,
    /// validating `f(S) ⊆ S` and nonemptiness as it goes. `choose` returns
    /// ground indices.
    pub fn from_table_fn(
        ground: Arc<FiniteDomain<OutcomeValue<S>>>,
        mut choose: impl FnMut(&OutcomeSubset<S>) -> Result<Vec<usize>>,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity((1usize << ground.len()) - 1);
        for subset in crate::domain::nonempty_subsets(&ground) {
            let mut chosen = choose(&subset)?;
            chosen.sort_unstable();
            chosen.dedup();
            if chosen.is_empty() {
                return Err(Error::EmptyChoice(subset.to_string()));
            }
            if let Some(&bad) = chosen.iter().find(|&&i| !subset.contains_index(i)) {
                return Err(Error::ChoiceNotSubset {
                    subset: subset.to_string(),
                    chosen: ground.get(bad).to_string(),
                });
            }
            entries.push(chosen);
        }
        Ok(ChoiceFunction {
            ground,
            rule: ChoiceRule::Table(entries),
        })
    }

    pub fn ground(&self) -> &Arc<FiniteDomain<OutcomeValue<S>>> {
        &self.ground
    }

    /// `f(S)`. The empty set maps to itself.
    pub fn apply(&self, s: &OutcomeSubset<S>) -> Result<OutcomeSubset<S>> {
        if *s.ground() != self.ground {
            return Err(Error::GroundMismatch);
        }
        match &self.rule {
            ChoiceRule::Maximal(ord) => ord.maximal(s),
            ChoiceRule::Table(entries) => {
                if s.is_empty() {
                    return Ok(Subset::empty(self.ground.clone()));
                }
                let idx = (s.bitmask() - 1) as usize;
                Ok(Subset::new(self.ground.clone(), entries[idx].clone()))
            }
        }
    }

    /// True when `self` and `other` agree on every nonempty subset.
    pub fn extensionally_eq(&self, other: &Self) -> Result<bool> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch);
        }
        for subset in crate::domain::nonempty_subsets(&self.ground) {
            if self.apply(&subset)? != other.apply(&subset)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl<S: Scalar> fmt::Display for ChoiceFunction<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.rule {
            ChoiceRule::Maximal(_) => write!(
                f,
                "maximal-elements choice on {} outcomes",
                self.ground.len()
            ),
            ChoiceRule::Table(_) => write!(f, "table choice on {} outcomes", self.ground.len()),
        }
    }
}

/// `max(p)`: the greatest attained scalar outcome, as a singleton subset of
/// the codomain.
pub(crate) fn numeric_max<S: Scalar>(p: &Context<S>) -> Result<OutcomeSubset<S>> {
    let mut best: Option<usize> = None;
    for i in 0..p.moves().len() {
        let v = p.scalar_at(i)?;
        best = match best {
            Some(b) if p.outcomes().get(b).as_scalar().unwrap() >= v => Some(b),
            _ => Some(p.outcome_index_at(i)),
        };
    }
    Ok(Subset::new(
        p.outcomes().clone(),
        vec![best.expect("contexts have at least one move")],
    ))
}

/// `argmax(p)`: every move attaining the greatest scalar outcome.
pub(crate) fn numeric_argmax<S: Scalar>(p: &Context<S>) -> Result<MoveSubset> {
    let max = numeric_max(p)?;
    let top = max.indices()[0];
    let kept = (0..p.moves().len())
        .filter(|&i| p.outcome_index_at(i) == top)
        .collect();
    Ok(Subset::new(p.moves().clone(), kept))
}

/// Order-driven argmax for possibly incomplete preferences: the moves whose
/// outcome no attained outcome strictly dominates.
pub(crate) fn order_argmax<S: Scalar>(ord: &PartialOrder<S>, p: &Context<S>) -> Result<MoveSubset> {
    if *ord.ground() != *p.outcomes() {
        return Err(Error::GroundMismatch);
    }
    let image = p.image();
    let kept = (0..p.moves().len())
        .filter(|&i| {
            let vi = p.outcome_index_at(i);
            !image.indices().iter().any(|&r| ord.gt(r, vi))
        })
        .collect();
    Ok(Subset::new(p.moves().clone(), kept))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;

    /// Oracle for maximal elements: literal pairwise scan against the
    /// definition, independent of the matrix plumbing above.
    fn maximal_oracle<S: Scalar>(ord: &PartialOrder<S>, s: &[usize]) -> Vec<usize> {
        s.iter()
            .copied()
            .filter(|&i| !s.iter().any(|&j| j != i && ord.ge(j, i)))
            .collect()
    }

    #[test]
    fn from_pairs_closes_reflexively_and_transitively() {
        let r = int_domain(&[1, 2, 3]);
        let ord =
            PartialOrder::from_pairs(r, &[(int_val(1), int_val(2)), (int_val(2), int_val(3))])
                .unwrap();
        assert!(ord.ge(0, 0) && ord.ge(1, 1) && ord.ge(2, 2));
        assert!(ord.ge(0, 2), "transitive closure must add (1 ⪰ 3)");
    }

    #[test]
    fn from_pairs_rejects_two_cycles() {
        let r = int_domain(&[1, 2]);
        let err =
            PartialOrder::from_pairs(r, &[(int_val(1), int_val(2)), (int_val(2), int_val(1))])
                .unwrap_err();
        assert!(matches!(err, Error::AntisymmetryViolation { .. }));
    }

    #[test]
    fn from_pairs_rejects_unknown_outcomes() {
        let r = int_domain(&[1, 2]);
        let err = PartialOrder::from_pairs(r, &[(int_val(1), int_val(9))]).unwrap_err();
        assert_eq!(err, Error::UnknownOutcome("9".into()));
    }

    #[test]
    fn maximal_removes_dominated_elements() {
        let r = int_domain(&[1, 2]);
        let ord = PartialOrder::from_pairs(r.clone(), &[(int_val(1), int_val(2))]).unwrap();
        let s = Subset::new(r, vec![0, 1]);
        assert_eq!(ord.maximal(&s).unwrap().indices(), &[0]);
    }

    #[test]
    fn maximal_ignores_dominators_outside_the_subset() {
        // r1 ≻ r2 declared, r3 incomparable; r1 not in S.
        let r = int_domain(&[1, 2, 3]);
        let ord = PartialOrder::from_pairs(r.clone(), &[(int_val(1), int_val(2))]).unwrap();
        let s = Subset::new(r, vec![1, 2]);
        let expect = maximal_oracle(&ord, &[1, 2]);
        assert_eq!(expect, vec![1, 2]);
        assert_eq!(ord.maximal(&s).unwrap().indices(), expect.as_slice());
    }

    #[test]
    fn maximal_of_singleton_is_itself() {
        let r = int_domain(&[1, 2]);
        let ord = PartialOrder::from_pairs(r.clone(), &[]).unwrap();
        let s = Subset::new(r, vec![1]);
        assert_eq!(ord.maximal(&s).unwrap().indices(), &[1]);
    }

    /// Oracle for sub-maximal elements of a totally ordered set: sort the
    /// distinct values descending and take the second.
    fn second_best_oracle(values: &[i64]) -> Vec<i64> {
        let mut distinct: Vec<i64> = values.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() < 2 {
            Vec::new()
        } else {
            vec![distinct[distinct.len() - 2]]
        }
    }

    #[test]
    fn sub_maximal_picks_second_greatest() {
        let r = int_domain(&[10, 20, 30]);
        let ord = PartialOrder::numeric(r.clone()).unwrap();
        let s = Subset::full(r);
        assert_eq!(second_best_oracle(&[10, 20, 30]), vec![20]);
        assert_eq!(ord.sub_maximal(&s).unwrap().to_string(), "[20]");
    }

    #[test]
    fn sub_maximal_of_singleton_is_empty() {
        let r = int_domain(&[10]);
        let ord = PartialOrder::numeric(r.clone()).unwrap();
        let s = Subset::full(r);
        assert!(ord.sub_maximal(&s).unwrap().is_empty());
    }

    #[test]
    fn sub_maximal_of_two_values_is_the_lesser() {
        let r = int_domain(&[10, 20]);
        let ord = PartialOrder::numeric(r.clone()).unwrap();
        let s = Subset::full(r);
        assert_eq!(second_best_oracle(&[10, 20]), vec![10]);
        assert_eq!(ord.sub_maximal(&s).unwrap().to_string(), "[10]");
    }

    #[test]
    fn sub_maximal_branching_poset_keeps_all_covered_elements() {
        // 3 ≻ 1 and 3 ≻ 2 with 1, 2 incomparable: both are second elements
        // of maximal chains.
        let r = int_domain(&[1, 2, 3]);
        let ord = PartialOrder::from_pairs(
            r.clone(),
            &[(int_val(3), int_val(1)), (int_val(3), int_val(2))],
        )
        .unwrap();
        let s = Subset::full(r);
        assert_eq!(ord.sub_maximal(&s).unwrap().to_string(), "[1, 2]");
    }

    #[test]
    fn numeric_max_and_argmax_agree_with_definition() {
        let p = scalar_context(&["a", "b", "c"], &[1, 3], &[(0, 0), (1, 1), (2, 1)]);
        assert_eq!(numeric_max(&p).unwrap().to_string(), "[3]");
        assert_eq!(numeric_argmax(&p).unwrap().to_string(), "[b, c]");
    }

    #[test]
    fn numeric_argmax_selects_all_moves_of_constant_context() {
        let p = scalar_context(&["a", "b"], &[5], &[(0, 0), (1, 0)]);
        assert_eq!(numeric_argmax(&p).unwrap().to_string(), "[a, b]");
    }

    #[test]
    fn numeric_max_on_singleton() {
        let p = scalar_context(&["a"], &[7], &[(0, 0)]);
        assert_eq!(numeric_max(&p).unwrap().to_string(), "[7]");
        assert_eq!(numeric_argmax(&p).unwrap().to_string(), "[a]");
    }

    #[test]
    fn order_argmax_with_incomplete_preference() {
        // Only 1 ≻ 2 declared; 3 incomparable to both.
        let r = int_domain(&[1, 2, 3]);
        let ord = PartialOrder::from_pairs(r.clone(), &[(int_val(1), int_val(2))]).unwrap();

        // p(a) = 2, p(b) = 3: the dominator 1 is unattained, so both moves
        // survive (pairwise scan oracle: nothing in Im strictly dominates).
        let x = FiniteDomain::moves(["a", "b"]).unwrap();
        let p = Context::from_index_assignment(x.clone(), r.clone(), vec![1, 2]);
        assert_eq!(order_argmax(&ord, &p).unwrap().to_string(), "[a, b]");

        // p(a) = 1, p(b) = 2: now 1 is attained and dominates 2.
        let q = Context::from_index_assignment(x, r, vec![0, 1]);
        assert_eq!(order_argmax(&ord, &q).unwrap().to_string(), "[a]");
    }

    #[test]
    fn order_argmax_on_total_order_is_argmax() {
        let r = int_domain(&[1, 3]);
        let ord = PartialOrder::numeric(r.clone()).unwrap();
        let x = FiniteDomain::moves(["a", "b", "c"]).unwrap();
        let p = Context::from_index_assignment(x, r, vec![0, 1, 1]);
        assert_eq!(order_argmax(&ord, &p).unwrap().to_string(), "[b, c]");
    }

    #[test]
    fn choice_table_validates_subset_and_nonemptiness() {
        let r = int_domain(&[1, 2]);
        let err = ChoiceFunction::from_table_fn(r.clone(), |_| Ok(vec![])).unwrap_err();
        assert!(matches!(err, Error::EmptyChoice(_)));
        let err = ChoiceFunction::from_table_fn(r, |_| Ok(vec![1])).unwrap_err();
        assert!(matches!(err, Error::ChoiceNotSubset { .. }));
    }

    #[test]
    fn choice_quantifier_routes_through_the_image() {
        use crate::quantifier::Quantifier;

        let r = int_domain(&[1, 3]);
        let x = FiniteDomain::moves(["a", "b"]).unwrap();
        let p = Context::from_index_assignment(x, r.clone(), vec![0, 1]);

        // Maximal elements of the numeric order: max through the image.
        let numeric = Quantifier::order_max(PartialOrder::numeric(r.clone()).unwrap());
        assert_eq!(numeric.eval(&p).unwrap().to_string(), "[3]");

        // The identity choice returns the image itself.
        let identity =
            ChoiceFunction::from_table_fn(r.clone(), |s| Ok(s.indices().to_vec())).unwrap();
        assert_eq!(Quantifier::choice(identity).eval(&p).unwrap(), p.image());

        // An explicit table applies pointwise: f({1, 3}) = {3}, f single = self.
        let table = ChoiceFunction::from_table_fn(r, |s| {
            Ok(if s.len() == 2 {
                vec![s.indices()[1]]
            } else {
                s.indices().to_vec()
            })
        })
        .unwrap();
        assert_eq!(
            Quantifier::choice(table).eval(&p).unwrap().to_string(),
            "[3]"
        );
    }

    #[test]
    fn enumerate_partial_orders_counts_posets() {
        // Labeled posets: 1 element -> 1, 2 elements -> 3, 3 elements -> 19.
        assert_eq!(enumerate_partial_orders(&int_domain(&[1])).len(), 1);
        assert_eq!(enumerate_partial_orders(&int_domain(&[1, 2])).len(), 3);
        assert_eq!(enumerate_partial_orders(&int_domain(&[1, 2, 3])).len(), 19);
    }

    #[test]
    fn maximal_is_nonempty_on_every_poset_and_subset() {
        let r = int_domain(&[1, 2, 3]);
        for ord in enumerate_partial_orders(&r) {
            for s in crate::domain::nonempty_subsets(&r) {
                let m = ord.maximal(&s).unwrap();
                assert!(!m.is_empty());
                assert!(m.is_subset_of(&s).unwrap());
                assert_eq!(m.indices(), maximal_oracle(&ord, s.indices()).as_slice());
            }
        }
    }
}
