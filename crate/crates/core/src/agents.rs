//! The heuristic agent zoo: averaging, satisficing, second-best, honest,
//! dishonest, and safe agents.
//!
//! These are the evaluation kernels behind the corresponding
//! [`Quantifier`](crate::quantifier::Quantifier) variants. Averages are
//! compared without division: `|r - sum/n|` is minimal exactly when
//! `|r*n - sum|` is, so tie detection stays exact over any ordered ring.

use crate::domain::{Context, Move, OutcomeSubset, OutcomeValue, Subset};
use crate::error::Error;
use crate::order::PartialOrder;
use crate::scalar::{count_as, Scalar};
use crate::Result;

/// Attained outcomes closest to the average of the image (each attained
/// value counted once).
pub(crate) fn averaging<S: Scalar>(p: &Context<S>) -> Result<OutcomeSubset<S>> {
    let image = p.image();
    let sum = image.iter().try_fold(S::zero(), |acc, v| {
        v.as_scalar()
            .map(|s| acc + s.clone())
            .ok_or(Error::NonNumericOutcomes)
    })?;
    closest_to_scaled_average(p, &image, sum, image.len())
}

/// Attained outcomes closest to the move-weighted average (each move's
/// value counted with multiplicity).
pub(crate) fn weighted_averaging<S: Scalar>(p: &Context<S>) -> Result<OutcomeSubset<S>> {
    let image = p.image();
    let mut sum = S::zero();
    for i in 0..p.moves().len() {
        sum = sum + p.scalar_at(i)?.clone();
    }
    closest_to_scaled_average(p, &image, sum, p.moves().len())
}

/// Members of `image` minimizing `|r - sum/n|`, compared as `|r*n - sum|`.
fn closest_to_scaled_average<S: Scalar>(
    p: &Context<S>,
    image: &OutcomeSubset<S>,
    sum: S,
    n: usize,
) -> Result<OutcomeSubset<S>> {
    let n_s: S = count_as(n);
    let mut best: Option<S> = None;
    let mut kept: Vec<usize> = Vec::new();
    for &i in image.indices() {
        let r = p
            .outcomes()
            .get(i)
            .as_scalar()
            .ok_or(Error::NonNumericOutcomes)?;
        let key = (r.clone() * n_s.clone() - sum.clone()).abs();
        match &best {
            Some(b) if key > *b => {}
            Some(b) if key == *b => kept.push(i),
            _ => {
                best = Some(key);
                kept = vec![i];
            }
        }
    }
    Ok(Subset::new(p.outcomes().clone(), kept))
}

/// Ground outcomes within the closed ball of the given radius around the
/// distinguished move's outcome, by exact squared distance.
pub(crate) fn ideal_ball<S: Scalar>(
    center: &Move,
    radius: &S,
    p: &Context<S>,
) -> Result<OutcomeSubset<S>> {
    let ci = p
        .moves()
        .index_of(center)
        .ok_or_else(|| Error::UnknownMove(center.to_string()))?;
    let target = p.value_at(ci);
    let r2 = radius.clone() * radius.clone();
    let mut kept = Vec::new();
    for (i, w) in p.outcomes().iter().enumerate() {
        if squared_distance(w, target)? <= r2 {
            kept.push(i);
        }
    }
    Ok(Subset::new(p.outcomes().clone(), kept))
}

fn squared_distance<S: Scalar>(a: &OutcomeValue<S>, b: &OutcomeValue<S>) -> Result<S> {
    match (a, b) {
        (OutcomeValue::Scalar(x), OutcomeValue::Scalar(y)) => {
            let d = x.clone() - y.clone();
            Ok(d.clone() * d)
        }
        (OutcomeValue::Vector(xs), OutcomeValue::Vector(ys)) => {
            if xs.len() != ys.len() {
                return Err(Error::VectorLengthMismatch {
                    expected: xs.len(),
                    got: ys.len(),
                });
            }
            let mut acc = S::zero();
            for (x, y) in xs.iter().zip(ys) {
                let d = x.clone() - y.clone();
                acc = acc + d.clone() * d;
            }
            Ok(acc)
        }
        _ => Err(Error::NonNumericOutcomes),
    }
}

/// Sub-maximal attained outcomes under the numeric order: the second price,
/// so to speak. Empty when the image has a single distinct value.
pub(crate) fn second_best<S: Scalar>(p: &Context<S>) -> Result<OutcomeSubset<S>> {
    let ord = PartialOrder::numeric(p.outcomes().clone())?;
    ord.sub_maximal(&p.image())
}

/// Greatest outcome attainable through the permitted moves.
pub(crate) fn honest<S: Scalar>(permitted: &[Move], p: &Context<S>) -> Result<OutcomeSubset<S>> {
    if permitted.is_empty() {
        return Err(Error::EmptyPermissibleSet);
    }
    let mut best: Option<usize> = None;
    for m in permitted {
        let mi = p
            .moves()
            .index_of(m)
            .ok_or_else(|| Error::UnknownMove(m.to_string()))?;
        let v = p.scalar_at(mi)?;
        best = match best {
            Some(b) if p.outcomes().get(b).as_scalar().unwrap() >= v => Some(b),
            _ => Some(p.outcome_index_at(mi)),
        };
    }
    Ok(Subset::new(p.outcomes().clone(), vec![best.unwrap()]))
}

/// Global maximum when some illicit move pays strictly more than the
/// threshold; honest behaviour over the remaining moves otherwise.
pub(crate) fn dishonest<S: Scalar>(
    illicit: &[Move],
    threshold: &S,
    p: &Context<S>,
) -> Result<OutcomeSubset<S>> {
    let mut tempted = false;
    for m in illicit {
        let mi = p
            .moves()
            .index_of(m)
            .ok_or_else(|| Error::UnknownMove(m.to_string()))?;
        if p.scalar_at(mi)? > threshold {
            tempted = true;
        }
    }
    if tempted {
        return crate::order::numeric_max(p);
    }
    let permitted: Vec<Move> = p
        .moves()
        .iter()
        .filter(|m| !illicit.contains(m))
        .cloned()
        .collect();
    honest(&permitted, p)
}

/// Most unavoidable attained outcomes: maximal preimage count, ties kept.
pub(crate) fn safe<S: Scalar>(p: &Context<S>) -> OutcomeSubset<S> {
    let mut counts = vec![0usize; p.outcomes().len()];
    for i in 0..p.moves().len() {
        counts[p.outcome_index_at(i)] += 1;
    }
    let top = counts.iter().copied().max().unwrap_or(0);
    let kept = (0..p.outcomes().len())
        .filter(|&i| counts[i] == top && top > 0)
        .collect();
    Subset::new(p.outcomes().clone(), kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::FiniteDomain;
    use crate::testutil::*;
    use crate::Rat;

    #[test]
    fn averaging_keeps_all_ties() {
        // Im = {0, 2}, average 1, both at distance 1.
        let p = scalar_context(&["a", "b", "c"], &[0, 2], &[(0, 0), (1, 1), (2, 1)]);
        assert_eq!(averaging(&p).unwrap().to_string(), "[0, 2]");
    }

    #[test]
    fn averaging_of_constant_context_is_the_value() {
        let p = scalar_context(&["a", "b"], &[3], &[(0, 0), (1, 0)]);
        assert_eq!(averaging(&p).unwrap().to_string(), "[3]");
    }

    #[test]
    fn averaging_picks_unique_closest() {
        // Im = {0, 1, 5}, average 2, distances 2, 1, 3.
        let p = scalar_context(&["a", "b", "c"], &[0, 1, 5], &[(0, 0), (1, 1), (2, 2)]);
        assert_eq!(averaging(&p).unwrap().to_string(), "[1]");
    }

    #[test]
    fn weighted_averaging_counts_multiplicities() {
        // Average over moves is 4/3: |0 - 4/3| = 4/3 > |2 - 4/3| = 2/3.
        let p = scalar_context(&["a", "b", "c"], &[0, 2], &[(0, 0), (1, 1), (2, 1)]);
        assert_eq!(weighted_averaging(&p).unwrap().to_string(), "[2]");
    }

    #[test]
    fn weighted_averaging_of_constant_context() {
        let p = scalar_context(&["a", "b"], &[3], &[(0, 0), (1, 0)]);
        assert_eq!(weighted_averaging(&p).unwrap().to_string(), "[3]");
    }

    #[test]
    fn averagers_coincide_on_bijective_contexts() {
        let p = scalar_context(&["a", "b", "c"], &[0, 1, 5], &[(0, 0), (1, 1), (2, 2)]);
        assert_eq!(averaging(&p).unwrap(), weighted_averaging(&p).unwrap());
    }

    #[test]
    fn ideal_ball_uses_exact_squared_distances() {
        // Squared distances from (0,0): 0, 1, 25; radius 1 keeps the first two.
        let r = FiniteDomain::outcomes(vec![vec_val(&[0, 0]), vec_val(&[1, 0]), vec_val(&[3, 4])])
            .unwrap();
        let x = FiniteDomain::moves(["a"]).unwrap();
        let p = crate::domain::Context::from_index_assignment(x, r, vec![0]);
        let out = ideal_ball(&Move::from("a"), &Rat::from_integer(1.into()), &p).unwrap();
        assert_eq!(out.to_string(), "[(0, 0), (1, 0)]");
    }

    #[test]
    fn ideal_ball_radius_zero_is_the_attained_point() {
        let p = scalar_context(&["a", "b"], &[1, 5], &[(0, 0), (1, 1)]);
        let out = ideal_ball(&Move::from("a"), &Rat::from_integer(0.into()), &p).unwrap();
        assert_eq!(out.to_string(), "[1]");
    }

    #[test]
    fn second_best_on_wine_prices() {
        let p = scalar_context(
            &["w1", "w2", "w3"],
            &[10, 20, 30],
            &[(0, 0), (1, 1), (2, 2)],
        );
        assert_eq!(second_best(&p).unwrap().to_string(), "[20]");
    }

    #[test]
    fn second_best_is_empty_on_single_valued_images() {
        let p = scalar_context(&["a", "b"], &[10, 20], &[(0, 0), (1, 0)]);
        assert!(second_best(&p).unwrap().is_empty());
    }

    #[test]
    fn second_best_after_collapsing_duplicates() {
        // Image {5, 7}: the second-greatest distinct value is 5.
        let p = scalar_context(&["a", "b", "c"], &[5, 7], &[(0, 0), (1, 0), (2, 1)]);
        assert_eq!(second_best(&p).unwrap().to_string(), "[5]");
    }

    #[test]
    fn honest_maximizes_over_permitted_moves() {
        let p = scalar_context(&["a", "b", "c"], &[5, 7, 9], &[(0, 0), (1, 1), (2, 2)]);
        let out = honest(&[Move::from("a"), Move::from("b")], &p).unwrap();
        assert_eq!(out.to_string(), "[7]");
    }

    #[test]
    fn honest_over_all_moves_is_plain_max() {
        let p = scalar_context(&["a", "b", "c"], &[5, 7, 9], &[(0, 0), (1, 1), (2, 2)]);
        let all: Vec<Move> = p.moves().iter().cloned().collect();
        assert_eq!(
            honest(&all, &p).unwrap(),
            crate::order::numeric_max(&p).unwrap()
        );
    }

    #[test]
    fn honest_with_one_permitted_move_is_forced() {
        let p = scalar_context(&["a", "b"], &[5, 7], &[(0, 0), (1, 1)]);
        assert_eq!(honest(&[Move::from("a")], &p).unwrap().to_string(), "[5]");
    }

    #[test]
    fn honest_rejects_empty_permissible_set() {
        let p = scalar_context(&["a"], &[5], &[(0, 0)]);
        assert_eq!(honest(&[], &p).unwrap_err(), Error::EmptyPermissibleSet);
    }

    #[test]
    fn dishonest_above_threshold_takes_the_global_max() {
        let p = scalar_context(&["a", "b", "c"], &[5, 7, 9], &[(0, 0), (1, 1), (2, 2)]);
        let out = dishonest(&[Move::from("c")], &Rat::from_integer(8.into()), &p).unwrap();
        assert_eq!(out.to_string(), "[9]");
    }

    #[test]
    fn dishonest_at_or_below_threshold_stays_honest() {
        let p = scalar_context(&["a", "b", "c"], &[5, 7, 9], &[(0, 0), (1, 1), (2, 2)]);
        let out = dishonest(&[Move::from("c")], &Rat::from_integer(10.into()), &p).unwrap();
        assert_eq!(out.to_string(), "[7]");
        // Boundary: 9 > 9 is false, so still honest.
        let out = dishonest(&[Move::from("c")], &Rat::from_integer(9.into()), &p).unwrap();
        assert_eq!(out.to_string(), "[7]");
    }

    #[test]
    fn dishonest_with_no_illicit_moves_is_honest_everywhere() {
        let p = scalar_context(&["a", "b", "c"], &[5, 7, 9], &[(0, 0), (1, 1), (2, 2)]);
        let all: Vec<Move> = p.moves().iter().cloned().collect();
        assert_eq!(
            dishonest(&[], &Rat::from_integer(0.into()), &p).unwrap(),
            honest(&all, &p).unwrap()
        );
    }

    #[test]
    fn dishonest_errors_when_every_move_is_illicit_and_untempting() {
        let p = scalar_context(&["a"], &[5], &[(0, 0)]);
        let err = dishonest(&[Move::from("a")], &Rat::from_integer(10.into()), &p).unwrap_err();
        assert_eq!(err, Error::EmptyPermissibleSet);
    }

    #[test]
    fn safe_prefers_most_unavoidable_outcomes() {
        // Preimage counts 1, 2, 3 over three beaches.
        let r = FiniteDomain::outcomes(vec![sym("b1"), sym("b2"), sym("b3")]).unwrap();
        let x = FiniteDomain::moves(["h1", "h2", "h3", "h4", "h5", "h6"]).unwrap();
        let p = crate::domain::Context::from_index_assignment(x, r, vec![0, 1, 1, 2, 2, 2]);
        assert_eq!(safe(&p).to_string(), "[b3]");
    }

    #[test]
    fn safe_on_injective_contexts_is_the_image() {
        let p = scalar_context(&["a", "b"], &[1, 2], &[(0, 0), (1, 1)]);
        assert_eq!(safe(&p), p.image());
    }

    #[test]
    fn safe_keeps_count_ties() {
        let p = scalar_context(
            &["a", "b", "c", "d"],
            &[1, 2],
            &[(0, 0), (1, 0), (2, 1), (3, 1)],
        );
        assert_eq!(safe(&p).to_string(), "[1, 2]");
    }
}
