//! Reflexive agents: fixpoint goals over square signatures, voting judges,
//! coordination, and the induction of one player's context from a joint
//! outcome rule.
//!
//! These agents need moves and outcomes to line up. A context is *square*
//! when its move set and outcome ground set are the same set, element for
//! element: position `i`'s move must render identically to position `i`'s
//! outcome. Fixpoints are then positional: move `i` is fixed exactly when it
//! is assigned outcome `i`.

use std::sync::Arc;

use crate::domain::{Context, FiniteDomain, Move, MoveSubset, OutcomeSubset, OutcomeValue, Subset};
use crate::error::Error;
use crate::order::PartialOrder;
use crate::scalar::Scalar;
use crate::Result;

/// Validates that the context's moves and outcomes form the same ground set.
pub(crate) fn check_square<S: Scalar>(p: &Context<S>) -> Result<()> {
    if p.moves().len() != p.outcomes().len() {
        return Err(Error::DomainCodomainMismatch(format!(
            "{} moves vs {} outcomes",
            p.moves().len(),
            p.outcomes().len()
        )));
    }
    for i in 0..p.moves().len() {
        let m = p.moves().get(i);
        let r = p.outcomes().get(i);
        if m.name() != r.to_string() {
            return Err(Error::DomainCodomainMismatch(format!(
                "position {i} pairs move `{m}` with outcome `{r}`"
            )));
        }
    }
    Ok(())
}

/// Indices fixed by the context: `p(x) = x`, positionally.
pub(crate) fn fixpoint_indices<S: Scalar>(p: &Context<S>) -> Vec<usize> {
    (0..p.moves().len())
        .filter(|&i| p.outcome_index_at(i) == i)
        .collect()
}

/// The fixpoint selection: fixed moves, totalized to all of `X` when no
/// fixpoint exists.
pub(crate) fn fix_moves<S: Scalar>(p: &Context<S>) -> Result<MoveSubset> {
    check_square(p)?;
    let fixed = fixpoint_indices(p);
    Ok(if fixed.is_empty() {
        Subset::full(p.moves().clone())
    } else {
        Subset::new(p.moves().clone(), fixed)
    })
}

/// The fixpoint quantifier: outcomes of fixed moves (which coincide with the
/// fixed moves themselves on a square signature), totalized likewise.
pub(crate) fn fix_outcomes<S: Scalar>(p: &Context<S>) -> Result<OutcomeSubset<S>> {
    check_square(p)?;
    let fixed = fixpoint_indices(p);
    Ok(if fixed.is_empty() {
        Subset::full(p.outcomes().clone())
    } else {
        Subset::new(p.outcomes().clone(), fixed)
    })
}

/// Maximal attained candidates under the judge's preference order.
pub(crate) fn voting_judge<S: Scalar>(
    ord: &PartialOrder<S>,
    p: &Context<S>,
) -> Result<OutcomeSubset<S>> {
    check_square(p)?;
    if *ord.ground() != *p.outcomes() {
        return Err(Error::GroundMismatch);
    }
    ord.maximal(&p.image())
}

/// Simple majority over three values from a binary candidate set.
pub fn majority<T: Clone + Eq>(a: &T, b: &T, c: &T) -> Result<T> {
    if a == b || a == c {
        Ok(a.clone())
    } else if b == c {
        Ok(b.clone())
    } else {
        Err(Error::NonBinaryCandidates)
    }
}

/// A joint outcome rule: per-player move sets and a total map from move
/// profiles to outcomes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileRule<S> {
    players: Vec<Arc<FiniteDomain<Move>>>,
    outcomes: Arc<FiniteDomain<OutcomeValue<S>>>,
    /// Outcome index per profile rank (mixed radix over player move sets,
    /// last player fastest).
    table: Vec<usize>,
}

impl<S: Scalar> ProfileRule<S> {
    /// Validates that `entries` cover the full product of move sets exactly
    /// once with outcomes from the ground set.
    pub fn new(
        players: Vec<Arc<FiniteDomain<Move>>>,
        outcomes: Arc<FiniteDomain<OutcomeValue<S>>>,
        entries: &[(Vec<Move>, OutcomeValue<S>)],
    ) -> Result<Self> {
        assert!(
            !players.is_empty(),
            "profile rules need at least one player"
        );
        let size: usize = players.iter().map(|d| d.len()).product();
        let mut table: Vec<Option<usize>> = vec![None; size];
        for (profile, value) in entries {
            if profile.len() != players.len() {
                return Err(Error::ArityMismatch {
                    expected: players.len(),
                    got: profile.len(),
                });
            }
            let mut indices = Vec::with_capacity(profile.len());
            for (pi, m) in profile.iter().enumerate() {
                indices.push(
                    players[pi]
                        .index_of(m)
                        .ok_or_else(|| Error::UnknownMove(m.to_string()))?,
                );
            }
            let rank = Self::rank_of(&players, &indices);
            let vi = outcomes
                .index_of(value)
                .ok_or_else(|| Error::UnknownOutcome(value.to_string()))?;
            if table[rank].is_some() {
                return Err(Error::DuplicateProfile(render_profile(profile)));
            }
            table[rank] = Some(vi);
        }
        let mut built = Vec::with_capacity(size);
        for (rank, slot) in table.into_iter().enumerate() {
            match slot {
                Some(vi) => built.push(vi),
                None => {
                    let profile = Self::profile_at(&players, rank);
                    return Err(Error::MissingProfile(render_profile(&profile)));
                }
            }
        }
        Ok(ProfileRule {
            players,
            outcomes,
            table: built,
        })
    }

    fn rank_of(players: &[Arc<FiniteDomain<Move>>], indices: &[usize]) -> usize {
        players
            .iter()
            .zip(indices)
            .fold(0usize, |acc, (d, &i)| acc * d.len() + i)
    }

    fn profile_at(players: &[Arc<FiniteDomain<Move>>], mut rank: usize) -> Vec<Move> {
        let mut rev = Vec::with_capacity(players.len());
        for d in players.iter().rev() {
            rev.push(d.get(rank % d.len()).clone());
            rank /= d.len();
        }
        rev.reverse();
        rev
    }

    pub fn player_count(&self) -> usize {
        self.players.len()
    }

    pub fn player_moves(&self, player: usize) -> &Arc<FiniteDomain<Move>> {
        &self.players[player]
    }

    pub fn outcomes(&self) -> &Arc<FiniteDomain<OutcomeValue<S>>> {
        &self.outcomes
    }

    /// Outcome index for a profile given by per-player move indices.
    pub fn outcome_at(&self, indices: &[usize]) -> usize {
        self.table[Self::rank_of(&self.players, indices)]
    }

    /// The focal player's decision context once every other player's move is
    /// fixed. `others` lists the fixed moves in player order, skipping the
    /// focal player.
    pub fn induce(&self, player: usize, others: &[Move]) -> Result<Context<S>> {
        if player >= self.players.len() {
            return Err(Error::IndexOutOfRange {
                index: player,
                count: self.players.len(),
            });
        }
        if others.len() + 1 != self.players.len() {
            return Err(Error::IncompleteOthers {
                expected: self.players.len() - 1,
                got: others.len(),
            });
        }
        let mut fixed = Vec::with_capacity(self.players.len());
        let mut k = 0usize;
        for pi in 0..self.players.len() {
            if pi == player {
                fixed.push(usize::MAX); // focal slot, substituted below
            } else {
                let m = &others[k];
                k += 1;
                fixed.push(
                    self.players[pi]
                        .index_of(m)
                        .ok_or_else(|| Error::UnknownMove(m.to_string()))?,
                );
            }
        }
        let focal = self.players[player].clone();
        let assignment = (0..focal.len())
            .map(|mi| {
                let mut profile = fixed.clone();
                profile[player] = mi;
                self.table[Self::rank_of(&self.players, &profile)]
            })
            .collect();
        Ok(Context::from_index_assignment(
            focal,
            self.outcomes.clone(),
            assignment,
        ))
    }
}

fn render_profile(profile: &[Move]) -> String {
    profile
        .iter()
        .map(Move::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// The coordinating agent for one of two players: prefers moves that lead
/// both players to the same place.
///
/// Requires the outcome rule to be a bijection from joint profiles onto the
/// outcome ground set, so each outcome decodes back to the profile that
/// produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinatingSelection<S> {
    player: usize,
    players: [Arc<FiniteDomain<Move>>; 2],
    outcomes: Arc<FiniteDomain<OutcomeValue<S>>>,
    /// Per outcome index, the (player 0, player 1) move indices that produce it.
    profile_of: Vec<[usize; 2]>,
}

impl<S: Scalar> CoordinatingSelection<S> {
    pub fn new(rule: &ProfileRule<S>, player: usize) -> Result<Self> {
        if rule.player_count() != 2 {
            return Err(Error::ArityMismatch {
                expected: 2,
                got: rule.player_count(),
            });
        }
        if player >= 2 {
            return Err(Error::IndexOutOfRange {
                index: player,
                count: 2,
            });
        }
        let n0 = rule.players[0].len();
        let n1 = rule.players[1].len();
        if n0 * n1 != rule.outcomes.len() {
            return Err(Error::CodomainNotProduct);
        }
        let mut profile_of: Vec<Option<[usize; 2]>> = vec![None; rule.outcomes.len()];
        for i0 in 0..n0 {
            for i1 in 0..n1 {
                let vi = rule.outcome_at(&[i0, i1]);
                if profile_of[vi].is_some() {
                    return Err(Error::CodomainNotProduct);
                }
                profile_of[vi] = Some([i0, i1]);
            }
        }
        Ok(CoordinatingSelection {
            player,
            players: [rule.players[0].clone(), rule.players[1].clone()],
            outcomes: rule.outcomes.clone(),
            profile_of: profile_of.into_iter().map(Option::unwrap).collect(),
        })
    }

    pub fn player(&self) -> usize {
        self.player
    }

    /// Moves `x` with `x = π_(1-i)(p(x))`, totalized to the full move set
    /// when no such move exists.
    pub(crate) fn eval(&self, p: &Context<S>) -> Result<MoveSubset> {
        if *p.moves() != self.players[self.player] {
            return Err(Error::SignatureMismatch(
                "context moves differ from the coordinating player's move set".into(),
            ));
        }
        if *p.outcomes() != self.outcomes {
            return Err(Error::SignatureMismatch(
                "context outcomes differ from the rule's outcome set".into(),
            ));
        }
        let other = 1 - self.player;
        let kept: Vec<usize> = (0..p.moves().len())
            .filter(|&i| {
                let profile = self.profile_of[p.outcome_index_at(i)];
                self.players[other].get(profile[other]).name() == p.moves().get(i).name()
            })
            .collect();
        Ok(if kept.is_empty() {
            Subset::full(p.moves().clone())
        } else {
            Subset::new(p.moves().clone(), kept)
        })
    }
}
