//! Problem files: JSON descriptions of decision problems.
//!
//! A problem either gives a direct context (`moves`, `outcomes`, `context`)
//! or induces one from a joint outcome rule (`profile`, `focal_player`,
//! `others`). Outcome values are written as integers, `"n/d"` rational
//! strings, bare strings (symbols), or arrays of rationals (vectors).

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context as _, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Deserialize;

use hodt::domain::OutcomeValue;
use hodt::reflexive::ProfileRule as GenericProfileRule;
use hodt::{Context, FiniteDomain, Move, Outcome, PartialOrder, ProfileRule, Rat};

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum NumSpec {
    Int(i64),
    Str(String),
}

impl NumSpec {
    pub fn to_rat(&self) -> Result<Rat> {
        match self {
            NumSpec::Int(n) => Ok(Rat::from_integer((*n).into())),
            NumSpec::Str(s) => {
                parse_rat(s).with_context(|| format!("`{s}` is not a rational (use n or n/d)"))
            }
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum ValueSpec {
    Int(i64),
    Str(String),
    Vec(Vec<NumSpec>),
}

impl ValueSpec {
    pub fn to_outcome(&self) -> Result<Outcome> {
        Ok(match self {
            ValueSpec::Int(n) => OutcomeValue::scalar(Rat::from_integer((*n).into())),
            ValueSpec::Str(s) => match parse_rat(s) {
                Some(r) => OutcomeValue::scalar(r),
                None => OutcomeValue::symbol(s.clone()),
            },
            ValueSpec::Vec(components) => OutcomeValue::vector(
                components
                    .iter()
                    .map(NumSpec::to_rat)
                    .collect::<Result<Vec<_>>>()?,
            ),
        })
    }
}

/// `n` or `n/d` with a nonzero denominator.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = match den {
        Some(d) => d.parse().ok()?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return None;
    }
    Some(Rat::new(n, d))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProblemFile {
    moves: Option<Vec<String>>,
    outcomes: Vec<ValueSpec>,
    context: Option<BTreeMap<String, ValueSpec>>,
    order: Option<Vec<(ValueSpec, ValueSpec)>>,
    profile: Option<ProfileSpec>,
    focal_player: Option<usize>,
    others: Option<Vec<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileSpec {
    players: Vec<Vec<String>>,
    rule: BTreeMap<String, ValueSpec>,
}

/// A validated problem: the focal context plus whatever optional structure
/// (order, profile rule) the file declared.
pub struct Problem {
    pub moves: Arc<FiniteDomain<Move>>,
    pub outcomes: Arc<FiniteDomain<Outcome>>,
    pub context: Context,
    pub order: Option<PartialOrder>,
    pub profile: Option<(ProfileRule, usize)>,
}

impl Problem {
    pub fn load(path: &Path) -> Result<Problem> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading problem file {}", path.display()))?;
        let file: ProblemFile = serde_json::from_str(&text)
            .with_context(|| format!("parsing problem file {}", path.display()))?;
        Problem::from_file(file)
    }

    fn from_file(file: ProblemFile) -> Result<Problem> {
        let outcomes = FiniteDomain::outcomes(
            file.outcomes
                .iter()
                .map(ValueSpec::to_outcome)
                .collect::<Result<Vec<_>>>()?,
        )?;

        let direct = file.context.is_some();
        let via_profile = file.profile.is_some();
        if direct == via_profile {
            bail!("exactly one of `context` or `profile` (with `focal_player` and `others`) must be present");
        }

        let (moves, context, profile) = if direct {
            let names = match &file.moves {
                Some(names) => names,
                None => bail!("`context` problems need a `moves` list"),
            };
            if file.focal_player.is_some() || file.others.is_some() {
                bail!("`focal_player` and `others` only apply to `profile` problems");
            }
            let moves = FiniteDomain::moves(names.iter().map(String::as_str))?;
            let assignment = file
                .context
                .as_ref()
                .unwrap()
                .iter()
                .map(|(m, v)| Ok((Move::from(m.as_str()), v.to_outcome()?)))
                .collect::<Result<Vec<_>>>()?;
            let context = Context::new(moves.clone(), outcomes.clone(), &assignment)?;
            (moves, context, None)
        } else {
            if file.moves.is_some() {
                bail!("`moves` only applies to `context` problems (profiles carry per-player move lists)");
            }
            let spec = file.profile.as_ref().unwrap();
            let focal = match file.focal_player {
                Some(f) => f,
                None => bail!("`profile` problems need `focal_player`"),
            };
            let others = match &file.others {
                Some(o) => o,
                None => bail!("`profile` problems need `others`"),
            };
            let rule = build_profile_rule(spec, &outcomes)?;
            let context = rule.induce(
                focal,
                &others
                    .iter()
                    .map(|m| Move::from(m.as_str()))
                    .collect::<Vec<_>>(),
            )?;
            let moves = context.moves().clone();
            (moves, context, Some((rule, focal)))
        };

        let order = match &file.order {
            None => None,
            Some(pairs) => {
                let resolved = pairs
                    .iter()
                    .map(|(a, b)| Ok((a.to_outcome()?, b.to_outcome()?)))
                    .collect::<Result<Vec<_>>>()?;
                Some(PartialOrder::from_pairs(outcomes.clone(), &resolved)?)
            }
        };

        Ok(Problem {
            moves,
            outcomes,
            context,
            order,
            profile,
        })
    }
}

fn build_profile_rule(
    spec: &ProfileSpec,
    outcomes: &Arc<FiniteDomain<Outcome>>,
) -> Result<ProfileRule> {
    if spec.players.is_empty() {
        bail!("`profile.players` must list at least one player");
    }
    let players = spec
        .players
        .iter()
        .map(|names| FiniteDomain::moves(names.iter().map(String::as_str)).map_err(Into::into))
        .collect::<Result<Vec<_>>>()?;
    let entries = spec
        .rule
        .iter()
        .map(|(profile, value)| {
            let moves: Vec<Move> = profile.split(',').map(|m| Move::from(m.trim())).collect();
            Ok((moves, value.to_outcome()?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GenericProfileRule::new(
        players,
        outcomes.clone(),
        &entries,
    )?)
}

/// `X=<n>,R=<m>`.
pub fn parse_signature(s: &str) -> Result<(usize, usize)> {
    let mut x = None;
    let mut r = None;
    for part in s.split(',') {
        let (key, value) = part
            .split_once('=')
            .with_context(|| format!("bad signature component `{part}`"))?;
        let n: usize = value
            .trim()
            .parse()
            .with_context(|| format!("bad signature count `{value}`"))?;
        match key.trim() {
            "X" => x = Some(n),
            "R" => r = Some(n),
            other => bail!("unknown signature key `{other}` (use X and R)"),
        }
    }
    match (x, r) {
        (Some(x), Some(r)) if x > 0 && r > 0 => Ok((x, r)),
        (Some(_), Some(_)) => bail!("signature counts must be positive"),
        _ => bail!("signature must name both X and R, e.g. X=3,R=2"),
    }
}
