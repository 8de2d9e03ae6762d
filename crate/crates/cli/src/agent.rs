//! Agent files: JSON descriptions of built-in or tabulated agents.
//!
//! An agent kind resolves to a quantifier, a selection function, or both.
//! Order-driven kinds take their preference order from the problem file;
//! the coordinating kind takes the problem's profile rule.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context as _, Result};
use serde::Deserialize;

use hodt::quantifier::{
    QuantifierTable as GenericQuantifierTable, SelectionTable as GenericSelectionTable,
};
use hodt::{Context, FiniteDomain, Move, PartialOrder, ProfileRule, Quantifier, SelectionFunction};

use crate::problem::{NumSpec, ValueSpec};

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum AgentFile {
    Max,
    Argmax,
    OrderMax,
    OrderSelection,
    Averaging,
    WeightedAveraging,
    IdealMove {
        center: String,
        radius: NumSpec,
    },
    SecondBest,
    Honest {
        permitted: Vec<String>,
    },
    Dishonest {
        illicit: Vec<String>,
        threshold: NumSpec,
    },
    Safe,
    Fix,
    Keynesian,
    VotingJudge,
    Coordinating {
        player: usize,
    },
    Table {
        role: TableRole,
        moves: Vec<String>,
        outcomes: Vec<ValueSpec>,
        entries: Vec<TableEntry>,
    },
}

#[derive(Debug, Deserialize, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum TableRole {
    Quantifier,
    Selection,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    context: BTreeMap<String, ValueSpec>,
    output: Vec<ValueSpec>,
}

impl AgentFile {
    pub fn load(path: &Path) -> Result<AgentFile> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading agent file {}", path.display()))?;
        serde_json::from_str(&text)
            .with_context(|| format!("parsing agent file {}", path.display()))
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            AgentFile::Max => "max",
            AgentFile::Argmax => "argmax",
            AgentFile::OrderMax => "order-max",
            AgentFile::OrderSelection => "order-selection",
            AgentFile::Averaging => "averaging",
            AgentFile::WeightedAveraging => "weighted-averaging",
            AgentFile::IdealMove { .. } => "ideal-move",
            AgentFile::SecondBest => "second-best",
            AgentFile::Honest { .. } => "honest",
            AgentFile::Dishonest { .. } => "dishonest",
            AgentFile::Safe => "safe",
            AgentFile::Fix => "fix",
            AgentFile::Keynesian => "keynesian",
            AgentFile::VotingJudge => "voting-judge",
            AgentFile::Coordinating { .. } => "coordinating",
            AgentFile::Table { .. } => "table",
        }
    }

    /// Kinds whose contexts need moves and outcomes to be the same set.
    pub fn needs_square_signature(&self) -> bool {
        matches!(
            self,
            AgentFile::Fix | AgentFile::Keynesian | AgentFile::VotingJudge
        )
    }
}

/// What an agent file resolves to against a concrete problem environment.
pub struct ResolvedAgent {
    pub name: &'static str,
    pub quantifier: Option<Quantifier>,
    pub selection: Option<SelectionFunction>,
}

/// The pieces of a problem an agent may depend on.
pub struct Env<'a> {
    pub order: Option<&'a PartialOrder>,
    pub profile: Option<&'a (ProfileRule, usize)>,
}

impl Env<'_> {
    const EMPTY: Env<'static> = Env {
        order: None,
        profile: None,
    };

    pub fn empty() -> Env<'static> {
        Env::EMPTY
    }
}

pub fn resolve(agent: &AgentFile, env: &Env) -> Result<ResolvedAgent> {
    let name = agent.kind_name();
    let mut quantifier = None;
    let mut selection = None;
    match agent {
        AgentFile::Max => quantifier = Some(Quantifier::max()),
        AgentFile::Argmax => selection = Some(SelectionFunction::argmax()),
        AgentFile::OrderMax => {
            quantifier = Some(Quantifier::order_max(require_order(env, name)?.clone()));
        }
        AgentFile::OrderSelection => {
            selection = Some(SelectionFunction::order_argmax(
                require_order(env, name)?.clone(),
            ));
        }
        AgentFile::Averaging => quantifier = Some(Quantifier::averaging()),
        AgentFile::WeightedAveraging => quantifier = Some(Quantifier::weighted_averaging()),
        AgentFile::IdealMove { center, radius } => {
            let center = Move::from(center.as_str());
            quantifier = Some(Quantifier::ideal_move(center.clone(), radius.to_rat()?)?);
            selection = Some(SelectionFunction::constant(center));
        }
        AgentFile::SecondBest => quantifier = Some(Quantifier::second_best()),
        AgentFile::Honest { permitted } => {
            quantifier = Some(Quantifier::honest(
                permitted.iter().map(|m| Move::from(m.as_str())).collect(),
            )?);
        }
        AgentFile::Dishonest { illicit, threshold } => {
            quantifier = Some(Quantifier::dishonest(
                illicit.iter().map(|m| Move::from(m.as_str())).collect(),
                threshold.to_rat()?,
            ));
        }
        AgentFile::Safe => quantifier = Some(Quantifier::safe()),
        AgentFile::Fix => {
            quantifier = Some(Quantifier::fix());
            selection = Some(SelectionFunction::fix());
        }
        AgentFile::Keynesian => {
            quantifier = Some(Quantifier::keynesian());
            selection = Some(SelectionFunction::fix());
        }
        AgentFile::VotingJudge => {
            quantifier = Some(Quantifier::voting_judge(require_order(env, name)?.clone()));
        }
        AgentFile::Coordinating { player } => {
            let (rule, _) = env.profile.with_context(|| {
                format!("agent `{name}` needs a problem file with a `profile` rule")
            })?;
            selection = Some(SelectionFunction::coordinating(rule, *player)?);
        }
        AgentFile::Table {
            role,
            moves,
            outcomes,
            entries,
        } => {
            let (q, s) = resolve_table(*role, moves, outcomes, entries)?;
            quantifier = q;
            selection = s;
        }
    }
    Ok(ResolvedAgent {
        name,
        quantifier,
        selection,
    })
}

fn require_order<'a>(env: &'a Env, name: &str) -> Result<&'a PartialOrder> {
    env.order
        .with_context(|| format!("agent `{name}` needs a problem file with an `order` on outcomes"))
}

fn resolve_table(
    role: TableRole,
    move_names: &[String],
    outcome_specs: &[ValueSpec],
    entries: &[TableEntry],
) -> Result<(Option<Quantifier>, Option<SelectionFunction>)> {
    let moves = FiniteDomain::moves(move_names.iter().map(String::as_str))?;
    let outcomes = FiniteDomain::outcomes(
        outcome_specs
            .iter()
            .map(ValueSpec::to_outcome)
            .collect::<Result<Vec<_>>>()?,
    )?;
    let contexts = entries
        .iter()
        .map(|entry| {
            let assignment = entry
                .context
                .iter()
                .map(|(m, v)| Ok((Move::from(m.as_str()), v.to_outcome()?)))
                .collect::<Result<Vec<_>>>()?;
            Ok(Context::new(moves.clone(), outcomes.clone(), &assignment)?)
        })
        .collect::<Result<Vec<Context>>>()?;

    match role {
        TableRole::Quantifier => {
            let rows = contexts
                .into_iter()
                .zip(entries)
                .map(|(ctx, entry)| {
                    let output = entry
                        .output
                        .iter()
                        .map(|spec| {
                            let value = spec.to_outcome()?;
                            outcomes.index_of(&value).with_context(|| {
                                format!("table output `{value}` is not in the outcome set")
                            })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok((ctx, output))
                })
                .collect::<Result<Vec<_>>>()?;
            let table = GenericQuantifierTable::from_entries(moves, outcomes, rows)?;
            Ok((Some(Quantifier::table(table)), None))
        }
        TableRole::Selection => {
            let rows = contexts
                .into_iter()
                .zip(entries)
                .map(|(ctx, entry)| {
                    let output = entry
                        .output
                        .iter()
                        .map(|spec| {
                            let name = match spec {
                                ValueSpec::Str(s) => s.clone(),
                                ValueSpec::Int(n) => n.to_string(),
                                ValueSpec::Vec(_) => {
                                    bail!("selection table outputs must be move names")
                                }
                            };
                            moves.index_of(&Move::from(name.as_str())).with_context(|| {
                                format!("table output `{name}` is not in the move set")
                            })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok((ctx, output))
                })
                .collect::<Result<Vec<_>>>()?;
            let table = GenericSelectionTable::from_entries(moves, outcomes, rows)?;
            Ok((None, Some(SelectionFunction::table(table))))
        }
    }
}
