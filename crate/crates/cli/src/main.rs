//! `hodt`: evaluate higher-order decision agents on finite problems and
//! check their structural properties by exhaustive enumeration.
//!
//! Exit codes: 0 means computed (including a property that holds), 1 means
//! a checked property fails (witness printed), 2 means a usage, validation,
//! or budget error.

mod agent;
mod demo;
mod problem;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context as _, Result};
use clap::{Parser, Subcommand, ValueEnum};

use hodt::domain::OutcomeValue;
use hodt::properties::{
    attains, is_attainable, is_context_independent, is_strongly_attainable, is_total,
};
use hodt::{int, Budget, FiniteDomain, Move, Outcome, PropertyReport};

use agent::{resolve, AgentFile, Env, ResolvedAgent};
use problem::{parse_signature, Problem};
use render::{check_json, check_text, eval_json, eval_text, CheckView, EvalOutput};

#[derive(Parser)]
#[command(
    name = "hodt",
    version,
    about = "higher-order decision agents over finite domains"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an agent on a decision problem
    Eval {
        /// Problem file (JSON)
        #[arg(long)]
        problem: PathBuf,
        /// Agent file (JSON)
        #[arg(long)]
        agent: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check a structural property by exhaustive enumeration
    Check {
        /// Agent file (JSON)
        #[arg(long)]
        agent: PathBuf,
        /// Signature to enumerate, e.g. X=3,R=2 (synthesized ground sets)
        #[arg(long)]
        signature: Option<String>,
        /// Problem file supplying the ground sets (and order/profile)
        #[arg(long)]
        problem: Option<PathBuf>,
        #[arg(long, value_enum)]
        property: PropertyArg,
        /// Quantifier agent the checked selection should attain
        #[arg(long)]
        against: Option<PathBuf>,
        /// Maximum number of contexts to enumerate
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Replay a built-in worked example
    Demo {
        /// One of: beaches, wines, honest, judges, coordination, fixpoint
        name: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum PropertyArg {
    Total,
    Attainable,
    StronglyAttainable,
    ContextIndependent,
    Attains,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Eval {
            problem,
            agent,
            format,
        } => cmd_eval(&problem, &agent, format),
        Command::Check {
            agent,
            signature,
            problem,
            property,
            against,
            budget,
            format,
        } => cmd_check(
            &agent,
            signature.as_deref(),
            problem.as_deref(),
            property,
            against.as_deref(),
            budget,
            format,
        ),
        Command::Demo { name } => {
            print!("{}", demo::run(&name)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_eval(
    problem_path: &std::path::Path,
    agent_path: &std::path::Path,
    format: Format,
) -> Result<ExitCode> {
    let problem = Problem::load(problem_path)?;
    let agent_file = AgentFile::load(agent_path)?;
    let env = Env {
        order: problem.order.as_ref(),
        profile: problem.profile.as_ref(),
    };
    let agent = resolve(&agent_file, &env)?;
    let output = EvalOutput {
        outcomes: agent
            .quantifier
            .as_ref()
            .map(|q| q.eval(&problem.context))
            .transpose()?,
        moves: agent
            .selection
            .as_ref()
            .map(|s| s.eval(&problem.context))
            .transpose()?,
    };
    match format {
        Format::Text => print!("{}", eval_text(&output)),
        Format::Json => println!("{}", eval_json(&output)),
    }
    Ok(ExitCode::SUCCESS)
}

type Grounds = (Arc<FiniteDomain<Move>>, Arc<FiniteDomain<Outcome>>);

/// Ground sets for `--signature` checks: moves x1..xn against scalar
/// outcomes 1..m, or a square signature (moves named after the outcomes)
/// when the agent requires moves and outcomes to coincide.
fn synthesize_grounds(n: usize, m: usize, square: bool) -> Result<Grounds> {
    if square && n != m {
        bail!("this agent needs a square signature (X = R); got X={n},R={m}");
    }
    let moves = if square {
        FiniteDomain::moves((1..=n).map(|i| i.to_string()))?
    } else {
        FiniteDomain::moves((1..=n).map(|i| format!("x{i}")))?
    };
    let outcomes = FiniteDomain::outcomes(
        (1..=m)
            .map(|i| OutcomeValue::scalar(int(i as i64)))
            .collect(),
    )?;
    Ok((moves, outcomes))
}

fn cmd_check(
    agent_path: &std::path::Path,
    signature: Option<&str>,
    problem_path: Option<&std::path::Path>,
    property: PropertyArg,
    against: Option<&std::path::Path>,
    budget: u64,
    format: Format,
) -> Result<ExitCode> {
    let agent_file = AgentFile::load(agent_path)?;
    let against_file = against.map(AgentFile::load).transpose()?;

    let problem = match (signature, problem_path) {
        (Some(_), Some(_)) => bail!("give either --signature or --problem, not both"),
        (None, None) => bail!("a check needs --signature X=<n>,R=<m> or --problem <path>"),
        (None, Some(path)) => Some(Problem::load(path)?),
        (Some(_), None) => None,
    };

    let (moves, outcomes, agent, against_agent) = match &problem {
        Some(p) => {
            let env = Env {
                order: p.order.as_ref(),
                profile: p.profile.as_ref(),
            };
            let agent = resolve(&agent_file, &env)?;
            let against_agent = against_file
                .as_ref()
                .map(|f| resolve(f, &env))
                .transpose()?;
            (p.moves.clone(), p.outcomes.clone(), agent, against_agent)
        }
        None => {
            let (n, m) = parse_signature(signature.unwrap())?;
            let env = Env::empty();
            let agent = resolve(&agent_file, &env)?;
            let against_agent = against_file
                .as_ref()
                .map(|f| resolve(f, &env))
                .transpose()?;
            // Table agents pin their own ground sets; the signature only
            // has to agree on the sizes.
            let pinned =
                table_grounds(&agent).or_else(|| against_agent.as_ref().and_then(table_grounds));
            let (moves, outcomes) = match pinned {
                Some((moves, outcomes)) => {
                    if moves.len() != n || outcomes.len() != m {
                        bail!(
                            "table agent has signature |X| = {}, |R| = {}; --signature says X={n},R={m}",
                            moves.len(),
                            outcomes.len()
                        );
                    }
                    (moves, outcomes)
                }
                None => {
                    let square = agent_file.needs_square_signature()
                        || against_file
                            .as_ref()
                            .is_some_and(AgentFile::needs_square_signature);
                    synthesize_grounds(n, m, square)?
                }
            };
            (moves, outcomes, agent, against_agent)
        }
    };

    let budget = Budget::new(budget);
    let (report, quantifier_for_view): (PropertyReport, Option<&hodt::Quantifier>) = match property
    {
        PropertyArg::Total => {
            let q = require_quantifier(&agent)?;
            (is_total(q, &moves, &outcomes, budget)?, Some(q))
        }
        PropertyArg::Attainable => {
            let q = require_quantifier(&agent)?;
            (is_attainable(q, &moves, &outcomes, budget)?, Some(q))
        }
        PropertyArg::StronglyAttainable => {
            let q = require_quantifier(&agent)?;
            (
                is_strongly_attainable(q, &moves, &outcomes, budget)?,
                Some(q),
            )
        }
        PropertyArg::ContextIndependent => {
            let q = require_quantifier(&agent)?;
            (
                is_context_independent(q, &moves, &outcomes, budget)?,
                Some(q),
            )
        }
        PropertyArg::Attains => {
            let sel = agent.selection.as_ref().with_context(|| {
                format!("agent `{}` has no selection-function form", agent.name)
            })?;
            let target = against_agent
                .as_ref()
                .context("--property attains needs --against <quantifier agent>")?;
            let q = require_quantifier(target)?;
            (attains(sel, q, &moves, &outcomes, budget)?, Some(q))
        }
    };

    let view = CheckView {
        agent: agent.name,
        moves_len: moves.len(),
        outcomes_len: outcomes.len(),
        report: &report,
        quantifier: quantifier_for_view,
    };
    match format {
        Format::Text => print!("{}", check_text(&view)),
        Format::Json => println!("{}", check_json(&view)),
    }
    Ok(if report.holds() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn require_quantifier(agent: &ResolvedAgent) -> Result<&hodt::Quantifier> {
    agent
        .quantifier
        .as_ref()
        .with_context(|| format!("agent `{}` has no quantifier form", agent.name))
}

/// For explicit tables, the ground sets are part of the agent.
fn table_grounds(agent: &ResolvedAgent) -> Option<Grounds> {
    if let Some(hodt::quantifier::Quantifier::Table(t)) = &agent.quantifier {
        return Some((t.moves().clone(), t.outcomes().clone()));
    }
    if let Some(hodt::quantifier::SelectionFunction::Table(t)) = &agent.selection {
        return Some((t.moves().clone(), t.outcomes().clone()));
    }
    None
}
