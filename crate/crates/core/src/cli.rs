//! The `maxlot` command line.
//!
//! Every command prints one JSON report to standard output:
//!
//! ```json
//! {"command": "solve", "input_digest": "<sha256 hex>", "result": {...}, "timing_ms": 3}
//! ```
//!
//! `input_digest` is the SHA-256 of the input files' bytes in argument order
//! (`null` for commands without files). Numbers inside `result` that are exact
//! rationals are strings such as `"5/6"`. Exit codes: 0 on success, 1 when an
//! axiom check fails, 2 on bad input.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::agenda::{Alternative, Relabeling};
use crate::axioms::{self, Axiom, AxiomVerdict, BatchConfig};
use crate::error::{Error, Result};
use crate::format::{agenda_json, lottery_json, parse_ballots, parse_matrix, polytope_json, profile_json, rational_json, serialize_ballots};
use crate::margins::{margins, mcgarvey};
use crate::profile::Profile;
use crate::rational::{parse_rational, Q};
use crate::rules::{apply_rule, borda, RuleId};
use crate::sim::{run_sim, Generator, SimConfig};
use crate::solver::{condorcet_winners, sample};

#[derive(Debug, Parser)]
#[command(name = "maxlot", version, about = "Exact maximal lotteries and consistency checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a rule on a ballot file.
    Solve {
        file: PathBuf,
        #[arg(long, default_value = "ml")]
        rule: String,
    },
    /// Draw an alternative from the rule's lottery.
    Sample {
        file: PathBuf,
        #[arg(long, default_value = "ml")]
        rule: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Which vertex to use when the rule returns several.
        #[arg(long)]
        vertex: Option<usize>,
    },
    /// Check an axiom on ballot files or on random instances.
    Check(CheckArgs),
    /// Build a profile whose margins are a positive multiple of a matrix.
    Mcgarvey { file: PathBuf },
    /// Monte Carlo statistics on random electorates.
    Simulate {
        #[arg(long, value_enum, default_value_t = GeneratorArg::Impartial)]
        generator: GeneratorArg,
        #[arg(long)]
        alts: usize,
        #[arg(long)]
        voters: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GeneratorArg {
    Impartial,
    Spatial,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub axiom: String,
    #[arg(long, default_value = "ml")]
    pub rule: String,
    /// Ballot files: two for (strong) population-consistency, one otherwise.
    pub files: Vec<PathBuf>,
    /// Component alternatives, comma separated; defaults to the first component found.
    #[arg(long)]
    pub component: Option<String>,
    /// Representative of the component; defaults to its first alternative.
    #[arg(long)]
    pub b: Option<String>,
    /// Mixing weight of the first profile.
    #[arg(long, default_value = "1/2")]
    pub lambda: String,
    /// Relabeling as `x=y` pairs, comma separated; defaults to a cyclic shift.
    #[arg(long)]
    pub perm: Option<String>,
    /// First agenda for agenda-consistency; defaults to all but the last alternative.
    #[arg(long)]
    pub first: Option<String>,
    /// Second agenda; defaults to all but the first alternative.
    #[arg(long)]
    pub second: Option<String>,
    #[arg(long)]
    pub random: bool,
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 5)]
    pub max_alternatives: usize,
}

/// What a command produced: the report and the exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Input(#[from] Error),
    #[error("{path}: {source}")]
    File { path: String, source: Error },
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { 2 } else { 0 };
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            Outcome { stdout, stderr, code }
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    let start = Instant::now();
    let name = match &cli.command {
        Command::Solve { .. } => "solve",
        Command::Sample { .. } => "sample",
        Command::Check(_) => "check",
        Command::Mcgarvey { .. } => "mcgarvey",
        Command::Simulate { .. } => "simulate",
    };
    let mut inputs = Inputs::default();
    match execute(&cli.command, &mut inputs) {
        Ok((result, code)) => {
            let report = json!({
                "command": name,
                "input_digest": inputs.digest(),
                "result": result,
                "timing_ms": start.elapsed().as_millis() as u64,
            });
            Outcome {
                stdout: format!("{}\n", serde_json::to_string_pretty(&report).expect("serializable")),
                stderr: String::new(),
                code,
            }
        }
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: 2,
        },
    }
}

#[derive(Default)]
struct Inputs {
    hasher: Option<Sha256>,
}

impl Inputs {
    fn read(&mut self, path: &PathBuf) -> std::result::Result<String, CliError> {
        let bytes = std::fs::read(path).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            msg: e.to_string(),
        })?;
        self.hasher.get_or_insert_with(Sha256::new).update(&bytes);
        String::from_utf8(bytes).map_err(|_| CliError::Io {
            path: path.display().to_string(),
            msg: "not UTF-8".into(),
        })
    }

    fn profile(&mut self, path: &PathBuf) -> std::result::Result<Profile, CliError> {
        let text = self.read(path)?;
        parse_ballots(&text).map_err(|source| CliError::File {
            path: path.display().to_string(),
            source,
        })
    }

    fn digest(&self) -> Value {
        match &self.hasher {
            None => Value::Null,
            Some(h) => {
                let bytes = h.clone().finalize();
                Value::String(bytes.iter().map(|b| format!("{b:02x}")).collect())
            }
        }
    }
}

fn ids(list: &str) -> Result<Vec<Alternative>> {
    list.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(Alternative::new)
        .collect()
}

fn execute(cmd: &Command, inputs: &mut Inputs) -> std::result::Result<(Value, i32), CliError> {
    match cmd {
        Command::Solve { file, rule } => {
            let rule: RuleId = rule.parse()?;
            let profile = inputs.profile(file)?;
            Ok((solve_json(rule, &profile), 0))
        }
        Command::Sample { file, rule, seed, vertex } => {
            let rule: RuleId = rule.parse()?;
            let profile = inputs.profile(file)?;
            let outcome = apply_rule(rule, &profile);
            let count = outcome.len();
            let index = match (vertex, count) {
                (Some(i), _) if *i >= count => return Err(Error::VertexIndex { index: *i, count }.into()),
                (Some(i), _) => *i,
                (None, 1) => 0,
                (None, _) => return Err(Error::MultipleVertices(count).into()),
            };
            let lottery = &outcome.vertices()[index];
            let drawn = sample(lottery, *seed);
            Ok((
                json!({
                    "rule": rule.name(),
                    "seed": seed,
                    "vertex": index,
                    "lottery": lottery_json(lottery),
                    "alternative": drawn.id(),
                }),
                0,
            ))
        }
        Command::Check(args) => check(args, inputs),
        Command::Mcgarvey { file } => {
            let text = inputs.read(file)?;
            let m = parse_matrix(&text).map_err(|source| CliError::File {
                path: file.display().to_string(),
                source,
            })?;
            let (profile, c) = mcgarvey(&m)?;
            let verified = margins(&profile) == m.scale(&c);
            Ok((
                json!({
                    "c": rational_json(&c),
                    "ballots": serialize_ballots(&profile),
                    "profile": profile_json(&profile),
                    "margins_verified": verified,
                }),
                0,
            ))
        }
        Command::Simulate { generator, alts, voters, trials, seed, dim } => {
            let cfg = SimConfig {
                generator: match generator {
                    GeneratorArg::Impartial => Generator::ImpartialCulture,
                    GeneratorArg::Spatial => Generator::Spatial(*dim),
                },
                n_alternatives: *alts,
                n_voters: *voters,
                trials: *trials,
                seed: *seed,
            };
            let stats = run_sim(&cfg)?;
            let mut v = stats.to_json();
            v["generator"] = json!(match cfg.generator {
                Generator::ImpartialCulture => "impartial".to_string(),
                Generator::Spatial(d) => format!("spatial({d})"),
            });
            v["alternatives"] = json!(alts);
            v["voters"] = json!(voters);
            v["seed"] = json!(seed);
            Ok((v, 0))
        }
    }
}

/// The `solve` result for one rule and profile.
pub fn solve_json(rule: RuleId, profile: &Profile) -> Value {
    let outcome = apply_rule(rule, profile);
    let cw = condorcet_winners(profile);
    let mut v = json!({
        "rule": rule.name(),
        "agenda": agenda_json(profile.agenda()),
        "vertices": polytope_json(&outcome)["vertices"].clone(),
        "unique": outcome.unique().is_some(),
        "essential_set": outcome.support_union().iter().map(Alternative::id).collect::<Vec<_>>(),
        "condorcet": {
            "weak": cw.weak.iter().map(Alternative::id).collect::<Vec<_>>(),
            "strict": cw.strict.as_ref().map(Alternative::id),
        },
    });
    if rule == RuleId::Borda {
        let (scores, winners) = borda(profile);
        v["borda"] = json!({
            "scores": scores
                .iter()
                .map(|(x, s)| (x.id().to_string(), rational_json(s)))
                .collect::<serde_json::Map<_, _>>(),
            "winners": winners.iter().map(Alternative::id).collect::<Vec<_>>(),
        });
    }
    v
}

fn check(args: &CheckArgs, inputs: &mut Inputs) -> std::result::Result<(Value, i32), CliError> {
    let axiom: Axiom = args.axiom.parse()?;
    let rule: RuleId = args.rule.parse()?;
    if args.random {
        if !args.files.is_empty() {
            return Err(Error::InvalidConfig("--random takes no files".into()).into());
        }
        if args.max_alternatives < 2 || args.max_alternatives > 8 {
            return Err(Error::InvalidConfig("--max-alternatives must be between 2 and 8".into()).into());
        }
        let cfg = BatchConfig {
            trials: args.trials,
            seed: args.seed,
            max_alternatives: args.max_alternatives,
            ..BatchConfig::default()
        };
        let report = axioms::run_batch(axiom, rule, &cfg);
        let code = if report.all_passed() { 0 } else { 1 };
        return Ok((report.to_json(), code));
    }
    let expected = match axiom {
        Axiom::Population | Axiom::StrongPopulation => 2,
        Axiom::Unanimity => 0,
        _ => 1,
    };
    if args.files.len() != expected {
        return Err(Error::InvalidConfig(format!(
            "{axiom} takes {expected} ballot file(s), got {}",
            args.files.len()
        ))
        .into());
    }
    let profiles = args
        .files
        .iter()
        .map(|f| inputs.profile(f))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let verdict = file_verdict(axiom, rule, &profiles, args)?;
    let code = if verdict.passed { 0 } else { 1 };
    Ok((json!({ "verdicts": [verdict.to_json()] }), code))
}

fn file_verdict(axiom: Axiom, rule: RuleId, profiles: &[Profile], args: &CheckArgs) -> Result<AxiomVerdict> {
    let lambda = || -> Result<Q> {
        parse_rational(&args.lambda).ok_or_else(|| Error::InvalidConfig(format!("bad --lambda `{}`", args.lambda)))
    };
    match axiom {
        Axiom::Population => axioms::check_population_consistency(rule, &profiles[0], &profiles[1], &lambda()?),
        Axiom::StrongPopulation => {
            axioms::check_strong_population_consistency(rule, &profiles[0], &profiles[1], &lambda()?)
        }
        Axiom::Composition | Axiom::Cloning => {
            let p = &profiles[0];
            let component = match &args.component {
                Some(list) => ids(list)?,
                None => p
                    .find_components()
                    .into_iter()
                    .next()
                    .ok_or_else(|| Error::InvalidConfig("profile has no nontrivial component; pass --component".into()))?,
            };
            let b = match &args.b {
                Some(b) => Alternative::new(b.as_str())?,
                None => component.iter().min().cloned().ok_or(Error::EmptySubset)?,
            };
            if axiom == Axiom::Composition {
                axioms::check_composition_consistency(rule, p, &component, &b)
            } else {
                axioms::check_cloning_consistency(rule, p, &component, &b)
            }
        }
        Axiom::Condorcet => Ok(axioms::check_condorcet_consistency(rule, &profiles[0])),
        Axiom::Neutrality => {
            let p = &profiles[0];
            let alts = p.agenda().alternatives();
            let pi = match &args.perm {
                Some(text) => {
                    let pairs = text
                        .split(',')
                        .filter(|s| !s.trim().is_empty())
                        .map(|pair| {
                            let (x, y) = pair
                                .split_once('=')
                                .ok_or_else(|| Error::InvalidConfig(format!("bad --perm pair `{pair}`")))?;
                            Ok((Alternative::new(x.trim())?, Alternative::new(y.trim())?))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Relabeling::from_pairs(p.agenda(), &pairs)?
                }
                None => {
                    let n = alts.len();
                    let shift: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
                    Relabeling::from_index_permutation(p.agenda(), &shift)?
                }
            };
            axioms::check_neutrality(rule, p, &pi)
        }
        Axiom::Unanimity => Ok(axioms::check_unanimity(rule)),
        Axiom::Agenda => {
            let p = &profiles[0];
            let alts = p.agenda().alternatives();
            let first = match &args.first {
                Some(list) => ids(list)?,
                None => alts[..alts.len() - 1].to_vec(),
            };
            let second = match &args.second {
                Some(list) => ids(list)?,
                None => alts[1..].to_vec(),
            };
            axioms::check_agenda_consistency(rule, p, &first, &second)
        }
    }
}

/// Entry point for the binary: runs the command, prints, returns the exit code.
pub fn main() -> i32 {
    let out = run_from(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}
