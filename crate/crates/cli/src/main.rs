use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use srg::boolenc::{check_simulation_equivalence, encode_network, Coverage};
use srg::io::report::{AnalysisReport, ReportResult};
use srg::io::{graph_to_dot, parse_network, parse_state, sts_to_dot};
use srg::phenotype::{
    attractors_with_phenotype, decide_phenotype, phenotype_witness, Completion, DecisionMode,
    Phenotype,
};
use srg::{
    build_sts, bundled, simulate, step, RegulatoryGraph, SrgError, StateSpace, DEFAULT_STATE_LIMIT,
};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_LIMIT: u8 = 3;

/// Analyse strong regulatory graphs.
///
/// NET is a network file, or `builtin:fig1a`, `builtin:fig1b`, `builtin:mapk`.
#[derive(Parser)]
#[command(name = "srg", version)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply the synchronous update K times.
    Step {
        net: String,
        state: String,
        #[arg(short = 'n', default_value_t = 1)]
        steps: u64,
    },
    /// Iterate until a state repeats and report transient and cycle.
    Simulate {
        net: String,
        state: String,
        #[arg(long)]
        max_steps: Option<u64>,
    },
    /// Enumerate every attractor of the clamp-consistent state space.
    Attractors {
        net: String,
        #[arg(long, default_value_t = DEFAULT_STATE_LIMIT)]
        limit: u64,
    },
    /// Print the state-transition system.
    Sts {
        net: String,
        #[arg(long)]
        dot: bool,
        #[arg(long, default_value_t = DEFAULT_STATE_LIMIT)]
        limit: u64,
    },
    /// Print the regulatory graph.
    Graph {
        net: String,
        #[arg(long)]
        dot: bool,
    },
    /// Phenotype attractor decisions and witnesses.
    #[command(subcommand)]
    Phenotype(PhenotypeCommand),
    /// Export the two-bit Boolean encoding as BoolNet rules.
    EncodeBn {
        net: String,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Check that the Boolean encoding simulates the network.
    VerifyBn {
        net: String,
        #[arg(long, conflicts_with = "samples")]
        exhaustive: bool,
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_STATE_LIMIT)]
        limit: u64,
    },
}

#[derive(Args)]
struct PhenotypeArgs {
    net: String,
    /// Target assignment, e.g. `FOXO3=1,AKT=-1`.
    #[arg(long, allow_hyphen_values = true)]
    target: String,
}

#[derive(Subcommand)]
enum PhenotypeCommand {
    /// Decide whether an attractor with the phenotype exists.
    Check {
        #[command(flatten)]
        args: PhenotypeArgs,
        /// Defaults to `paths`, or `oracle` on clamped networks.
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        #[arg(long, default_value_t = DEFAULT_STATE_LIMIT)]
        limit: u64,
    },
    /// Construct an attractor with the phenotype from the marking closure.
    Witness {
        #[command(flatten)]
        args: PhenotypeArgs,
        #[arg(long, value_enum, default_value_t = CompletionArg::Minus)]
        completion: CompletionArg,
        /// Explicit start state for unmarked vertices; overrides --completion.
        #[arg(long, allow_hyphen_values = true)]
        start: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Paths,
    Literal,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum CompletionArg {
    Minus,
    Zero,
    Plus,
}

fn load(net: &str) -> Result<RegulatoryGraph> {
    if let Some(name) = net.strip_prefix("builtin:") {
        return bundled::by_name(name).with_context(|| {
            format!(
                "unknown built-in network `{name}` (available: {})",
                bundled::NAMES.join(", ")
            )
        });
    }
    let text = fs::read_to_string(net).with_context(|| format!("reading {net}"))?;
    parse_network(&text).with_context(|| format!("parsing {net}"))
}

struct Outcome {
    report: Option<AnalysisReport>,
    text: Option<String>,
    positive: bool,
}

impl Outcome {
    fn report(report: AnalysisReport, positive: bool) -> Self {
        Outcome {
            report: Some(report),
            text: None,
            positive,
        }
    }

    fn text(text: String) -> Self {
        Outcome {
            report: None,
            text: Some(text),
            positive: true,
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let outcome = match &cli.command {
        Command::Step { net, state, steps } => {
            let g = load(net)?;
            let mut current = parse_state(state, &g)?;
            let mut states = vec![current.clone()];
            for _ in 0..*steps {
                current = step(&g, &current)?;
                states.push(current.clone());
            }
            Outcome::report(
                AnalysisReport::new("step", &g, ReportResult::Steps { states }),
                true,
            )
        }
        Command::Simulate {
            net,
            state,
            max_steps,
        } => {
            let g = load(net)?;
            let start = parse_state(state, &g)?;
            let budget = max_steps
                .or_else(|| StateSpace::count(&g).and_then(|c| u64::try_from(c).ok()))
                .unwrap_or(u64::MAX);
            let t = simulate(&g, &start, budget)?;
            Outcome::report(
                AnalysisReport::new("simulate", &g, ReportResult::trajectory(&t)),
                true,
            )
        }
        Command::Attractors { net, limit } => {
            let g = load(net)?;
            let sts = build_sts(&g, *limit)?;
            let atts = sts.attractors();
            let positive = !atts.is_empty();
            Outcome::report(
                AnalysisReport::new(
                    "attractors",
                    &g,
                    ReportResult::attractors(sts.size(), &atts),
                ),
                positive,
            )
        }
        Command::Sts { net, dot, limit } => {
            let g = load(net)?;
            let sts = build_sts(&g, *limit)?;
            if *dot {
                Outcome::text(sts_to_dot(&sts))
            } else {
                let mut out = String::new();
                for (a, b) in sts.transitions() {
                    out.push_str(&format!("{a} -> {b}\n"));
                }
                Outcome::text(out)
            }
        }
        Command::Graph { net, dot } => {
            let g = load(net)?;
            if *dot {
                Outcome::text(graph_to_dot(&g))
            } else {
                Outcome::text(srg::io::format_network(&g))
            }
        }
        Command::Phenotype(cmd) => phenotype(cmd)?,
        Command::EncodeBn { net, output } => {
            let g = load(net)?;
            let rules = encode_network(&g).to_boolnet();
            match output {
                Some(path) => {
                    fs::write(path, &rules)
                        .with_context(|| format!("writing {}", path.display()))?;
                    Outcome::text(String::new())
                }
                None => Outcome::text(rules),
            }
        }
        Command::VerifyBn {
            net,
            exhaustive,
            samples,
            seed,
            limit,
        } => {
            let g = load(net)?;
            let coverage = match (exhaustive, samples) {
                (_, Some(samples)) => Coverage::Random {
                    samples: *samples,
                    seed: *seed,
                },
                _ => Coverage::Exhaustive { limit: *limit },
            };
            let r = check_simulation_equivalence(&g, coverage)?;
            Outcome::report(
                AnalysisReport::new("verify-bn", &g, ReportResult::equivalence(&r)),
                r.success(),
            )
        }
    };
    Ok(outcome)
}

fn phenotype(cmd: &PhenotypeCommand) -> Result<Outcome> {
    match cmd {
        PhenotypeCommand::Check { args, mode, limit } => {
            let g = load(&args.net)?;
            let p = Phenotype::parse(&args.target, &g)?;
            let mode = mode.unwrap_or(if g.has_clamps() {
                Mode::Oracle
            } else {
                Mode::Paths
            });
            let result = match mode {
                Mode::Paths => {
                    ReportResult::decision(&g, &decide_phenotype(&g, &p, DecisionMode::Paths)?)
                }
                Mode::Literal => {
                    ReportResult::decision(&g, &decide_phenotype(&g, &p, DecisionMode::Literal)?)
                }
                Mode::Oracle => ReportResult::oracle(&attractors_with_phenotype(&g, &p, *limit)?),
            };
            let ReportResult::Decision { admissible, .. } = result else {
                unreachable!()
            };
            Ok(Outcome::report(
                AnalysisReport::new("phenotype check", &g, result),
                admissible,
            ))
        }
        PhenotypeCommand::Witness {
            args,
            completion,
            start,
        } => {
            let g = load(&args.net)?;
            let p = Phenotype::parse(&args.target, &g)?;
            let completion = match (start, completion) {
                (Some(s), _) => Completion::Given(parse_state(s, &g)?),
                (None, CompletionArg::Minus) => Completion::AllMinusOne,
                (None, CompletionArg::Zero) => Completion::AllZero,
                (None, CompletionArg::Plus) => Completion::AllOne,
            };
            let w = phenotype_witness(&g, &p, &completion)?;
            let found = w.attractor().is_some();
            Ok(Outcome::report(
                AnalysisReport::new("phenotype witness", &g, ReportResult::witness(&g, &w)),
                found,
            ))
        }
    }
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<SrgError>() {
        Some(SrgError::StateSpaceTooLarge { .. } | SrgError::BudgetExceeded(_)) => EXIT_LIMIT,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if let Some(report) = &outcome.report {
                if cli.json {
                    match serde_json::to_string_pretty(report) {
                        Ok(json) => println!("{json}"),
                        Err(e) => {
                            eprintln!("error: {e}");
                            return ExitCode::from(EXIT_USAGE);
                        }
                    }
                } else {
                    print!("{}", report.to_text());
                }
            }
            if let Some(text) = &outcome.text {
                print!("{text}");
            }
            if outcome.positive {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_NEGATIVE)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
