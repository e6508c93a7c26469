use std::path::{Path, PathBuf};
use std::process::ExitCode;

use argvoi::io::{
    format_probability, parse_ach_csv, parse_bundle, parse_framework, render_report,
    serialize_framework, Report,
};
use argvoi::voi::Analysis;
use argvoi::{
    argument_set, ArgumentSet, DifferenceKind, Framework, InferenceMode, Method, MonteCarloConfig,
    Objective, Probability, ProbabilityMapping, Semantics, UtilityKind, DEFAULT_EXACT_LIMIT,
};
use clap::error::ErrorKind;
use clap::{ArgGroup, Args, CommandFactory, Parser, Subcommand, ValueEnum};

const DEFAULT_SAMPLES: usize = 10_000;

/// Evaluate argumentation frameworks and rank information by its value.
#[derive(Parser)]
#[command(name = "argvoi", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Accepted arguments, or acceptance probabilities for a probabilistic
    /// framework.
    Evaluate {
        file: PathBuf,
        #[command(flatten)]
        eval: EvalOpts,
    },
    /// Value of removing existing arguments.
    #[command(group(ArgGroup::new("mode").required(true).args(["remove", "rank"])))]
    VoiObserved {
        file: PathBuf,
        /// Comma-separated arguments to remove.
        #[arg(long, value_name = "IDS")]
        remove: Option<String>,
        /// Rank every removal set up to --max-size.
        #[arg(long)]
        rank: bool,
        #[arg(long, default_value_t = 1, requires = "rank")]
        max_size: usize,
        #[command(flatten)]
        objective: ObjectiveOpts,
        #[command(flatten)]
        eval: EvalOpts,
    },
    /// Value of adding new arguments and attacks.
    #[command(group(ArgGroup::new("mode").required(true).args(["bundle", "rank_attacks"])))]
    VoiObservation {
        file: PathBuf,
        /// File of new `arg`/`att` lines.
        #[arg(long)]
        bundle: Option<PathBuf>,
        /// Rank single attacks by a new argument on each existing one.
        #[arg(long)]
        rank_attacks: bool,
        #[command(flatten)]
        attack: AttackOpts,
        #[command(flatten)]
        objective: ObjectiveOpts,
        #[command(flatten)]
        eval: EvalOpts,
    },
    /// Rank removal sets (default) or single new attacks.
    VoiRank {
        file: PathBuf,
        #[arg(long, conflicts_with = "max_size")]
        rank_attacks: bool,
        #[arg(long)]
        max_size: Option<usize>,
        #[command(flatten)]
        attack: AttackOpts,
        #[command(flatten)]
        objective: ObjectiveOpts,
        #[command(flatten)]
        eval: EvalOpts,
    },
    /// Translate an ACH matrix (CSV) into a framework file.
    AchConvert {
        csv: PathBuf,
        /// Label probabilities, e.g. `certain=1.0,likely=0.65,I=0.5,II=1.0`.
        #[arg(long)]
        mapping: Option<String>,
        /// Emit the Dung framework without probabilities.
        #[arg(long)]
        dung: bool,
        #[arg(long, short = 'o')]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Exact,
    Mc,
}

#[derive(Args)]
struct EvalOpts {
    #[arg(long, default_value = "grounded")]
    semantics: Semantics,
    #[arg(long, default_value = "sceptical")]
    inference: InferenceMode,
    #[arg(long, value_enum, default_value = "exact")]
    method: MethodArg,
    /// Monte Carlo sample count (only with --method mc).
    #[arg(long)]
    samples: Option<usize>,
    /// Monte Carlo seed (only with --method mc).
    #[arg(long)]
    seed: Option<u64>,
    /// Most uncertain elements exact enumeration will accept.
    #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
    exact_limit: usize,
    /// Report destination; `-` or `stdout` for standard output.
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ObjectiveOpts {
    /// Comma-separated objective arguments.
    #[arg(long, value_name = "IDS")]
    objective: String,
    /// Comma-separated target subset of the objective.
    #[arg(long, value_name = "IDS")]
    target: Option<String>,
    #[arg(long)]
    utility: UtilityKind,
    #[arg(long)]
    difference: DifferenceKind,
    #[arg(long)]
    allow_objective_removal: bool,
}

#[derive(Args)]
struct AttackOpts {
    #[arg(long, default_value_t = 1.0)]
    new_arg_prob: f64,
    #[arg(long, default_value_t = 1.0)]
    attack_prob: f64,
}

type Outcome<T> = Result<T, String>;

fn read(path: &Path) -> Outcome<String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn ids(list: &str) -> Outcome<ArgumentSet> {
    argument_set(list.split(',').map(str::trim).filter(|s| !s.is_empty()))
        .map_err(|e| e.to_string())
}

fn probability(name: &str, p: f64) -> Outcome<Probability> {
    Probability::new(p).map_err(|e| format!("--{name}: {e}"))
}

impl EvalOpts {
    fn check_usage(&self) {
        if self.method != MethodArg::Mc {
            for (flag, set) in [
                ("--samples", self.samples.is_some()),
                ("--seed", self.seed.is_some()),
            ] {
                if set {
                    usage_error(Cli::command().error(
                        ErrorKind::ArgumentConflict,
                        format!("{flag} requires --method mc"),
                    ));
                }
            }
        }
    }

    fn method(&self) -> Outcome<Method> {
        Ok(match self.method {
            MethodArg::Exact => Method::Exact {
                limit: self.exact_limit,
            },
            MethodArg::Mc => Method::MonteCarlo(
                MonteCarloConfig::new(
                    self.samples.unwrap_or(DEFAULT_SAMPLES),
                    self.seed.unwrap_or(0),
                )
                .map_err(|e| e.to_string())?,
            ),
        })
    }
}

impl ObjectiveOpts {
    fn build(&self, eval: &EvalOpts) -> Outcome<Objective> {
        let mut o = Objective::new(ids(&self.objective)?, self.utility, self.difference)
            .with_semantics(eval.semantics)
            .with_inference(eval.inference)
            .allowing_objective_removal(self.allow_objective_removal);
        if let Some(t) = &self.target {
            o = o.with_target(ids(t)?);
        }
        Ok(o)
    }
}

fn load(path: &Path) -> Outcome<Framework> {
    parse_framework(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

/// Builds the report and where it goes. Nothing is written until the whole
/// report exists.
fn run(command: Command) -> Outcome<(String, Option<PathBuf>)> {
    match command {
        Command::Evaluate { file, eval } => {
            let fw = load(&file)?;
            let evaluation = fw
                .evaluate(eval.semantics, eval.inference, &eval.method()?)
                .map_err(|e| e.to_string())?;
            let report = Report::evaluation(eval.semantics, eval.inference, &evaluation);
            Ok((render_report(&report), eval.output))
        }
        Command::VoiObserved {
            file,
            remove,
            rank: _,
            max_size,
            objective,
            eval,
        } => {
            let fw = load(&file)?;
            let obj = objective.build(&eval)?;
            let analysis = Analysis::new(&fw, &obj, eval.method()?).map_err(|e| e.to_string())?;
            let header = Report::header(eval.semantics, eval.inference, analysis.baseline())
                .with_objective(&obj);
            let report = match remove {
                Some(list) => {
                    let removed = ids(&list)?;
                    let value = analysis
                        .value_of_observed(&removed)
                        .map_err(|e| e.to_string())?;
                    header
                        .field("removed", list_ids(&removed))
                        .with_value(value)
                }
                None => {
                    let ranking = analysis
                        .rank_observed(max_size)
                        .map_err(|e| e.to_string())?;
                    header
                        .field("max_size", max_size)
                        .with_observed_ranking(&ranking)
                }
            };
            Ok((render_report(&report), eval.output))
        }
        Command::VoiObservation {
            file,
            bundle,
            rank_attacks: _,
            attack,
            objective,
            eval,
        } => {
            let fw = load(&file)?;
            let obj = objective.build(&eval)?;
            let analysis = Analysis::new(&fw, &obj, eval.method()?).map_err(|e| e.to_string())?;
            let header = Report::header(eval.semantics, eval.inference, analysis.baseline())
                .with_objective(&obj);
            let report = match bundle {
                Some(path) => {
                    let b = parse_bundle(&read(&path)?)
                        .map_err(|e| format!("{}: {e}", path.display()))?;
                    let value = analysis
                        .value_of_observation(&b)
                        .map_err(|e| e.to_string())?;
                    let args: Vec<&str> = b.arguments().iter().map(|(a, _)| a.as_str()).collect();
                    let atts: Vec<String> = b
                        .attacks()
                        .iter()
                        .map(|(s, t, _)| format!("({s},{t})"))
                        .collect();
                    header
                        .field("new_arguments", args.join(","))
                        .field("new_attacks", atts.join(","))
                        .with_value(value)
                }
                None => attack_ranking(&analysis, header, &attack)?,
            };
            Ok((render_report(&report), eval.output))
        }
        Command::VoiRank {
            file,
            rank_attacks,
            max_size,
            attack,
            objective,
            eval,
        } => {
            let fw = load(&file)?;
            let obj = objective.build(&eval)?;
            let analysis = Analysis::new(&fw, &obj, eval.method()?).map_err(|e| e.to_string())?;
            let header = Report::header(eval.semantics, eval.inference, analysis.baseline())
                .with_objective(&obj);
            let report = if rank_attacks {
                attack_ranking(&analysis, header, &attack)?
            } else {
                let k = max_size.unwrap_or(1);
                let ranking = analysis.rank_observed(k).map_err(|e| e.to_string())?;
                header.field("max_size", k).with_observed_ranking(&ranking)
            };
            Ok((render_report(&report), eval.output))
        }
        Command::AchConvert {
            csv,
            mapping,
            dung,
            output,
        } => {
            let matrix =
                parse_ach_csv(&read(&csv)?).map_err(|e| format!("{}: {e}", csv.display()))?;
            let fw: Framework = if dung {
                matrix.to_daf().into()
            } else {
                let mapping = match mapping {
                    Some(m) => m.parse::<ProbabilityMapping>().map_err(|e| e.to_string())?,
                    None => ProbabilityMapping::default(),
                };
                matrix.to_praf(&mapping).map_err(|e| e.to_string())?.into()
            };
            Ok((serialize_framework(&fw), output))
        }
    }
}

fn list_ids(set: &ArgumentSet) -> String {
    set.iter().map(|a| a.as_str()).collect::<Vec<_>>().join(",")
}

fn attack_ranking(analysis: &Analysis<'_>, header: Report, attack: &AttackOpts) -> Outcome<Report> {
    let p = probability("new-arg-prob", attack.new_arg_prob)?;
    let q = probability("attack-prob", attack.attack_prob)?;
    let ranking = analysis
        .rank_single_attacks(p, q)
        .map_err(|e| e.to_string())?;
    Ok(header
        .field("new_argument_probability", format_probability(p))
        .field("attack_probability", format_probability(q))
        .with_attack_ranking(&ranking))
}

/// Prints the first line of a clap error and exits with status 2. Help and
/// version requests go through clap unchanged.
fn usage_error(e: clap::Error) -> ! {
    if !e.use_stderr() {
        e.exit();
    }
    let rendered = e.render().to_string();
    eprintln!(
        "{}",
        rendered.lines().next().unwrap_or("error: invalid usage")
    );
    std::process::exit(2);
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| usage_error(e));
    match &cli.command {
        Command::Evaluate { eval, .. }
        | Command::VoiObserved { eval, .. }
        | Command::VoiObservation { eval, .. }
        | Command::VoiRank { eval, .. } => eval.check_usage(),
        Command::AchConvert { .. } => {}
    }
    let written = run(cli.command).and_then(|(text, output)| match output {
        Some(path) if path.as_os_str() != "-" && path.as_os_str() != "stdout" => {
            std::fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))
        }
        _ => {
            print!("{text}");
            Ok(())
        }
    });
    match written {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {}", message.replace('\n', " "));
            ExitCode::from(1)
        }
    }
}
