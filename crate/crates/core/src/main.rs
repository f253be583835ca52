use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use prasatul::bench::{BenchFunction, OptimizerKind};
use prasatul::commands::{compare_command, rank_command, run_command, wilcoxon_command, RankInput, RunSelection};
use prasatul::io::{load_results, load_traces};
use prasatul::report::Report;
use prasatul::stats::DEFAULT_ALPHA;
use prasatul::{ComparisonConfig, Error, Orientation, ScoreKey};

#[derive(Parser)]
#[command(
    name = "prasatul",
    version,
    about = "Direct comparison of stochastic optimizer results"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scope {
    Quality,
    Convergence,
}

#[derive(clap::Args)]
struct CompareArgs {
    /// Absolute tolerance for ties and band boundaries.
    #[arg(long, default_value_t = 0.0)]
    tolerance: f64,
    /// `as-printed` or `transposed`.
    #[arg(long, default_value = "as-printed")]
    orientation: String,
}

impl CompareArgs {
    fn config(&self) -> Result<ComparisonConfig, Error> {
        ComparisonConfig::new(self.tolerance, self.orientation.parse::<Orientation>()?)
    }
}

#[derive(clap::Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate results and trace files with the baseline optimizers.
    Run {
        #[arg(long, value_delimiter = ',', default_value = "sphere")]
        functions: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "10")]
        dims: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "rs,de,pso")]
        optimizers: Vec<String>,
        #[arg(long, default_value_t = 30)]
        population: usize,
        #[arg(long, default_value_t = 200)]
        generations: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        results: PathBuf,
        #[arg(long)]
        traces: Option<PathBuf>,
    },
    /// Pairwise matrices, scores and one-to-many averages for one primary.
    Compare {
        #[arg(long)]
        results: PathBuf,
        #[arg(long)]
        primary: String,
        /// Defaults to every other algorithm in the file.
        #[arg(long, value_delimiter = ',')]
        alternatives: Vec<String>,
        #[command(flatten)]
        cmp: CompareArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Dump the raw 3x3 matrices with margins.
    Matrix {
        #[arg(long)]
        results: PathBuf,
        #[arg(long)]
        primary: String,
        #[arg(long, value_delimiter = ',')]
        alternatives: Vec<String>,
        #[command(flatten)]
        cmp: CompareArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Problem-wise or overall ranking, every algorithm acting as primary.
    Rank {
        #[arg(long, value_enum, default_value_t = Scope::Quality)]
        scope: Scope,
        /// Results file (quality scope).
        #[arg(long)]
        results: Option<PathBuf>,
        /// Trace file (convergence scope).
        #[arg(long)]
        traces: Option<PathBuf>,
        /// One table per problem instead of a single overall table.
        #[arg(long)]
        per_problem: bool,
        #[arg(long, default_value = "kt")]
        key: String,
        #[command(flatten)]
        cmp: CompareArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Rank-sum tests of one primary against every other algorithm.
    Wilcoxon {
        #[arg(long)]
        results: PathBuf,
        #[arg(long)]
        primary: String,
        #[arg(long, default_value_t = DEFAULT_ALPHA)]
        alpha: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn emit(report: &Report, out: &OutputArgs) -> Result<(), Error> {
    let text = match out.format {
        Format::Text => report.to_text(),
        Format::Csv => report.to_csv(),
    };
    match &out.output {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn execute(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Run {
            functions,
            dims,
            optimizers,
            population,
            generations,
            trials,
            seed,
            results,
            traces,
        } => {
            let sel = RunSelection {
                functions: functions
                    .iter()
                    .map(|f| f.parse::<BenchFunction>())
                    .collect::<Result<_, _>>()?,
                dimensions: dims,
                optimizers: optimizers
                    .iter()
                    .map(|o| o.parse::<OptimizerKind>())
                    .collect::<Result<_, _>>()?,
                population,
                generations,
                trials,
                seed,
            };
            let (r, t) = run_command(&sel, &results, traces.as_deref())?;
            eprintln!("wrote {r} result rows and {t} trace rows");
            Ok(())
        }
        Command::Compare {
            results,
            primary,
            alternatives,
            cmp,
            out,
        } => {
            let data = load_results(results)?;
            let report = compare_command(&data, &primary, &alternatives, &cmp.config()?)?.report();
            emit(&report, &out)
        }
        Command::Matrix {
            results,
            primary,
            alternatives,
            cmp,
            out,
        } => {
            let data = load_results(results)?;
            let report = compare_command(&data, &primary, &alternatives, &cmp.config()?)?.matrix_report();
            emit(&report, &out)
        }
        Command::Rank {
            scope,
            results,
            traces,
            per_problem,
            key,
            cmp,
            out,
        } => {
            let key: ScoreKey = key.parse()?;
            let cfg = cmp.config()?;
            let output = match scope {
                Scope::Quality => {
                    let path = results.ok_or_else(|| Error::InvalidConfig("--results is required".into()))?;
                    let data = load_results(path)?;
                    rank_command(RankInput::Results(&data), per_problem, key, &cfg)?
                }
                Scope::Convergence => {
                    let path = traces.ok_or_else(|| Error::InvalidConfig("--traces is required".into()))?;
                    let data = load_traces(path)?;
                    rank_command(RankInput::Traces(&data), per_problem, key, &cfg)?
                }
            };
            emit(&output.report(), &out)
        }
        Command::Wilcoxon {
            results,
            primary,
            alpha,
            out,
        } => {
            let data = load_results(results)?;
            emit(&wilcoxon_command(&data, &primary, alpha)?.report(), &out)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
