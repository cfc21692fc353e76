//! `strfact`: command-line front end for the factorisation solvers.
//!
//! Exit codes: 0 success, 1 verification rejected, 2 parse or usage error,
//! 3 budget refusal, 4 internal invariant violation.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use strfact::Format;

#[derive(Parser, Debug)]
#[command(
    name = "strfact",
    version,
    about = "Width-bounded string factorisation of minimum and maximum dimension"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Factorise a word with one of the solvers.
    Factorize(FactorizeArgs),
    /// List the good 2-factors of a word.
    GoodFactors(WordArgs),
    /// Compile a 3DM instance into a width-3 maximum-dimension instance.
    #[command(name = "reduce-3dm")]
    Reduce3dm(ReduceArgs),
    /// Decide a 3DM instance by backtracking.
    #[command(name = "solve-3dm")]
    Solve3dm(SolveArgs),
    /// Check a factorisation file against a word file.
    Verify(VerifyArgs),
    /// Compare the greedy maximum against the exhaustive optimum on random words.
    Experiment(ExperimentArgs),
}

#[derive(Args, Debug)]
struct WordArgs {
    /// Read the word from this file (default: stdin).
    #[arg(long, conflicts_with = "word")]
    input: Option<PathBuf>,
    /// Inline word.
    #[arg(long)]
    word: Option<String>,
    #[arg(long, default_value = "plain", value_parser = parse_format)]
    format: Format,
    /// Contract-bound machine-readable output.
    #[arg(long)]
    lines: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Solver {
    MinGreedy,
    MinBrute,
    MaxGreedy,
    MaxDp,
    MaxBb,
    MaxBrute,
    Baseline,
}

#[derive(Args, Debug)]
struct FactorizeArgs {
    #[command(flatten)]
    word: WordArgs,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, value_enum, default_value = "max-greedy")]
    solver: Solver,
    /// Search budget: factorisations for brute force, nodes for branch and bound.
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Largest factor universe (in bits) the subset DP accepts.
    #[arg(long, default_value_t = strfact::exact::DEFAULT_MASK_BITS)]
    budget_masks: u32,
}

#[derive(Args, Debug)]
struct ReduceArgs {
    /// 3DM instance file (default: stdin).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Write `word.txt` and `meta.txt` here instead of printing them.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long)]
    input: Option<PathBuf>,
    /// Also write the compiled word, its metadata and, when a matching
    /// exists, the forward factorisation (`factors.txt`) here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = strfact::reduction::DEFAULT_SEARCH_BUDGET)]
    budget_nodes: u64,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Word file.
    #[arg(long)]
    word: PathBuf,
    /// Factorisation file: one factor per line; a leading `dim=` line is skipped.
    #[arg(long)]
    factors: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value = "plain", value_parser = parse_format)]
    format: Format,
}

#[derive(Args, Debug)]
struct ExperimentArgs {
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 16)]
    max_n: usize,
    /// Alphabet sizes to draw from.
    #[arg(long, value_delimiter = ',', default_values_t = [2usize, 3, 4])]
    sigma: Vec<usize>,
    /// Widths to draw from.
    #[arg(long, value_delimiter = ',', default_values_t = [2usize, 3])]
    k: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Per-trial cap on enumerated factorisations.
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Write `experiment.csv` here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print the CSV instead of the summary table.
    #[arg(long)]
    lines: bool,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Factorize(args) => commands::factorize(args),
        Command::GoodFactors(args) => commands::good_factors(args),
        Command::Reduce3dm(args) => commands::reduce(args),
        Command::Solve3dm(args) => commands::solve(args),
        Command::Verify(args) => commands::verify(args),
        Command::Experiment(args) => commands::experiment(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("strfact: {err}");
            ExitCode::from(err.code())
        }
    }
}
