//! `ffd` — evaluate and search two-level fractional factorial designs.
//!
//! Exit codes: `0` success, `1` usage or input error, `2` verification
//! failure (a failed `verify` check, or an `oracle` verdict of UNEQUAL).

mod commands;
mod output;
mod scenario;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ffd_core::{Encoding, SearchMethod};

#[derive(Parser, Debug)]
#[command(
    name = "ffd",
    version,
    about = "Evaluate and search two-level fractional factorial designs under model-robustness criteria",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a design file under the selected criteria
    Eval(EvalArgs),
    /// Check a closed-form criterion against direct model enumeration
    Oracle(OracleArgs),
    /// Search for criterion-optimal designs
    Search(SearchArgs),
    /// Run the self-verification suites
    Verify(VerifyArgs),
    /// Print a 12-run design drawn from a Hadamard matrix of order 12
    Hadamard(HadamardArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum EncodingArg {
    /// Tokens `+1`/`1` and `-1`
    #[value(name = "pm")]
    PlusMinus,
    /// Tokens `1` (high) and `0` (low)
    #[value(name = "01")]
    ZeroOne,
}

impl From<EncodingArg> for Encoding {
    fn from(arg: EncodingArg) -> Encoding {
        match arg {
            EncodingArg::PlusMinus => Encoding::PlusMinus,
            EncodingArg::ZeroOne => Encoding::ZeroOne,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl FormatArg {
    fn json(self) -> bool {
        self == FormatArg::Json
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum MethodArg {
    /// Multi-restart best-improvement row exchange (heuristic)
    Exchange,
    /// Orderly generation over canonical classes (exact optimum)
    Exhaustive,
}

impl From<MethodArg> for SearchMethod {
    fn from(arg: MethodArg) -> SearchMethod {
        match arg {
            MethodArg::Exchange => SearchMethod::Exchange,
            MethodArg::Exhaustive => SearchMethod::Exhaustive,
        }
    }
}

#[derive(Args, Debug)]
struct EvalArgs {
    /// Design file: one run per line, `#` comments and blank lines skipped
    file: PathBuf,
    /// Criteria: bs, gma, afd, s31, sf0:f=N (or f=A..B), sfg:g=N (or
    /// g=A..B), dfg:SCENARIO [default: bs gma afd]
    #[arg(long, num_args = 1.., value_name = "SPEC")]
    criteria: Vec<String>,
    #[arg(long, value_enum, default_value = "pm")]
    encoding: EncodingArg,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Omit timing, making output byte-stable across runs
    #[arg(long)]
    no_timing: bool,
    /// Largest model-space support an enumeration criterion may walk
    #[arg(long, default_value_t = 1_000_000, value_name = "N")]
    max_support: u64,
}

#[derive(Args, Debug)]
struct OracleArgs {
    /// Design file: one run per line, `#` comments and blank lines skipped
    file: PathBuf,
    /// Scenario: s31, sf0:f=N, sfg:g=N, hier-joint:f=N,g=N,
    /// hier-triples:f=N,g=N, or weights:PATH
    #[arg(long, value_name = "SPEC")]
    scenario: String,
    #[arg(long, value_enum, default_value = "pm")]
    encoding: EncodingArg,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Omit timing, making output byte-stable across runs
    #[arg(long)]
    no_timing: bool,
    /// Largest model-space support the enumeration may walk
    #[arg(long, default_value_t = 1_000_000, value_name = "N")]
    max_support: u64,
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Run count n
    #[arg(long, value_name = "N")]
    runs: usize,
    /// Factor count m
    #[arg(long, value_name = "M")]
    factors: usize,
    /// Criterion to minimize: s31, sf0:f=N, or sfg:g=N
    #[arg(long, value_name = "SPEC")]
    criterion: String,
    #[arg(long, value_enum, default_value = "exchange")]
    method: MethodArg,
    /// Exchange restarts
    #[arg(long, default_value_t = 100, value_name = "N")]
    restarts: usize,
    /// Seed for the exchange restart stream
    #[arg(long, default_value_t = 0, value_name = "N")]
    seed: u64,
    /// Allow repeated runs (search multisets, not just distinct rows)
    #[arg(long)]
    allow_repeats: bool,
    /// Opt into exhaustive spaces beyond the built-in size guard
    #[arg(long)]
    long_running: bool,
    /// Minimum improvement an exchange move must achieve (integer,
    /// fraction p/q, or plain decimal)
    #[arg(long, default_value = "0", value_name = "RAT")]
    tolerance: String,
    /// Worker threads for exchange restarts (FFD_WORKERS also read; the
    /// flag wins)
    #[arg(long, value_name = "N")]
    workers: Option<usize>,
    /// Include per-restart progress notes in the report
    #[arg(long)]
    trace: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Omit timing, making output byte-stable across runs
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Check the coefficient-ordering propositions over --m
    #[arg(long)]
    props: bool,
    /// Factor range for --props, inclusive (`A..B` or a single value)
    #[arg(long, default_value = "4..8", value_name = "A..B")]
    m: String,
    /// Compare closed forms against the enumeration oracle on random designs
    #[arg(long)]
    oracle: bool,
    /// Random designs to draw for --oracle
    #[arg(long, default_value_t = 20, value_name = "N")]
    samples: usize,
    /// Run count of each sampled design
    #[arg(long, default_value_t = 12, value_name = "N")]
    runs: usize,
    /// Factor count of each sampled design
    #[arg(long, default_value_t = 5, value_name = "M")]
    factors: usize,
    /// Seed for --oracle sampling
    #[arg(long, default_value_t = 0, value_name = "N")]
    seed: u64,
    /// Cross-check the affine-full-dimensionality characterizations
    #[arg(long)]
    afd: bool,
    /// Factor count exhaustively swept by --afd (2..=5)
    #[arg(long, default_value_t = 3, value_name = "M")]
    exhaustive_m: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Omit timing, making output byte-stable across runs
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args, Debug)]
struct HadamardArgs {
    /// Columns to keep, 1..=11
    #[arg(long, value_name = "M")]
    factors: usize,
    /// Which column subset to print, 0-based in lexicographic order
    #[arg(long, conflicts_with = "count", value_name = "K")]
    index: Option<usize>,
    /// Print only the number of column subsets
    #[arg(long)]
    count: bool,
    #[arg(long, value_enum, default_value = "pm")]
    encoding: EncodingArg,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                print!("{err}");
                std::process::exit(0);
            }
            eprint!("{err}");
            std::process::exit(1);
        }
    };
    let code = match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            1
        }
    };
    std::process::exit(code);
}

fn run(cli: &Cli) -> anyhow::Result<i32> {
    match &cli.command {
        Command::Eval(args) => commands::cmd_eval(args),
        Command::Oracle(args) => commands::cmd_oracle(args),
        Command::Search(args) => commands::cmd_search(args),
        Command::Verify(args) => commands::cmd_verify(args),
        Command::Hadamard(args) => commands::cmd_hadamard(args),
    }
}
