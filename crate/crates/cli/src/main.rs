//! `hamburger` command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input, 2 budget exceeded, 3 internal
//! invariant breach or a `--verify` mismatch.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hamburger::Error;

#[derive(Parser, Debug)]
#[command(name = "hamburger", version, about = "Exact hamburger determinants, cycle systems and Aztec tilings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the full and reduced hamburger determinants of a graph file.
    Det {
        graph: PathBuf,
    },
    /// List every cycle system of a graph file with its sign, then the totals.
    Cycles {
        graph: PathBuf,
        #[arg(long, default_value_t = 10_000_000)]
        max_systems: u64,
    },
    /// Build a region and write its region file, digraph and ASCII map.
    Region(RegionArgs),
    /// Count domino tilings of a region file.
    Tilings {
        region: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Det)]
        method: Method,
        /// Also count with a second method and fail on disagreement.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = hamburger::tiling::DEFAULT_MAX_ENUM_CELLS)]
        max_cells: u64,
    },
    /// Pillow count series with square decompositions, ratios and two-squares data.
    Propp {
        /// Odd step length; repeat for a batch.
        #[arg(long, required = true)]
        q: Vec<i64>,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Directory for the report and the per-q ratio files; stdout otherwise.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time full against reduced determinants for pillows of order 1..=n-max.
    Bench {
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        q: i64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Leave out wall times so the table is reproducible.
        #[arg(long)]
        no_timings: bool,
    },
    /// Print a Schröder table as TSV.
    Schroeder {
        #[arg(long)]
        n: usize,
        /// Large Schröder matrix instead of the modified table.
        #[arg(long)]
        large: bool,
    },
}

#[derive(Args, Debug)]
struct RegionArgs {
    #[arg(value_enum)]
    kind: RegionKind,
    #[arg(long)]
    n: i64,
    #[arg(long)]
    q: Option<i64>,
    #[arg(long, value_delimiter = ',')]
    top_left: Vec<i64>,
    #[arg(long, value_delimiter = ',')]
    top_right: Vec<i64>,
    #[arg(long, value_delimiter = ',')]
    bottom_left: Vec<i64>,
    #[arg(long, value_delimiter = ',')]
    bottom_right: Vec<i64>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RegionKind {
    Diamond,
    Pillow,
    Generalized,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Det,
    Dp,
    Enum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Txt,
}

/// A command failure and the exit code it maps to.
#[derive(Debug)]
enum Failure {
    Lib(Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Lib(Error::Io(e))
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch(_) => 3,
            Failure::Lib(Error::SizeBound { .. }) => 2,
            Failure::Lib(Error::Invariant(_)) => 3,
            Failure::Lib(_) => 1,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Mismatch(m) => write!(f, "verification failed: {m}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
