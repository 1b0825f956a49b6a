//! `pmpgraph`: generate graphs as edge lists and analyze them with JSON reports.

mod commands;
mod report;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "pmpgraph", version, about = "Spectral, coloring and matching analysis of finite graphs")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Edge-list file; standard input when omitted.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Relative tolerance for spectral comparisons.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Subset scan used by `tutte`.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Exhaustive)]
    pub mode: Mode,
    /// Reject inputs (and family indices) above this many vertices.
    #[arg(long = "max-n", global = true)]
    pub max_n: Option<usize>,
    /// JSON output; the default and only format.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Randomized,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a generated graph as an edge list.
    Gen(GenArgs),
    /// Adjacency and Laplacian spectra.
    Spectrum,
    /// Wilf, Hoffman, gap and independence bounds.
    Bounds,
    /// Proper coloring with a chosen algorithm.
    Color(ColorArgs),
    /// Spectral bipartiteness test, or the rotation 2-coloring with --alpha.
    Bipartite(BipartiteArgs),
    /// Tutte ratio scan, Brouwer-Haemers condition and perfect matching.
    Tutte(TutteArgs),
    /// Spectrum accumulation and gap persistence along a graph family.
    Limit(LimitArgs),
    /// Run the invariant suite on built-in fixtures.
    Verify,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Gen(_) => "gen",
            Command::Spectrum => "spectrum",
            Command::Bounds => "bounds",
            Command::Color(_) => "color",
            Command::Bipartite(_) => "bipartite",
            Command::Tutte(_) => "tutte",
            Command::Limit(_) => "limit",
            Command::Verify => "verify",
        }
    }
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[command(flatten)]
    pub source: GenSource,
    /// Replace every edge by a path of length two.
    #[arg(long)]
    pub subdivide: bool,
    /// Edge probability for --gnp.
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct GenSource {
    #[arg(long, value_name = "N")]
    pub cycle: Option<usize>,
    #[arg(long, value_name = "N")]
    pub path: Option<usize>,
    #[arg(long, value_name = "N")]
    pub complete: Option<usize>,
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    pub complete_bipartite: Option<Vec<usize>>,
    #[arg(long, value_name = "K")]
    pub star: Option<usize>,
    #[arg(long)]
    pub petersen: bool,
    /// Directed Paley tournament on Z/7.
    #[arg(long)]
    pub paley: bool,
    /// Directed function graph of the two unit shifts on a torus grid.
    #[arg(long, num_args = 2, value_names = ["ROWS", "COLS"])]
    pub torus: Option<Vec<usize>>,
    #[arg(long, num_args = 2, value_names = ["N", "D"])]
    pub random_regular: Option<Vec<usize>>,
    #[arg(long, value_name = "N")]
    pub gnp: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    /// Least available color in vertex order, palette max degree + 1.
    Greedy,
    /// Peeling at the largest eigenvalue, palette floor(M) + 1.
    Wilf,
    /// In-degree peeling of a function graph, palette 2 n_f + 1.
    Function,
    /// Degree peeling at --bound, palette floor(bound) + 1.
    Peel,
    /// Exhaustive search for the chromatic number.
    Exact,
}

#[derive(Args, Debug)]
pub struct ColorArgs {
    #[arg(long, value_enum, default_value_t = Algorithm::Wilf)]
    pub algorithm: Algorithm,
    /// Degree bound for --algorithm peel.
    #[arg(long)]
    pub bound: Option<f64>,
}

#[derive(Args, Debug)]
pub struct BipartiteArgs {
    /// Rotation number; switches to the rotation 2-coloring demo.
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long, default_value_t = 0.05)]
    pub gamma: f64,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
}

#[derive(Args, Debug)]
pub struct TutteArgs {
    /// Random subsets drawn in randomized mode.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Cycles,
    RandomRegular,
}

#[derive(Args, Debug)]
pub struct LimitArgs {
    #[arg(long, value_enum, default_value_t = Family::Cycles)]
    pub family: Family,
    /// Largest family index to include.
    #[arg(long, value_name = "N")]
    pub up_to: usize,
    /// Degree of the random-regular family.
    #[arg(long, default_value_t = 3)]
    pub degree: usize,
    /// Interval for the largest gap; defaults to [-d, d].
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
    pub interval: Option<Vec<f64>>,
    /// Include every accumulated point in the report.
    #[arg(long)]
    pub points: bool,
}

pub enum Failure {
    /// Bad flags, unreadable or malformed input: exit 2.
    Input { code: String, message: String },
    /// A size cap was exceeded: exit 3.
    Cap(String),
    /// `verify` found a failing check; the report is still printed.
    Checks(String),
}

impl From<pmpgraph::Error> for Failure {
    fn from(e: pmpgraph::Error) -> Self {
        match e {
            pmpgraph::Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Input { code: e.code().into(), message: e.to_string() },
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let code = match e.kind() {
                ErrorKind::UnknownArgument => "unknown_flag",
                ErrorKind::InvalidSubcommand | ErrorKind::MissingSubcommand => "unknown_command",
                ErrorKind::InvalidValue | ErrorKind::ValueValidation => "invalid_value",
                _ => "usage",
            };
            let rendered = e.to_string();
            let message = rendered.lines().next().unwrap_or("invalid arguments").trim_start_matches("error: ");
            println!("{}", report::error_report("", code, message));
            return ExitCode::from(2);
        }
    };
    let name = cli.command.name();
    let mut stdout = std::io::stdout().lock();
    match commands::run(&cli) {
        Ok(text) => {
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Input { code, message }) => {
            let _ = writeln!(stdout, "{}", report::error_report(name, &code, &message));
            ExitCode::from(2)
        }
        Err(Failure::Cap(message)) => {
            let _ = writeln!(stdout, "{}", report::error_report(name, "cap_exceeded", &message));
            ExitCode::from(3)
        }
        Err(Failure::Checks(text)) => {
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::from(1)
        }
    }
}
