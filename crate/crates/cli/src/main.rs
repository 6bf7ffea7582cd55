//! `modseries` — exact module computations from the command line.
//!
//! Every subcommand prints a line-oriented report to standard output, starting with
//! `RESULT: …`. Exit codes: 0 success, 1 internal error or non-isomorphic series,
//! 2 unreadable input, 3 search budget exhausted, 4 invalid series, 5 violated
//! precondition.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use modseries::{Error, SearchConfig};

#[derive(Parser)]
#[command(name = "modseries", version, about = "Composition series, butterflies and direct sums over GF(p)")]
struct Cli {
    /// Seed for randomized searches beyond the exhaustive bound.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest search space (in vectors or matrices) that is enumerated exhaustively.
    #[arg(long = "max-enum", global = true, default_value_t = 4096)]
    max_enum: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Composition series of a module and the isomorphism classes of its factors.
    Compose { module: PathBuf },
    /// Match the factors of two composition series.
    Jh { module: PathBuf, first: PathBuf, second: PathBuf },
    /// Schreier refinement of two normal series with a certified factor pairing.
    Refine { module: PathBuf, first: PathBuf, second: PathBuf },
    /// Butterfly isomorphism; the subspace file holds Ũ, U, W̃, W in that order.
    Zassenhaus { module: PathBuf, subspaces: PathBuf },
    /// Block-diagonal direct sum of modules with its canonical series.
    Sum {
        #[arg(required = true)]
        modules: Vec<PathBuf>,
    },
    /// Whether sums of `n` and `m` copies of one simple module are isomorphic.
    SymbolicIso { n: String, m: String },
}

/// A finished report and the exit code that goes with it.
pub struct Report {
    pub text: String,
    pub code: u8,
}

/// Why a command stopped early.
pub enum Failure {
    Io(PathBuf, std::io::Error),
    Engine(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::NotPrime(_)
        | Error::ModulusTooLarge(_)
        | Error::EntryOutOfRange { .. }
        | Error::Shape(_)
        | Error::Dimension { .. }
        | Error::FieldMismatch => 2,
        Error::Resource(_) => 3,
        Error::InvalidSeries(_) | Error::NotCompositionSeries { .. } => 4,
        Error::Precondition(_)
        | Error::Degenerate(_)
        | Error::InvalidSubmodule { .. }
        | Error::ParentMismatch
        | Error::Unsupported(_)
        | Error::IncomparableLabel(..) => 5,
        Error::Internal(_) => 1,
    }
}

fn failure_report(f: Failure) -> Report {
    let mut text = String::from("RESULT: fail\n");
    let code = match f {
        Failure::Io(path, e) => {
            text.push_str(&format!("error: cannot read {}: {e}\n", path.display()));
            2
        }
        Failure::Engine(e) => {
            text.push_str(&format!("error: {e}\n"));
            if let Error::InvalidSeries(violations) = &e {
                for v in violations {
                    text.push_str(&format!("violation: {v}\n"));
                }
            }
            exit_code(&e)
        }
    };
    Report { text, code }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = SearchConfig { seed: cli.seed, max_enum: cli.max_enum, ..SearchConfig::default() };
    let outcome = match &cli.command {
        Command::Compose { module } => commands::compose(module, &cfg),
        Command::Jh { module, first, second } => commands::jh(module, first, second, &cfg),
        Command::Refine { module, first, second } => commands::refine(module, first, second),
        Command::Zassenhaus { module, subspaces } => commands::zassenhaus(module, subspaces),
        Command::Sum { modules } => commands::sum(modules, &cfg),
        Command::SymbolicIso { n, m } => commands::symbolic_iso(n, m),
    };
    let report = outcome.unwrap_or_else(failure_report);
    print!("{}", report.text);
    ExitCode::from(report.code)
}
