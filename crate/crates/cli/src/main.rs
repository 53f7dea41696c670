//! `recon`: decide and witness independent-set reconfiguration from the
//! command line.
//!
//! Exit codes: 0 reachable or success, 1 unreachable, 2 bad input,
//! 3 unsupported graph class, 4 internal invariant violation.

mod commands;
mod fuzz;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use recon_core::ErrorClass;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] recon_core::Error),
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Core(e) => match e.class() {
                ErrorClass::Input => 2,
                ErrorClass::Unsupported => 3,
                ErrorClass::Internal => 4,
            },
            CliError::Mismatch(_) => 4,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    /// token addition/removal with at least k tokens
    Tar,
    /// token jumping at fixed size; k is ignored
    Tj,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// one set per line
    Plain,
    /// start set, then one `+v` or `-v` per line
    Diff,
    Json,
}

#[derive(Args, Debug)]
pub struct Query {
    /// graph file: `n m` header, then `u v` edge lines
    pub graph: PathBuf,
    /// start set: `0,2,5`, `@file`, or `-` for the empty set
    pub a: String,
    /// target set, same syntax
    pub b: String,
    /// token lower bound
    #[arg(short, long)]
    pub k: Option<usize>,
    #[arg(short, long, value_enum, default_value_t = ModelArg::Tar)]
    pub model: ModelArg,
}

#[derive(Parser, Debug)]
#[command(name = "recon", version, about = "Independent set reconfiguration on cographs and chordal compositions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print REACHABLE or UNREACHABLE (exit 0 or 1)
    Decide(Query),
    /// Print an explicit reconfiguration sequence
    Witness {
        #[command(flatten)]
        query: Query,
        #[arg(short, long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Dump the decomposition with per-node tables and occupancy values
    Tables {
        graph: PathBuf,
        /// start set
        a: String,
        #[arg(short, long, default_value_t = 0)]
        k: usize,
    },
    /// Cross-check the engine against brute force (RECON_ORACLE_CAP bounds n)
    Oracle(Query),
    /// Compare engine and brute force on random instances
    Fuzz {
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// maximum number of vertices
        #[arg(long, default_value_t = 10)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.command {
        Command::Decide(q) => commands::decide(&q),
        Command::Witness { query, format } => commands::witness(&query, format),
        Command::Tables { graph, a, k } => commands::tables(&graph, &a, k),
        Command::Oracle(q) => commands::oracle(&q),
        Command::Fuzz { count, size, seed } => fuzz::run(count, size, seed),
    };
    match res {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
