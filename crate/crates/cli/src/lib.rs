//! `qsearch` command-line surface: scalar queries plus deterministic table
//! and figure data.

pub mod commands;
pub mod config;
pub mod table;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use thiserror::Error;

pub use config::{Cli, Command, Format, Options, RunConfig};
pub use table::{sci, TableArtifact};

/// Environment variable holding the worker-thread count for sweeps.
pub const THREADS_ENV: &str = "QSEARCH_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Unreachable(String),
    #[error("{0}")]
    Quadrature(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Unreachable(_) => 3,
            CliError::Quadrature(_) => 4,
            CliError::Io(_) => 1,
        }
    }
}

impl From<qsearch_core::Error> for CliError {
    fn from(e: qsearch_core::Error) -> Self {
        match e {
            qsearch_core::Error::QuadratureFailure(_) => CliError::Quadrature(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

/// Parses `argv` (program name first), runs the subcommand and returns the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match commands::execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(std::io::stderr(), "qsearch: {e}");
            e.exit_code()
        }
    }
}
