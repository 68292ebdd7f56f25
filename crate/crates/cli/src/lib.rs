//! The `spiked` command line: argument handling, commands and output formats.
//!
//! Exit statuses: 0 success, 1 I/O failure, 2 invalid input or a violated
//! parameter bound, 3 a failed validation check.

pub mod commands;
pub mod config;
pub mod output;

use std::io::Write;

use commands::Status;
use config::{Cli, RunConfig};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Domain(#[from] spiked::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Domain(_) | CliError::Usage(_) => 2,
        }
    }
}

fn emit(text: &str, config: &RunConfig) -> Result<(), CliError> {
    match &config.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}"))),
    }
}

fn execute(cli: Cli) -> Result<u8, CliError> {
    let config = RunConfig::resolve(cli)?;
    let outcome = commands::dispatch(&config)?;
    emit(&output::render(&outcome.report, &config), &config)?;
    Ok(match outcome.status {
        Status::Ok => 0,
        Status::ValidationFailed(msg) => {
            eprintln!("validation failed: {msg}");
            3
        }
        Status::AllRowsFailed => {
            eprintln!("error: every sweep row failed");
            2
        }
    })
}

/// Runs a parsed command line and returns the process exit status.
pub fn run(cli: Cli) -> u8 {
    execute(cli).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        e.exit_code()
    })
}
