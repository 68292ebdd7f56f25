use std::process::ExitCode;

use clap::Parser;
use spiked_cli::config::Cli;

fn main() -> ExitCode {
    ExitCode::from(spiked_cli::run(Cli::parse()))
}
