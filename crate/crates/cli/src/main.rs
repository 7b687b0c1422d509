use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    trivol_cli::run(trivol_cli::Cli::parse())
}
