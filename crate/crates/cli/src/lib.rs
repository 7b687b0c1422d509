//! Front end for `trivol-core`: argument parsing, file formats and the
//! subcommands behind the `trivol` binary.
//!
//! Every command returns its stdout text together with an exit code, so the
//! commands can be driven in-process as well as from the binary.

use std::process::ExitCode;

pub mod args;
pub mod commands;
pub mod io;

pub use args::{Cli, Command};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] trivol_core::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Bad input, unreadable files and degenerate geometry are all user
    /// errors.
    pub fn exit_code(&self) -> u8 {
        2
    }
}

/// Successful completion of a command. A non-zero `code` still carries
/// output (a disagreeing report, a counterexample).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    pub fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_DISAGREEMENT: u8 = 3;

pub fn run(cli: Cli) -> ExitCode {
    let result = match cli.command {
        Command::Volume(a) => commands::volume::run(&a),
        Command::Verify(a) => commands::verify::run(&a),
        Command::Sweep(a) => commands::sweep::run(&a),
        Command::MixedVolume(a) => commands::mixed::run(&a),
        Command::Normalize(a) => commands::normalize::run(&a),
    };
    match result {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
