use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use trivol_core::Box3Bounds;

use crate::io::{parse_bounds_arg, BoxSpecFile};
use crate::CliError;

/// Exact 4-volume of the convex hull of w = x1·x2·x3 over a box.
#[derive(Debug, Parser)]
#[command(name = "trivol", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Volume of one box by the closed form, the slice pipeline and the hull.
    Volume(VolumeArgs),
    /// Check the structural identities on random integer boxes.
    Verify(VerifyArgs),
    /// Volumes over a grid of boxes, as CSV.
    Sweep(SweepArgs),
    /// Coefficients of Vol(K + tL) for two polytopes.
    MixedVolume(MixedVolumeArgs),
    /// Show the variable relabeling chosen for a box.
    Normalize(BoxArgs),
}

#[derive(Debug, Clone, Args)]
pub struct BoxArgs {
    /// Bounds as a1,b1,a2,b2,a3,b3 (integers, decimals or p/q).
    #[arg(long, conflicts_with = "file", required_unless_present = "file", allow_hyphen_values = true)]
    pub bounds: Option<String>,
    /// JSON file {"a": [..], "b": [..]}.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

impl BoxArgs {
    pub fn from_bounds(s: &str) -> Self {
        BoxArgs { bounds: Some(s.to_owned()), file: None }
    }

    pub fn load(&self) -> Result<Box3Bounds, CliError> {
        match (&self.bounds, &self.file) {
            (Some(s), _) => parse_bounds_arg(s),
            (None, Some(p)) => BoxSpecFile::read(p)?.to_bounds(),
            (None, None) => Err(CliError::Input("one of --bounds or --file is required".into())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Pipeline,
    Oracle,
    All,
}

#[derive(Debug, Clone, Args)]
pub struct VolumeArgs {
    #[command(flatten)]
    pub input: BoxArgs,
    #[arg(long, value_enum, default_value_t = Method::All)]
    pub method: Method,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    /// Negate the third support term.
    Z3Sign,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    #[arg(long, env = "TRIVOL_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(i64).range(1..))]
    pub max_bound: i64,
    /// Deliberately break one formula to check that the harness notices.
    #[arg(long, value_enum, hide = true)]
    pub inject_fault: Option<Fault>,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub file: PathBuf,
    /// Print numbers as floating point instead of p/q.
    #[arg(long)]
    pub float: bool,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct MixedVolumeArgs {
    /// JSON file {"k": [[x,y,z], ..], "l": [[x,y,z], ..]}.
    #[arg(long)]
    pub file: PathBuf,
}
