use serde_json::json;
use trivol_core::trilinear::{omega_check, omega_normalize};

use super::{bounds_json, normalized_json, to_pretty};
use crate::args::BoxArgs;
use crate::io::rational_to_json;
use crate::{CliError, Outcome};

pub fn run(args: &BoxArgs) -> Result<Outcome, CliError> {
    let bounds = args.load()?;
    let ob = omega_normalize(&bounds);
    let out = json!({
        "bounds": bounds_json(&bounds),
        "keys": ob.keys().iter().map(rational_to_json).collect::<Vec<_>>(),
        "already_ordered": omega_check(&bounds),
        "normalized": normalized_json(&ob),
        "normalized_keys": ob.bounds().omega_keys().iter().map(rational_to_json).collect::<Vec<_>>(),
    });
    Ok(Outcome::ok(to_pretty(&out)))
}
