use serde_json::json;
use trivol_core::mixed_volume::volume_cubic;

use super::to_pretty;
use crate::args::MixedVolumeArgs;
use crate::io::{rational_to_json, BodiesFile};
use crate::{CliError, Outcome};

pub fn run(args: &MixedVolumeArgs) -> Result<Outcome, CliError> {
    let (k, l) = BodiesFile::read(&args.file)?.bodies()?;
    let c = volume_cubic(&k, &l)?;
    let out = json!({
        "c0": rational_to_json(&c.c0),
        "c1": rational_to_json(&c.c1),
        "c2": rational_to_json(&c.c2),
        "c3": rational_to_json(&c.c3),
        "V_KKL": rational_to_json(&c.v_kkl()),
        "V_KLL": rational_to_json(&c.v_kll()),
    });
    Ok(Outcome::ok(to_pretty(&out)))
}
