use serde_json::{json, Map, Value};
use trivol_core::oracle::hull_volume_4d;
use trivol_core::trilinear::{closed_form_volume, extreme_points, omega_normalize, pipeline_volume};
use trivol_core::{Rational, VolumeReport};

use super::{bounds_json, decimal_json, normalized_json, to_pretty};
use crate::args::{Method, VolumeArgs};
use crate::io::rational_to_json;
use crate::{CliError, Outcome, EXIT_DISAGREEMENT};

pub fn run(args: &VolumeArgs) -> Result<Outcome, CliError> {
    let bounds = args.input.load()?;
    let oracle = || hull_volume_4d(&extreme_points(&bounds));

    let mut formula = None;
    let mut report: Option<VolumeReport> = None;
    let methods: &[&str] = match args.method {
        Method::Formula => {
            formula = Some(closed_form_volume(&bounds));
            &["formula"]
        }
        Method::Pipeline => {
            report = Some(pipeline_volume(&bounds)?);
            &["pipeline"]
        }
        Method::Oracle => {
            let v = oracle()?;
            let mut out = header(&bounds, &["oracle"]);
            out.insert("vol_oracle".into(), rational_to_json(&v));
            finish(&mut out, &v);
            return Ok(Outcome::ok(to_pretty(&Value::Object(out))));
        }
        Method::All => {
            let r = pipeline_volume(&bounds)?.with_oracle(oracle()?);
            formula = Some(r.vol_formula.clone());
            report = Some(r);
            &["formula", "pipeline", "oracle"]
        }
    };

    let mut out = header(&bounds, methods);
    if let Some(v) = &formula {
        out.insert("vol_formula".into(), rational_to_json(v));
    }
    let mut code = 0;
    if let Some(r) = &report {
        out.insert("vol_pipeline".into(), rational_to_json(&r.vol_pipeline));
        if let Some(v) = &r.vol_oracle {
            out.insert("vol_oracle".into(), rational_to_json(v));
        }
        let im = &r.intermediates;
        out.insert(
            "intermediates".into(),
            json!({
                "vol_q": rational_to_json(&im.vol_q),
                "vol_r": rational_to_json(&im.vol_r),
                "v_qqr": rational_to_json(&im.v_qqr),
                "v_qrr": rational_to_json(&im.v_qrr),
            }),
        );
        out.insert("internal_mismatches".into(), json!(r.internal_mismatches));
        // The pipeline cross-checks itself even when it runs alone.
        if !r.internal_mismatches.is_empty() || (methods.len() > 1 && !r.agree) {
            code = EXIT_DISAGREEMENT;
        }
        if methods.len() > 1 {
            out.insert("agree".into(), Value::Bool(r.agree));
        }
    }
    let vol = formula.or_else(|| report.map(|r| r.vol_pipeline)).expect("some method ran");
    finish(&mut out, &vol);
    Ok(Outcome { stdout: to_pretty(&Value::Object(out)), code })
}

fn header(bounds: &trivol_core::Box3Bounds, methods: &[&str]) -> Map<String, Value> {
    let mut out = Map::new();
    out.insert("bounds".into(), bounds_json(bounds));
    out.insert("normalized".into(), normalized_json(&omega_normalize(bounds)));
    out.insert("methods".into(), json!(methods));
    out
}

fn finish(out: &mut Map<String, Value>, vol: &Rational) {
    out.insert("vol".into(), rational_to_json(vol));
    out.insert("vol_decimal".into(), decimal_json(vol));
}
