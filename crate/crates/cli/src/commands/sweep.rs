use std::fmt::Write as _;

use rayon::prelude::*;
use trivol_core::rational::{to_f64, to_fraction_string};
use trivol_core::trilinear::{closed_form_volume, omega_normalize};
use trivol_core::{Box3Bounds, Error, Rational};

use crate::args::SweepArgs;
use crate::io::SweepSpec;
use crate::{CliError, Outcome};

pub const HEADER: &str = "a1,b1,a2,b2,a3,b3,volume,perm";

/// Cartesian product of the axes, first axis slowest.
fn grid(axes: &[Vec<Rational>; 6]) -> Vec<[Rational; 6]> {
    let total: usize = axes.iter().map(Vec::len).product();
    let mut out = Vec::with_capacity(total);
    let mut idx = [0usize; 6];
    for _ in 0..total {
        out.push(std::array::from_fn(|i| axes[i][idx[i]].clone()));
        for i in (0..6).rev() {
            idx[i] += 1;
            if idx[i] < axes[i].len() {
                break;
            }
            idx[i] = 0;
        }
    }
    out
}

fn fmt(r: &Rational, float: bool) -> String {
    if float {
        to_f64(r).to_string()
    } else {
        to_fraction_string(r)
    }
}

/// Builds the CSV text for a parsed spec.
pub fn render(spec: &SweepSpec, float: bool) -> Result<String, CliError> {
    let skip_invalid = spec.skip_invalid()?;
    let mut boxes = Vec::new();
    let mut skipped = 0usize;
    for p in grid(&spec.axes()?) {
        let [a1, b1, a2, b2, a3, b3] = p;
        match Box3Bounds::new([a1, a2, a3], [b1, b2, b3]) {
            Ok(b) => boxes.push(b),
            Err(Error::InvalidBounds(_)) if skip_invalid => skipped += 1,
            Err(e) => return Err(CliError::Input(format!("grid point {}: {e}", boxes.len() + skipped + 1))),
        }
    }

    let rows: Vec<String> = boxes
        .par_iter()
        .map(|b| {
            let vol = closed_form_volume(b);
            let perm: String = omega_normalize(b).perm().iter().map(|i| char::from(b'1' + *i as u8)).collect();
            let mut row = String::new();
            for i in 0..3 {
                write!(row, "{},{},", fmt(&b.a()[i], float), fmt(&b.b()[i], float)).unwrap();
            }
            write!(row, "{},{perm}", fmt(&vol, float)).unwrap();
            row
        })
        .collect();

    let mut csv = String::from(HEADER);
    csv.push('\n');
    for r in rows {
        csv.push_str(&r);
        csv.push('\n');
    }
    if skipped > 0 {
        writeln!(csv, "# skipped: {skipped}").unwrap();
    }
    Ok(csv)
}

pub fn run(args: &SweepArgs) -> Result<Outcome, CliError> {
    let csv = render(&SweepSpec::read(&args.file)?, args.float)?;
    match &args.out {
        Some(path) => {
            std::fs::write(path, csv)?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(csv)),
    }
}
