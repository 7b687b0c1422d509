//! Randomized check of the identities the slice pipeline relies on.

use std::fmt::Write as _;

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use trivol_core::mixed_volume::mixed_volume_against;
use trivol_core::oracle::hull_volume_4d;
use trivol_core::rational::to_fraction_string;
use trivol_core::sampling::random_integer_box;
use trivol_core::trilinear::{
    build_q, build_r, extreme_points, mixed_volumes_qr, omega_check, omega_dprime_check, omega_normalize,
    omega_prime_check, pipeline_volume, q_vertices, r_vertices, support_max_generic, support_max_z,
};
use trivol_core::{Box3Bounds, Rational};

use crate::args::{Fault, VerifyArgs};
use crate::{CliError, Outcome, EXIT_VIOLATION};

/// Evaluator for the winning support terms z₁..z₈.
pub type ZEval = fn(usize, &Box3Bounds) -> trivol_core::Result<Rational>;

fn z3_sign_flipped(i: usize, b: &Box3Bounds) -> trivol_core::Result<Rational> {
    let z = support_max_z(i, b)?;
    Ok(if i == 3 { -z } else { z })
}

pub const PROPERTIES: [&str; 4] =
    ["z-lemma maxima", "labeling equivalence", "V(Q,Q,R) = V(Q,R,R)", "three-way agreement"];

/// Outcome of one property on one box: checks run and the first failure.
#[derive(Debug, Default, Clone)]
struct Tally {
    checks: usize,
    failure: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, why: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(why());
        }
    }
}

fn r(x: &Rational) -> String {
    to_fraction_string(x)
}

fn check_box(b: &Box3Bounds, z: ZEval) -> [Tally; 4] {
    let mut t: [Tally; 4] = Default::default();
    let ob = omega_normalize(b);
    let nb = ob.bounds();

    for i in 1..=8 {
        match (z(i, nb), support_max_generic(i, nb)) {
            (Ok(zi), Ok(h)) => t[0].check(zi == h, || format!("z{i} = {} but the support maximum is {}", r(&zi), r(&h))),
            (Err(e), _) | (_, Err(e)) => t[0].check(false, || format!("z{i}: {e}")),
        }
    }

    for (label, bb) in [("input", b), ("normalized", nb)] {
        let (o, p, d) = (omega_check(bb), omega_prime_check(bb), omega_dprime_check(bb));
        t[1].check(o == p && p == d, || format!("{label} labeling: conditions disagree ({o}, {p}, {d})"));
    }
    t[1].check(omega_check(nb), || "normalized labeling violates the ordering".into());

    let (qqr, qrr) = mixed_volumes_qr(&ob);
    t[2].check(qqr == qrr, || format!("closed forms give {} and {}", r(&qqr), r(&qrr)));
    // Geometric route; Q is flat when a3 = 0.
    if !nb.a()[2].is_zero() {
        let geo = build_q(&ob).and_then(|q| {
            let rr = build_r(&ob)?;
            Ok((mixed_volume_against(&q, &r_vertices(nb))?, mixed_volume_against(&rr, &q_vertices(nb))?))
        });
        match geo {
            Ok((x, y)) => t[2].check(x == y, || format!("support sums give {} and {}", r(&x), r(&y))),
            Err(e) => t[2].check(false, || e.to_string()),
        }
    }

    let three = pipeline_volume(b).and_then(|rep| Ok(rep.with_oracle(hull_volume_4d(&extreme_points(b))?)));
    match three {
        Ok(rep) => t[3].check(rep.agree, || {
            format!(
                "formula {}, pipeline {}, hull {}{}",
                r(&rep.vol_formula),
                r(&rep.vol_pipeline),
                rep.vol_oracle.as_ref().map_or_else(|| "-".into(), r),
                if rep.internal_mismatches.is_empty() {
                    String::new()
                } else {
                    format!("; internal: {}", rep.internal_mismatches.join(", "))
                }
            )
        }),
        Err(e) => t[3].check(false, || e.to_string()),
    }
    t
}

/// The box in `--bounds` form, integers without a denominator.
pub fn bounds_arg(b: &Box3Bounds) -> String {
    let plain = |x: &Rational| if x.is_integer() { x.numer().to_string() } else { r(x) };
    (0..3).map(|i| format!("{},{}", plain(&b.a()[i]), plain(&b.b()[i]))).collect::<Vec<_>>().join(",")
}

/// Runs every property on `trials` seeded boxes with the given z evaluator.
pub fn verify_with(trials: usize, seed: u64, max_bound: i64, z: ZEval) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let boxes: Vec<Box3Bounds> = (0..trials).map(|_| random_integer_box(&mut rng, max_bound)).collect();
    let results: Vec<[Tally; 4]> = boxes.par_iter().map(|b| check_box(b, z)).collect();

    let mut out = String::new();
    writeln!(out, "verify: {trials} boxes, seed {seed}, max bound {max_bound}").unwrap();
    let mut failed = false;
    for (p, name) in PROPERTIES.iter().enumerate() {
        let checks: usize = results.iter().map(|t| t[p].checks).sum();
        let bad: Vec<usize> = (0..trials).filter(|&k| results[k][p].failure.is_some()).collect();
        if bad.is_empty() {
            writeln!(out, "  ok    {name:<22} {checks} checks").unwrap();
            continue;
        }
        failed = true;
        let k = bad[0];
        writeln!(out, "  FAIL  {name:<22} {} of {trials} boxes", bad.len()).unwrap();
        writeln!(out, "        box {}: --bounds {}", k + 1, bounds_arg(&boxes[k])).unwrap();
        writeln!(out, "        {}", results[k][p].failure.as_ref().unwrap()).unwrap();
    }
    if failed {
        out.push_str("counterexample found\n");
        Outcome { stdout: out, code: EXIT_VIOLATION }
    } else {
        out.push_str("all properties hold\n");
        Outcome::ok(out)
    }
}

pub fn run(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let z: ZEval = match args.inject_fault {
        None => support_max_z,
        Some(Fault::Z3Sign) => z3_sign_flipped,
    };
    Ok(verify_with(args.trials, args.seed, args.max_bound, z))
}
