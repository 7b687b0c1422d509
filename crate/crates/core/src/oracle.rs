//! Brute-force checks that share no code with the mixed-volume route: the
//! exact 4D hull of the extreme points, geometric slice volumes, and a
//! Monte Carlo estimate for float-mode sanity.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{hull_volume_3d, Point, Point3, Point4};
use crate::hull;
use crate::rational::{int, to_f64, Rational};
use crate::trilinear::{extreme_points, Box3Bounds};

/// A facet of a 4D hull: every hull point x satisfies normal·x ≤ offset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet4 {
    /// Primitive integer outer normal.
    pub normal: [BigInt; 4],
    pub offset: Rational,
    /// Indices of the input points on the facet (first occurrence when the
    /// input has duplicates).
    pub incident: Vec<usize>,
}

fn as_rows(points: &[Point4]) -> Vec<Vec<Rational>> {
    points.iter().map(|p| p.coords().to_vec()).collect()
}

/// Exact 4-volume of conv(points).
pub fn hull_volume_4d(points: &[Point4]) -> Result<Rational> {
    hull::hull_volume(&as_rows(points), 4)
}

/// Facets of conv(points), sorted by (normal, offset).
pub fn hull_facets_4d(points: &[Point4]) -> Result<Vec<Facet4>> {
    Ok(hull::hull_facets(&as_rows(points), 4)?
        .into_iter()
        .map(|f| {
            let normal: [BigInt; 4] = f.normal.try_into().expect("4 coordinates");
            Facet4 { normal, offset: f.offset, incident: f.incident }
        })
        .collect())
}

/// (y, x₁, x₂) of the extreme points with x₃ at `x3`.
fn layer(bounds: &Box3Bounds, x3: &Rational) -> Vec<Point3> {
    extreme_points(bounds)
        .iter()
        .filter(|p| &p[3] == x3)
        .map(|p| Point::new([p[0].clone(), p[1].clone(), p[2].clone()]))
        .collect()
}

/// Volume of ((b − t)·conv(lower) + (t − a)·conv(upper)) / (b − a).
///
/// A flat `lower` at t = a is reported as 0.
pub fn sweep_section(lower: &[Point3], upper: &[Point3], a: &Rational, b: &Rational, t: &Rational) -> Result<Rational> {
    if a >= b || t < a || t > b {
        return Err(Error::InvalidBounds(format!("t = {t} outside [{a}, {b}]")));
    }
    let w = b - a;
    let lam = (b - t) / &w;
    let mu = (t - a) / &w;
    let mut pts = Vec::with_capacity(lower.len() * upper.len());
    for p in lower {
        let p = p.scale(&lam);
        for q in upper {
            pts.push(&p + &q.scale(&mu));
        }
    }
    match hull_volume_3d(&pts) {
        Err(Error::DegenerateHull) if t == a && hull_volume_3d(lower).is_err() => Ok(Rational::zero()),
        other => other,
    }
}

/// Volume of the hull's slice at x₃ = t, from the extreme points directly.
pub fn cross_section_volume(bounds: &Box3Bounds, t: &Rational) -> Result<Rational> {
    let (a3, b3) = (&bounds.a()[2], &bounds.b()[2]);
    sweep_section(&layer(bounds, a3), &layer(bounds, b3), a3, b3, t)
}

/// One Simpson panel over the sweep between two layers.
pub fn sweep_volume(lower: &[Point3], upper: &[Point3], a: &Rational, b: &Rational) -> Result<Rational> {
    let mid = (a + b) / int(2);
    let fa = sweep_section(lower, upper, a, b, a)?;
    let fm = sweep_section(lower, upper, a, b, &mid)?;
    let fb = sweep_section(lower, upper, a, b, b)?;
    Ok((b - a) * (fa + fm * int(4) + fb) / int(6))
}

/// 4-volume by Simpson's rule on the exact slice volumes along x₃.
pub fn quadrature_volume(bounds: &Box3Bounds) -> Result<Rational> {
    let (a3, b3) = (&bounds.a()[2], &bounds.b()[2]);
    sweep_volume(&layer(bounds, a3), &layer(bounds, b3), a3, b3)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub estimate: f64,
    pub stderr: f64,
}

const MC_CHUNK: u64 = 1 << 16;

/// Rejection sampling in the bounding box of `points`. Chunk i draws from
/// ChaCha stream i, so the result depends only on (seed, samples).
pub fn monte_carlo_volume(points: &[Point4], samples: u64, seed: u64) -> Result<McEstimate> {
    let facets: Vec<([f64; 4], f64)> = hull_facets_4d(points)?
        .iter()
        .map(|f| {
            let n = std::array::from_fn(|i| to_f64(&Rational::from_integer(f.normal[i].clone())));
            (n, to_f64(&f.offset))
        })
        .collect();
    let coords: Vec<[f64; 4]> = points.iter().map(|p| std::array::from_fn(|i| to_f64(&p[i]))).collect();
    let lo: [f64; 4] = std::array::from_fn(|i| coords.iter().map(|c| c[i]).fold(f64::INFINITY, f64::min));
    let hi: [f64; 4] = std::array::from_fn(|i| coords.iter().map(|c| c[i]).fold(f64::NEG_INFINITY, f64::max));
    let box_volume: f64 = (0..4).map(|i| hi[i] - lo[i]).product();
    if samples == 0 {
        return Ok(McEstimate { estimate: f64::NAN, stderr: f64::NAN });
    }

    let chunks = samples.div_ceil(MC_CHUNK);
    let hits: u64 = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            let n = MC_CHUNK.min(samples - c * MC_CHUNK);
            let mut hits = 0u64;
            for _ in 0..n {
                let x: [f64; 4] = std::array::from_fn(|i| lo[i] + (hi[i] - lo[i]) * rng.random::<f64>());
                let inside = facets
                    .iter()
                    .all(|(nrm, off)| nrm.iter().zip(&x).map(|(a, b)| a * b).sum::<f64>() <= *off);
                hits += inside as u64;
            }
            hits
        })
        .sum();
    let p = hits as f64 / samples as f64;
    Ok(McEstimate {
        estimate: box_volume * p,
        stderr: box_volume * (p * (1.0 - p) / samples as f64).sqrt(),
    })
}
