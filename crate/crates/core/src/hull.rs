//! Brute-force exact convex hulls in small dimension.
//!
//! Candidate facet hyperplanes come from every affinely independent
//! D-subset of the points; a hyperplane is a facet when all points lie on one
//! closed side of it. Facets are triangulated recursively: project the
//! incident points along an axis the normal does not vanish on, find the
//! facet's own facets, and fan from the lexicographically smallest vertex.
//! The volume is the sum of the simplices obtained by coning every facet
//! simplex to the centroid.
//!
//! All arithmetic runs on integers after clearing denominators. Small inputs
//! use `i128`; the bound in [`fits_i128`] keeps every intermediate
//! determinant in range.

use std::collections::HashSet;
use std::fmt::Debug;
use std::hash::Hash;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub(crate) trait Coord: Integer + Signed + Clone + Hash + Debug {
    fn from_big(b: &BigInt) -> Self;
    fn to_big(&self) -> BigInt;
}

impl Coord for i128 {
    fn from_big(b: &BigInt) -> Self {
        b.to_i128().expect("coordinate fits i128")
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coord for BigInt {
    fn from_big(b: &BigInt) -> Self {
        b.clone()
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Facet<T> {
    /// Primitive integer normal pointing out of the hull.
    pub normal: Vec<T>,
    pub offset: T,
    pub incident: Vec<usize>,
}

/// A facet of a hull given in the caller's (rational) coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct RationalFacet {
    pub normal: Vec<BigInt>,
    pub offset: Rational,
    /// Indices into the caller's point list (first occurrence of duplicates).
    pub incident: Vec<usize>,
}

fn det<T: Coord>(m: &[Vec<T>]) -> T {
    match m.len() {
        0 => T::one(),
        1 => m[0][0].clone(),
        2 => m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone(),
        n => {
            let mut acc = T::zero();
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<T>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != col)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][col].clone() * det(&minor);
                if col % 2 == 0 {
                    acc = acc + term;
                } else {
                    acc = acc - term;
                }
            }
            acc
        }
    }
}

fn dot<T: Coord>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Generalized cross product of the k-1 difference vectors spanned by `idx`.
fn hyperplane_normal<T: Coord>(pts: &[Vec<T>], idx: &[usize]) -> Vec<T> {
    let k = pts[idx[0]].len();
    let base = &pts[idx[0]];
    let rows: Vec<Vec<T>> = idx[1..]
        .iter()
        .map(|&i| pts[i].iter().zip(base).map(|(x, y)| x.clone() - y.clone()).collect())
        .collect();
    (0..k)
        .map(|j| {
            let minor: Vec<Vec<T>> = rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let d = det(&minor);
            if j % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

fn make_primitive<T: Coord>(v: &mut [T]) {
    let g = v.iter().fold(T::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = x.clone() / g.clone();
        }
    }
}

/// All facets of conv(pts), where `pts` spans its ambient space.
pub(crate) fn facets<T: Coord>(pts: &[Vec<T>]) -> Vec<Facet<T>> {
    let k = pts[0].len();
    let mut seen: HashSet<(Vec<T>, T)> = HashSet::new();
    let mut out = Vec::new();
    for combo in (0..pts.len()).combinations(k) {
        let mut normal = hyperplane_normal(pts, &combo);
        if normal.iter().all(Zero::is_zero) {
            continue;
        }
        make_primitive(&mut normal);
        // sign-canonical key: leading nonzero entry positive
        if normal.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            normal.iter_mut().for_each(|x| *x = -x.clone());
        }
        let offset = dot(&normal, &pts[combo[0]]);
        if !seen.insert((normal.clone(), offset.clone())) {
            continue;
        }
        let (mut above, mut below) = (false, false);
        let mut incident = Vec::new();
        for (i, p) in pts.iter().enumerate() {
            let s = dot(&normal, p) - offset.clone();
            if s.is_positive() {
                above = true;
            } else if s.is_negative() {
                below = true;
            } else {
                incident.push(i);
            }
            if above && below {
                break;
            }
        }
        if above && below {
            continue;
        }
        let (normal, offset) = if above {
            (normal.into_iter().map(|x| -x).collect(), -offset)
        } else {
            (normal, offset)
        };
        out.push(Facet { normal, offset, incident });
    }
    out
}

/// Triangulates conv(pts) (full-dimensional in its k coordinates) into
/// k-simplices given as index lists into `pts`.
fn triangulate<T: Coord>(pts: &[Vec<T>]) -> Vec<Vec<usize>> {
    let k = pts[0].len();
    if k == 0 {
        return vec![vec![0]];
    }
    if k == 1 {
        let lo = (0..pts.len()).min_by(|&i, &j| pts[i].cmp(&pts[j])).unwrap();
        let hi = (0..pts.len()).max_by(|&i, &j| pts[i].cmp(&pts[j])).unwrap();
        return vec![vec![lo, hi]];
    }
    let apex = (0..pts.len()).min_by(|&i, &j| pts[i].cmp(&pts[j])).unwrap();
    let mut out = Vec::new();
    for f in facets(pts) {
        if f.incident.contains(&apex) {
            continue;
        }
        for s in facet_simplices(pts, &f) {
            let mut simplex = Vec::with_capacity(k + 1);
            simplex.push(apex);
            simplex.extend(s);
            out.push(simplex);
        }
    }
    out
}

/// (k-1)-simplices covering facet `f`, as indices into `pts`.
fn facet_simplices<T: Coord>(pts: &[Vec<T>], f: &Facet<T>) -> Vec<Vec<usize>> {
    let drop = f.normal.iter().position(|x| !x.is_zero()).unwrap();
    let projected: Vec<Vec<T>> = f
        .incident
        .iter()
        .map(|&i| pts[i].iter().enumerate().filter(|&(c, _)| c != drop).map(|(_, x)| x.clone()).collect())
        .collect();
    triangulate(&projected)
        .into_iter()
        .map(|s| s.into_iter().map(|l| f.incident[l]).collect())
        .collect()
}

/// Sum over facet simplices of |det(N·vᵢ − Σp)|, i.e. N^k·k! times the volume.
fn scaled_volume<T: Coord>(pts: &[Vec<T>]) -> T {
    let k = pts[0].len();
    let n = T::from_big(&BigInt::from(pts.len()));
    let sum: Vec<T> = (0..k).map(|c| pts.iter().fold(T::zero(), |acc, p| acc + p[c].clone())).collect();
    let mut total = T::zero();
    for f in facets(pts) {
        for s in facet_simplices(pts, &f) {
            let rows: Vec<Vec<T>> = s
                .iter()
                .map(|&i| (0..k).map(|c| n.clone() * pts[i][c].clone() - sum[c].clone()).collect())
                .collect();
            total = total + det(&rows).abs();
        }
    }
    total
}

fn affine_rank(pts: &[Vec<BigInt>]) -> usize {
    let mut rows: Vec<Vec<BigInt>> =
        pts[1..].iter().map(|p| p.iter().zip(&pts[0]).map(|(x, y)| x - y).collect()).collect();
    let cols = pts[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        for r in 0..rows.len() {
            if r == rank || rows[r][c].is_zero() {
                continue;
            }
            let pivot = rows[rank].clone();
            let (p, q) = (&pivot[c], rows[r][c].clone());
            for (x, y) in rows[r].iter_mut().zip(&pivot) {
                *x = &*x * p - y * &q;
            }
        }
        rank += 1;
    }
    rank
}

struct Prepared {
    /// Integer coordinates of the distinct points, scaled by `scale`.
    ints: Vec<Vec<BigInt>>,
    /// For each distinct point, the first index in the caller's list.
    origin: Vec<usize>,
    scale: BigInt,
}

fn prepare(points: &[Vec<Rational>], dim: usize) -> Result<Prepared> {
    assert!(points.iter().all(|p| p.len() == dim));
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| points[i].cmp(&points[j]).then(i.cmp(&j)));
    order.dedup_by(|j, i| points[*i] == points[*j]);
    order.sort_unstable();
    if order.len() < dim + 1 {
        return Err(Error::DegenerateHull);
    }
    let scale = order
        .iter()
        .flat_map(|&i| points[i].iter())
        .fold(BigInt::one(), |l, r| l.lcm(r.denom()));
    let ints: Vec<Vec<BigInt>> = order
        .iter()
        .map(|&i| points[i].iter().map(|r| r.numer() * (&scale / r.denom())).collect())
        .collect();
    if affine_rank(&ints) < dim {
        return Err(Error::DegenerateHull);
    }
    Ok(Prepared { ints, origin: order, scale })
}

fn fits_i128(p: &Prepared) -> bool {
    let max = p.ints.iter().flatten().map(|x| x.abs()).max().unwrap_or_default();
    max * BigInt::from(p.ints.len()) <= BigInt::from(1u64 << 26)
}

fn convert<T: Coord>(ints: &[Vec<BigInt>]) -> Vec<Vec<T>> {
    ints.iter().map(|p| p.iter().map(T::from_big).collect()).collect()
}

pub(crate) fn hull_volume(points: &[Vec<Rational>], dim: usize) -> Result<Rational> {
    let p = prepare(points, dim)?;
    let scaled = if fits_i128(&p) {
        scaled_volume(&convert::<i128>(&p.ints)).to_big()
    } else {
        scaled_volume(&convert::<BigInt>(&p.ints))
    };
    let n = BigInt::from(p.ints.len());
    let fact: BigInt = (1..=dim).map(BigInt::from).product();
    let denom = num_traits::pow(n * &p.scale, dim) * fact;
    Ok(Rational::new(scaled, denom))
}

pub(crate) fn hull_facets(points: &[Vec<Rational>], dim: usize) -> Result<Vec<RationalFacet>> {
    let p = prepare(points, dim)?;
    let raw: Vec<Facet<BigInt>> = facets(&convert::<BigInt>(&p.ints));
    let mut out: Vec<RationalFacet> = raw
        .into_iter()
        .map(|f| RationalFacet {
            offset: Rational::new(f.offset, p.scale.clone()),
            normal: f.normal,
            incident: f.incident.iter().map(|&i| p.origin[i]).collect(),
        })
        .collect();
    out.sort();
    Ok(out)
}
