//! Mixed volumes of bodies in R³.
//!
//! Two independent routes: the facet-normal sum for a tetrahedron against an
//! arbitrary polytope, and exact interpolation of t ↦ Vol(K + tL).

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{facet_normal_set, hull_volume_3d, support, Point3, Tetrahedron};
use crate::rational::{int, Rational};

/// Coefficients of Vol(K + tL) = c0 + c1·t + c2·t² + c3·t³.
///
/// c0 = Vol(K), c1 = 3·V(K,K,L), c2 = 3·V(K,L,L), c3 = Vol(L).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumeCubic {
    pub c0: Rational,
    pub c1: Rational,
    pub c2: Rational,
    pub c3: Rational,
}

impl VolumeCubic {
    pub fn eval(&self, t: &Rational) -> Rational {
        ((&self.c3 * t + &self.c2) * t + &self.c1) * t + &self.c0
    }

    /// V(K, K, L)
    pub fn v_kkl(&self) -> Rational {
        &self.c1 / int(3)
    }

    /// V(K, L, L)
    pub fn v_kll(&self) -> Rational {
        &self.c2 / int(3)
    }
}

/// V(P, P, K) = (1/3)·Σ_{u ∈ U(P)} h_K(u) for a tetrahedron P.
pub fn mixed_volume_against(p: &Tetrahedron, k: &[Point3]) -> Result<Rational> {
    let mut sum = Rational::zero();
    for u in facet_normal_set(p).normals() {
        sum += support(k, u)?;
    }
    Ok(sum / int(3))
}

/// Every pairwise sum, without duplicates (order of first appearance).
pub fn minkowski_sum_vertices(k: &[Point3], l: &[Point3]) -> Vec<Point3> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for x in k {
        for y in l {
            let s = x + y;
            if seen.insert(s.clone()) {
                out.push(s);
            }
        }
    }
    out
}

/// Interpolation nodes for [`volume_cubic`].
pub const CUBIC_NODES: [i64; 4] = [0, 1, 2, 3];

/// 3-volume of conv(points), reading a flat (or tiny) point set as volume 0.
fn volume_or_zero(points: &[Point3]) -> Result<Rational> {
    match hull_volume_3d(points) {
        Err(Error::DegenerateHull) => Ok(Rational::zero()),
        other => other,
    }
}

/// Vol(conv(K) + t·conv(L)) via the Minkowski-sum candidates.
pub fn minkowski_volume(k: &[Point3], l: &[Point3], t: &Rational) -> Result<Rational> {
    let scaled: Vec<Point3> = l.iter().map(|p| p.scale(t)).collect();
    hull_volume_3d(&minkowski_sum_vertices(k, &scaled))
}

/// Recovers the volume polynomial of K + tL from its values at
/// t = 0, 1, 2, 3.
///
/// K + L must be full-dimensional. Either summand on its own may be flat;
/// its volume is then 0 and the remaining coefficients are still exact.
pub fn volume_cubic(k: &[Point3], l: &[Point3]) -> Result<VolumeCubic> {
    if k.is_empty() || l.is_empty() {
        return Err(Error::EmptyPolytope);
    }
    // full-dimensionality of K + L is required; this also gates t = 2, 3
    let v1 = minkowski_volume(k, l, &int(1))?;
    let v0 = volume_or_zero(k)?;
    let v2 = minkowski_volume(k, l, &int(2))?;
    let v3 = minkowski_volume(k, l, &int(3))?;
    let c = solve_cubic_nodes([v0, v1, v2, v3]);
    debug_assert!(c.iter().all(|x| !x.is_negative()));
    let [c0, c1, c2, c3] = c;
    Ok(VolumeCubic { c0, c1, c2, c3 })
}

/// Newton divided differences on the nodes 0, 1, 2, 3, converted to the
/// monomial basis.
fn solve_cubic_nodes(v: [Rational; 4]) -> [Rational; 4] {
    let [v0, v1, v2, v3] = v;
    let d1 = &v1 - &v0;
    let d2 = (&v2 - &v1 * int(2) + &v0) / int(2);
    let d3 = (&v3 - &v2 * int(3) + &v1 * int(3) - &v0) / int(6);
    // p(t) = v0 + d1·t + d2·t(t-1) + d3·t(t-1)(t-2)
    let c3 = d3.clone();
    let c2 = &d2 - &d3 * int(3);
    let c1 = &d1 - &d2 + &d3 * int(2);
    [v0, c1, c2, c3]
}
