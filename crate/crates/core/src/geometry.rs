//! Exact low-dimensional primitives: determinants, oriented tetrahedra,
//! area-weighted facet normals, support functions and hull volumes in R³.

use std::ops::{Add, Index, Sub};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::hull;
use crate::rational::{int, Rational};

/// A point (or vector) in R^D with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point<const D: usize> {
    coords: [Rational; D],
}

pub type Point3 = Point<3>;
pub type Point4 = Point<4>;
/// Directions share the point representation.
pub type Vector3 = Point<3>;

impl<const D: usize> Point<D> {
    pub fn new(coords: [Rational; D]) -> Self {
        Self { coords }
    }

    pub fn from_ints(coords: [i64; D]) -> Self {
        Self { coords: coords.map(int) }
    }

    pub fn origin() -> Self {
        Self { coords: std::array::from_fn(|_| Rational::zero()) }
    }

    pub fn coords(&self) -> &[Rational; D] {
        &self.coords
    }

    pub fn dot(&self, other: &Self) -> Rational {
        self.coords.iter().zip(&other.coords).map(|(x, y)| x * y).sum()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self { coords: std::array::from_fn(|i| &self.coords[i] * s) }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

impl<const D: usize> Index<usize> for Point<D> {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.coords[i]
    }
}

impl<const D: usize> Add for &Point<D> {
    type Output = Point<D>;
    fn add(self, rhs: Self) -> Point<D> {
        Point { coords: std::array::from_fn(|i| &self.coords[i] + &rhs.coords[i]) }
    }
}

impl<const D: usize> Sub for &Point<D> {
    type Output = Point<D>;
    fn sub(self, rhs: Self) -> Point<D> {
        Point { coords: std::array::from_fn(|i| &self.coords[i] - &rhs.coords[i]) }
    }
}

pub type Matrix3 = [[Rational; 3]; 3];
pub type Matrix4 = [[Rational; 4]; 4];

pub fn det3(m: &Matrix3) -> Rational {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// Laplace expansion along the first row.
pub fn det4(m: &Matrix4) -> Rational {
    let mut acc = Rational::zero();
    for col in 0..4 {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Matrix3 = std::array::from_fn(|r| {
            std::array::from_fn(|c| m[r + 1][if c < col { c } else { c + 1 }].clone())
        });
        let term = &m[0][col] * det3(&minor);
        if col % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// det [v0 v1 v2 v3; 1 1 1 1] with the vertices as columns and the row of
/// ones last.
pub fn oriented_det(v: &[Point3; 4]) -> Rational {
    let m: Matrix4 = std::array::from_fn(|r| {
        std::array::from_fn(|c| if r < 3 { v[c][r].clone() } else { int(1) })
    });
    det4(&m)
}

/// Four affinely independent points in R³ ordered so that `oriented_det` is
/// strictly positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tetrahedron {
    vertices: [Point3; 4],
}

impl Tetrahedron {
    pub fn vertices(&self) -> &[Point3; 4] {
        &self.vertices
    }

    pub fn translate(&self, by: &Vector3) -> Tetrahedron {
        Tetrahedron { vertices: std::array::from_fn(|i| &self.vertices[i] + by) }
    }
}

/// Orders the vertices for positive orientation, swapping the first two when
/// the input orientation is negative.
pub fn orient(vertices: [Point3; 4]) -> Result<Tetrahedron> {
    let d = oriented_det(&vertices);
    if d.is_zero() {
        return Err(Error::DegenerateTetrahedron);
    }
    let mut vertices = vertices;
    if d.is_negative() {
        vertices.swap(0, 1);
    }
    Ok(Tetrahedron { vertices })
}

/// Outer facet normals, each scaled so its length equals the facet area.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetNormalSet {
    normals: Vec<Vector3>,
}

impl FacetNormalSet {
    pub fn normals(&self) -> &[Vector3] {
        &self.normals
    }

    /// Normals sorted, for comparisons that ignore facet order.
    pub fn sorted(&self) -> Vec<Vector3> {
        let mut v = self.normals.clone();
        v.sort();
        v
    }
}

/// Cofactors (D₁, −D₂, D₃) of the 4×3 matrix [p q r; 1 1 1]: the normal of
/// aff(p, q, r) whose length is twice the triangle area.
fn cofactor_normal(p: &Point3, q: &Point3, r: &Point3) -> Vector3 {
    let one = int(1);
    let minor = |skip: usize| -> Rational {
        let rows: Vec<[Rational; 3]> = (0..3)
            .filter(|&i| i != skip)
            .map(|i| [p[i].clone(), q[i].clone(), r[i].clone()])
            .chain(std::iter::once([one.clone(), one.clone(), one.clone()]))
            .collect();
        det3(&[rows[0].clone(), rows[1].clone(), rows[2].clone()])
    };
    Point::new([minor(0), -minor(1), minor(2)])
}

pub fn facet_normal_set(t: &Tetrahedron) -> FacetNormalSet {
    let [alpha, beta, gamma, delta] = &t.vertices;
    let half = Rational::new(1.into(), 2.into());
    let neg_half = -half.clone();
    let normals = vec![
        cofactor_normal(alpha, beta, gamma).scale(&half),
        cofactor_normal(delta, alpha, beta).scale(&neg_half),
        cofactor_normal(gamma, delta, alpha).scale(&half),
        cofactor_normal(beta, gamma, delta).scale(&neg_half),
    ];
    FacetNormalSet { normals }
}

/// Support function h(u) = max over the vertices of xᵀu.
pub fn support(vertices: &[Point3], u: &Vector3) -> Result<Rational> {
    vertices.iter().map(|x| x.dot(u)).max().ok_or(Error::EmptyPolytope)
}

pub fn tetra_volume(t: &Tetrahedron) -> Rational {
    oriented_det(&t.vertices) / int(6)
}

/// Exact volume of conv(points) by brute-force facet enumeration.
///
/// Duplicates are dropped first. Every facet is fanned from one of its
/// vertices and the resulting triangles are coned to the centroid.
pub fn hull_volume_3d(points: &[Point3]) -> Result<Rational> {
    let pts: Vec<Vec<Rational>> = points.iter().map(|p| p.coords().to_vec()).collect();
    hull::hull_volume(&pts, 3)
}
