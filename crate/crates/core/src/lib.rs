//! Exact volume of the convex hull of the graph of y = x₁x₂x₃ over a box in
//! the nonnegative orthant.
//!
//! Three independent routes are provided and meant to be cross-checked:
//!
//! * [`trilinear::closed_form_volume`]: the closed-form polynomial in the
//!   bounds, after relabeling the variables.
//! * [`trilinear::pipeline_volume`]: slices along x₃, expresses each slice
//!   volume through mixed volumes of two tetrahedra, and integrates.
//! * [`oracle::hull_volume_4d`]: brute-force exact hull of the 8 extreme
//!   points.
//!
//! Everything is computed over [`Rational`]; there is no tolerance anywhere
//! except in the Monte Carlo smoke test.

pub mod error;
pub mod geometry;
mod hull;
pub mod mixed_volume;
pub mod oracle;
pub mod rational;
pub mod sampling;
pub mod trilinear;

pub use error::{Error, Result};
pub use geometry::{Point, Point3, Point4, Tetrahedron, Vector3};
pub use mixed_volume::VolumeCubic;
pub use rational::Rational;
pub use trilinear::{Box3Bounds, OmegaBox, VolumeReport};
