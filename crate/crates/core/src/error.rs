use thiserror::Error;

/// Errors raised by the geometry, mixed-volume and trilinear-hull routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("tetrahedron is degenerate (zero oriented volume)")]
    DegenerateTetrahedron,
    #[error("point set does not span a full-dimensional hull")]
    DegenerateHull,
    #[error("polytope has no vertices")]
    EmptyPolytope,
    #[error("invalid bounds: {0}")]
    InvalidBounds(String),
    #[error("bounds violate the labeling condition a1/b1 <= a2/b2 <= a3/b3")]
    OmegaViolated,
    #[error("support lemma index {0} out of range 1..=8")]
    LemmaIndex(usize),
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
