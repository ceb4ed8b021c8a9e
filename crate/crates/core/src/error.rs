use thiserror::Error;

use crate::complex::Simplex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("face not in complex: {0:?}")]
    FaceNotInComplex(Simplex),

    #[error("vertex {vertex} is not in the ground set")]
    VertexNotInGround { vertex: u32 },

    #[error("complex is not supported on [{m}]: vertex {vertex} out of range")]
    NotOnGround { m: usize, vertex: u32 },

    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    #[error("shelling hypothesis m >= sum(k) + n - 1 not met (m = {m}, sum(k) = {sum_k}, n = {n})")]
    ShellingHypothesis { m: usize, sum_k: usize, n: usize },

    #[error("facet shape mismatch: {0}")]
    FacetShape(String),

    #[error("complex is not pure")]
    NotPure,

    #[error("order is not a permutation of the facets: {0}")]
    NotPermutation(String),

    #[error("certificate is not verified")]
    Unverified,

    #[error("input too large: {0}")]
    TooLarge(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
