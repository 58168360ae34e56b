//! Exact integer and rational linear algebra: Smith and Hermite normal
//! forms, lattice membership, strict-inequality feasibility, dual cones and
//! Hilbert bases. Everything is arbitrary precision.

pub mod cone;
pub mod fm;
pub mod lattice;
pub mod matrix;
pub mod snf;

use thiserror::Error;

pub use cone::{dual_cone_rays, facet_normals, hilbert_basis, in_monoid};
pub use fm::{feasible_strict, FarkasCertificate, Feasibility, Inequality, InequalitySystem, Relation};
pub use lattice::{extends_to_basis, hermite_basis, in_lattice, saturate, Sublattice};
pub use matrix::{IntMatrix, IntVector, RatVector};
pub use snf::{smith_normal_form, SmithDecomposition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("duplicate vector {0:?}")]
    DuplicateVector(Vec<String>),
    #[error("cone is not pointed")]
    NotPointed,
    #[error("cone spans a subspace of rank {rank}, expected {dim}")]
    NotFullDimensional { dim: usize, rank: usize },
    #[error("vector lies outside the span of the lattice")]
    OutsideSpan,
}
