//! Exact decision procedure for smoothness of affine spherical varieties
//! given by their weight monoid.

pub mod linalg;
pub mod rootdata;
pub mod weightmonoid;
pub mod sphericalroots;
pub mod admissibility;
pub mod smoothness;
pub mod model;

#[cfg(test)]
mod properties;
