//! Exact construction and verification of step-three, rank-three model
//! space Lie algebras.

pub mod catalog;
pub mod cli;
pub mod coords;
pub mod document;
pub mod equivariance;
pub mod error;
pub mod free;
pub mod lie;
pub mod matalg;
pub mod matrix;
pub mod model;
pub mod poly;
pub mod scalar;
pub mod subspace;

pub use error::{Error, Result};
pub use lie::{check_map, GradedAlgebra, JacobiReport, LieAlgebra, LinearMap, MapCheck, MapMode};
pub use matalg::MatrixAlgebra;
pub use matrix::{Matrix, Reduction};
pub use model::ModelAlgebra;
pub use poly::MultiPoly;
pub use scalar::{Gaussian, Rational, Ring, Scalar};
pub use subspace::Subspace;
