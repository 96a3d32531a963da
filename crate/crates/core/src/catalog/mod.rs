//! Named model-space algebras, the explicit isomorphisms between them,
//! holonomy analysis and the ansatz rigidity checks.

pub mod ansatz;
pub mod classical;
pub mod families;
pub mod holonomy;
pub mod isomorphisms;
pub mod tables;
