//! A Lie algebra together with its horizontal and isotropy subspaces.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lie::{GradedAlgebra, LieAlgebra};
use crate::scalar::{Rational, Scalar};
use crate::subspace::Subspace;

#[derive(Clone, Debug)]
pub struct ModelAlgebra<F> {
    pub algebra: LieAlgebra<F>,
    /// Horizontal subspace; its block basis is taken as orthonormal.
    pub p: Subspace<F>,
    /// Isotropy subalgebra.
    pub k: Subspace<F>,
    pub family: String,
    pub params: BTreeMap<String, Rational>,
}

impl<F: Scalar> ModelAlgebra<F> {
    pub fn new(algebra: LieAlgebra<F>, p: Subspace<F>, k: Subspace<F>, family: impl Into<String>) -> Result<Self> {
        let n = algebra.dim();
        for s in [&p, &k] {
            if s.ambient() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: s.ambient(),
                });
            }
        }
        let params = algebra.params().clone();
        Ok(ModelAlgebra {
            algebra,
            p,
            k,
            family: family.into(),
            params,
        })
    }

    /// Model without isotropy (a Lie group structure).
    pub fn group(algebra: LieAlgebra<F>, p: Subspace<F>, family: impl Into<String>) -> Result<Self> {
        let k = Subspace::zero(algebra.dim());
        Self::new(algebra, p, k, family)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn growth_vector(&self) -> Result<Vec<usize>> {
        self.algebra.growth_vector(&self.p, &self.k)
    }

    pub fn associated_graded(&self) -> Result<GradedAlgebra<F>> {
        self.algebra.associated_graded(&self.p, &self.k)
    }

    /// Structural checks: Jacobi, `k` a subalgebra, `p ∩ k = 0`, `[k, p] ⊆ p`.
    pub fn validate(&self) -> Result<()> {
        if let Some((i, j, k)) = self.algebra.jacobi_defect().first() {
            return Err(Error::Invalid(format!(
                "Jacobi identity fails on ({}, {}, {})",
                self.algebra.labels()[i],
                self.algebra.labels()[j],
                self.algebra.labels()[k]
            )));
        }
        self.algebra.is_subalgebra(&self.k)?;
        let overlap = self.p.intersection(&self.k)?.dim();
        if overlap > 0 {
            return Err(Error::OverlappingSubspaces(overlap));
        }
        if !self.algebra.bracket_spaces(&self.k, &self.p)?.is_subspace_of(&self.p) {
            return Err(Error::Invalid(
                "isotropy does not preserve the horizontal subspace".into(),
            ));
        }
        Ok(())
    }

    /// Named subspaces in a fixed order, for export.
    pub fn subspaces(&self) -> Vec<(&'static str, &Subspace<F>)> {
        vec![("p", &self.p), ("k", &self.k)]
    }
}
