//! Lie algebras realized as spans of matrices.
//!
//! Brackets are commutators solved back to basis coordinates, so a
//! transcription error in a matrix model shows up as a commutator that
//! leaves the span.

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::matrix::{combine, Matrix, SpanSolver};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct MatrixAlgebra<F> {
    size: usize,
    basis: Vec<Matrix<F>>,
    labels: Vec<String>,
    solver: SpanSolver<F>,
}

impl<F: Scalar> MatrixAlgebra<F> {
    /// `basis` must be linearly independent square matrices of one size.
    pub fn new(labels: Vec<String>, basis: Vec<Matrix<F>>) -> Result<Self> {
        if labels.len() != basis.len() {
            return Err(Error::DimensionMismatch {
                expected: basis.len(),
                found: labels.len(),
            });
        }
        let size = basis.first().map_or(0, Matrix::rows);
        if let Some(m) = basis.iter().find(|m| m.rows() != size || m.cols() != size) {
            return Err(Error::DimensionMismatch {
                expected: size,
                found: m.rows().max(m.cols()),
            });
        }
        let flat: Vec<Vec<F>> = basis.iter().map(|m| m.entries().to_vec()).collect();
        let solver = SpanSolver::new(size * size, &flat)?;
        if solver.rank() != basis.len() {
            return Err(Error::Invalid("matrix basis is linearly dependent".into()));
        }
        Ok(MatrixAlgebra {
            size,
            basis,
            labels,
            solver,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn basis(&self) -> &[Matrix<F>] {
        &self.basis
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element(&self, coords: &[F]) -> Matrix<F> {
        assert_eq!(coords.len(), self.dim(), "coordinate length");
        let flat: Vec<Vec<F>> = self.basis.iter().map(|m| m.entries().to_vec()).collect();
        let v = combine(coords, &flat, self.size * self.size);
        Matrix::from_rows(v.chunks(self.size.max(1)).map(<[F]>::to_vec).collect())
    }

    pub fn coords(&self, m: &Matrix<F>) -> Result<Vec<F>> {
        if m.rows() != self.size || m.cols() != self.size {
            return Err(Error::DimensionMismatch {
                expected: self.size,
                found: m.rows(),
            });
        }
        self.solver.solve(m.entries()).ok_or(Error::NotInSpan)
    }

    /// Structure constants of the commutator bracket.
    pub fn algebra(&self, name: impl Into<String>) -> Result<LieAlgebra<F>> {
        let n = self.dim();
        let mut g = LieAlgebra::abelian(name, self.labels.clone());
        for a in 0..n {
            for b in a + 1..n {
                let c = self.basis[a].commutator(&self.basis[b]);
                let v = self
                    .solver
                    .solve(c.entries())
                    .ok_or(Error::EscapesSpan { first: a, second: b })?;
                g.set_bracket(a, b, &v);
            }
        }
        Ok(g)
    }

    /// Block-diagonal sum; labels of the second summand get a `'` suffix.
    pub fn block_sum(&self, other: &Self) -> Result<Self> {
        let (p, q) = (self.size, other.size);
        let zp = Matrix::zeros(p, p);
        let zq = Matrix::zeros(q, q);
        let mut basis: Vec<Matrix<F>> = self.basis.iter().map(|m| Matrix::block_diag(&[m, &zq])).collect();
        basis.extend(other.basis.iter().map(|m| Matrix::block_diag(&[&zp, m])));
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().map(|l| format!("{l}'")));
        Self::new(labels, basis)
    }

    /// The element `a ⊕ b` of a `block_sum`.
    pub fn pair(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
        Matrix::block_diag(&[a, b])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coords::star_inv;
    use crate::matrix::unit;
    use crate::scalar::Rational;

    type Q = Rational;

    fn so3() -> MatrixAlgebra<Q> {
        let basis = (0..3).map(|a| star_inv(&unit::<Q>(3, a))).collect();
        MatrixAlgebra::new(vec!["r1".into(), "r2".into(), "r3".into()], basis).unwrap()
    }

    #[test]
    fn rotations_bracket_as_cross_product() {
        let g = so3().algebra("so3").unwrap();
        assert_eq!(g.bracket_basis(0, 1), unit(3, 2));
        assert!(g.is_lie());
    }

    #[test]
    fn commutator_escaping_span_is_reported() {
        // symmetric matrices do not close under commutators
        let s = |i: usize, j: usize| {
            let mut m = Matrix::<Q>::zeros(2, 2);
            m[(i, j)] = Q::one();
            m[(j, i)] = Q::one();
            m
        };
        let m = MatrixAlgebra::new(vec!["a".into(), "b".into()], vec![s(0, 0), s(0, 1)]).unwrap();
        assert_eq!(
            m.algebra("sym").unwrap_err(),
            Error::EscapesSpan { first: 0, second: 1 }
        );
    }

    #[test]
    fn coordinates_round_trip() {
        let m = so3();
        let c = vec![Q::from(2), Q::from(-1), Q::new(1, 3)];
        assert_eq!(m.coords(&m.element(&c)).unwrap(), c);
        assert_eq!(m.coords(&Matrix::identity(3)), Err(Error::NotInSpan));
    }

    #[test]
    fn block_sum_dimension() {
        let s = so3().block_sum(&so3()).unwrap();
        assert_eq!(s.dim(), 6);
        assert_eq!(s.algebra("so3+so3").unwrap().killing_signature().unwrap(), (0, 6, 0));
    }
}
