//! Subspaces of `F^n` stored by their reduced row echelon basis.

use crate::error::{Error, Result};
use crate::matrix::{combine, is_zero_vec, unit, Matrix};
use crate::scalar::Scalar;

/// Linear subspace of an `ambient`-dimensional coordinate space. The basis is
/// kept in reduced echelon form so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Scalar> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::coordinate(ambient, 0..ambient)
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let vecs: Vec<Vec<F>> = indices.into_iter().map(|i| unit(ambient, i)).collect();
        Self::span(ambient, &vecs).expect("unit vectors over a field")
    }

    pub fn span(ambient: usize, vectors: &[Vec<F>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: v.len(),
            });
        }
        if vectors.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let red = Matrix::from_rows(vectors.to_vec()).reduce()?;
        Ok(Subspace {
            ambient,
            basis: red.rref,
            pivots: red.pivots,
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        self.basis.row_list()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Indices `i` such that the subspace is exactly the span of `e_i`, if any.
    pub fn coordinate_indices(&self) -> Option<Vec<usize>> {
        for (r, &p) in self.pivots.iter().enumerate() {
            if self
                .basis
                .row(r)
                .iter()
                .enumerate()
                .any(|(c, x)| c != p && !x.is_zero())
            {
                return None;
            }
        }
        Some(self.pivots.clone())
    }

    /// `v` minus its component along the basis rows at pivot positions; zero
    /// exactly when `v` lies in the subspace.
    pub fn reduce_vector(&self, v: &[F]) -> Vec<F> {
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let f = out[p].clone();
            if f.is_zero() {
                continue;
            }
            for (c, x) in self.basis.row(r).iter().enumerate() {
                if !x.is_zero() {
                    out[c] = out[c].minus(&f.times(x));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[F]) -> bool {
        v.len() == self.ambient && is_zero_vec(&self.reduce_vector(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis.row_list().iter().all(|v| other.contains(v))
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut vecs = self.basis_vectors();
        vecs.extend(other.basis_vectors());
        Self::span(self.ambient, &vecs)
    }

    pub fn extend(&self, vectors: &[Vec<F>]) -> Result<Self> {
        let mut vecs = self.basis_vectors();
        vecs.extend_from_slice(vectors);
        Self::span(self.ambient, &vecs)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient));
        }
        // Solve a·U = b·V through the kernel of [Uᵗ | −Vᵗ].
        let u = self.basis_vectors();
        let v = other.basis_vectors();
        let mut cols = u.clone();
        cols.extend(v.iter().map(|row| row.iter().map(F::negate).collect::<Vec<_>>()));
        let system = Matrix::from_columns(self.ambient, &cols);
        let kernel = system.reduce()?.kernel;
        let vecs: Vec<Vec<F>> = kernel
            .iter()
            .map(|k| combine(&k[..u.len()], &u, self.ambient))
            .collect();
        Self::span(self.ambient, &vecs)
    }

    /// Complement spanned by standard basis vectors at the non-pivot columns.
    pub fn coordinate_complement(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }
}

impl<F: std::fmt::Debug> std::fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(dim {} in {}) {:?}",
            self.pivots.len(),
            self.ambient,
            self.basis
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use proptest::prelude::*;

    type S = Subspace<Rational>;

    #[test]
    fn sum_of_axes() {
        let a = S::coordinate(3, [0]);
        let b = S::coordinate(3, [1]);
        assert_eq!(a.sum(&b).unwrap().dim(), 2);
    }

    #[test]
    fn intersection_of_planes() {
        let a = S::coordinate(3, [0, 1]);
        let b = S::coordinate(3, [1, 2]);
        assert_eq!(a.intersection(&b).unwrap(), S::coordinate(3, [1]));
    }

    #[test]
    fn ambient_mismatch() {
        let a = S::coordinate(3, [0]);
        let b = S::coordinate(4, [0]);
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn coordinate_detection() {
        let q = |x: i64| Rational::from(x);
        let s = S::span(3, &[vec![q(2), q(0), q(0)], vec![q(0), q(0), q(5)]]).unwrap();
        assert_eq!(s.coordinate_indices(), Some(vec![0, 2]));
        let t = S::span(3, &[vec![q(1), q(1), q(0)]]).unwrap();
        assert_eq!(t.coordinate_indices(), None);
        assert_eq!(t.coordinate_complement(), vec![1, 2]);
    }

    fn arb_space() -> impl Strategy<Value = S> {
        proptest::collection::vec(proptest::collection::vec(-2i64..3, 4), 0..4).prop_map(|rows| {
            S::span(
                4,
                &rows
                    .into_iter()
                    .map(|r| r.into_iter().map(Rational::from).collect())
                    .collect::<Vec<_>>(),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn dimension_formula(u in arb_space(), v in arb_space()) {
            let s = u.sum(&v).unwrap();
            let i = u.intersection(&v).unwrap();
            prop_assert_eq!(u.dim() + v.dim(), s.dim() + i.dim());
            prop_assert!(i.is_subspace_of(&u) && i.is_subspace_of(&v));
            prop_assert!(u.is_subspace_of(&s) && v.is_subspace_of(&s));
        }
    }
}
