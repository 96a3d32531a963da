//! Dense exact matrices, Gauss-Jordan reduction and symmetric signatures.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// Row-major dense matrix over an exact ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Output of [`Matrix::reduce`].
#[derive(Clone, Debug, PartialEq)]
pub struct Reduction<F> {
    pub rank: usize,
    /// Reduced row echelon form with zero rows dropped (`rank × cols`).
    pub rref: Matrix<F>,
    pub pivots: Vec<usize>,
    /// Column vectors spanning the null space.
    pub kernel: Vec<Vec<F>>,
    /// Independent columns of the input spanning its column space.
    pub image: Vec<Vec<F>>,
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn diagonal(entries: &[F]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a `rows × cols` matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<F>]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| F::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<F> {
        self.row(i).to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_list(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.plus(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.minus(b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(F::negate)
    }

    pub fn scale(&self, s: &F) -> Self {
        self.map(|x| x.times(s))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out: Matrix<F> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].plus(&a.times(b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "shape mismatch in product");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(F::zero(), |acc, (a, b)| acc.plus(&a.times(b)))
            })
            .collect()
    }

    /// `AB − BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc.plus(&self[(i, i)]))
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_violation().is_none()
    }

    fn symmetry_violation(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                if self[(i, j)] != self[(j, i)] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Places the given square blocks along the diagonal.
    pub fn block_diag(blocks: &[&Matrix<F>]) -> Self {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix<F>) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut out = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out[(i, j)] = self[(r0 + i, c0 + j)].clone();
            }
        }
        out
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "row mismatch");
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(0, self.cols, other);
        out
    }

    fn require_field() -> Result<()> {
        if F::RING.is_field() {
            Ok(())
        } else {
            Err(Error::UnsupportedRing(F::RING))
        }
    }

    /// Gauss-Jordan elimination in place; returns pivot columns.
    fn rref_in_place(&mut self, pivot_limit: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..pivot_limit {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self[(r, c)].inverse().expect("non-zero pivot in a field");
            for j in c..self.cols {
                self[(r, j)] = self[(r, j)].times(&inv);
            }
            let pivot_row = self.row_vec(r);
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self[(i, c)].clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    if !pivot_row[j].is_zero() {
                        self[(i, j)] = self[(i, j)].minus(&f.times(&pivot_row[j]));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn reduce(&self) -> Result<Reduction<F>> {
        Self::require_field()?;
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        let rank = pivots.len();
        m.rows = rank;
        m.data.truncate(rank * self.cols);
        let mut kernel = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = m[(r, free)].negate();
            }
            kernel.push(v);
        }
        let image = pivots.iter().map(|&p| self.column(p)).collect();
        Ok(Reduction {
            rank,
            rref: m,
            pivots,
            kernel,
            image,
        })
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.reduce()?.rank)
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::require_field()?;
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = self.hstack(&Matrix::identity(n));
        let pivots = aug.rref_in_place(n);
        if pivots.len() < n {
            return Err(Error::Singular);
        }
        Ok(aug.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> Result<bool> {
        Ok(self.is_square() && self.rank()? == self.rows)
    }
}

impl Matrix<Rational> {
    /// Inertia `(n_plus, n_minus, n_zero)` of a symmetric rational matrix by
    /// symmetric congruence pivoting.
    pub fn sym_signature(&self) -> Result<(usize, usize, usize)> {
        if let Some((row, col)) = self.symmetry_violation() {
            return Err(Error::NotSymmetric { row, col });
        }
        let mut a = self.clone();
        let mut active: Vec<usize> = (0..a.rows).collect();
        let (mut plus, mut minus) = (0, 0);
        while !active.is_empty() {
            let diag = active.iter().copied().find(|&i| !a[(i, i)].is_zero());
            let i = match diag {
                Some(i) => i,
                None => {
                    let pair = active
                        .iter()
                        .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                        .find(|&(i, j)| i != j && !a[(i, j)].is_zero());
                    let Some((i, j)) = pair else { break };
                    // row_i += row_j, col_i += col_j makes the (i,i) entry 2·a_ij.
                    for &k in &active {
                        a[(i, k)] = &a[(i, k)] + &a[(j, k)];
                    }
                    for &k in &active {
                        a[(k, i)] = &a[(k, i)] + &a[(k, j)];
                    }
                    i
                }
            };
            let d = a[(i, i)].clone();
            if d.is_positive() {
                plus += 1;
            } else {
                minus += 1;
            }
            active.retain(|&k| k != i);
            for &k in &active {
                let f = &a[(k, i)] / &d;
                if f.is_zero() {
                    continue;
                }
                for &l in &active {
                    a[(k, l)] = &a[(k, l)] - &(&f * &a[(i, l)]);
                }
            }
            for &k in &active {
                a[(k, i)] = Rational::zero();
                a[(i, k)] = Rational::zero();
            }
        }
        Ok((plus, minus, self.rows - plus - minus))
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{:?}", self.data[i * self.cols + j]))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Expresses vectors in terms of a fixed list of generators.
///
/// Rows of `[G | I]` are reduced on the `G` part only, so each reduced row
/// remembers which combination of generators produced it.
#[derive(Clone, Debug)]
pub struct SpanSolver<F> {
    width: usize,
    count: usize,
    reduced: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Scalar> SpanSolver<F> {
    pub fn new(width: usize, generators: &[Vec<F>]) -> Result<Self> {
        Matrix::<F>::require_field()?;
        let count = generators.len();
        let mut aug = Matrix::zeros(count, width + count);
        for (r, g) in generators.iter().enumerate() {
            if g.len() != width {
                return Err(Error::DimensionMismatch {
                    expected: width,
                    found: g.len(),
                });
            }
            for (c, x) in g.iter().enumerate() {
                aug[(r, c)] = x.clone();
            }
            aug[(r, width + r)] = F::one();
        }
        let pivots = aug.rref_in_place(width);
        Ok(SpanSolver {
            width,
            count,
            reduced: aug,
            pivots,
        })
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Coefficients `c` with `Σ c_i g_i = v`, or `None` when `v` is outside the span.
    pub fn solve(&self, v: &[F]) -> Option<Vec<F>> {
        assert_eq!(v.len(), self.width, "vector length");
        let mut residual = v.to_vec();
        let mut coeffs = vec![F::zero(); self.count];
        for (r, &p) in self.pivots.iter().enumerate() {
            let f = residual[p].clone();
            if f.is_zero() {
                continue;
            }
            let row = self.reduced.row(r);
            for c in 0..self.width {
                if !row[c].is_zero() {
                    residual[c] = residual[c].minus(&f.times(&row[c]));
                }
            }
            for k in 0..self.count {
                let x = &row[self.width + k];
                if !x.is_zero() {
                    coeffs[k] = coeffs[k].plus(&f.times(x));
                }
            }
        }
        if residual.iter().all(F::is_zero) {
            Some(coeffs)
        } else {
            None
        }
    }
}

/// Linear combination `Σ c_i v_i` of equally sized vectors.
pub fn combine<F: Scalar>(coeffs: &[F], vectors: &[Vec<F>], len: usize) -> Vec<F> {
    let mut out = vec![F::zero(); len];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o = o.plus(&c.times(x));
            }
        }
    }
    out
}

pub fn unit<F: Scalar>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

pub fn is_zero_vec<F: Scalar>(v: &[F]) -> bool {
    v.iter().all(F::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MultiPoly;
    use crate::scalar::Gaussian;
    use proptest::prelude::*;

    type Q = Rational;

    #[test]
    fn identity_reduces_to_full_rank() {
        let r = Matrix::<Q>::identity(3).reduce().unwrap();
        assert_eq!(r.rank, 3);
        assert!(r.kernel.is_empty());
    }

    #[test]
    fn proportional_rows() {
        let m = Matrix::<Q>::from_ints(&[&[1, 2], &[2, 4]]);
        let r = m.reduce().unwrap();
        assert_eq!(r.rank, 1);
        assert_eq!(r.kernel, vec![vec![Q::from(-2), Q::from(1)]]);
        assert_eq!(r.image, vec![vec![Q::from(1), Q::from(2)]]);
    }

    #[test]
    fn polynomial_reduce_rejected() {
        let m = Matrix::<MultiPoly>::identity(2);
        assert_eq!(
            m.reduce().unwrap_err(),
            Error::UnsupportedRing(crate::scalar::Ring::Polynomial)
        );
    }

    #[test]
    fn gaussian_inverse() {
        let i = Gaussian::i();
        let m = Matrix::from_rows(vec![
            vec![Gaussian::one(), i.clone()],
            vec![i.negate(), Gaussian::from_ints(2, 0)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
    }

    #[test]
    fn signature_examples() {
        let d = Matrix::<Q>::from_ints(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]]);
        assert_eq!(d.sym_signature().unwrap(), (1, 1, 1));
        // hyperbolic plane needs the off-diagonal pivot
        let h = Matrix::<Q>::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(h.sym_signature().unwrap(), (1, 1, 0));
        let bad = Matrix::<Q>::from_ints(&[&[0, 1], &[2, 0]]);
        assert_eq!(bad.sym_signature().unwrap_err(), Error::NotSymmetric { row: 0, col: 1 });
    }

    #[test]
    fn span_solver_round_trip() {
        let gens = vec![
            vec![Q::from(1), Q::from(1), Q::from(0)],
            vec![Q::from(0), Q::from(1), Q::from(1)],
        ];
        let s = SpanSolver::new(3, &gens).unwrap();
        let v = vec![Q::from(2), Q::from(5), Q::from(3)];
        assert_eq!(s.solve(&v), Some(vec![Q::from(2), Q::from(3)]));
        assert_eq!(s.solve(&[Q::from(1), Q::from(0), Q::from(0)]), None);
    }

    fn arb_matrix(r: usize, c: usize) -> impl Strategy<Value = Matrix<Q>> {
        proptest::collection::vec(-3i64..4, r * c).prop_map(move |xs| {
            Matrix::from_rows(
                xs.chunks(c)
                    .map(|ch| ch.iter().map(|&x| Q::from(x)).collect())
                    .collect(),
            )
        })
    }

    fn arb_invertible(n: usize) -> impl Strategy<Value = Matrix<Q>> {
        arb_matrix(n, n).prop_filter("invertible", |m| m.is_invertible().unwrap())
    }

    proptest! {
        #[test]
        fn kernel_is_annihilated(m in arb_matrix(3, 5)) {
            let r = m.reduce().unwrap();
            prop_assert_eq!(r.rank + r.kernel.len(), 5);
            for k in &r.kernel {
                prop_assert!(is_zero_vec(&m.mul_vec(k)));
            }
        }

        #[test]
        fn rank_invariant_under_row_permutation(m in arb_matrix(4, 4)) {
            let mut rows = m.row_list();
            rows.reverse();
            rows.swap(0, 2);
            prop_assert_eq!(Matrix::from_rows(rows).rank().unwrap(), m.rank().unwrap());
        }

        #[test]
        fn signature_congruence_invariant(
            s in arb_matrix(4, 4),
            ts in proptest::collection::vec(arb_invertible(4), 20),
        ) {
            let sym = s.add(&s.transpose());
            let sig = sym.sym_signature().unwrap();
            for t in ts {
                prop_assert_eq!(t.transpose().mul(&sym).mul(&t).sym_signature().unwrap(), sig);
            }
        }
    }
}
