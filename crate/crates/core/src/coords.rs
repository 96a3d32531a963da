//! Coordinate conventions shared by every model algebra.
//!
//! * `star_inv(v)` is the antisymmetric matrix with `star_inv(v)·u = v × u`.
//! * `star(A)` inverts it: `star(A) = (A₃₂, A₁₃, A₂₁)`.
//! * Traceless symmetric 3×3 matrices use the ordered basis
//!   `S12, S23, S13, D1−D2, D2−D3` where `Sij = e_j e_iᵗ + e_i e_jᵗ`.
//! * `odot(x, y) = ½(y xᵗ + x yᵗ) − ⅓⟨x, y⟩ I`.

use crate::matrix::Matrix;
use crate::scalar::{Rational, Scalar};

pub fn vadd<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.plus(y)).collect()
}

pub fn vsub<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.minus(y)).collect()
}

pub fn vscale<F: Scalar>(s: &F, a: &[F]) -> Vec<F> {
    a.iter().map(|x| s.times(x)).collect()
}

pub fn vneg<F: Scalar>(a: &[F]) -> Vec<F> {
    a.iter().map(F::negate).collect()
}

/// Sum of several equally sized vectors.
pub fn vsum<F: Scalar>(len: usize, parts: &[Vec<F>]) -> Vec<F> {
    parts.iter().fold(vec![F::zero(); len], |acc, p| vadd(&acc, p))
}

pub fn q<F: Scalar>(n: i64, d: i64) -> F {
    F::from_rational(&Rational::new(n, d))
}

pub fn cross<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    let c = |i: usize, j: usize| a[i].times(&b[j]).minus(&a[j].times(&b[i]));
    vec![c(1, 2), c(2, 0), c(0, 1)]
}

pub fn dot<F: Scalar>(a: &[F], b: &[F]) -> F {
    a.iter().zip(b).fold(F::zero(), |acc, (x, y)| acc.plus(&x.times(y)))
}

pub fn star_inv<F: Scalar>(v: &[F]) -> Matrix<F> {
    let z = F::zero();
    Matrix::from_rows(vec![
        vec![z.clone(), v[2].negate(), v[1].clone()],
        vec![v[2].clone(), z.clone(), v[0].negate()],
        vec![v[1].negate(), v[0].clone(), z],
    ])
}

pub fn star<F: Scalar>(a: &Matrix<F>) -> Vec<F> {
    vec![a[(2, 1)].clone(), a[(0, 2)].clone(), a[(1, 0)].clone()]
}

/// `x yᵗ`.
pub fn outer<F: Scalar>(x: &[F], y: &[F]) -> Matrix<F> {
    Matrix::from_rows(x.iter().map(|a| y.iter().map(|b| a.times(b)).collect()).collect())
}

/// Matrix of a traceless symmetric element from its five coordinates.
pub fn s_matrix<F: Scalar>(c: &[F]) -> Matrix<F> {
    let (s12, s23, s13, d12, d23) = (&c[0], &c[1], &c[2], &c[3], &c[4]);
    Matrix::from_rows(vec![
        vec![d12.clone(), s12.clone(), s13.clone()],
        vec![s12.clone(), d23.minus(d12), s23.clone()],
        vec![s13.clone(), s23.clone(), d23.negate()],
    ])
}

/// Coordinates of a traceless symmetric matrix. Only the entries used by the
/// basis are read, so callers must pass a genuinely traceless symmetric input.
pub fn s_coords<F: Scalar>(m: &Matrix<F>) -> Vec<F> {
    debug_assert!(m.is_symmetric(), "s_coords of a non-symmetric matrix");
    debug_assert!(m.trace().is_zero(), "s_coords of a matrix with trace");
    vec![
        m[(0, 1)].clone(),
        m[(1, 2)].clone(),
        m[(0, 2)].clone(),
        m[(0, 0)].clone(),
        m[(2, 2)].negate(),
    ]
}

/// Matrix form of `x ⊙ y`.
pub fn odot_matrix<F: Scalar>(x: &[F], y: &[F]) -> Matrix<F> {
    let sym = outer(y, x).add(&outer(x, y)).scale(&q(1, 2));
    let shift = dot(x, y).times(&q(1, 3));
    sym.sub(&Matrix::identity(3).scale(&shift))
}

pub fn odot<F: Scalar>(x: &[F], y: &[F]) -> Vec<F> {
    s_coords(&odot_matrix(x, y))
}

/// `star([S1, S2])` for traceless symmetric coordinates.
pub fn star_comm<F: Scalar>(s1: &[F], s2: &[F]) -> Vec<F> {
    star(&s_matrix(s1).commutator(&s_matrix(s2)))
}

/// `S·x` for traceless symmetric `S`.
pub fn s_apply<F: Scalar>(s: &[F], x: &[F]) -> Vec<F> {
    s_matrix(s).mul_vec(x)
}

/// `[star_inv(v), S]` in traceless symmetric coordinates.
pub fn rot_s<F: Scalar>(v: &[F], s: &[F]) -> Vec<F> {
    s_coords(&star_inv(v).commutator(&s_matrix(s)))
}

/// Block layout of a coordinate vector, e.g. `x ⊕ y ⊕ S ⊕ w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    blocks: Vec<(String, usize)>,
}

pub const S_SUFFIXES: [&str; 5] = ["12", "23", "13", "11-22", "22-33"];

impl Layout {
    pub fn new(blocks: &[(&str, usize)]) -> Self {
        Layout {
            blocks: blocks.iter().map(|(n, d)| (n.to_string(), *d)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|b| b.1).sum()
    }

    pub fn block_names(&self) -> Vec<&str> {
        self.blocks.iter().map(|b| b.0.as_str()).collect()
    }

    pub fn offset(&self, name: &str) -> usize {
        let mut off = 0;
        for (n, d) in &self.blocks {
            if n == name {
                return off;
            }
            off += d;
        }
        panic!("unknown block {name}")
    }

    pub fn size(&self, name: &str) -> usize {
        self.blocks
            .iter()
            .find(|b| b.0 == name)
            .map(|b| b.1)
            .unwrap_or_else(|| panic!("unknown block {name}"))
    }

    pub fn indices(&self, name: &str) -> std::ops::Range<usize> {
        let o = self.offset(name);
        o..o + self.size(name)
    }

    /// Size-5 blocks get traceless-symmetric labels, others are numbered.
    pub fn labels(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (n, d) in &self.blocks {
            if *d == 5 {
                out.extend(S_SUFFIXES.iter().map(|s| format!("{n}{s}")));
            } else if *d == 1 {
                out.push(n.clone());
            } else {
                out.extend((1..=*d).map(|i| format!("{n}{i}")));
            }
        }
        out
    }

    pub fn split<'a, F>(&self, v: &'a [F]) -> Vec<&'a [F]> {
        let mut out = Vec::with_capacity(self.blocks.len());
        let mut off = 0;
        for (_, d) in &self.blocks {
            out.push(&v[off..off + d]);
            off += d;
        }
        out
    }

    pub fn join<F: Scalar>(&self, parts: &[Vec<F>]) -> Vec<F> {
        assert_eq!(parts.len(), self.blocks.len(), "block count");
        let mut out = Vec::with_capacity(self.dim());
        for (p, (n, d)) in parts.iter().zip(&self.blocks) {
            assert_eq!(p.len(), *d, "block {n} has wrong length");
            out.extend_from_slice(p);
        }
        out
    }

    /// Vector that is `part` in block `name` and zero elsewhere.
    pub fn embed<F: Scalar>(&self, name: &str, part: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, x) in self.indices(name).zip(part) {
            out[i] = x.clone();
        }
        out
    }

    pub fn zero_block<F: Scalar>(&self, name: &str) -> Vec<F> {
        vec![F::zero(); self.size(name)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::unit;

    type Q = Rational;

    fn e(i: usize) -> Vec<Q> {
        unit(3, i)
    }

    #[test]
    fn star_inverts_star_inv() {
        let v = vec![Q::from(1), Q::from(-2), Q::from(5)];
        assert_eq!(star(&star_inv(&v)), v);
        let u = vec![Q::from(3), Q::from(0), Q::from(7)];
        assert_eq!(star_inv(&v).mul_vec(&u), cross(&v, &u));
    }

    #[test]
    fn star_of_elementary_antisymmetric() {
        // A_ij = e_j e_iᵗ − e_i e_jᵗ; star(A_12) = e3, star(A_23) = e1, star(A_31) = e2
        let a = |i: usize, j: usize| outer(&e(j), &e(i)).sub(&outer(&e(i), &e(j)));
        assert_eq!(star(&a(0, 1)), e(2));
        assert_eq!(star(&a(1, 2)), e(0));
        assert_eq!(star(&a(2, 0)), e(1));
    }

    #[test]
    fn s_coordinates_round_trip() {
        let c: Vec<Q> = [1, -2, 3, 4, -5].iter().map(|&x| Q::from(x)).collect();
        assert_eq!(s_coords(&s_matrix(&c)), c);
        assert!(s_matrix(&c).trace().is_zero());
    }

    #[test]
    fn odot_values() {
        // e1 ⊙ e2 = ½ S12
        assert_eq!(
            odot(&e(0), &e(1)),
            vec![Q::new(1, 2), Q::zero(), Q::zero(), Q::zero(), Q::zero()]
        );
        // e1 ⊙ e1 = D1 − ⅓I = ⅔(D1−D2) + ⅓(D2−D3)
        assert_eq!(
            odot(&e(0), &e(0)),
            vec![Q::zero(), Q::zero(), Q::zero(), Q::new(2, 3), Q::new(1, 3)]
        );
    }

    #[test]
    fn layout_labels() {
        let l = Layout::new(&[("x", 3), ("S", 5), ("t", 1)]);
        assert_eq!(
            l.labels(),
            vec!["x1", "x2", "x3", "S12", "S23", "S13", "S11-22", "S22-33", "t"]
        );
        assert_eq!(l.indices("S"), 3..8);
    }
}
