//! Free nilpotent Lie algebras, the explicit `f[3,3]` model and its
//! Carnot quotients, the `C_{n,3}` family and the quaternionic step-two
//! algebra.

use std::collections::HashMap;
use std::fmt;

use crate::coords::{cross, odot, Layout};
use crate::error::Result;
use crate::lie::LieAlgebra;
use crate::matrix::{unit, Matrix};
use crate::model::ModelAlgebra;
use crate::scalar::{Rational, Scalar};
use crate::subspace::Subspace;

fn mobius(mut n: u32) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Dimension of the weight-`k` layer of the free Lie algebra on `n` generators.
pub fn witt_dim(n: u32, k: u32) -> usize {
    assert!(n >= 1 && k >= 1, "rank and weight must be positive");
    let total: i64 = (1..=k)
        .filter(|d| k.is_multiple_of(*d))
        .map(|d| mobius(d) * (n as i64).pow(k / d))
        .sum();
    (total / k as i64) as usize
}

/// A Hall word: a generator or the bracket of two earlier words, stored by
/// index into the owning [`HallBasis`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HallWord {
    Gen(usize),
    Br(usize, usize),
}

/// Hall set of the free Lie algebra truncated at `step`.
///
/// Order is weight first, then the index pair. `[l, r]` is a Hall word when
/// `l < r` and, for composite `r = [a, b]`, `a ≤ l`.
#[derive(Clone, Debug)]
pub struct HallBasis {
    rank: usize,
    step: usize,
    words: Vec<HallWord>,
    weights: Vec<usize>,
    index: HashMap<HallWord, usize>,
}

type Combo = Vec<(usize, i64)>;

fn add_into(acc: &mut HashMap<usize, i64>, terms: &Combo, scale: i64) {
    for (k, c) in terms {
        *acc.entry(*k).or_insert(0) += c * scale;
    }
}

fn finish(acc: HashMap<usize, i64>) -> Combo {
    let mut out: Combo = acc.into_iter().filter(|(_, c)| *c != 0).collect();
    out.sort_unstable();
    out
}

impl HallBasis {
    pub fn new(rank: usize, step: usize) -> Self {
        assert!(rank >= 1 && step >= 1, "rank and step must be positive");
        let mut words: Vec<HallWord> = (0..rank).map(HallWord::Gen).collect();
        let mut weights = vec![1; rank];
        for w in 2..=step {
            let existing = words.len();
            for l in 0..existing {
                for r in l + 1..existing {
                    if weights[l] + weights[r] != w {
                        continue;
                    }
                    let ok = match words[r] {
                        HallWord::Gen(_) => true,
                        HallWord::Br(a, _) => a <= l,
                    };
                    if ok {
                        words.push(HallWord::Br(l, r));
                        weights.push(w);
                    }
                }
            }
        }
        let index = words.iter().enumerate().map(|(i, w)| (*w, i)).collect();
        HallBasis {
            rank,
            step,
            words,
            weights,
            index,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[HallWord] {
        &self.words
    }

    pub fn weight(&self, i: usize) -> usize {
        self.weights[i]
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        (1..=self.step)
            .map(|w| self.weights.iter().filter(|&&x| x == w).count())
            .collect()
    }

    /// Nested bracket string with 1-based generators, e.g. `[1,[1,2]]`.
    pub fn label(&self, i: usize) -> String {
        match self.words[i] {
            HallWord::Gen(g) => (g + 1).to_string(),
            HallWord::Br(l, r) => format!("[{},{}]", self.label(l), self.label(r)),
        }
    }

    /// `[w_u, w_v]` expanded in the Hall basis, truncated above `step`.
    pub fn bracket(&self, u: usize, v: usize) -> Combo {
        let mut memo = HashMap::new();
        self.bracket_memo(u, v, &mut memo)
    }

    fn bracket_memo(&self, u: usize, v: usize, memo: &mut HashMap<(usize, usize), Combo>) -> Combo {
        if u == v || self.weights[u] + self.weights[v] > self.step {
            return Vec::new();
        }
        if u > v {
            return self
                .bracket_memo(v, u, memo)
                .into_iter()
                .map(|(k, c)| (k, -c))
                .collect();
        }
        if let Some(r) = memo.get(&(u, v)) {
            return r.clone();
        }
        let out = match self.words[v] {
            HallWord::Br(a, b) if a > u => {
                // [u,[a,b]] = [a,[u,b]] − [b,[u,a]]
                let mut acc = HashMap::new();
                for (w, c) in self.bracket_memo(u, b, memo) {
                    add_into(&mut acc, &self.bracket_memo(a, w, memo), c);
                }
                for (w, c) in self.bracket_memo(u, a, memo) {
                    add_into(&mut acc, &self.bracket_memo(b, w, memo), -c);
                }
                finish(acc)
            }
            _ => vec![(self.index[&HallWord::Br(u, v)], 1)],
        };
        memo.insert((u, v), out.clone());
        out
    }

    /// Structure constants in the Hall basis.
    pub fn algebra(&self) -> LieAlgebra<Rational> {
        let n = self.len();
        let labels = (0..n).map(|i| self.label(i)).collect();
        let mut g = LieAlgebra::abelian(format!("f[{},{}]", self.rank, self.step), labels);
        let mut memo = HashMap::new();
        for u in 0..n {
            for v in u + 1..n {
                let terms = self.bracket_memo(u, v, &mut memo);
                if terms.is_empty() {
                    continue;
                }
                let mut vec = vec![Rational::zero(); n];
                for (k, c) in terms {
                    vec[k] = Rational::from(c);
                }
                g.set_bracket(u, v, &vec);
            }
        }
        g.with_param("n", Rational::from(self.rank as i64))
            .with_param("r", Rational::from(self.step as i64))
    }

    /// Linear map sending each Hall word to the iterated bracket of the
    /// given generator images in `target`.
    pub fn hom_from_generators<F: Scalar>(&self, target: &LieAlgebra<F>, images: &[Vec<F>]) -> Matrix<F> {
        assert_eq!(images.len(), self.rank, "one image per generator");
        let mut cols: Vec<Vec<F>> = Vec::with_capacity(self.len());
        for w in &self.words {
            let v = match *w {
                HallWord::Gen(g) => images[g].clone(),
                HallWord::Br(l, r) => target.br(&cols[l], &cols[r]),
            };
            cols.push(v);
        }
        Matrix::from_columns(target.dim(), &cols)
    }
}

impl fmt::Display for HallBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = (0..self.len()).map(|i| self.label(i)).collect();
        f.write_str(&labels.join(" "))
    }
}

pub fn hall_basis(n: usize, r: usize) -> HallBasis {
    HallBasis::new(n, r)
}

pub fn free_nilpotent(n: usize, r: usize) -> LieAlgebra<Rational> {
    HallBasis::new(n, r).algebra()
}

pub fn f33_layout() -> Layout {
    Layout::new(&[("x", 3), ("y", 3), ("S", 5), ("z", 3)])
}

/// `[u, v] = (0, x1×x2, x1⊙y2 − y1⊙x2, x1×y2 + y1×x2)` on `x ⊕ y ⊕ s ⊕ z`.
pub fn f33_bracket<F: Scalar>(u: &[F], v: &[F]) -> Vec<F> {
    let l = f33_layout();
    let (a, b) = (l.split(u), l.split(v));
    let (x1, y1, x2, y2) = (a[0], a[1], b[0], b[1]);
    let s = crate::coords::vsub(&odot(x1, y2), &odot(y1, x2));
    let z = crate::coords::vadd(&cross(x1, y2), &cross(y1, x2));
    l.join(&[vec![F::zero(); 3], cross(x1, x2), s, z])
}

pub fn f33_model() -> LieAlgebra<Rational> {
    LieAlgebra::from_bilinear("f33", f33_layout().labels(), f33_bracket).expect("antisymmetric by construction")
}

/// Isomorphism from the Hall-basis `f[3,3]` onto [`f33_model`] sending
/// generator `i` to `(e_i, 0, 0, 0)`.
pub fn f33_hall_iso() -> crate::lie::LinearMap<Rational> {
    let hall = HallBasis::new(3, 3);
    let target = f33_model();
    let images: Vec<Vec<Rational>> = (0..3).map(|i| unit(14, i)).collect();
    let m = hall.hom_from_generators(&target, &images);
    crate::lie::LinearMap::new(hall.algebra(), target, m).expect("dimensions agree")
}

/// The `z`-block ideal.
pub fn ideal_a() -> Subspace<Rational> {
    Subspace::coordinate(14, f33_layout().indices("z"))
}

/// The traceless-symmetric ideal.
pub fn ideal_b() -> Subspace<Rational> {
    Subspace::coordinate(14, f33_layout().indices("S"))
}

/// `f[3,3]`, `f[3,3]/a` and `f[3,3]/b` with their projections.
pub struct CarnotQuotients {
    pub free: LieAlgebra<Rational>,
    pub a33: LieAlgebra<Rational>,
    pub c33: LieAlgebra<Rational>,
    pub a: Subspace<Rational>,
    pub b: Subspace<Rational>,
    pub project_a: Matrix<Rational>,
    pub project_b: Matrix<Rational>,
}

pub fn carnot_quotients() -> Result<CarnotQuotients> {
    let free = f33_model();
    let (a, b) = (ideal_a(), ideal_b());
    let (a33, project_a) = free.quotient(&a)?;
    let (c33, project_b) = free.quotient(&b)?;
    Ok(CarnotQuotients {
        a33: a33.renamed("a33_carnot"),
        c33: c33.renamed("c33_carnot"),
        free,
        a,
        b,
        project_a,
        project_b,
    })
}

pub fn a33_carnot() -> LieAlgebra<Rational> {
    carnot_quotients().expect("a is an ideal").a33
}

pub fn c33_carnot() -> LieAlgebra<Rational> {
    carnot_quotients().expect("b is an ideal").c33
}

/// Carnot model with horizontal layer `x` and no isotropy.
pub fn carnot_model(g: LieAlgebra<Rational>) -> Result<ModelAlgebra<Rational>> {
    let n = g.dim();
    let p = Subspace::coordinate(n, 0..3);
    ModelAlgebra::group(g, p, "carnot")
}

/// Basis `A_ij = e_j e_iᵗ − e_i e_jᵗ`, `i < j`, of `so(n)`, with labels.
pub fn so_basis<F: Scalar>(n: usize) -> Vec<(String, Matrix<F>)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut m = Matrix::zeros(n, n);
            m[(j, i)] = F::one();
            m[(i, j)] = F::one().negate();
            out.push((format!("A{}{}", i + 1, j + 1), m));
        }
    }
    out
}

/// Coordinates of an antisymmetric matrix in [`so_basis`].
pub fn so_coords<F: Scalar>(m: &Matrix<F>) -> Vec<F> {
    let n = m.rows();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(m[(j, i)].clone());
        }
    }
    out
}

/// `C_{n,3}`: `[(x,A,u),(y,B,v)] = (0, yxᵗ − xyᵗ, Ay − Bx)`.
pub fn cn3_carnot(n: usize) -> ModelAlgebra<Rational> {
    assert!(n >= 2, "C_{{n,3}} needs n >= 2");
    let m = n * (n - 1) / 2;
    let basis = so_basis::<Rational>(n);
    let mut labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    labels.extend(basis.iter().map(|(l, _)| l.clone()));
    labels.extend((1..=n).map(|i| format!("u{i}")));
    let antisym = |c: &[Rational]| {
        basis
            .iter()
            .zip(c)
            .fold(Matrix::zeros(n, n), |acc, ((_, b), x)| acc.add(&b.scale(x)))
    };
    let bracket = |a: &[Rational], b: &[Rational]| {
        let (x, am) = (&a[..n], antisym(&a[n..n + m]));
        let (y, bm) = (&b[..n], antisym(&b[n..n + m]));
        let mid = crate::coords::outer(y, x).sub(&crate::coords::outer(x, y));
        let top = crate::coords::vsub(&am.mul_vec(y), &bm.mul_vec(x));
        let mut out = vec![Rational::zero(); n];
        out.extend(so_coords(&mid));
        out.extend(top);
        out
    };
    let g = LieAlgebra::from_bilinear(format!("C[{n},3]"), labels, bracket)
        .expect("antisymmetric by construction")
        .with_param("n", Rational::from(n as i64));
    let p = Subspace::coordinate(g.dim(), 0..n);
    ModelAlgebra::group(g, p, "cn3").expect("subspaces sized to the algebra")
}

/// Step-two algebra on `X1..X4, Y1..Y3` with quaternion-type brackets.
pub fn quaternionic_step2() -> ModelAlgebra<Rational> {
    let labels = ["X1", "X2", "X3", "X4", "Y1", "Y2", "Y3"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let mut g = LieAlgebra::abelian("quaternionic step 2", labels);
    let one = |k: usize, sign: i64| {
        let mut v = vec![Rational::zero(); 7];
        v[k] = Rational::from(sign);
        v
    };
    g.set_bracket(0, 1, &one(4, 1));
    g.set_bracket(2, 3, &one(4, 1));
    g.set_bracket(0, 2, &one(5, 1));
    g.set_bracket(1, 3, &one(5, -1)); // [X4, X2] = Y2
    g.set_bracket(0, 3, &one(6, 1));
    g.set_bracket(1, 2, &one(6, 1));
    let p = Subspace::coordinate(7, 0..4);
    ModelAlgebra::group(g, p, "quaternionic").expect("subspaces sized to the algebra")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    type Q = Rational;

    #[test]
    fn witt_values() {
        assert_eq!((1..=3).map(|k| witt_dim(3, k)).collect::<Vec<_>>(), vec![3, 3, 8]);
        assert_eq!(witt_dim(2, 2), 1);
        assert_eq!(witt_dim(2, 3), 2);
        assert_eq!(witt_dim(2, 4), 3);
        assert_eq!(witt_dim(2, 6), 9);
    }

    #[test]
    fn hall_counts_match_witt() {
        for n in 1..=4 {
            for r in 1..=4 {
                let h = HallBasis::new(n, r);
                let expected: Vec<usize> = (1..=r as u32).map(|k| witt_dim(n as u32, k)).collect();
                assert_eq!(h.layer_sizes(), expected, "rank {n} step {r}");
            }
        }
        assert_eq!(HallBasis::new(1, 5).len(), 1);
        assert_eq!(HallBasis::new(2, 3).len(), 5);
    }

    #[test]
    fn hall_labels() {
        let h = HallBasis::new(2, 3);
        assert_eq!(h.to_string(), "1 2 [1,2] [1,[1,2]] [2,[1,2]]");
    }

    /// Expansion of a Hall word as a non-commutative polynomial.
    fn expand(h: &HallBasis, i: usize) -> BTreeMap<Vec<usize>, i64> {
        match h.words()[i] {
            HallWord::Gen(g) => BTreeMap::from([(vec![g], 1)]),
            HallWord::Br(l, r) => commutator(&expand(h, l), &expand(h, r)),
        }
    }

    fn commutator(a: &BTreeMap<Vec<usize>, i64>, b: &BTreeMap<Vec<usize>, i64>) -> BTreeMap<Vec<usize>, i64> {
        let mut out = BTreeMap::new();
        for (u, c) in a {
            for (v, d) in b {
                let mut uv = u.clone();
                uv.extend(v);
                *out.entry(uv).or_insert(0) += c * d;
                let mut vu = v.clone();
                vu.extend(u);
                *out.entry(vu).or_insert(0) -= c * d;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    #[test]
    fn normalization_agrees_with_tensor_expansion() {
        for (n, r) in [(2, 4), (3, 3), (3, 4), (4, 3)] {
            let h = HallBasis::new(n, r);
            let exp: Vec<_> = (0..h.len()).map(|i| expand(&h, i)).collect();
            for u in 0..h.len() {
                for v in 0..h.len() {
                    if h.weight(u) + h.weight(v) > r {
                        continue;
                    }
                    let mut lhs = BTreeMap::new();
                    for (k, c) in h.bracket(u, v) {
                        for (w, d) in &exp[k] {
                            *lhs.entry(w.clone()).or_insert(0) += c * d;
                        }
                    }
                    lhs.retain(|_, c: &mut i64| *c != 0);
                    assert_eq!(lhs, commutator(&exp[u], &exp[v]), "rank {n} step {r}: {u} {v}");
                }
            }
        }
    }

    #[test]
    fn free_algebra_series_is_witt() {
        for (n, r) in [(2, 3), (3, 3), (2, 4), (4, 2)] {
            let g = free_nilpotent(n, r);
            assert!(g.is_lie());
            let dims: Vec<usize> = g.lower_central_series().unwrap().iter().map(Subspace::dim).collect();
            let mut expected = vec![g.dim()];
            let mut left = g.dim();
            for k in 1..=r as u32 {
                left -= witt_dim(n as u32, k);
                expected.push(left);
            }
            assert_eq!(dims, expected);
        }
    }

    #[test]
    fn heisenberg_and_abelian() {
        let h = free_nilpotent(2, 2);
        assert_eq!(h.dim(), 3);
        assert_eq!(h.bracket_basis(0, 1), unit::<Q>(3, 2));
        let a = free_nilpotent(4, 1);
        assert_eq!(a.brackets().count(), 0);
    }

    #[test]
    fn f33_model_brackets() {
        let g = f33_model();
        let e = |i| unit::<Q>(14, i);
        assert_eq!(g.br(&e(0), &e(1)), e(5));
        // [(e1,0,0,0),(0,e2,0,0)] = (0,0,½S12,e3)
        let mut expected = vec![Q::zero(); 14];
        expected[6] = Q::new(1, 2);
        expected[13] = Q::one();
        assert_eq!(g.br(&e(0), &e(4)), expected);
        // e1⊙e1 = ⅔(D1−D2) + ⅓(D2−D3)
        let mut d = vec![Q::zero(); 14];
        d[9] = Q::new(2, 3);
        d[10] = Q::new(1, 3);
        assert_eq!(g.br(&e(0), &e(3)), d);
        assert!(g.is_lie());
        let center = g.center().unwrap();
        assert_eq!(center, Subspace::coordinate(14, 6..14));
    }

    #[test]
    fn hall_identification_is_an_isomorphism() {
        assert!(f33_hall_iso().check().unwrap().is_isomorphism());
    }

    #[test]
    fn quotients() {
        let q = carnot_quotients().unwrap();
        assert_eq!((q.free.dim(), q.a33.dim(), q.c33.dim()), (14, 11, 9));
        for (g, growth) in [
            (&q.free, vec![3, 6, 14]),
            (&q.a33, vec![3, 6, 11]),
            (&q.c33, vec![3, 6, 9]),
        ] {
            assert!(g.is_lie());
            assert_eq!(carnot_model(g.clone()).unwrap().growth_vector().unwrap(), growth);
        }
        assert!(
            crate::lie::check_map(&q.free, &q.a33, &q.project_a)
                .unwrap()
                .homomorphism
        );
        assert!(
            crate::lie::check_map(&q.free, &q.c33, &q.project_b)
                .unwrap()
                .homomorphism
        );
        assert!(f33_model().quotient(&Subspace::coordinate(14, [0])).is_err());
    }

    #[test]
    fn cn3_family() {
        for n in 2..=5 {
            let m = cn3_carnot(n);
            assert!(m.algebra.is_lie());
            assert_eq!(m.dim(), n * (n + 3) / 2);
            assert_eq!(m.growth_vector().unwrap(), vec![n, n * (n + 1) / 2, n * (n + 3) / 2]);
        }
        let c2 = cn3_carnot(2);
        let hall = HallBasis::new(2, 3);
        let images = vec![unit(5, 0), unit(5, 1)];
        let phi = hall.hom_from_generators(&c2.algebra, &images);
        assert!(crate::lie::check_map(&hall.algebra(), &c2.algebra, &phi)
            .unwrap()
            .is_isomorphism());
    }

    #[test]
    fn quaternionic_example() {
        let m = quaternionic_step2();
        assert!(m.algebra.is_lie());
        assert_eq!(m.growth_vector().unwrap(), vec![4, 7]);
        assert_eq!(m.algebra.center().unwrap().dim(), 3);
        assert_eq!(m.algebra.bracket_basis(0, 2), unit::<Q>(7, 5));
        assert_eq!(m.algebra.bracket_basis(3, 1), unit::<Q>(7, 5));
    }
}
