//! Representations of O(3) on `R³`, `s` and their determinant twists, an
//! exact solver for equivariant bilinear maps, and the invariant ideals of
//! `f[3,3]`.

use std::fmt;

use crate::coords::{cross, odot, rot_s, s_apply, s_coords, s_matrix, star_comm, star_inv};
use crate::error::{Error, Result};
use crate::free::{f33_bracket, f33_layout, f33_model};
use crate::matrix::{unit, Matrix};
use crate::poly::MultiPoly;
use crate::scalar::{Rational, Scalar};
use crate::subspace::Subspace;

type Q = Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    Vector,
    Traceless,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    O3,
    SO3,
}

impl std::str::FromStr for Group {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "O3" => Ok(Group::O3),
            "SO3" => Ok(Group::SO3),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// Representation given infinitesimally by the action of `star_inv(e_a)`,
/// plus the matrix of the reflection `diag(1,1,−1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rep {
    pub name: String,
    pub gens: [Matrix<Q>; 3],
    pub reflection: Matrix<Q>,
    /// Twisted by the determinant.
    pub bar: bool,
    parts: Vec<(Base, bool)>,
}

fn reflection_matrix() -> Matrix<Q> {
    Matrix::diagonal(&[Q::one(), Q::one(), Q::from(-1)])
}

/// Matrix of `v ↦ f(v)` on `F^n` from the images of unit vectors.
fn matrix_of(n: usize, f: impl Fn(&[Q]) -> Vec<Q>) -> Matrix<Q> {
    let cols: Vec<Vec<Q>> = (0..n).map(|i| f(&unit(n, i))).collect();
    Matrix::from_columns(cols[0].len(), &cols)
}

/// Action of an orthogonal 3×3 matrix on one irreducible summand.
fn finite_action(base: Base, bar: bool, q: &Matrix<Q>) -> Matrix<Q> {
    let m = match base {
        Base::Vector => q.clone(),
        Base::Traceless => matrix_of(5, |s| s_coords(&q.mul(&s_matrix(s)).mul(&q.transpose()))),
    };
    let det = determinant3(q);
    if bar {
        m.scale(&det)
    } else {
        m
    }
}

fn determinant3(q: &Matrix<Q>) -> Q {
    let c0 = q.column(0);
    let c1 = q.column(1);
    let c2 = q.column(2);
    crate::coords::dot(&c0, &cross(&c1, &c2))
}

impl Rep {
    fn irreducible(base: Base, bar: bool) -> Rep {
        let r = reflection_matrix();
        let (gens, name) = match base {
            Base::Vector => ([0, 1, 2].map(|a| star_inv(&unit::<Q>(3, a))), "R3"),
            Base::Traceless => ([0, 1, 2].map(|a| matrix_of(5, |s| rot_s(&unit::<Q>(3, a), s))), "s"),
        };
        let rep = Rep {
            name: format!("{name}{}", if bar { "bar" } else { "" }),
            gens,
            reflection: finite_action(base, bar, &r),
            bar,
            parts: vec![(base, bar)],
        };
        rep.validate().expect("standard representations are consistent");
        rep
    }

    pub fn dim(&self) -> usize {
        self.reflection.rows()
    }

    /// Irreducible summands as (type, twisted) pairs.
    pub fn parts(&self) -> &[(Base, bool)] {
        &self.parts
    }

    /// Direct sum, block diagonal.
    pub fn sum(&self, other: &Rep) -> Rep {
        let gens = [0, 1, 2].map(|a| Matrix::block_diag(&[&self.gens[a], &other.gens[a]]));
        let mut parts = self.parts.clone();
        parts.extend(other.parts.iter().copied());
        Rep {
            name: format!("{}+{}", self.name, other.name),
            gens,
            reflection: Matrix::block_diag(&[&self.reflection, &other.reflection]),
            bar: false,
            parts,
        }
    }

    /// Action of an orthogonal matrix `q`.
    pub fn act(&self, q: &Matrix<Q>) -> Matrix<Q> {
        let blocks: Vec<Matrix<Q>> = self.parts.iter().map(|&(b, bar)| finite_action(b, bar, q)).collect();
        Matrix::block_diag(&blocks.iter().collect::<Vec<_>>())
    }

    /// Commutation relations, `r² = 1`, and `r g_a r = ±g_{a}` as the
    /// reflection acts on `so(3)`.
    pub fn validate(&self) -> Result<()> {
        for a in 0..3 {
            let (b, c) = ((a + 1) % 3, (a + 2) % 3);
            if self.gens[a].commutator(&self.gens[b]) != self.gens[c] {
                return Err(Error::Invalid(format!(
                    "{}: generators {a}, {b} do not close",
                    self.name
                )));
            }
        }
        let n = self.dim();
        let r = &self.reflection;
        if r.mul(r) != Matrix::identity(n) {
            return Err(Error::Invalid(format!(
                "{}: reflection does not square to one",
                self.name
            )));
        }
        // r star_inv(v) r = −star_inv(r v), so e1, e2 flip and e3 is kept
        let signs = [-1, -1, 1];
        for (a, (g, sign)) in self.gens.iter().zip(signs).enumerate() {
            if r.mul(g).mul(r) != g.scale(&Q::from(sign)) {
                return Err(Error::Invalid(format!(
                    "{}: reflection is inconsistent with generator {a}",
                    self.name
                )));
            }
        }
        Ok(())
    }
}

pub fn standard_rep(name: &str) -> Result<Rep> {
    match name {
        "R3" => Ok(Rep::irreducible(Base::Vector, false)),
        "R3bar" => Ok(Rep::irreducible(Base::Vector, true)),
        "s" => Ok(Rep::irreducible(Base::Traceless, false)),
        "sbar" => Ok(Rep::irreducible(Base::Traceless, true)),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

pub const REP_NAMES: [&str; 4] = ["R3", "R3bar", "s", "sbar"];

/// Bilinear map `V1 × V2 → W` stored as a `dim W × (dim V1 · dim V2)`
/// matrix acting on `u ⊗ v`.
#[derive(Clone, PartialEq)]
pub struct Bilinear {
    pub d1: usize,
    pub d2: usize,
    pub matrix: Matrix<Q>,
}

impl Bilinear {
    pub fn from_fn(d1: usize, d2: usize, dw: usize, f: impl Fn(&[Q], &[Q]) -> Vec<Q>) -> Bilinear {
        let mut m = Matrix::zeros(dw, d1 * d2);
        for a in 0..d1 {
            for b in 0..d2 {
                let out = f(&unit(d1, a), &unit(d2, b));
                for (w, x) in out.into_iter().enumerate() {
                    m[(w, a * d2 + b)] = x;
                }
            }
        }
        Bilinear { d1, d2, matrix: m }
    }

    fn from_flat(d1: usize, d2: usize, dw: usize, flat: &[Q]) -> Bilinear {
        let rows = flat.chunks(d1 * d2).map(<[Q]>::to_vec).collect::<Vec<_>>();
        debug_assert_eq!(rows.len(), dw);
        Bilinear {
            d1,
            d2,
            matrix: Matrix::from_rows(rows),
        }
    }

    pub fn dw(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, u: &[Q], v: &[Q]) -> Vec<Q> {
        let mut t = Vec::with_capacity(self.d1 * self.d2);
        for a in u {
            for b in v {
                t.push(a * b);
            }
        }
        self.matrix.mul_vec(&t)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// `ρ_W(q) L(u, v) = L(ρ1(q) u, ρ2(q) v)` on all basis pairs.
    pub fn equivariant_under(&self, v1: &Rep, v2: &Rep, w: &Rep, q: &Matrix<Q>) -> bool {
        let (a1, a2, aw) = (v1.act(q), v2.act(q), w.act(q));
        (0..self.d1).all(|a| {
            (0..self.d2).all(|b| {
                let (u, v) = (unit(self.d1, a), unit(self.d2, b));
                aw.mul_vec(&self.apply(&u, &v)) == self.apply(&a1.mul_vec(&u), &a2.mul_vec(&v))
            })
        })
    }
}

impl fmt::Debug for Bilinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Bilinear({}x{} -> {}) {:?}",
            self.d1,
            self.d2,
            self.dw(),
            self.matrix
        )
    }
}

/// Basis of the equivariant bilinear maps `V1 × V2 → W`.
pub fn equivariant_bilinear_basis(v1: &Rep, v2: &Rep, w: &Rep, group: Group) -> Result<Vec<Bilinear>> {
    let (d1, d2, dw) = (v1.dim(), v2.dim(), w.dim());
    let n = dw * d1 * d2;
    let idx = |o: usize, a: usize, b: usize| o * d1 * d2 + a * d2 + b;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for e in 0..3 {
        let (g1, g2, gw) = (&v1.gens[e], &v2.gens[e], &w.gens[e]);
        for a in 0..d1 {
            for b in 0..d2 {
                for o in 0..dw {
                    let mut row = vec![Q::zero(); n];
                    for o2 in 0..dw {
                        row[idx(o2, a, b)] = &row[idx(o2, a, b)] + &gw[(o, o2)];
                    }
                    for a2 in 0..d1 {
                        row[idx(o, a2, b)] = &row[idx(o, a2, b)] - &g1[(a2, a)];
                    }
                    for b2 in 0..d2 {
                        row[idx(o, a, b2)] = &row[idx(o, a, b2)] - &g2[(b2, b)];
                    }
                    rows.push(row);
                }
            }
        }
    }
    if group == Group::O3 {
        let (r1, r2, rw) = (&v1.reflection, &v2.reflection, &w.reflection);
        for a in 0..d1 {
            for b in 0..d2 {
                for o in 0..dw {
                    let mut row = vec![Q::zero(); n];
                    for o2 in 0..dw {
                        row[idx(o2, a, b)] = &row[idx(o2, a, b)] + &rw[(o, o2)];
                    }
                    for a2 in 0..d1 {
                        for b2 in 0..d2 {
                            let c = &r1[(a2, a)] * &r2[(b2, b)];
                            row[idx(o, a2, b2)] = &row[idx(o, a2, b2)] - &c;
                        }
                    }
                    rows.push(row);
                }
            }
        }
    }
    let kernel = Matrix::from_rows(rows).reduce()?.kernel;
    Ok(kernel.iter().map(|k| Bilinear::from_flat(d1, d2, dw, k)).collect())
}

/// Solver dimension predicted from the five named maps: each pair of
/// types admits one map under SO(3), and under O(3) the twists must
/// cancel against the intrinsic parity of that map.
pub fn predicted_dimension(v1: &str, v2: &str, w: &str, group: Group) -> Result<Option<usize>> {
    let parse = |n: &str| -> Result<(Base, bool)> {
        let r = standard_rep(n)?;
        Ok(r.parts[0])
    };
    let ((b1, t1), (b2, t2), (bw, tw)) = (parse(v1)?, parse(v2)?, parse(w)?);
    use Base::*;
    let intrinsic = match (b1, b2, bw) {
        (Vector, Vector, Vector) => true,
        (Vector, Vector, Traceless) => false,
        (Vector, Traceless, Vector) | (Traceless, Vector, Vector) => false,
        (Vector, Traceless, Traceless) | (Traceless, Vector, Traceless) => true,
        (Traceless, Traceless, Vector) => true,
        (Traceless, Traceless, Traceless) => return Ok(None),
    };
    Ok(Some(match group {
        Group::SO3 => 1,
        Group::O3 => usize::from(!(t1 ^ t2 ^ tw ^ intrinsic)),
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum NamedMap {
    M1,
    M2,
    M3,
    M4,
    M5,
}

impl NamedMap {
    pub const ALL: [NamedMap; 5] = [NamedMap::M1, NamedMap::M2, NamedMap::M3, NamedMap::M4, NamedMap::M5];

    /// Source and target representation names.
    pub fn signature(self) -> (&'static str, &'static str, &'static str) {
        match self {
            NamedMap::M1 => ("R3", "R3", "R3bar"),
            NamedMap::M2 => ("R3", "R3", "s"),
            NamedMap::M3 => ("R3", "s", "R3"),
            NamedMap::M4 => ("R3", "s", "sbar"),
            NamedMap::M5 => ("s", "s", "R3bar"),
        }
    }

    pub fn bilinear(self) -> Bilinear {
        match self {
            NamedMap::M1 => Bilinear::from_fn(3, 3, 3, cross),
            NamedMap::M2 => Bilinear::from_fn(3, 3, 5, odot),
            NamedMap::M3 => Bilinear::from_fn(3, 5, 3, |v, a| s_apply(a, v)),
            NamedMap::M4 => Bilinear::from_fn(3, 5, 5, rot_s),
            NamedMap::M5 => Bilinear::from_fn(5, 5, 3, star_comm),
        }
    }

    pub fn reps(self) -> (Rep, Rep, Rep) {
        let (a, b, c) = self.signature();
        (
            standard_rep(a).unwrap(),
            standard_rep(b).unwrap(),
            standard_rep(c).unwrap(),
        )
    }
}

impl std::str::FromStr for NamedMap {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "M1" => Ok(NamedMap::M1),
            "M2" => Ok(NamedMap::M2),
            "M3" => Ok(NamedMap::M3),
            "M4" => Ok(NamedMap::M4),
            "M5" => Ok(NamedMap::M5),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

pub fn named_map(m: NamedMap) -> Bilinear {
    m.bilinear()
}

/// `(I − A)⁻¹(I + A)` for antisymmetric rational `A`: a rational rotation.
pub fn cayley(a: &[Q]) -> Matrix<Q> {
    let s = star_inv(a);
    let i = Matrix::identity(3);
    i.sub(&s)
        .inverse()
        .expect("I - A is invertible for antisymmetric A")
        .mul(&i.add(&s))
}

/// Matrices commuting with the whole action of `rep`.
pub fn commutant(rep: &Rep) -> Result<Vec<Matrix<Q>>> {
    let n = rep.dim();
    let mut rows = Vec::new();
    let mut ops: Vec<&Matrix<Q>> = rep.gens.iter().collect();
    ops.push(&rep.reflection);
    // C X − X C = 0 entrywise, unknown C[i][j] at i*n + j
    for x in ops {
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![Q::zero(); n * n];
                for k in 0..n {
                    row[i * n + k] = &row[i * n + k] + &x[(k, j)];
                    row[k * n + j] = &row[k * n + j] - &x[(i, k)];
                }
                rows.push(row);
            }
        }
    }
    let kernel = Matrix::from_rows(rows).reduce()?.kernel;
    Ok(kernel
        .iter()
        .map(|k| Matrix::from_rows(k.chunks(n).map(<[Q]>::to_vec).collect()))
        .collect())
}

/// O(3) action on the top layer `s̄ ⊕ R³` of `f[3,3]`.
pub fn f3_rep() -> Rep {
    standard_rep("sbar").unwrap().sum(&standard_rep("R3").unwrap())
}

/// O(3) action on all of `f[3,3] = R³ ⊕ R̄³ ⊕ s̄ ⊕ R³`.
pub fn f33_rep() -> Rep {
    let r = |n: &str| standard_rep(n).unwrap();
    r("R3").sum(&r("R3bar")).sum(&r("sbar")).sum(&r("R3"))
}

/// The graph `{(x, 0, 0, λx)}` in the `R³`-isotypic part of `f[3,3]`.
pub fn graph_subspace(lambda: &Q) -> Subspace<Q> {
    let l = f33_layout();
    let vecs: Vec<Vec<Q>> = (0..3)
        .map(|i| {
            let e = unit::<Q>(3, i);
            l.join(&[
                e.clone(),
                vec![Q::zero(); 3],
                vec![Q::zero(); 5],
                e.iter().map(|c| c * lambda).collect(),
            ])
        })
        .collect();
    Subspace::span(14, &vecs).expect("rational span")
}

/// Symbolic certificate that the `f₂` part of `[P_λ, f₁]` is free of λ and
/// spans `f₂`, so every finite-λ graph generates an ideal containing the
/// centre.
pub fn graph_family_certificate() -> bool {
    let l = f33_layout();
    let lam = MultiPoly::var("lambda");
    let y = l.indices("y");
    let mut rows = Vec::new();
    for i in 0..3 {
        let e = unit::<MultiPoly>(3, i);
        let z: Vec<MultiPoly> = e.iter().map(|c| c.times(&lam)).collect();
        let g = l.join(&[e.clone(), vec![MultiPoly::zero(); 3], vec![MultiPoly::zero(); 5], z]);
        for j in 0..3 {
            let h = l.embed("x", &unit::<MultiPoly>(3, j));
            let br = f33_bracket(&g, &h);
            let part: Option<Vec<Q>> = br[y.clone()].iter().map(MultiPoly::as_constant).collect();
            match part {
                Some(p) => rows.push(p),
                None => return false,
            }
        }
    }
    Matrix::from_rows(rows).rank() == Ok(3)
}

/// Invariant ideals of `f[3,3]` not containing the top layer.
///
/// Every invariant subspace is a sum of irreducible ones: `f₂`, the
/// traceless block, the `z` block, and the graphs `P_λ` (with `P_0 = f₁`).
/// Each candidate is replaced by the ideal it generates and discarded if
/// that ideal reaches the centre; sums of the survivors are then closed
/// up the same way.
pub fn invariant_ideals_f33(samples: &[Q]) -> Result<Vec<Subspace<Q>>> {
    let g = f33_model();
    let l = f33_layout();
    let center = g.center()?;
    let mut candidates = vec![
        Subspace::coordinate(14, l.indices("y")),
        Subspace::coordinate(14, l.indices("S")),
        Subspace::coordinate(14, l.indices("z")),
    ];
    if !graph_family_certificate() {
        return Err(Error::Invalid("graph family f2-projection depends on lambda".into()));
    }
    candidates.extend(samples.iter().map(graph_subspace));
    let mut survivors: Vec<Subspace<Q>> = Vec::new();
    for c in &candidates {
        let ideal = g.generated_ideal(c)?;
        if !center.is_subspace_of(&ideal) && !survivors.contains(&ideal) {
            survivors.push(ideal);
        }
    }
    let mut out = vec![Subspace::zero(14)];
    for mask in 1u32..(1 << survivors.len()) {
        let mut s = Subspace::zero(14);
        for (i, v) in survivors.iter().enumerate() {
            if mask & (1 << i) != 0 {
                s = s.sum(v)?;
            }
        }
        let ideal = g.generated_ideal(&s)?;
        if !center.is_subspace_of(&ideal) && !out.contains(&ideal) {
            out.push(ideal);
        }
    }
    let rep = f33_rep();
    for ideal in &out {
        for op in rep.gens.iter().chain(std::iter::once(&rep.reflection)) {
            if ideal.basis_vectors().iter().any(|v| !ideal.contains(&op.mul_vec(v))) {
                return Err(Error::Invalid("ideal is not invariant".into()));
            }
        }
    }
    out.sort_by_key(|s| (s.dim(), s.pivots().to_vec()));
    Ok(out)
}

/// Default λ samples for the graph family.
pub fn default_lambda_samples() -> Vec<Q> {
    vec![Q::zero(), Q::one(), Q::from(-1), Q::from(2), Q::from(-2), Q::new(1, 2)]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(n: &str) -> Rep {
        standard_rep(n).unwrap()
    }

    #[test]
    fn standard_reps() {
        let r = rep("R3");
        assert_eq!(r.gens[0].mul_vec(&unit(3, 1)), unit(3, 2));
        assert_eq!(rep("R3bar").reflection, reflection_matrix().neg());
        assert_eq!([rep("s").dim(), rep("sbar").dim()], [5, 5]);
        assert!(matches!(standard_rep("R4"), Err(Error::UnknownName(_))));
        // [A_23, D2 − D3] = 2 S23 in the traceless basis
        let s = rep("s");
        let d23 = unit::<Q>(5, 4);
        let mut expected = vec![Q::zero(); 5];
        expected[1] = Q::from(2);
        assert_eq!(s.gens[0].mul_vec(&d23), expected);
    }

    #[test]
    fn named_maps_span_solver_kernels() {
        for m in NamedMap::ALL {
            let (a, b, c) = m.reps();
            let basis = equivariant_bilinear_basis(&a, &b, &c, Group::O3).unwrap();
            assert_eq!(basis.len(), 1, "{m:?}");
            let named = m.bilinear();
            let k = &basis[0];
            // proportional and non-zero
            let stacked = Matrix::from_rows(vec![named.matrix.entries().to_vec(), k.matrix.entries().to_vec()]);
            assert_eq!(stacked.rank().unwrap(), 1, "{m:?}");
            assert!(!named.is_zero());
        }
    }

    #[test]
    fn named_map_values() {
        let e = |i| unit::<Q>(3, i);
        let s = |i| unit::<Q>(5, i);
        let mut half_s12 = vec![Q::zero(); 5];
        half_s12[0] = Q::new(1, 2);
        assert_eq!(NamedMap::M2.bilinear().apply(&e(0), &e(1)), half_s12);
        assert_eq!(NamedMap::M5.bilinear().apply(&s(0), &s(1)), e(1));
        assert_eq!(NamedMap::M3.bilinear().apply(&e(0), &s(3)), e(0));
    }

    #[test]
    fn vector_to_vector_needs_orientation() {
        let r = rep("R3");
        assert_eq!(equivariant_bilinear_basis(&r, &r, &r, Group::O3).unwrap().len(), 0);
        assert_eq!(equivariant_bilinear_basis(&r, &r, &r, Group::SO3).unwrap().len(), 1);
    }

    #[test]
    fn all_type_combinations_match_prediction() {
        for v1 in ["R3", "R3bar"] {
            for v2 in REP_NAMES {
                for w in REP_NAMES {
                    for g in [Group::O3, Group::SO3] {
                        let got = equivariant_bilinear_basis(&rep(v1), &rep(v2), &rep(w), g)
                            .unwrap()
                            .len();
                        assert_eq!(
                            Some(got),
                            predicted_dimension(v1, v2, w, g).unwrap(),
                            "{v1} {v2} {w} {g:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn solutions_are_finitely_equivariant() {
        let axes: [[i64; 3]; 10] = [
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [1, 1, 0],
            [1, 2, 3],
            [-2, 1, 1],
            [3, -1, 2],
            [1, 1, 1],
            [0, -3, 1],
            [2, 2, -1],
        ];
        let r = reflection_matrix();
        for m in NamedMap::ALL {
            let (a, b, c) = m.reps();
            let basis = equivariant_bilinear_basis(&a, &b, &c, Group::O3).unwrap();
            for ax in axes {
                let v: Vec<Q> = ax.iter().map(|&x| Q::new(x, 3)).collect();
                let q = cayley(&v);
                assert_eq!(q.mul(&q.transpose()), Matrix::identity(3));
                for l in &basis {
                    assert!(l.equivariant_under(&a, &b, &c, &q), "{m:?} rotation");
                    assert!(l.equivariant_under(&a, &b, &c, &q.mul(&r)), "{m:?} reflection");
                }
            }
        }
    }

    #[test]
    fn reflection_breaks_so3_only_maps() {
        let (a, b) = (rep("R3"), rep("R3"));
        let so3 = equivariant_bilinear_basis(&a, &b, &a, Group::SO3).unwrap();
        assert!(!so3[0].equivariant_under(&a, &b, &a, &reflection_matrix()));
    }

    #[test]
    fn commutant_of_top_layer() {
        let c = commutant(&f3_rep()).unwrap();
        assert_eq!(c.len(), 2);
        let mut p1 = Matrix::<Q>::zeros(8, 8);
        let mut p2 = Matrix::<Q>::zeros(8, 8);
        for i in 0..5 {
            p1[(i, i)] = Q::one();
        }
        for i in 5..8 {
            p2[(i, i)] = Q::one();
        }
        let span = Matrix::from_rows(c.iter().map(|m| m.entries().to_vec()).collect());
        let with = span.vstack(&Matrix::from_rows(vec![p1.entries().to_vec(), p2.entries().to_vec()]));
        assert_eq!(with.rank().unwrap(), 2);
    }

    #[test]
    fn f33_action_is_by_automorphisms() {
        let g = f33_model();
        let rep = f33_rep();
        for op in &rep.gens {
            // derivation: op[u,v] = [op u, v] + [u, op v]
            for i in 0..14 {
                for j in i + 1..14 {
                    let (u, v) = (unit::<Q>(14, i), unit::<Q>(14, j));
                    let lhs = op.mul_vec(&g.br(&u, &v));
                    let rhs = crate::coords::vadd(&g.br(&op.mul_vec(&u), &v), &g.br(&u, &op.mul_vec(&v)));
                    assert_eq!(lhs, rhs);
                }
            }
        }
        let q = cayley(&[Q::new(1, 2), Q::new(-1, 3), Q::one()]).mul(&reflection_matrix());
        let a = rep.act(&q);
        for i in 0..14 {
            for j in i + 1..14 {
                let (u, v) = (unit::<Q>(14, i), unit::<Q>(14, j));
                assert_eq!(a.mul_vec(&g.br(&u, &v)), g.br(&a.mul_vec(&u), &a.mul_vec(&v)));
            }
        }
    }

    #[test]
    fn invariant_ideals() {
        let ideals = invariant_ideals_f33(&default_lambda_samples()).unwrap();
        let l = f33_layout();
        assert_eq!(
            ideals,
            vec![
                Subspace::zero(14),
                Subspace::coordinate(14, l.indices("z")),
                Subspace::coordinate(14, l.indices("S")),
            ]
        );
        assert!(graph_family_certificate());
        let g = f33_model();
        let center = g.center().unwrap();
        assert!(center.is_subspace_of(&g.generated_ideal(&Subspace::coordinate(14, l.indices("y"))).unwrap()));
    }
}
