//! Classical and exceptional algebras used as targets of the isomorphisms.

use crate::catalog::families::a33_layout;
use crate::coords::{cross, dot, s_coords, s_matrix, star, star_inv, vadd, vsub, Layout};
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, LinearMap};
use crate::matalg::MatrixAlgebra;
use crate::matrix::{unit, Matrix};
use crate::scalar::{Gaussian, Rational, Scalar};
use crate::subspace::Subspace;

type Q = Rational;
type C = Gaussian;

/// `so(p, q)` as matrices `X` with `Xᵗη + ηX = 0`, `η = diag(1ᵖ, (−1)^q)`.
/// Basis `X_ij = η_i e_j e_iᵗ − η_j e_i e_jᵗ` for `i < j`.
pub fn so_pq_matrices<F: Scalar>(p: usize, q: usize) -> MatrixAlgebra<F> {
    let n = p + q;
    let eta = |i: usize| if i < p { F::one() } else { F::one().negate() };
    let mut labels = Vec::new();
    let mut basis = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut m = Matrix::zeros(n, n);
            m[(j, i)] = eta(i);
            m[(i, j)] = eta(j).negate();
            labels.push(format!("X{}{}", i + 1, j + 1));
            basis.push(m);
        }
    }
    MatrixAlgebra::new(labels, basis).expect("distinct elementary matrices")
}

pub fn so_pq_name(p: usize, q: usize) -> String {
    if q == 0 {
        format!("so({p})")
    } else {
        format!("so({p},{q})")
    }
}

pub fn so_pq(p: usize, q: usize) -> Result<LieAlgebra<Q>> {
    if p + q < 2 || p + q > 6 {
        return Err(Error::OffLocus(format!("so({p},{q}) needs 2 <= p+q <= 6")));
    }
    so_pq_matrices(p, q).algebra(so_pq_name(p, q))
}

/// `so(3)` in the basis `star_inv(e_a)`, so the bracket is the cross product.
pub fn so3_rotations<F: Scalar>() -> MatrixAlgebra<F> {
    let basis = (0..3).map(|a| star_inv(&unit::<F>(3, a))).collect();
    MatrixAlgebra::new(vec!["r1".into(), "r2".into(), "r3".into()], basis).expect("independent rotations")
}

pub fn so3() -> LieAlgebra<Q> {
    so3_rotations().algebra("so(3)").expect("rotations close")
}

pub fn b_layout() -> Layout {
    Layout::new(&[("x", 3), ("y", 3)])
}

/// `b_k`: `[(x1,y1),(x2,y2)] = (x1×y2 + y1×x2, k x1×x2 + y1×y2)`.
pub fn b_bracket<F: Scalar>(k: &F, u: &[F], v: &[F]) -> Vec<F> {
    let (x1, y1, x2, y2) = (&u[..3], &u[3..], &v[..3], &v[3..]);
    let mut out = vadd(&cross(x1, y2), &cross(y1, x2));
    let xx = cross(x1, x2);
    out.extend(vadd(&xx.iter().map(|c| k.times(c)).collect::<Vec<_>>(), &cross(y1, y2)));
    out
}

pub fn b_algebra(k: &Q) -> LieAlgebra<Q> {
    LieAlgebra::from_bilinear(format!("b({k})"), b_layout().labels(), |u, v| b_bracket(k, u, v))
        .expect("antisymmetric by construction")
        .with_param("k", k.clone())
}

/// `b_1 → so(3) ⊕ so(3)`, `(x, y) ↦ (⋆⁻¹(y + x), ⋆⁻¹(y − x))`.
pub fn b1_split() -> Result<LinearMap<Q>> {
    let target = so3().direct_sum(&so3());
    LinearMap::from_images(b_algebra(&Q::one()), target, |v| {
        let (x, y) = (&v[..3], &v[3..]);
        let mut out = vadd(y, x);
        out.extend(vsub(y, x));
        out
    })
}

/// `so(n, ℂ)` as a real algebra of dimension `n(n−1)`.
pub fn so_complex_gaussian(n: usize) -> MatrixAlgebra<C> {
    so_pq_matrices(n, 0)
}

pub fn so_complex(n: usize) -> Result<LieAlgebra<Q>> {
    if !(2..=6).contains(&n) {
        return Err(Error::OffLocus(format!("so({n},C) needs 2 <= n <= 6")));
    }
    Ok(so_complex_gaussian(n)
        .algebra(format!("so({n},C)"))?
        .realify()
        .renamed(format!("so({n},C)")))
}

/// Split `g2` as 7×7 matrices in `(x, y, S, w)` coordinates.
pub fn g2_split_matrix<F: Scalar>(v: &[F]) -> Matrix<F> {
    let l = a33_layout();
    let b = l.split(v);
    let (x, y, s, w) = (b[0], b[1], b[2], b[3]);
    let sm = s_matrix(s);
    let wm = star_inv(w);
    let mut m = Matrix::zeros(7, 7);
    let two = F::from_int(-2);
    for a in 0..3 {
        m[(0, 1 + a)] = two.times(&y[a]);
        m[(0, 4 + a)] = two.times(&x[a]);
        m[(1 + a, 0)] = x[a].clone();
        m[(4 + a, 0)] = y[a].clone();
    }
    m.set_block(1, 1, &sm.add(&wm));
    m.set_block(1, 4, &star_inv(y));
    m.set_block(4, 1, &star_inv(x));
    m.set_block(4, 4, &sm.neg().add(&wm));
    m
}

pub fn g2_split_matrices() -> MatrixAlgebra<Q> {
    let l = a33_layout();
    let basis = (0..14).map(|i| g2_split_matrix(&unit::<Q>(14, i))).collect();
    MatrixAlgebra::new(l.labels(), basis).expect("14 independent matrices")
}

/// Commutators solved back to `(x, y, S, w)`; fails if any leaves the span.
pub fn g2_split() -> Result<LieAlgebra<Q>> {
    g2_split_matrices().algebra("g2_split")
}

/// Real coordinates `(S, w, x, y)` of `(iS + ⋆⁻¹w, y + ix) ∈ su(3) ⊕ ℂ³`.
pub fn g2_compact_layout() -> Layout {
    Layout::new(&[("S", 5), ("w", 3), ("x", 3), ("y", 3)])
}

fn lift(v: &[Q]) -> Vec<C> {
    v.iter().map(|r| C::real(r.clone())).collect()
}

fn su3_matrix(s: &[Q], w: &[Q]) -> Matrix<C> {
    let i = C::i();
    s_matrix(&lift(s)).scale(&i).add(&star_inv(&lift(w)))
}

/// `(S, w)` of an anti-Hermitian traceless matrix `iS + ⋆⁻¹w`.
fn su3_coords(m: &Matrix<C>) -> (Vec<Q>, Vec<Q>) {
    let re = m.map(|z| z.re.clone());
    let im = m.map(|z| z.im.clone());
    debug_assert!(re.add(&re.transpose()).is_zero(), "real part must be antisymmetric");
    debug_assert!(
        im.is_symmetric() && im.trace().is_zero(),
        "imaginary part must be traceless symmetric"
    );
    (s_coords(&im), star(&re))
}

fn conj(u: &[C]) -> Vec<C> {
    u.iter().map(C::conj).collect()
}

fn column_outer(a: &[C], b: &[C]) -> Matrix<C> {
    Matrix::from_rows(a.iter().map(|p| b.iter().map(|q| p.times(q)).collect()).collect())
}

/// Compact `g2` bracket in the unsimplified form
/// `[u1, u2] = (3 u2 ū1ᵗ − 3 u1 ū2ᵗ + 2i(⟨x1,y2⟩ − ⟨y1,x2⟩) I, 2 ū1 × ū2)`.
pub fn g2_compact_bracket(a: &[Q], b: &[Q]) -> Vec<Q> {
    let l = g2_compact_layout();
    let (p, q) = (l.split(a), l.split(b));
    let m1 = su3_matrix(p[0], p[1]);
    let m2 = su3_matrix(q[0], q[1]);
    let (x1, y1, x2, y2) = (p[2], p[3], q[2], q[3]);
    let u = |x: &[Q], y: &[Q]| -> Vec<C> { x.iter().zip(y).map(|(xi, yi)| C::new(yi.clone(), xi.clone())).collect() };
    let (u1, u2) = (u(x1, y1), u(x2, y2));
    let three = C::from_int(3);
    let trace_term = C::new(Q::zero(), Q::from(2) * (dot(x1, y2) - dot(y1, x2)));
    let su = m1
        .commutator(&m2)
        .add(&column_outer(&u2, &conj(&u1)).scale(&three))
        .sub(&column_outer(&u1, &conj(&u2)).scale(&three))
        .add(&Matrix::identity(3).scale(&trace_term));
    let two = C::from_int(2);
    let c3 = vadd(
        &vsub(&m1.mul_vec(&u2), &m2.mul_vec(&u1)),
        &cross(&conj(&u1), &conj(&u2))
            .iter()
            .map(|z| two.times(z))
            .collect::<Vec<_>>(),
    );
    let (s, w) = su3_coords(&su);
    let x: Vec<Q> = c3.iter().map(|z| z.im.clone()).collect();
    let y: Vec<Q> = c3.iter().map(|z| z.re.clone()).collect();
    l.join(&[s, w, x, y])
}

pub fn g2_compact() -> LieAlgebra<Q> {
    LieAlgebra::from_bilinear("g2_compact", g2_compact_layout().labels(), g2_compact_bracket)
        .expect("antisymmetric by construction")
}

/// `su(3)` in coordinates `(S, w)` of `iS + ⋆⁻¹w`.
pub fn su3() -> LieAlgebra<Q> {
    let l = Layout::new(&[("S", 5), ("w", 3)]);
    LieAlgebra::from_bilinear("su(3)", l.labels(), |a, b| {
        let m = su3_matrix(&a[..5], &a[5..]).commutator(&su3_matrix(&b[..5], &b[5..]));
        let (s, w) = su3_coords(&m);
        [s, w].concat()
    })
    .expect("antisymmetric by construction")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum G2Form {
    Split,
    Compact,
}

impl std::str::FromStr for G2Form {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "split" => Ok(G2Form::Split),
            "compact" => Ok(G2Form::Compact),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// A left-invariant horizontal span in a `g2` model, with `k = 0`.
pub struct G2Horizontal {
    pub form: G2Form,
    pub algebra: LieAlgebra<Q>,
    pub p: Subspace<Q>,
    pub growth: Vec<usize>,
}

/// Split: `A_x = [[0, 0, −2xᵗ], [x, 0, 0], [0, ⋆⁻¹x, 0]]`, solved back to
/// coordinates. Compact: `A_x = (0, x + ix)`.
pub fn g2_horizontal(form: G2Form) -> Result<G2Horizontal> {
    let (algebra, vectors) = match form {
        G2Form::Split => {
            let mats = g2_split_matrices();
            let vs = (0..3)
                .map(|a| {
                    let x = unit::<Q>(3, a);
                    let mut m = Matrix::zeros(7, 7);
                    for b in 0..3 {
                        m[(0, 4 + b)] = Q::from(-2) * &x[b];
                        m[(1 + b, 0)] = x[b].clone();
                    }
                    m.set_block(4, 1, &star_inv(&x));
                    mats.coords(&m)
                })
                .collect::<Result<Vec<_>>>()?;
            (g2_split()?, vs)
        }
        G2Form::Compact => {
            let l = g2_compact_layout();
            let vs = (0..3)
                .map(|a| {
                    let x = unit::<Q>(3, a);
                    vadd(&l.embed("x", &x), &l.embed("y", &x))
                })
                .collect();
            (g2_compact(), vs)
        }
    };
    let p = Subspace::span(algebra.dim(), &vectors)?;
    let growth = algebra.growth_vector(&p, &Subspace::zero(algebra.dim()))?;
    Ok(G2Horizontal {
        form,
        algebra,
        p,
        growth,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthogonal_signatures() {
        assert_eq!(so_pq(3, 0).unwrap().killing_signature().unwrap(), (0, 3, 0));
        assert_eq!(so_pq(4, 0).unwrap().killing_signature().unwrap(), (0, 6, 0));
        assert_eq!(so_pq(3, 1).unwrap().killing_signature().unwrap(), (3, 3, 0));
        assert_eq!(so_pq(2, 2).unwrap().killing_signature().unwrap(), (4, 2, 0));
        assert!(so_pq(4, 3).is_err());
    }

    #[test]
    fn b_family_real_forms() {
        assert_eq!(b_algebra(&Q::one()).killing_signature().unwrap(), (0, 6, 0));
        assert_eq!(b_algebra(&Q::from(-1)).killing_signature().unwrap(), (3, 3, 0));
        assert!(b_algebra(&Q::from(4)).is_lie());
        assert!(b1_split().unwrap().check().unwrap().is_isomorphism());
    }

    #[test]
    fn complex_orthogonal_realified() {
        let g = so_complex(4).unwrap();
        assert_eq!(g.dim(), 12);
        assert!(g.is_lie());
        // so(3,C) as a real algebra is so(3,1)
        assert_eq!(so_complex(3).unwrap().killing_signature().unwrap(), (3, 3, 0));
    }

    #[test]
    fn g2_forms() {
        let s = g2_split().unwrap();
        let c = g2_compact();
        assert_eq!((s.dim(), c.dim()), (14, 14));
        assert!(s.is_lie() && c.is_lie());
        assert_eq!(s.killing_signature().unwrap(), (8, 6, 0));
        assert_eq!(c.killing_signature().unwrap(), (0, 14, 0));
    }

    #[test]
    fn split_bracket_matches_coordinate_formula() {
        // the coordinate bracket displayed alongside the matrix model
        let g = g2_split().unwrap();
        let l = a33_layout();
        let v1: Vec<Q> = (0..14).map(|i| Q::new(i as i64 % 5 - 2, 1 + i as i64 % 3)).collect();
        let v2: Vec<Q> = (0..14).map(|i| Q::new(3 - i as i64 % 4, 2)).collect();
        let (p, q) = (l.split(&v1), l.split(&v2));
        let (x1, y1, s1, w1) = (p[0], p[1], p[2], p[3]);
        let (x2, y2, s2, w2) = (q[0], q[1], q[2], q[3]);
        use crate::coords::{odot, rot_s, s_apply, star_comm, vscale, vsum};
        let two = Q::from(2);
        let x = vsum(
            3,
            &[
                vscale(&two, &cross(y1, y2)),
                s_apply(s1, x2),
                vscale(&-Q::one(), &s_apply(s2, x1)),
                cross(w1, x2),
                cross(x1, w2),
            ],
        );
        let y = vsum(
            3,
            &[
                vscale(&two, &cross(x1, x2)),
                s_apply(s2, y1),
                vscale(&-Q::one(), &s_apply(s1, y2)),
                cross(w1, y2),
                cross(y1, w2),
            ],
        );
        let s = vsum(
            5,
            &[
                vscale(&Q::from(3), &odot(x2, y1)),
                vscale(&Q::from(-3), &odot(x1, y2)),
                rot_s(w1, s2),
                vscale(&-Q::one(), &rot_s(w2, s1)),
            ],
        );
        let w = vsum(
            3,
            &[
                vscale(&Q::new(3, 2), &vadd(&cross(x1, y2), &cross(y1, x2))),
                star_comm(s1, s2),
                cross(w1, w2),
            ],
        );
        assert_eq!(g.br(&v1, &v2), l.join(&[x, y, s, w]));
    }

    #[test]
    fn su3_is_compact() {
        assert_eq!(su3().killing_signature().unwrap(), (0, 8, 0));
    }

    #[test]
    fn g2_horizontal_spans() {
        for form in [G2Form::Split, G2Form::Compact] {
            let h = g2_horizontal(form).unwrap();
            assert_eq!(h.p.dim(), 3);
            assert_eq!(*h.growth.last().unwrap(), 14, "{form:?} {:?}", h.growth);
        }
    }
}
