//! Isometry algebras of the three parametric families, in block coordinates.
//!
//! * `c33(a1, a2)` on `x ⊕ y ⊕ z ⊕ w`, dim 12.
//! * `a33(κ)` on `x ⊕ y ⊕ S ⊕ w`, dim 14.
//! * `f33` on `x ⊕ y ⊕ S ⊕ z ⊕ w`, dim 17.
//!
//! In every case `p` is the `x`-block and the isotropy is the `w`-block,
//! which acts by rotations. The A33 and F33 brackets take their free
//! coefficients as arguments so the same code serves the solved algebras
//! and the polynomial ansatz.

use rayon::prelude::*;

use crate::coords::{cross, odot, rot_s, s_apply, star_comm, vadd, vscale, vsub, vsum, Layout};
use crate::error::Result;
use crate::lie::LieAlgebra;
use crate::model::ModelAlgebra;
use crate::scalar::{Rational, Scalar};
use crate::subspace::Subspace;

type Q = Rational;

pub fn c33_layout() -> Layout {
    Layout::new(&[("x", 3), ("y", 3), ("z", 3), ("w", 3)])
}

pub fn a33_layout() -> Layout {
    Layout::new(&[("x", 3), ("y", 3), ("S", 5), ("w", 3)])
}

pub fn f33_iso_layout() -> Layout {
    Layout::new(&[("x", 3), ("y", 3), ("S", 5), ("z", 3), ("w", 3)])
}

/// `x1×y2 + y1×x2`, the symmetrized cross product.
fn cross_sym<F: Scalar>(x1: &[F], y2: &[F], y1: &[F], x2: &[F]) -> Vec<F> {
    vadd(&cross(x1, y2), &cross(y1, x2))
}

/// `S2·a1 − S1·a2`.
fn s_act<F: Scalar>(s2: &[F], a1: &[F], s1: &[F], a2: &[F]) -> Vec<F> {
    vsub(&s_apply(s2, a1), &s_apply(s1, a2))
}

/// `[⋆⁻¹a1, S2] + [S1, ⋆⁻¹a2]`.
fn rot_pair<F: Scalar>(a1: &[F], s2: &[F], a2: &[F], s1: &[F]) -> Vec<F> {
    vsub(&rot_s(a1, s2), &rot_s(a2, s1))
}

pub fn c33_bracket<F: Scalar>(a1: &F, a2: &F, u: &[F], v: &[F]) -> Vec<F> {
    let l = c33_layout();
    let (p, q) = (l.split(u), l.split(v));
    let (x1, y1, z1, w1) = (p[0], p[1], p[2], p[3]);
    let (x2, y2, z2, w2) = (q[0], q[1], q[2], q[3]);
    let zz = cross(z1, z2);
    let x = vsum(3, &[cross_sym(w1, x2, x1, w2), vscale(a2, &cross_sym(y1, z2, z1, y2))]);
    let inner = vsum(3, &[cross_sym(x1, z2, z1, x2), cross(y1, y2), vscale(a1, &zz)]);
    let y = vsum(
        3,
        &[
            cross_sym(w1, y2, y1, w2),
            cross(x1, x2),
            vscale(a1, &inner),
            vscale(a2, &zz),
        ],
    );
    let z = vsum(
        3,
        &[
            cross_sym(w1, z2, z1, w2),
            cross_sym(y1, x2, x1, y2),
            vscale(a1, &cross_sym(y1, z2, z1, y2)),
        ],
    );
    let w = vadd(&cross(w1, w2), &vscale(a2, &inner));
    l.join(&[x, y, z, w])
}

/// Solved A33 coefficients `c1..c9` at `κ`.
pub fn a33_coefficients<F: Scalar>(kappa: &F) -> [F; 9] {
    let k = |n: i64, e: u32| (0..e).fold(F::from_int(n), |acc, _| acc.times(kappa));
    [
        k(2, 1),
        k(15, 2),
        F::zero(),
        k(-144, 3),
        k(7, 1),
        k(24, 2),
        k(3, 1),
        k(-6, 1),
        k(18, 2),
    ]
}

/// Equivariant A33 bracket with free coefficients `c = [c1, …, c9]`.
pub fn a33_bracket<F: Scalar>(c: &[F], u: &[F], v: &[F]) -> Vec<F> {
    let l = a33_layout();
    let (p, q) = (l.split(u), l.split(v));
    let (x1, y1, s1, w1) = (p[0], p[1], p[2], p[3]);
    let (x2, y2, s2, w2) = (q[0], q[1], q[2], q[3]);
    let yy = cross(y1, y2);
    let ss = star_comm(s1, s2);
    let sx = s_act(s2, x1, s1, x2);
    let x = vsum(
        3,
        &[
            vscale(&c[4], &cross_sym(x1, y2, y1, x2)),
            vscale(&c[5], &s_act(s2, y1, s1, y2)),
            cross_sym(x1, w2, w1, x2),
        ],
    );
    let y = vsum(
        3,
        &[
            cross(x1, x2),
            vscale(&c[0], &yy),
            vscale(&c[2], &ss),
            vscale(&c[7], &sx),
            cross_sym(y1, w2, w1, y2),
        ],
    );
    let s = vsum(
        5,
        &[
            vsub(&odot(x1, y2), &odot(y1, x2)),
            vscale(&c[6], &rot_pair(y1, s2, y2, s1)),
            rot_pair(w1, s2, w2, s1),
        ],
    );
    let w = vsum(
        3,
        &[
            vscale(&c[1], &yy),
            vscale(&c[3], &ss),
            vscale(&c[8], &sx),
            cross(w1, w2),
        ],
    );
    l.join(&[x, y, s, w])
}

/// Unknown names of the F33 ansatz in coefficient order.
pub const F33_UNKNOWNS: [&str; 18] = [
    "a1", "a2", "b1", "b2", "b3", "b4", "b5", "b6", "c1", "c2", "d1", "d2", "f1", "f2", "f3", "f4", "f5", "f6",
];

/// Equivariant F33 bracket; `k` holds the coefficients in [`F33_UNKNOWNS`] order.
pub fn f33_iso_bracket<F: Scalar>(k: &[F], u: &[F], v: &[F]) -> Vec<F> {
    let [a1, a2, b1, b2, b3, b4, b5, b6, c1, c2, d1, d2, f1, f2, f3, f4, f5, f6] = k else {
        panic!("F33 bracket needs 18 coefficients")
    };
    let l = f33_iso_layout();
    let (p, q) = (l.split(u), l.split(v));
    let (x1, y1, s1, z1, w1) = (p[0], p[1], p[2], p[3], p[4]);
    let (x2, y2, s2, z2, w2) = (q[0], q[1], q[2], q[3], q[4]);
    let yy = cross(y1, y2);
    let ss = star_comm(s1, s2);
    let zz = cross(z1, z2);
    let sz = s_act(s1, z2, s2, z1);
    let sx = s_act(s2, x1, s1, x2);
    let xz = vsub(&cross(x1, z2), &cross(x2, z1));
    let yz = cross_sym(y1, z2, z1, y2);
    let x = vsum(
        3,
        &[
            vscale(a1, &s_act(s2, y1, s1, y2)),
            vscale(a2, &yz),
            cross_sym(x1, w2, w1, x2),
        ],
    );
    let y = vsum(
        3,
        &[
            cross(x1, x2),
            vscale(b1, &yy),
            vscale(b2, &ss),
            vscale(b3, &zz),
            vscale(b4, &sz),
            vscale(b5, &sx),
            vscale(b6, &xz),
            cross_sym(y1, w2, w1, y2),
        ],
    );
    let s = vsum(
        5,
        &[
            vsub(&odot(x1, y2), &odot(y1, x2)),
            vscale(c1, &rot_pair(y1, s2, y2, s1)),
            vscale(c2, &vsub(&odot(y1, z2), &odot(z1, y2))),
            rot_pair(w1, s2, w2, s1),
        ],
    );
    let z = vsum(
        3,
        &[
            cross_sym(x1, y2, y1, x2),
            vscale(d1, &s_act(s2, y1, s1, y2)),
            vscale(d2, &yz),
            cross_sym(z1, w2, w1, z2),
        ],
    );
    let w = vsum(
        3,
        &[
            vscale(f1, &yy),
            vscale(f2, &ss),
            vscale(f3, &zz),
            cross(w1, w2),
            vscale(f4, &sz),
            vscale(f5, &sx),
            vscale(f6, &xz),
        ],
    );
    l.join(&[x, y, s, z, w])
}

fn model(g: LieAlgebra<Q>, layout: &Layout, family: &str) -> Result<ModelAlgebra<Q>> {
    let n = g.dim();
    let p = Subspace::coordinate(n, layout.indices("x"));
    let k = Subspace::coordinate(n, layout.indices("w"));
    ModelAlgebra::new(g, p, k, family)
}

pub fn c33_algebra(a1: &Q, a2: &Q) -> LieAlgebra<Q> {
    LieAlgebra::from_bilinear("c33_iso", c33_layout().labels(), |u, v| c33_bracket(a1, a2, u, v))
        .expect("antisymmetric by construction")
        .with_param("a1", a1.clone())
        .with_param("a2", a2.clone())
}

pub fn c33_iso(a1: &Q, a2: &Q) -> Result<ModelAlgebra<Q>> {
    model(c33_algebra(a1, a2), &c33_layout(), "c33")
}

pub fn a33_algebra(kappa: &Q) -> LieAlgebra<Q> {
    let c = a33_coefficients(kappa);
    LieAlgebra::from_bilinear("a33_iso", a33_layout().labels(), |u, v| a33_bracket(&c, u, v))
        .expect("antisymmetric by construction")
        .with_param("kappa", kappa.clone())
}

pub fn a33_iso(kappa: &Q) -> Result<ModelAlgebra<Q>> {
    model(a33_algebra(kappa), &a33_layout(), "a33")
}

/// `f[3,3] ⋊ so(3)`: the F33 bracket with every free coefficient zero.
pub fn f33_iso_algebra() -> LieAlgebra<Q> {
    let k = vec![Q::zero(); 18];
    LieAlgebra::from_bilinear("f33_iso", f33_iso_layout().labels(), |u, v| f33_iso_bracket(&k, u, v))
        .expect("antisymmetric by construction")
}

pub fn f33_iso() -> Result<ModelAlgebra<Q>> {
    model(f33_iso_algebra(), &f33_iso_layout(), "f33")
}

/// Jacobi verdict of `c33(a1, a2)` at every grid point, in input order.
pub fn c33_jacobi_grid(a1s: &[Q], a2s: &[Q]) -> Vec<((Q, Q), bool)> {
    let pts: Vec<(Q, Q)> = a1s
        .iter()
        .flat_map(|a| a2s.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    pts.into_par_iter()
        .map(|(a, b)| {
            let ok = c33_algebra(&a, &b).is_lie();
            ((a, b), ok)
        })
        .collect()
}

/// Jacobi verdict of `a33(κ)` at each sample.
pub fn a33_jacobi_samples(kappas: &[Q]) -> Vec<(Q, bool)> {
    kappas
        .par_iter()
        .map(|k| (k.clone(), a33_algebra(k).is_lie()))
        .collect()
}

/// Sample points exceeding the degree bounds: 5 values per C33 parameter
/// (bidegree ≤ 4), 7 values of κ (degree ≤ 6).
pub fn c33_grid_values() -> Vec<Q> {
    [-4, 0, 3, 4, 5].map(Q::from).to_vec()
}

pub fn a33_kappa_samples() -> Vec<Q> {
    [0, 1, -1, 2, -2, 3, 4].map(Q::from).to_vec()
}

/// Action of the isotropy element `w` on every block of `v`.
pub fn rotate_blocks(w: &[Q], v: &[Q], layout: &Layout) -> Vec<Q> {
    let parts = layout.split(v);
    let out: Vec<Vec<Q>> = layout
        .block_names()
        .iter()
        .zip(parts)
        .map(|(_, b)| if b.len() == 5 { rot_s(w, b) } else { cross(w, b) })
        .collect();
    layout.join(&out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free::{a33_carnot, c33_carnot, f33_model};
    use crate::matrix::unit;

    fn e(i: usize) -> Vec<Q> {
        unit(3, i)
    }

    #[test]
    fn c33_sample_bracket() {
        let l = c33_layout();
        let (a1, a2) = (Q::from(5), Q::from(-4));
        let u = l.embed("x", &e(0));
        let v = l.embed("z", &e(1));
        let expected = l.join(&[
            vec![Q::zero(); 3],
            vscale(&a1, &e(2)),
            vec![Q::zero(); 3],
            vscale(&a2, &e(2)),
        ]);
        assert_eq!(c33_bracket(&a1, &a2, &u, &v), expected);
    }

    #[test]
    fn c33_jacobi_on_grid() {
        let vals = c33_grid_values();
        assert!(c33_jacobi_grid(&vals, &vals).iter().all(|(_, ok)| *ok));
    }

    #[test]
    fn c33_mutation_breaks_jacobi() {
        let mut g = c33_algebra(&Q::from(5), &Q::from(-4));
        let mut v = g.bracket_basis(0, 3);
        v[11] = v[11].plus(&Q::one());
        g.set_bracket(0, 3, &v);
        assert!(!g.is_lie());
    }

    #[test]
    fn a33_jacobi_at_samples() {
        assert!(a33_jacobi_samples(&a33_kappa_samples()).iter().all(|(_, ok)| *ok));
    }

    #[test]
    fn a33_with_seven_in_s_row_fails() {
        let mut c = a33_coefficients(&Q::one());
        c[6] = Q::from(7);
        let g = LieAlgebra::from_bilinear("a33 bad", a33_layout().labels(), |u, v| a33_bracket(&c, u, v)).unwrap();
        assert!(!g.is_lie());
    }

    #[test]
    fn dimensions_and_growth() {
        let c = c33_iso(&Q::from(5), &Q::from(-4)).unwrap();
        let a = a33_iso(&Q::one()).unwrap();
        let f = f33_iso().unwrap();
        assert_eq!((c.dim(), a.dim(), f.dim()), (12, 14, 17));
        assert_eq!(c.growth_vector().unwrap(), vec![3, 6, 9]);
        assert_eq!(a.growth_vector().unwrap(), vec![3, 6, 11]);
        assert_eq!(f.growth_vector().unwrap(), vec![3, 6, 14]);
        for m in [&c, &a, &f] {
            m.validate().unwrap();
        }
    }

    #[test]
    fn nilpotentizations_match_carnot_quotients() {
        let c = c33_iso(&Q::from(3), &Q::from(4)).unwrap().associated_graded().unwrap();
        assert!(c.matches(&c33_carnot()));
        let a = a33_iso(&Q::from(-2)).unwrap().associated_graded().unwrap();
        assert!(a.matches(&a33_carnot()));
        let f = f33_iso().unwrap().associated_graded().unwrap();
        assert!(f.matches(&f33_model()));
        assert!(c.is_graded() && a.is_graded() && f.is_graded());
    }

    #[test]
    fn isotropy_rotates_every_block() {
        let g = f33_iso_algebra();
        let l = f33_iso_layout();
        let w = vec![Q::from(1), Q::from(-2), Q::new(1, 2)];
        let v: Vec<Q> = (0..17).map(|i| Q::new(i as i64 - 5, 3)).collect();
        assert_eq!(g.br(&l.embed("w", &w), &v), rotate_blocks(&w, &v, &l));
    }
}
