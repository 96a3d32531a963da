//! Explicit isomorphisms between the model families and classical algebras.
//!
//! [`build_isomorphism`] only returns maps that pass [`check_map`] as
//! isomorphisms.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::catalog::classical::{b1_split, b_algebra, g2_compact, g2_compact_layout, g2_split, so_pq_matrices};
use crate::catalog::families::{a33_algebra, a33_layout, c33_algebra, c33_layout};
use crate::catalog::tables::{bordered, disc_root, discriminant, zeta, Exceptional};
use crate::coords::{star_inv, vadd, vscale, vsub};
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, LinearMap};
use crate::matalg::MatrixAlgebra;
use crate::matrix::{unit, Matrix};
use crate::scalar::{Gaussian, Rational};

type Q = Rational;
type C = Gaussian;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoKind {
    /// `C33(a1, a2) → b_k ⊕ b_k̂` for a positive discriminant.
    LemmaBk,
    /// `C33(a1, a2) → so(3,1) ⊕ so(3,1)` for a negative discriminant.
    LemmaComplex,
    /// `C33(a1, a2) → so(4) ⋉ ℝ⁶` or `so(3,1) ⋉ ℝ⁶` on the boundary parabola.
    LemmaExceptional,
    A33ToG2Compact,
    A33ToG2Split,
    ScalingC33,
    ScalingA33,
    B1Split,
}

impl IsoKind {
    pub const ALL: [IsoKind; 8] = [
        IsoKind::LemmaBk,
        IsoKind::LemmaComplex,
        IsoKind::LemmaExceptional,
        IsoKind::A33ToG2Compact,
        IsoKind::A33ToG2Split,
        IsoKind::ScalingC33,
        IsoKind::ScalingA33,
        IsoKind::B1Split,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IsoKind::LemmaBk => "lemma_bk",
            IsoKind::LemmaComplex => "lemma_complex",
            IsoKind::LemmaExceptional => "lemma_exceptional",
            IsoKind::A33ToG2Compact => "a33_to_g2c",
            IsoKind::A33ToG2Split => "a33_to_g2s",
            IsoKind::ScalingC33 => "scaling_c33",
            IsoKind::ScalingA33 => "scaling_a33",
            IsoKind::B1Split => "b1_split",
        }
    }

    /// Parameter names read by [`build_isomorphism`].
    pub fn params(self) -> &'static [&'static str] {
        match self {
            IsoKind::LemmaBk | IsoKind::LemmaComplex | IsoKind::LemmaExceptional => &["a1", "a2"],
            IsoKind::A33ToG2Compact | IsoKind::A33ToG2Split => &["kappa"],
            IsoKind::ScalingC33 => &["a1", "a2", "lambda"],
            IsoKind::ScalingA33 => &["kappa", "lambda"],
            IsoKind::B1Split => &[],
        }
    }
}

impl fmt::Display for IsoKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IsoKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IsoKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

fn param<'a>(params: &'a BTreeMap<String, Q>, key: &str) -> Result<&'a Q> {
    params
        .get(key)
        .ok_or_else(|| Error::Invalid(format!("missing parameter {key}")))
}

/// Builds the map and certifies it; a failing check is an error naming the
/// first bad bracket pair.
pub fn build_isomorphism(kind: IsoKind, params: &BTreeMap<String, Q>) -> Result<LinearMap<Q>> {
    let p = |k| param(params, k);
    let map = match kind {
        IsoKind::LemmaBk => lemma_bk(p("a1")?, p("a2")?)?,
        IsoKind::LemmaComplex => lemma_complex(p("a1")?, p("a2")?)?,
        IsoKind::LemmaExceptional => lemma_exceptional(p("a1")?, p("a2")?)?,
        IsoKind::A33ToG2Compact => a33_to_g2c(p("kappa")?)?,
        IsoKind::A33ToG2Split => a33_to_g2s(p("kappa")?)?,
        IsoKind::ScalingC33 => scaling_c33(p("a1")?, p("a2")?, p("lambda")?)?,
        IsoKind::ScalingA33 => scaling_a33(p("kappa")?, p("lambda")?)?,
        IsoKind::B1Split => b1_split()?,
    };
    let check = map.check()?;
    if !check.is_isomorphism() {
        let detail = match check.counterexample {
            Some((i, j)) => format!(
                "bracket [{}, {}] not preserved",
                map.source.labels()[i],
                map.source.labels()[j]
            ),
            None => "map is not bijective".to_string(),
        };
        return Err(Error::NotAnIsomorphism(format!("{kind}: {detail}")));
    }
    Ok(map)
}

/// Like [`LinearMap::from_images`] for image rules that can fail.
fn try_images(
    source: LieAlgebra<Q>,
    target: LieAlgebra<Q>,
    image: impl Fn(&[Q]) -> Result<Vec<Q>>,
) -> Result<LinearMap<Q>> {
    let n = source.dim();
    let cols = (0..n).map(|i| image(&unit(n, i))).collect::<Result<Vec<_>>>()?;
    LinearMap::new(source, target.clone(), Matrix::from_columns(target.dim(), &cols))
}

/// `ψ(x,y,z,w) = (x + kz, w + ky) ⊕ (x + k̂z, w + k̂y)` with `k, k̂` the roots of
/// `t² − a1 t − a2`.
pub fn lemma_bk(a1: &Q, a2: &Q) -> Result<LinearMap<Q>> {
    if !discriminant(a1, a2).is_positive() {
        return Err(Error::OffLocus(format!(
            "lemma_bk needs a1^2+4a2 > 0, got {}",
            discriminant(a1, a2)
        )));
    }
    let r = disc_root(a1, a2)?;
    let two = Q::from(2);
    let k = (a1 + &r) / &two;
    let kh = (a1 - &r) / &two;
    let target = b_algebra(&k)
        .direct_sum(&b_algebra(&kh))
        .renamed(format!("b({k}) + b({kh})"));
    let l = c33_layout();
    LinearMap::from_images(c33_algebra(a1, a2), target, |v| {
        let b = l.split(v);
        let (x, y, z, w) = (b[0], b[1], b[2], b[3]);
        [
            vadd(x, &vscale(&k, z)),
            vadd(w, &vscale(&k, y)),
            vadd(x, &vscale(&kh, z)),
            vadd(w, &vscale(&kh, y)),
        ]
        .concat()
    })
}

/// `u1 = w + ζx + ζ²y + ζ³z`, `u2 = w − ζx + ζ²y − ζ³z`, each sent to
/// `[[⋆⁻¹Re u, Im u], [Im uᵗ, 0]] ∈ so(3,1)`.
pub fn lemma_complex(a1: &Q, a2: &Q) -> Result<LinearMap<Q>> {
    let zt = zeta(a1, a2)?;
    let so31 = so_pq_matrices::<Q>(3, 1);
    let sum = so31.block_sum(&so31)?;
    let target = sum.algebra("so(3,1) + so(3,1)")?;
    let l = c33_layout();
    let (z1, z2, z3) = (zt.clone(), zt.pow(2), zt.pow(3));
    let cplx = |v: &[Q]| -> Vec<C> { v.iter().map(|c| C::real(c.clone())).collect() };
    let block = |u: &[C]| {
        let re: Vec<Q> = u.iter().map(|c| c.re.clone()).collect();
        let im: Vec<Q> = u.iter().map(|c| c.im.clone()).collect();
        bordered(&star_inv(&re), &im, &Q::one(), &Q::one())
    };
    try_images(c33_algebra(a1, a2), target, |v| {
        let b = l.split(v);
        let (x, y, z, w) = (cplx(b[0]), cplx(b[1]), cplx(b[2]), cplx(b[3]));
        let even = vadd(&w, &vscale(&z2, &y));
        let odd = vadd(&vscale(&z1, &x), &vscale(&z3, &z));
        let m = MatrixAlgebra::pair(&block(&vadd(&even, &odd)), &block(&vsub(&even, &odd)));
        sum.coords(&m)
    })
}

/// On `a1² + 4a2 = 0`, `a1 ≠ 0`, with `κ = √(|a1|/2)` and `s = sgn(a1)`:
/// `φ = [[⋆⁻¹(w + sκ²y), b], [−s bᵗ, 0]] ⋉ ((3/2)κ³z + (sκ/2)x, κ²y)`,
/// `b = −sκx − κ³z`, the module's second slot read as `⋆⁻¹`.
pub fn lemma_exceptional(a1: &Q, a2: &Q) -> Result<LinearMap<Q>> {
    if !discriminant(a1, a2).is_zero() || a1.is_zero() {
        return Err(Error::OffLocus(format!(
            "lemma_exceptional needs a1^2+4a2 = 0, a1 != 0; got ({a1}, {a2})"
        )));
    }
    let kappa = (a1.abs() / Q::from(2)).sqrt().ok_or_else(|| Error::IrrationalRadical {
        radical: format!("kappa = sqrt(|a1|/2) = sqrt({})", a1.abs() / Q::from(2)),
    })?;
    let s = Q::from(a1.signum() as i64);
    let ex = Exceptional::new(3, a1.signum())?;
    let k2 = &kappa * &kappa;
    let k3 = &k2 * &kappa;
    let l = c33_layout();
    try_images(c33_algebra(a1, a2), ex.algebra.clone(), |v| {
        let b = l.split(v);
        let (x, y, z, w) = (b[0], b[1], b[2], b[3]);
        let boost = vsub(&vscale(&-(&s * &kappa), x), &vscale(&k3, z));
        let rot = star_inv(&vadd(w, &vscale(&(&s * &k2), y)));
        let g = bordered(&rot, &boost, &Q::one(), &-s.clone());
        let mz = vadd(
            &vscale(&(Q::new(3, 2) * &k3), z),
            &vscale(&(&s * &kappa / Q::from(2)), x),
        );
        let my = star_inv(&vscale(&k2, y));
        ex.element(&g, &mz, &my)
    })
}

fn square_root_of(value: &Q, what: &str) -> Result<Q> {
    value.sqrt().ok_or_else(|| Error::IrrationalRadical {
        radical: format!("{what} = sqrt({value})"),
    })
}

/// `κ = a² > 0`: `(x,y,S,w) ↦ (12a³iS + ⋆⁻¹(w + 3a²y), −2a²y + iax)`.
pub fn a33_to_g2c(kappa: &Q) -> Result<LinearMap<Q>> {
    if !kappa.is_positive() {
        return Err(Error::OffLocus(format!("a33_to_g2c needs kappa > 0, got {kappa}")));
    }
    let a = square_root_of(kappa, "a")?;
    let a2 = &a * &a;
    let a3 = &a2 * &a;
    let src = a33_layout();
    let dst = g2_compact_layout();
    LinearMap::from_images(a33_algebra(kappa), g2_compact(), |v| {
        let b = src.split(v);
        let (x, y, s, w) = (b[0], b[1], b[2], b[3]);
        dst.join(&[
            vscale(&(Q::from(12) * &a3), s),
            vadd(w, &vscale(&(Q::from(3) * &a2), y)),
            vscale(&a, x),
            vscale(&(Q::from(-2) * &a2), y),
        ])
    })
}

/// `κ = −a² < 0`: `(x,y,S,w) ↦ (ax + 2a²y, −ax + 2a²y, −12a³S, w − 3a²y)`.
pub fn a33_to_g2s(kappa: &Q) -> Result<LinearMap<Q>> {
    if !kappa.is_negative() {
        return Err(Error::OffLocus(format!("a33_to_g2s needs kappa < 0, got {kappa}")));
    }
    let a = square_root_of(&-kappa.clone(), "a")?;
    let a2 = &a * &a;
    let a3 = &a2 * &a;
    let l = a33_layout();
    LinearMap::from_images(a33_algebra(kappa), g2_split()?, |v| {
        let b = l.split(v);
        let (x, y, s, w) = (b[0], b[1], b[2], b[3]);
        let ax = vscale(&a, x);
        let yy = vscale(&(Q::from(2) * &a2), y);
        l.join(&[
            vadd(&ax, &yy),
            vsub(&yy, &ax),
            vscale(&(Q::from(-12) * &a3), s),
            vsub(w, &vscale(&(Q::from(3) * &a2), y)),
        ])
    })
}

fn dilation(blocks: &[&[Q]], lambda: &Q) -> Vec<Q> {
    let n = blocks.len();
    blocks
        .iter()
        .enumerate()
        .flat_map(|(i, b)| {
            let e = if i + 1 == n { 0 } else { i as i32 + 1 };
            vscale(&lambda.pow(e), b)
        })
        .collect()
}

fn nonzero(lambda: &Q) -> Result<()> {
    if lambda.is_zero() {
        return Err(Error::OffLocus("lambda must be non-zero".into()));
    }
    Ok(())
}

/// `(x,y,z,w) ↦ (λx, λ²y, λ³z, w)`: `C33(a1, a2) → C33(a1/λ², a2/λ⁴)`.
pub fn scaling_c33(a1: &Q, a2: &Q, lambda: &Q) -> Result<LinearMap<Q>> {
    nonzero(lambda)?;
    let target = c33_algebra(&(a1 / &lambda.pow(2)), &(a2 / &lambda.pow(4)));
    let l = c33_layout();
    LinearMap::from_images(c33_algebra(a1, a2), target, |v| dilation(&l.split(v), lambda))
}

/// `(x,y,S,w) ↦ (λx, λ²y, λ³S, w)`: `A33(κ) → A33(κ/λ²)`.
pub fn scaling_a33(kappa: &Q, lambda: &Q) -> Result<LinearMap<Q>> {
    nonzero(lambda)?;
    let target = a33_algebra(&(kappa / &lambda.pow(2)));
    let l = a33_layout();
    LinearMap::from_images(a33_algebra(kappa), target, |v| dilation(&l.split(v), lambda))
}

/// Three on-locus parameter sets per kind.
pub fn sample_instances(kind: IsoKind) -> Vec<BTreeMap<String, Q>> {
    let mk = |pairs: &[(&str, Q)]| pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
    let i = |n: i64| Q::from(n);
    match kind {
        IsoKind::LemmaBk => [(5, -4), (3, 4), (1, 2)]
            .iter()
            .map(|&(a, b)| mk(&[("a1", i(a)), ("a2", i(b))]))
            .collect(),
        IsoKind::LemmaComplex => [(0, -4), (6, -25), (-6, -25)]
            .iter()
            .map(|&(a, b)| mk(&[("a1", i(a)), ("a2", i(b))]))
            .collect(),
        IsoKind::LemmaExceptional => [(2, -1), (-2, -1), (8, -16)]
            .iter()
            .map(|&(a, b)| mk(&[("a1", i(a)), ("a2", i(b))]))
            .collect(),
        IsoKind::A33ToG2Compact => [i(1), i(4), Q::new(1, 4)]
            .into_iter()
            .map(|k| mk(&[("kappa", k)]))
            .collect(),
        IsoKind::A33ToG2Split => [i(-1), i(-4), i(-9)].into_iter().map(|k| mk(&[("kappa", k)])).collect(),
        IsoKind::ScalingC33 => [(5, -4, i(2)), (3, 4, Q::new(1, 3)), (0, -1, i(-1))]
            .into_iter()
            .map(|(a, b, l)| mk(&[("a1", i(a)), ("a2", i(b)), ("lambda", l)]))
            .collect(),
        IsoKind::ScalingA33 => [(i(1), i(2)), (i(-1), Q::new(1, 3)), (i(3), i(-2))]
            .into_iter()
            .map(|(k, l)| mk(&[("kappa", k), ("lambda", l)]))
            .collect(),
        IsoKind::B1Split => vec![BTreeMap::new(); 3],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab(a1: i64, a2: i64) -> BTreeMap<String, Q> {
        BTreeMap::from([("a1".to_string(), Q::from(a1)), ("a2".to_string(), Q::from(a2))])
    }

    #[test]
    fn bk_at_the_sample_point() {
        let m = build_isomorphism(IsoKind::LemmaBk, &ab(5, -4)).unwrap();
        assert_eq!(m.target.name(), "b(4) + b(1)");
        let m = build_isomorphism(IsoKind::LemmaBk, &ab(3, 4)).unwrap();
        assert_eq!(m.target.name(), "b(4) + b(-1)");
    }

    #[test]
    fn every_kind_at_three_instances() {
        for kind in IsoKind::ALL {
            for p in sample_instances(kind) {
                let m = build_isomorphism(kind, &p).unwrap_or_else(|e| panic!("{kind} {p:?}: {e}"));
                assert_eq!(
                    m.source.killing_signature().unwrap(),
                    m.target.killing_signature().unwrap(),
                    "{kind} {p:?}"
                );
            }
        }
    }

    #[test]
    fn off_locus_parameters() {
        assert!(matches!(lemma_bk(&Q::zero(), &Q::from(-4)), Err(Error::OffLocus(_))));
        assert!(matches!(
            lemma_complex(&Q::from(5), &Q::from(-4)),
            Err(Error::OffLocus(_))
        ));
        assert!(matches!(a33_to_g2c(&Q::from(2)), Err(Error::IrrationalRadical { .. })));
        assert!(matches!(a33_to_g2s(&Q::from(1)), Err(Error::OffLocus(_))));
        assert!(matches!(
            scaling_c33(&Q::one(), &Q::one(), &Q::zero()),
            Err(Error::OffLocus(_))
        ));
    }

    #[test]
    fn a_wrong_sign_breaks_the_map() {
        // κ = 1 into the split form must fail: signatures differ
        let src = a33_algebra(&Q::one());
        assert_ne!(
            src.killing_signature().unwrap(),
            g2_split().unwrap().killing_signature().unwrap()
        );
    }
}
