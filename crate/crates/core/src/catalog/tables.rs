//! Homogeneous realizations of `C33(a1, a2)` and of its rank-`n` analogue.
//!
//! Every row builds the listed algebra, the horizontal family (`A_x` or
//! `B_x`) as images of the standard basis of `ℝⁿ`, and the isotropy family
//! (`C_w` / `C_A`, empty for group structures). Parameters must put the
//! radicals on the rational (or Gaussian-rational) locus.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::catalog::classical::{so3_rotations, so_complex_gaussian, so_pq_matrices};
use crate::coords::{star_inv, vscale};
use crate::error::{Error, Result};
use crate::free::{so_basis, so_coords};
use crate::lie::LieAlgebra;
use crate::matalg::MatrixAlgebra;
use crate::matrix::{unit, Matrix};
use crate::model::ModelAlgebra;
use crate::scalar::{cmp_rational, Gaussian, Rational, Scalar};
use crate::subspace::Subspace;

type Q = Rational;
type C = Gaussian;

/// Which region of the `(a1, a2)` plane a row covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Case {
    /// `a2 > 0`.
    Positive,
    /// `a2 = 0`, `a1 < 0`.
    FlatNegative,
    /// `a2 = 0`, `a1 > 0`.
    FlatPositive,
    /// `a2 < 0`, `a1 > 2√|a2|`.
    Compact,
    /// `a2 < 0`, `a1 < −2√|a2|`.
    Split,
    /// `a2 < 0`, `|a1| < 2√|a2|`.
    Complex,
    /// `a2 < 0`, `a1 = 2√|a2|`.
    ExceptionalPositive,
    /// `a2 < 0`, `a1 = −2√|a2|`.
    ExceptionalNegative,
}

impl Case {
    pub const ALL: [Case; 8] = [
        Case::Positive,
        Case::FlatNegative,
        Case::FlatPositive,
        Case::Compact,
        Case::Split,
        Case::Complex,
        Case::ExceptionalPositive,
        Case::ExceptionalNegative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Case::Positive => "positive",
            Case::FlatNegative => "flat-negative",
            Case::FlatPositive => "flat-positive",
            Case::Compact => "compact",
            Case::Split => "split",
            Case::Complex => "complex",
            Case::ExceptionalPositive => "exceptional-positive",
            Case::ExceptionalNegative => "exceptional-negative",
        }
    }

    /// The case containing `(a1, a2)`; `None` only at the origin.
    pub fn classify(a1: &Q, a2: &Q) -> Option<Case> {
        if a2.is_positive() {
            return Some(Case::Positive);
        }
        if a2.is_zero() {
            return match a1.signum() {
                -1 => Some(Case::FlatNegative),
                1 => Some(Case::FlatPositive),
                _ => None,
            };
        }
        // a2 < 0: compare a1² with 4|a2| = −4a2
        let disc = discriminant(a1, a2);
        Some(match (disc.signum(), a1.signum()) {
            (0, 1) => Case::ExceptionalPositive,
            (0, _) => Case::ExceptionalNegative,
            (-1, _) => Case::Complex,
            (_, 1) => Case::Compact,
            _ => Case::Split,
        })
    }

    /// Tables listing this case (group structures first).
    pub fn tables(self) -> &'static [u8] {
        match self {
            Case::Positive | Case::FlatNegative | Case::FlatPositive | Case::Compact | Case::ExceptionalPositive => {
                &[1, 3]
            }
            Case::Split | Case::Complex | Case::ExceptionalNegative => &[2, 3],
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Case {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Case::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

pub fn discriminant(a1: &Q, a2: &Q) -> Q {
    a1 * a1 + Q::from(4) * a2
}

fn rational_sqrt(value: &Q, what: &str) -> Result<Q> {
    value.sqrt().ok_or_else(|| Error::IrrationalRadical {
        radical: format!("{what} = sqrt({value})"),
    })
}

/// `√(a1² + 4a2)` for a non-negative discriminant.
pub fn disc_root(a1: &Q, a2: &Q) -> Result<Q> {
    let d = discriminant(a1, a2);
    if d.is_negative() {
        return Err(Error::OffLocus(format!("a1^2+4a2 = {d} is negative")));
    }
    rational_sqrt(&d, "sqrt(a1^2+4a2)")
}

/// `κ = |a1 + r|^{1/2}/√2` and `κ̂ = |a1 − r|^{1/2}/√2` with `r = √(a1² + 4a2)`.
pub fn kappas(a1: &Q, a2: &Q) -> Result<(Q, Q)> {
    let r = disc_root(a1, a2)?;
    let two = Q::from(2);
    let k = rational_sqrt(&((a1 + &r).abs() / &two), "kappa = sqrt(|a1+sqrt(a1^2+4a2)|/2)")?;
    let kh = rational_sqrt(&((a1 - &r).abs() / &two), "kappa_hat = sqrt(|a1-sqrt(a1^2+4a2)|/2)")?;
    Ok((k, kh))
}

/// Principal `ζ = √((a1 + √(a1² + 4a2))/2)` for a negative discriminant.
pub fn zeta(a1: &Q, a2: &Q) -> Result<C> {
    let d = discriminant(a1, a2);
    if !d.is_negative() {
        return Err(Error::OffLocus(format!("a1^2+4a2 = {d} is not negative")));
    }
    let r = rational_sqrt(&-d.clone(), "sqrt(-(a1^2+4a2))")?;
    let two = Q::from(2);
    let sq = C::new(a1 / &two, r / two);
    sq.sqrt().ok_or_else(|| Error::IrrationalRadical {
        radical: format!("zeta = sqrt({sq})"),
    })
}

/// `[[R, a·x], [b·xᵗ, 0]]` of size `n + 1`.
pub fn bordered<F: Scalar>(r: &Matrix<F>, x: &[F], upper: &F, lower: &F) -> Matrix<F> {
    let n = x.len();
    let mut m = Matrix::zeros(n + 1, n + 1);
    m.set_block(0, 0, r);
    for (i, xi) in x.iter().enumerate() {
        m[(i, n)] = upper.times(xi);
        m[(n, i)] = lower.times(xi);
    }
    m
}

/// `[[A, 0], [0, 0]]`.
fn corner<F: Scalar>(a: &Matrix<F>) -> Matrix<F> {
    let n = a.rows();
    bordered(a, &vec![F::zero(); n], &F::zero(), &F::zero())
}

/// `so(n+1)` (`sign = +1`) or `so(n,1)` (`sign = −1`) as `(n+1)`-matrices.
pub fn so_block(n: usize, sign: i32) -> MatrixAlgebra<Q> {
    if sign > 0 {
        so_pq_matrices(n + 1, 0)
    } else {
        so_pq_matrices(n, 1)
    }
}

fn so_block_name(n: usize, sign: i32) -> String {
    if sign > 0 {
        format!("so({})", n + 1)
    } else {
        format!("so({n},1)")
    }
}

/// `so(n+1) ⋉ (ℝⁿ × so(n))` (`sign = +1`) or `so(n,1) ⋉ (ℝⁿ × so(n))`
/// with `θ([[A, x], [∓xᵗ, 0]])(z, Y) = (Az ± Yx, [A, Y] − x∧z)`,
/// `x∧z = z xᵗ − x zᵗ`.
pub struct Exceptional {
    pub n: usize,
    pub sign: i32,
    pub base: MatrixAlgebra<Q>,
    pub algebra: LieAlgebra<Q>,
}

impl Exceptional {
    pub fn new(n: usize, sign: i32) -> Result<Self> {
        let base = so_block(n, sign);
        let m = n * (n - 1) / 2;
        let module_dim = n + m;
        let yb: Vec<Matrix<Q>> = so_basis::<Q>(n).into_iter().map(|(_, b)| b).collect();
        let s = Q::from(sign as i64);
        let theta: Vec<Matrix<Q>> = base
            .basis()
            .iter()
            .map(|g| {
                let a = g.block(0, 0, n, n);
                let x = g.block(0, n, n, 1).column(0);
                let cols: Vec<Vec<Q>> = (0..module_dim)
                    .map(|c| {
                        let e = unit::<Q>(module_dim, c);
                        let z = &e[..n];
                        let y = yb
                            .iter()
                            .zip(&e[n..])
                            .fold(Matrix::zeros(n, n), |acc, (b, t)| acc.add(&b.scale(t)));
                        let zpart: Vec<Q> = crate::coords::vadd(&a.mul_vec(z), &vscale(&s, &y.mul_vec(&x)));
                        let wedge = crate::coords::outer(z, &x).sub(&crate::coords::outer(&x, z));
                        let ypart = so_coords(&a.commutator(&y).sub(&wedge));
                        [zpart, ypart].concat()
                    })
                    .collect();
                Matrix::from_columns(module_dim, &cols)
            })
            .collect();
        let mut labels: Vec<String> = (1..=n).map(|i| format!("z{i}")).collect();
        labels.extend(so_basis::<Q>(n).into_iter().map(|(l, _)| l.replace('A', "Y")));
        let k_alg = base.algebra(so_block_name(n, sign))?;
        let algebra = k_alg
            .semidirect(labels, &theta)?
            .renamed(format!("{} x| (R^{n} x so({n}))", so_block_name(n, sign)));
        Ok(Exceptional { n, sign, base, algebra })
    }

    /// Coordinates of `X ⋉ (z, Y)`.
    pub fn element(&self, x: &Matrix<Q>, z: &[Q], y: &Matrix<Q>) -> Result<Vec<Q>> {
        let mut v = self.base.coords(x)?;
        v.extend_from_slice(z);
        v.extend(so_coords(y));
        Ok(v)
    }
}

/// A row of one of the three tables, instantiated.
pub struct TableModel {
    pub table: u8,
    pub case: Case,
    pub n: usize,
    pub model: ModelAlgebra<Q>,
    /// Columns are `A_x` / `B_x` for `x = e_1..e_n`.
    pub horizontal: Matrix<Q>,
    /// Columns are the isotropy generators; no columns for group rows.
    pub isotropy: Matrix<Q>,
}

impl TableModel {
    /// Growth vector the table promises for this row.
    pub fn expected_growth(&self) -> Vec<usize> {
        let n = self.n;
        vec![n, n * (n + 1) / 2, n * (n + 3) / 2]
    }
}

fn columns(dim: usize, vs: &[Vec<Q>]) -> Matrix<Q> {
    if vs.is_empty() {
        Matrix::zeros(dim, 0)
    } else {
        Matrix::from_columns(dim, vs)
    }
}

fn finish(
    table: u8,
    case: Case,
    n: usize,
    algebra: LieAlgebra<Q>,
    params: BTreeMap<String, Q>,
    horizontal: Vec<Vec<Q>>,
    isotropy: Vec<Vec<Q>>,
) -> Result<TableModel> {
    let dim = algebra.dim();
    let p = Subspace::span(dim, &horizontal)?;
    let k = Subspace::span(dim, &isotropy)?;
    let family = format!("table{table}:{case}");
    let model = ModelAlgebra::new(algebra.with_params(params), p, k, family)?;
    Ok(TableModel {
        table,
        case,
        n,
        horizontal: columns(dim, &horizontal),
        isotropy: columns(dim, &isotropy),
        model,
    })
}

fn e3(a: usize) -> Vec<Q> {
    unit(3, a)
}

/// Builds `table` at `(a1, a2)`; `case`, when given, must match the region.
pub fn build_table(table: u8, case: Option<Case>, a1: &Q, a2: &Q, n: usize) -> Result<TableModel> {
    let found =
        Case::classify(a1, a2).ok_or_else(|| Error::OffLocus("(a1, a2) = (0, 0) is the Carnot group itself".into()))?;
    if let Some(c) = case {
        if c != found {
            return Err(Error::OffLocus(format!(
                "(a1, a2) = ({a1}, {a2}) lies in case {found}, not {c}"
            )));
        }
    }
    if !found.tables().contains(&table) {
        return Err(Error::OffLocus(format!("case {found} is not listed in table {table}")));
    }
    if table != 3 && n != 3 {
        return Err(Error::OffLocus(format!("table {table} is for n = 3")));
    }
    if !(2..=5).contains(&n) {
        return Err(Error::OffLocus(format!("n = {n} outside 2..=5")));
    }
    let mut params = BTreeMap::from([("a1".to_string(), a1.clone()), ("a2".to_string(), a2.clone())]);
    if table == 3 {
        params.insert("n".into(), Q::from(n as i64));
    }
    match table {
        1 => table1(found, a1, a2, params),
        2 => table2(found, a1, a2, params),
        _ => table3(found, a1, a2, n, params),
    }
}

fn table1(case: Case, a1: &Q, a2: &Q, params: BTreeMap<String, Q>) -> Result<TableModel> {
    let z = Q::zero();
    match case {
        Case::Positive | Case::Compact => {
            let (k, kh) = kappas(a1, a2)?;
            let sign = if case == Case::Positive { 1 } else { -1 };
            // so(3) ⊕ so(3,1) or so(3) ⊕ so(4)
            let right = so_block(3, -sign);
            let sum = so3_rotations::<Q>().block_sum(&right)?;
            let lower = if sign > 0 { kh.clone() } else { -kh.clone() };
            let hor = (0..3)
                .map(|a| {
                    let x = e3(a);
                    let left = star_inv(&vscale(&(Q::from(2) * &k), &x));
                    let r = bordered(&star_inv(&vscale(&k, &x)), &x, &kh, &lower);
                    sum.coords(&MatrixAlgebra::pair(&left, &r))
                })
                .collect::<Result<Vec<_>>>()?;
            let g = sum.algebra(format!("so(3) + {}", so_block_name(3, -sign)))?;
            finish(1, case, 3, g, params, hor, vec![])
        }
        Case::FlatNegative | Case::FlatPositive => flat(1, case, a1, 3, params),
        Case::ExceptionalPositive => {
            let k = kappas(a1, a2)?.0;
            // so(3) ⋉ (ℝ³ × ℝ³), θ(⋆⁻¹x)(z, y) = ½(x × (z − y), x × (y − z))
            let half = Q::new(1, 2);
            let theta: Vec<Matrix<Q>> = (0..3)
                .map(|a| {
                    let r = star_inv(&e3(a)).scale(&half);
                    let mut m = Matrix::zeros(6, 6);
                    m.set_block(0, 0, &r);
                    m.set_block(0, 3, &r.neg());
                    m.set_block(3, 0, &r.neg());
                    m.set_block(3, 3, &r);
                    m
                })
                .collect();
            let labels = ["z1", "z2", "z3", "y1", "y2", "y3"].map(String::from).to_vec();
            let g = so3_rotations::<Q>()
                .algebra("so(3)")?
                .semidirect(labels, &theta)?
                .renamed("so(3) x| (R^3 x R^3)");
            let hor = (0..3)
                .map(|a| {
                    let mut v = vscale(&(Q::from(2) * &k), &e3(a));
                    v.extend(vscale(&(-(&k * &half)), &e3(a)));
                    v.extend(vec![z.clone(); 3]);
                    v
                })
                .collect();
            finish(1, case, 3, g, params, hor, vec![])
        }
        _ => unreachable!("checked by Case::tables"),
    }
}

/// `ℝⁿ ⊕ so(n+1)` or `ℝⁿ ⊕ so(n,1)` with `A_x = (x) ⊕ [[0, √|a1| x], [−sgn(a1)√|a1| xᵗ, 0]]`.
fn flat(table: u8, case: Case, a1: &Q, n: usize, params: BTreeMap<String, Q>) -> Result<TableModel> {
    let root = rational_sqrt(&a1.abs(), "sqrt(|a1|)")?;
    let sign = a1.signum();
    let so = so_block(n, sign);
    let labels: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
    let g = LieAlgebra::abelian("R^n", labels)
        .direct_sum(&so.algebra(so_block_name(n, sign))?)
        .renamed(format!("R^{n} + {}", so_block_name(n, sign)));
    let lower = -(&root * &Q::from(sign as i64));
    let hor = (0..n)
        .map(|a| {
            let x = unit::<Q>(n, a);
            let mut v = x.clone();
            v.extend(so.coords(&bordered(&Matrix::zeros(n, n), &x, &root, &lower))?);
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()?;
    finish(table, case, n, g, params, hor, vec![])
}

fn table2(case: Case, a1: &Q, a2: &Q, params: BTreeMap<String, Q>) -> Result<TableModel> {
    let so31 = so_block(3, -1);
    match case {
        Case::Split => {
            let (k, kh) = kappas(a1, a2)?;
            let sum = so31.block_sum(&so31)?;
            let hor = (0..3)
                .map(|a| {
                    let x = e3(a);
                    let zero = Matrix::zeros(3, 3);
                    sum.coords(&MatrixAlgebra::pair(
                        &bordered(&zero, &x, &k, &k),
                        &bordered(&zero, &x, &kh, &kh),
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            let iso = diagonal_rotations(&sum, 3)?;
            finish(2, case, 3, sum.algebra("so(3,1) + so(3,1)")?, params, hor, iso)
        }
        Case::Complex => {
            let zt = zeta(a1, a2)?;
            let sum = so31.block_sum(&so31)?;
            let hor = (0..3)
                .map(|a| {
                    let x = e3(a);
                    let m = bordered(&star_inv(&vscale(&zt.re, &x)), &x, &zt.im, &zt.im);
                    sum.coords(&MatrixAlgebra::pair(&m, &m.neg()))
                })
                .collect::<Result<Vec<_>>>()?;
            let iso = diagonal_rotations(&sum, 3)?;
            let mut params = params;
            params.insert("zeta_re".into(), zt.re.clone());
            params.insert("zeta_im".into(), zt.im.clone());
            finish(2, case, 3, sum.algebra("so(3,1) + so(3,1)")?, params, hor, iso)
        }
        Case::ExceptionalNegative => exceptional(2, case, a1, 3, params),
        _ => unreachable!("checked by Case::tables"),
    }
}

/// `C_A ⊕ C_A` for `A` in the rotation basis of `so(n)`.
fn diagonal_rotations(sum: &MatrixAlgebra<Q>, n: usize) -> Result<Vec<Vec<Q>>> {
    so_basis::<Q>(n)
        .iter()
        .map(|(_, a)| {
            let c = corner(a);
            sum.coords(&MatrixAlgebra::pair(&c, &c))
        })
        .collect()
}

/// Semidirect rows: `B_x = [[0, κx], [∓κxᵗ, 0]] ⋉ (−(κ/2) x, 0)`, `C_A = [[A, 0], [0, 0]] ⋉ 0`.
fn exceptional(table: u8, case: Case, a1: &Q, n: usize, params: BTreeMap<String, Q>) -> Result<TableModel> {
    let k = rational_sqrt(&(a1.abs() / Q::from(2)), "kappa = sqrt(|a1|/2)")?;
    let sign = a1.signum();
    let ex = Exceptional::new(n, sign)?;
    let zero_n = Matrix::zeros(n, n);
    let lower = -(&k * &Q::from(sign as i64));
    let half_k = -(&k / &Q::from(2));
    let hor = (0..n)
        .map(|a| {
            let x = unit::<Q>(n, a);
            ex.element(&bordered(&zero_n, &x, &k, &lower), &vscale(&half_k, &x), &zero_n)
        })
        .collect::<Result<Vec<_>>>()?;
    let iso = so_basis::<Q>(n)
        .iter()
        .map(|(_, a)| ex.element(&corner(a), &vec![Q::zero(); n], &zero_n))
        .collect::<Result<Vec<_>>>()?;
    finish(table, case, n, ex.algebra, params, hor, iso)
}

fn table3(case: Case, a1: &Q, a2: &Q, n: usize, params: BTreeMap<String, Q>) -> Result<TableModel> {
    match case {
        Case::FlatNegative | Case::FlatPositive => flat(3, case, a1, n, params),
        Case::Positive | Case::Compact | Case::Split => {
            let (k, kh) = kappas(a1, a2)?;
            // signs of the two summands: +1 for so(n+1), −1 for so(n,1)
            let (s1, s2) = match case {
                Case::Positive => (1, -1),
                Case::Compact => (1, 1),
                _ => (-1, -1),
            };
            let sum = so_block(n, s1).block_sum(&so_block(n, s2))?;
            let zero = Matrix::zeros(n, n);
            let lower = |s: i32, c: &Q| if s > 0 { -c.clone() } else { c.clone() };
            let hor = (0..n)
                .map(|a| {
                    let x = unit::<Q>(n, a);
                    let l = bordered(&zero, &x, &k, &lower(s1, &k));
                    let r = bordered(&zero, &x, &kh, &lower(s2, &kh));
                    sum.coords(&MatrixAlgebra::pair(&l, &r))
                })
                .collect::<Result<Vec<_>>>()?;
            let iso = diagonal_rotations(&sum, n)?;
            let name = format!("{} + {}", so_block_name(n, s1), so_block_name(n, s2));
            finish(3, case, n, sum.algebra(name)?, params, hor, iso)
        }
        Case::Complex => {
            let zt = zeta(a1, a2)?;
            let so = so_complex_gaussian(n + 1);
            let g = so
                .algebra(format!("so({},C)", n + 1))?
                .realify()
                .renamed(format!("so({},C)", n + 1));
            let m = so.dim();
            let realify = |v: Vec<C>| -> Vec<Q> {
                let mut out: Vec<Q> = v.iter().map(|c| c.re.clone()).collect();
                out.extend(v.iter().map(|c| c.im.clone()));
                out
            };
            let zero = Matrix::<C>::zeros(n, n);
            let hor = (0..n)
                .map(|a| {
                    let x = unit::<C>(n, a);
                    Ok(realify(so.coords(&bordered(&zero, &x, &zt, &zt.negate()))?))
                })
                .collect::<Result<Vec<_>>>()?;
            let iso = so_basis::<C>(n)
                .iter()
                .map(|(_, a)| Ok(realify(so.coords(&corner(a))?)))
                .collect::<Result<Vec<_>>>()?;
            debug_assert_eq!(g.dim(), 2 * m);
            let mut params = params;
            params.insert("zeta_re".into(), zt.re.clone());
            params.insert("zeta_im".into(), zt.im.clone());
            finish(3, case, n, g, params, hor, iso)
        }
        Case::ExceptionalPositive | Case::ExceptionalNegative => exceptional(3, case, a1, n, params),
    }
}

/// Rational-locus witnesses for every row, as `(table, a1, a2)`.
pub fn rational_witnesses() -> Vec<(u8, Case, Q, Q)> {
    let w = |t: u8, c: Case, a: i64, b: i64| (t, c, Q::from(a), Q::from(b));
    vec![
        w(1, Case::Positive, 3, 4),
        w(1, Case::FlatNegative, -4, 0),
        w(1, Case::FlatPositive, 4, 0),
        w(1, Case::Compact, 5, -4),
        w(1, Case::ExceptionalPositive, 2, -1),
        w(2, Case::Split, -5, -4),
        w(2, Case::ExceptionalNegative, -2, -1),
        w(2, Case::Complex, 0, -4),
        w(3, Case::Positive, 3, 4),
        w(3, Case::FlatNegative, -4, 0),
        w(3, Case::FlatPositive, 4, 0),
        w(3, Case::Compact, 5, -4),
        w(3, Case::Split, -5, -4),
        w(3, Case::Complex, 0, -4),
        w(3, Case::ExceptionalPositive, 2, -1),
        w(3, Case::ExceptionalNegative, -2, -1),
    ]
}

/// Ordering helper used when reporting parameter sets.
pub fn sort_rationals(v: &mut [Q]) {
    v.sort_by(cmp_rational);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radicals_on_the_rational_locus() {
        assert_eq!(kappas(&Q::from(3), &Q::from(4)).unwrap(), (Q::from(2), Q::one()));
        assert_eq!(kappas(&Q::from(5), &Q::from(-4)).unwrap(), (Q::from(2), Q::one()));
        assert_eq!(zeta(&Q::zero(), &Q::from(-4)).unwrap(), C::from_ints(1, 1));
        let err = kappas(&Q::from(1), &Q::from(1)).unwrap_err();
        assert!(matches!(err, Error::IrrationalRadical { ref radical } if radical.contains("a1^2+4a2")));
    }

    #[test]
    fn classification_of_regions() {
        let c = |a: i64, b: i64| Case::classify(&Q::from(a), &Q::from(b));
        assert_eq!(c(3, 4), Some(Case::Positive));
        assert_eq!(c(5, -4), Some(Case::Compact));
        assert_eq!(c(-5, -4), Some(Case::Split));
        assert_eq!(c(0, -4), Some(Case::Complex));
        assert_eq!(c(2, -1), Some(Case::ExceptionalPositive));
        assert_eq!(c(-2, -1), Some(Case::ExceptionalNegative));
        assert_eq!(c(0, 0), None);
    }

    #[test]
    fn every_row_at_its_witness() {
        for (t, case, a1, a2) in rational_witnesses() {
            let m = build_table(t, Some(case), &a1, &a2, 3).unwrap();
            assert!(m.model.algebra.is_lie(), "table {t} {case}");
            m.model.validate().unwrap();
            assert_eq!(m.model.growth_vector().unwrap(), vec![3, 6, 9], "table {t} {case}");
        }
    }

    #[test]
    fn table3_in_other_ranks() {
        for n in [2, 4] {
            for (t, case, a1, a2) in rational_witnesses().into_iter().filter(|w| w.0 == 3) {
                let m = build_table(t, Some(case), &a1, &a2, n).unwrap();
                assert!(m.model.algebra.is_lie(), "n={n} {case}");
                assert_eq!(m.model.growth_vector().unwrap(), m.expected_growth(), "n={n} {case}");
            }
        }
    }

    #[test]
    fn wrong_case_is_rejected() {
        assert!(matches!(
            build_table(1, Some(Case::Positive), &Q::from(5), &Q::from(-4), 3),
            Err(Error::OffLocus(_))
        ));
        assert!(build_table(2, None, &Q::from(3), &Q::from(4), 3).is_err());
    }
}
