//! Symbolic bracket ansätze with unknown coefficients.
//!
//! Brackets are assembled from the five named equivariant maps, each of which
//! is checked to span its solver kernel. Jacobi residuals are then exact
//! polynomials in the unknowns.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::catalog::families::{
    a33_bracket, a33_coefficients, a33_kappa_samples, a33_layout, f33_iso_algebra, f33_iso_bracket, f33_iso_layout,
    F33_UNKNOWNS,
};
use crate::coords::Layout;
use crate::equivariance::{cayley, equivariant_bilinear_basis, standard_rep, Group, NamedMap, Rep};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::poly::{Monomial, MultiPoly};
use crate::scalar::{Rational, Scalar};
use crate::subspace::Subspace;

type Q = Rational;
type P = MultiPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnsatzKind {
    A33,
    F33,
}

impl AnsatzKind {
    pub fn name(self) -> &'static str {
        match self {
            AnsatzKind::A33 => "a33",
            AnsatzKind::F33 => "f33",
        }
    }
}

impl fmt::Display for AnsatzKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AnsatzKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a33" => Ok(AnsatzKind::A33),
            "f33" => Ok(AnsatzKind::F33),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// A polynomial constraint `poly = 0` with the triple it is read off from,
/// when known.
#[derive(Clone, Debug)]
pub struct Equation {
    pub name: String,
    pub triple: Option<(usize, usize, usize)>,
    pub poly: P,
}

pub struct AnsatzAlgebra {
    pub kind: AnsatzKind,
    pub algebra: LieAlgebra<P>,
    pub unknowns: Vec<String>,
    pub layout: Layout,
    pub equations: Vec<Equation>,
}

fn v(name: &str) -> P {
    P::var(name)
}

fn c(n: i64, d: i64) -> P {
    P::constant(Q::new(n, d))
}

/// Each named map must span a one-dimensional solver kernel.
pub fn certify_named_maps() -> Result<()> {
    for m in NamedMap::ALL {
        let (a, b, w) = m.reps();
        let basis = equivariant_bilinear_basis(&a, &b, &w, Group::O3)?;
        let named = m.bilinear();
        let mut rows: Vec<Vec<Q>> = basis.iter().map(|k| k.matrix.entries().to_vec()).collect();
        let base_rank = Matrix::from_rows(rows.clone()).rank()?;
        rows.push(named.matrix.entries().to_vec());
        let with_named = Matrix::from_rows(rows).rank()?;
        if basis.len() != 1 || base_rank != 1 || with_named != 1 || named.is_zero() {
            return Err(Error::Invalid(format!("{m:?} does not span its equivariant kernel")));
        }
    }
    Ok(())
}

fn layout_rep(parts: &[&str]) -> Result<Rep> {
    let mut reps = parts.iter().map(|n| standard_rep(n));
    let first = reps.next().expect("non-empty")?;
    reps.try_fold(first, |acc, r| Ok(acc.sum(&r?)))
}

impl AnsatzAlgebra {
    /// O(3) representation on the underlying space, block by block.
    pub fn rep(&self) -> Result<Rep> {
        match self.kind {
            AnsatzKind::A33 => layout_rep(&["R3", "R3bar", "sbar", "R3bar"]),
            AnsatzKind::F33 => layout_rep(&["R3", "R3bar", "sbar", "R3", "R3bar"]),
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn jacobi_residuals(&self, triple: (usize, usize, usize)) -> Result<Vec<P>> {
        let n = self.dim();
        let (i, j, k) = triple;
        if i >= n || j >= n || k >= n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: i.max(j).max(k) + 1,
            });
        }
        Ok(self.algebra.jacobi_residual(i, j, k))
    }

    /// Checks `ρ(q)[u, v] = [ρ(q)u, ρ(q)v]` on all basis pairs for the
    /// group element `q` acting through the block representation.
    pub fn is_equivariant(&self, q: &Matrix<Q>) -> Result<bool> {
        let act = self.rep()?.act(q).map(P::from_rational);
        let n = self.dim();
        let cols: Vec<Vec<P>> = (0..n).map(|i| act.column(i)).collect();
        Ok((0..n).all(|i| {
            (i + 1..n).all(|j| act.mul_vec(&self.algebra.bracket_basis(i, j)) == self.algebra.br(&cols[i], &cols[j]))
        }))
    }

    /// Every nonzero residual component over all basis triples, made monic
    /// and deduplicated.
    pub fn residual_components(&self) -> Vec<P> {
        let n = self.dim();
        let triples: Vec<(usize, usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
            .collect();
        let found: Vec<Vec<P>> = triples
            .par_iter()
            .map(|&(i, j, k)| {
                self.algebra
                    .jacobi_residual(i, j, k)
                    .into_iter()
                    .filter(|p| !p.is_zero())
                    .map(monic)
                    .collect()
            })
            .collect();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for p in found.into_iter().flatten() {
            if seen.insert(p.clone()) {
                out.push(p);
            }
        }
        out
    }

    /// The ansatz with every unknown replaced by a rational value.
    pub fn specialize(&self, values: &BTreeMap<String, Q>) -> Result<LieAlgebra<Q>> {
        let missing = self.unknowns.iter().find(|u| !values.contains_key(*u));
        if let Some(u) = missing {
            return Err(Error::Invalid(format!("no value for {u}")));
        }
        Ok(self.algebra.map_scalars(|p| {
            p.substitute_values(values)
                .as_constant()
                .expect("all unknowns assigned")
        }))
    }
}

fn monic(p: P) -> P {
    let lead = p.terms().next().map(|(_, c)| c.clone()).expect("nonzero");
    p.times(&P::constant(lead.recip().expect("nonzero")))
}

/// Whether `target` is a rational combination of `polys` (as vectors over
/// monomials).
pub fn in_polynomial_span(polys: &[P], target: &P) -> Result<bool> {
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    for p in polys.iter().chain(std::iter::once(target)) {
        for (m, _) in p.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    let dim = index.len();
    let to_vec = |p: &P| {
        let mut out = vec![Q::zero(); dim];
        for (m, c) in p.terms() {
            out[index[m]] = c.clone();
        }
        out
    };
    let span = Subspace::span(dim, &polys.iter().map(to_vec).collect::<Vec<_>>())?;
    Ok(span.contains(&to_vec(target)))
}

pub fn build_ansatz(kind: AnsatzKind) -> Result<AnsatzAlgebra> {
    certify_named_maps()?;
    match kind {
        AnsatzKind::A33 => {
            let unknowns: Vec<String> = (1..=9).map(|i| format!("c{i}")).collect();
            let coeffs: Vec<P> = unknowns.iter().map(|u| v(u)).collect();
            let layout = a33_layout();
            let algebra = LieAlgebra::from_bilinear("a33_ansatz", layout.labels(), |a, b| a33_bracket(&coeffs, a, b))?;
            Ok(AnsatzAlgebra {
                kind,
                algebra,
                unknowns,
                layout,
                equations: a33_equations(),
            })
        }
        AnsatzKind::F33 => {
            let unknowns: Vec<String> = F33_UNKNOWNS.iter().map(|s| s.to_string()).collect();
            let coeffs: Vec<P> = unknowns.iter().map(|u| v(u)).collect();
            let layout = f33_iso_layout();
            let algebra =
                LieAlgebra::from_bilinear("f33_ansatz", layout.labels(), |a, b| f33_iso_bracket(&coeffs, a, b))?;
            Ok(AnsatzAlgebra {
                kind,
                algebra,
                unknowns,
                layout,
                equations: f33_equations(),
            })
        }
    }
}

/// The eight A33 constraints with their basis triples in `(x, y, S, w)`
/// indices (`S12` at 6, `S13` at 8).
pub fn a33_equations() -> Vec<Equation> {
    let eq = |name: &str, t: (usize, usize, usize), poly: P| Equation {
        name: name.into(),
        triple: Some(t),
        poly,
    };
    vec![
        eq("E1", (0, 1, 3), c(5, 6) * v("c9") - v("c2")),
        eq("E2", (0, 1, 3), v("c5") + c(5, 6) * v("c8") - v("c1")),
        // raw form; the rewritten one follows with E2
        eq("E3", (3, 4, 0), c(3, 1) * v("c7") - v("c5") - v("c1")),
        eq(
            "E4",
            (0, 3, 6),
            v("c3") - v("c1") * v("c8") - v("c9") + v("c6") + v("c7") * v("c8"),
        ),
        eq("E5", (0, 3, 6), v("c4") - v("c2") * v("c8") + v("c7") * v("c9")),
        eq("E6", (0, 1, 8), v("c6") + v("c5") * v("c8") + v("c9")),
        eq("E7", (0, 1, 8), v("c7") + c(1, 2) * v("c8")),
        eq(
            "E8",
            (3, 4, 8),
            v("c2") - v("c7").pow(2) + v("c1") * v("c7") - c(1, 2) * v("c6"),
        ),
    ]
}

/// The eighteen F33 constraints, as `lhs − rhs`.
pub fn f33_equations() -> Vec<Equation> {
    let eq = |i: usize, poly: P| Equation {
        name: format!("Eq{i}"),
        triple: None,
        poly,
    };
    vec![
        eq(1, v("b1") - v("b6") - c(5, 6) * v("b5")),
        eq(2, v("f1") - v("f6") - c(5, 6) * v("f5")),
        eq(3, v("b1") - c(3, 1) * v("c1") - v("c2")),
        eq(4, v("f2") + v("d1") * v("b4") + v("d2") * v("b2")),
        eq(5, v("f4") - c(1, 2) * v("c2") * v("b2") + v("c1") * v("b4")),
        eq(6, v("f4") + v("b5") * v("a2")),
        eq(7, v("b4") - v("c2") * v("b5")),
        eq(8, v("f5") + v("d2") * v("b5") + v("b4")),
        eq(9, v("f5") + v("a1")),
        eq(10, v("b5") + c(2, 1) * v("c1")),
        eq(11, v("b5") + v("d1")),
        eq(12, v("b2") + c(6, 1) * (v("f5") + v("c1") * v("b5"))),
        eq(13, v("f6") - v("a2")),
        eq(14, v("b6") + v("c2")),
        eq(15, v("b6") - v("d2")),
        eq(16, v("f3") - v("a2") * v("b6")),
        eq(17, v("b3") + v("c2") * v("b6")),
        eq(18, v("f6") - v("b3") + v("d2") * v("b6")),
    ]
}

/// Whether each equation lies in the span of the residual components at its
/// triple (or, for triple-free equations, over all triples).
pub fn recover_equations(ansatz: &AnsatzAlgebra) -> Result<Vec<(String, bool)>> {
    let mut all: Option<Vec<P>> = None;
    ansatz
        .equations
        .iter()
        .map(|e| {
            let found = match e.triple {
                Some(t) => in_polynomial_span(&ansatz.jacobi_residuals(t)?, &e.poly)?,
                None => {
                    let comps = all.get_or_insert_with(|| ansatz.residual_components());
                    in_polynomial_span(comps, &e.poly)?
                }
            };
            Ok((e.name.clone(), found))
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct SolutionReport {
    pub kind: AnsatzKind,
    /// Sample and whether every residual vanished there.
    pub samples: Vec<(Q, bool)>,
    /// Residuals vanish as polynomials after symbolic substitution.
    pub identically_zero: bool,
}

impl SolutionReport {
    pub fn holds(&self) -> bool {
        self.identically_zero && self.samples.iter().all(|(_, ok)| *ok)
    }
}

fn all_residuals_vanish(alg: &LieAlgebra<P>) -> bool {
    let n = alg.dim();
    (0..n)
        .into_par_iter()
        .all(|i| (i + 1..n).all(|j| (j + 1..n).all(|k| alg.jacobi_residual(i, j, k).iter().all(Scalar::is_zero))))
}

/// Substitutes the solved coefficients (A33: `c_i(κ)`; F33: all zero) and
/// certifies a zero Jacobi defect.
pub fn verify_solution(kind: AnsatzKind) -> Result<SolutionReport> {
    let ansatz = build_ansatz(kind)?;
    match kind {
        AnsatzKind::A33 => {
            let kappa = v("kappa");
            let solved = a33_coefficients(&kappa);
            let assign: BTreeMap<String, P> = ansatz.unknowns.iter().cloned().zip(solved.iter().cloned()).collect();
            let symbolic = ansatz.algebra.map_scalars(|p| p.substitute(&assign));
            let identically_zero = all_residuals_vanish(&symbolic);
            let samples = a33_kappa_samples()
                .into_iter()
                .map(|k| {
                    let vals: BTreeMap<String, Q> = ansatz.unknowns.iter().cloned().zip(a33_coefficients(&k)).collect();
                    let ok = ansatz.specialize(&vals)?.is_lie();
                    Ok((k, ok))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(SolutionReport {
                kind,
                samples,
                identically_zero,
            })
        }
        AnsatzKind::F33 => {
            let zeros: BTreeMap<String, Q> = ansatz.unknowns.iter().map(|u| (u.clone(), Q::zero())).collect();
            let at_zero = ansatz.algebra.map_scalars(|p| p.substitute_values(&zeros));
            let identically_zero = all_residuals_vanish(&at_zero);
            let ok = ansatz.specialize(&zeros)?.is_lie();
            Ok(SolutionReport {
                kind,
                samples: vec![(Q::zero(), ok)],
                identically_zero,
            })
        }
    }
}

/// One elimination step.
#[derive(Clone, Debug)]
pub struct Step {
    pub equation: String,
    /// The equation after substituting everything established so far.
    pub reduced: P,
    pub variable: String,
    /// The value forced on `variable`.
    pub value: P,
    /// `reduced` was a pure power of `variable` (so it must vanish) rather
    /// than linear in it.
    pub forced_zero: bool,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.forced_zero {
            write!(
                f,
                "{}: {} = 0 forces {} = 0",
                self.equation, self.reduced, self.variable
            )
        } else {
            write!(f, "{}: {} = {}", self.equation, self.variable, self.value)
        }
    }
}

#[derive(Clone, Debug)]
pub struct RigidityTrace {
    pub steps: Vec<Step>,
    /// Span membership of each equation among all Jacobi residuals.
    pub in_span: Vec<(String, bool)>,
    /// Final value of every unknown.
    pub solution: BTreeMap<String, P>,
    /// `f4` in terms of `c2` just before it is forced to vanish.
    pub f4_before_vanishing: Option<P>,
}

impl RigidityTrace {
    pub fn all_zero(&self) -> bool {
        F33_UNKNOWNS
            .iter()
            .all(|u| self.solution.get(*u).is_some_and(Scalar::is_zero))
    }

    pub fn all_in_span(&self) -> bool {
        self.in_span.iter().all(|(_, ok)| *ok)
    }
}

/// Equation and the variable it determines, in the order of elimination.
const CHAIN: [(usize, &str); 18] = [
    (14, "b6"),
    (15, "d2"),
    (17, "b3"),
    (18, "f6"),
    (13, "a2"),
    (16, "f3"),
    (10, "b5"),
    (11, "d1"),
    (7, "b4"),
    (8, "f5"),
    (9, "a1"),
    (12, "b2"),
    (3, "b1"),
    (1, "c1"),
    (5, "f4"),
    (6, "c2"),
    (2, "f1"),
    (4, "f2"),
];

fn assign(subst: &mut BTreeMap<String, P>, var: &str, value: P) {
    let one = BTreeMap::from([(var.to_string(), value.clone())]);
    for val in subst.values_mut() {
        *val = val.substitute(&one);
    }
    subst.insert(var.to_string(), value);
}

/// Solves `reduced = 0` for `var`: linear with constant leading coefficient,
/// or a single monomial `c·var^k`.
fn solve_for(reduced: &P, var: &str) -> Option<(P, bool)> {
    let at_zero = reduced.substitute(&BTreeMap::from([(var.to_string(), P::zero())]));
    let rest = reduced.clone() - at_zero.clone();
    let lead = rest.substitute(&BTreeMap::from([(var.to_string(), P::one())]));
    if let Some(a) = lead.as_constant() {
        if !a.is_zero() && rest == P::constant(a.clone()) * v(var) {
            return Some((at_zero.negate().times(&P::constant(a.recip()?)), false));
        }
    }
    let only_var = reduced.num_terms() == 1 && reduced.variables().into_iter().eq([var.to_string()]);
    only_var.then(|| (P::zero(), true))
}

/// Runs the elimination chain; every step is an exact polynomial identity
/// modulo the earlier ones.
pub fn verify_rigidity() -> Result<RigidityTrace> {
    let ansatz = build_ansatz(AnsatzKind::F33)?;
    let in_span = recover_equations(&ansatz)?;
    let eqs: BTreeMap<String, P> = ansatz
        .equations
        .iter()
        .map(|e| (e.name.clone(), e.poly.clone()))
        .collect();
    let mut subst: BTreeMap<String, P> = BTreeMap::new();
    let mut steps = Vec::new();
    let mut f4_before_vanishing = None;
    for (i, var) in CHAIN {
        let name = format!("Eq{i}");
        let reduced = eqs[&name].substitute(&subst);
        let (value, forced_zero) = solve_for(&reduced, var)
            .ok_or_else(|| Error::Invalid(format!("{name} reduces to {reduced}, which does not determine {var}")))?;
        if forced_zero && var == "c2" {
            f4_before_vanishing = subst.get("f4").cloned();
        }
        assign(&mut subst, var, value.clone());
        steps.push(Step {
            equation: name,
            reduced,
            variable: var.to_string(),
            value,
            forced_zero,
        });
    }
    // the full system must be consistent with the final assignment
    for (name, p) in &eqs {
        let left = p.substitute(&subst);
        if !left.is_zero() {
            return Err(Error::Invalid(format!("{name} is left with {left}")));
        }
    }
    Ok(RigidityTrace {
        steps,
        in_span,
        solution: subst,
        f4_before_vanishing,
    })
}

/// The algebra forced by the chain, as rational structure constants.
pub fn rigid_algebra(trace: &RigidityTrace) -> Result<LieAlgebra<Q>> {
    let ansatz = build_ansatz(AnsatzKind::F33)?;
    let values: BTreeMap<String, Q> = trace
        .solution
        .iter()
        .map(|(k, p)| {
            p.as_constant()
                .map(|c| (k.clone(), c))
                .ok_or_else(|| Error::Invalid(format!("{k} = {p} is not constant")))
        })
        .collect::<Result<_>>()?;
    let alg = ansatz.specialize(&values)?;
    if !alg.same_structure(&f33_iso_algebra()) {
        return Err(Error::Invalid(
            "forced algebra differs from the free model with its rotations".into(),
        ));
    }
    Ok(alg)
}

/// A rational rotation for spot checks.
pub fn sample_rotation() -> Matrix<Q> {
    cayley(&[Q::new(1, 2), Q::new(-1, 3), Q::new(2, 5)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_maps_span_their_kernels() {
        certify_named_maps().unwrap();
    }

    #[test]
    fn e1_and_e2_at_the_first_triple() {
        let a = build_ansatz(AnsatzKind::A33).unwrap();
        let r = a.jacobi_residuals((0, 1, 3)).unwrap();
        let e1 = c(5, 6) * v("c9") - v("c2");
        let e2 = v("c5") + c(5, 6) * v("c8") - v("c1");
        assert!(in_polynomial_span(&r, &e1).unwrap());
        assert!(in_polynomial_span(&r, &e2).unwrap());
        assert!(!in_polynomial_span(&r, &v("c4")).unwrap());
    }

    #[test]
    fn all_a33_equations_recovered() {
        let a = build_ansatz(AnsatzKind::A33).unwrap();
        for (name, ok) in recover_equations(&a).unwrap() {
            assert!(ok, "{name}");
        }
    }

    #[test]
    fn ansatz_is_equivariant() {
        let q = sample_rotation();
        let reflect = Matrix::<Q>::identity(3).neg();
        for kind in [AnsatzKind::A33, AnsatzKind::F33] {
            let a = build_ansatz(kind).unwrap();
            assert!(a.is_equivariant(&q).unwrap(), "{kind}");
            assert!(a.is_equivariant(&reflect).unwrap(), "{kind}");
        }
    }

    #[test]
    fn a33_solution() {
        let r = verify_solution(AnsatzKind::A33).unwrap();
        assert_eq!(r.samples.len(), 7);
        assert!(r.holds());
    }

    #[test]
    fn f33_at_zero_is_lie() {
        assert!(verify_solution(AnsatzKind::F33).unwrap().holds());
    }

    #[test]
    fn f6_vanishes_from_the_chain() {
        let t = verify_rigidity().unwrap();
        let s = t.steps.iter().find(|s| s.variable == "f6").unwrap();
        assert!(s.value.is_zero());
    }

    #[test]
    fn rigidity() {
        let t = verify_rigidity().unwrap();
        assert!(t.all_in_span(), "{:?}", t.in_span);
        assert_eq!(t.f4_before_vanishing, Some(c(72, 49) * v("c2").pow(3)));
        assert!(t.all_zero());
        let g = rigid_algebra(&t).unwrap();
        assert_eq!(g.dim(), 17);
    }
}
