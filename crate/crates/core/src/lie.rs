//! Lie algebras given by structure constants, and the generic machinery
//! built on them.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::{combine, is_zero_vec, unit, Matrix, SpanSolver};
use crate::scalar::{Gaussian, Rational, Scalar};
use crate::subspace::Subspace;

/// Finite-dimensional Lie algebra `[e_i, e_j] = Σ_k c^k_ij e_k`.
///
/// Only pairs `i < j` are authoritative; the dense cache also holds the
/// antisymmetric mirror so lookups never branch on order.
#[derive(Clone, PartialEq)]
pub struct LieAlgebra<F> {
    name: String,
    params: BTreeMap<String, Rational>,
    labels: Vec<String>,
    table: Vec<Vec<(usize, F)>>,
}

/// Residuals `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]` that are non-zero.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiReport<F> {
    pub residuals: Vec<((usize, usize, usize), Vec<F>)>,
}

impl<F: Scalar> JacobiReport<F> {
    pub fn is_zero(&self) -> bool {
        self.residuals.is_empty()
    }

    pub fn first(&self) -> Option<(usize, usize, usize)> {
        self.residuals.first().map(|r| r.0)
    }
}

fn sparse<F: Scalar>(v: &[F]) -> Vec<(usize, F)> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (k, x.clone()))
        .collect()
}

impl<F: Scalar> LieAlgebra<F> {
    /// Abelian algebra with the given basis labels.
    pub fn abelian(name: impl Into<String>, labels: Vec<String>) -> Self {
        let n = labels.len();
        LieAlgebra {
            name: name.into(),
            params: BTreeMap::new(),
            labels,
            table: vec![Vec::new(); n * n],
        }
    }

    /// Tabulates a bilinear bracket on basis vectors, rejecting it if it is
    /// not antisymmetric.
    pub fn from_bilinear(
        name: impl Into<String>,
        labels: Vec<String>,
        bracket: impl Fn(&[F], &[F]) -> Vec<F> + Sync,
    ) -> Result<Self> {
        let n = labels.len();
        let mut g = Self::abelian(name, labels);
        let rows: Vec<Vec<Vec<F>>> = (0..n)
            .into_par_iter()
            .map(|i| (0..n).map(|j| bracket(&unit(n, i), &unit(n, j))).collect())
            .collect();
        #[allow(clippy::needless_range_loop)]
        for i in 0..n {
            for j in i..n {
                let (u, v) = (&rows[i][j], &rows[j][i]);
                if u.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: u.len(),
                    });
                }
                let antisym = u.iter().zip(v).all(|(a, b)| a.plus(b).is_zero());
                if !antisym {
                    return Err(Error::Invalid(format!(
                        "bracket is not antisymmetric on ({}, {})",
                        g.labels[i], g.labels[j]
                    )));
                }
                if i < j {
                    g.set_bracket(i, j, u);
                }
            }
        }
        Ok(g)
    }

    /// Builds from explicit `i < j` structure constants.
    pub fn from_structure(
        name: impl Into<String>,
        labels: Vec<String>,
        brackets: &BTreeMap<(usize, usize), Vec<(usize, F)>>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut g = Self::abelian(name, labels);
        for (&(i, j), terms) in brackets {
            if i >= j || j >= n {
                return Err(Error::Invalid(format!(
                    "bracket index pair ({i}, {j}) must satisfy i < j < {n}"
                )));
            }
            let mut v = vec![F::zero(); n];
            for (k, c) in terms {
                if *k >= n {
                    return Err(Error::Invalid(format!("structure index {k} out of range")));
                }
                v[*k] = v[*k].plus(c);
            }
            g.set_bracket(i, j, &v);
        }
        Ok(g)
    }

    /// Overwrites `[e_i, e_j]` (and its mirror) with the dense vector `v`.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: &[F]) {
        let n = self.dim();
        assert!(i != j && i < n && j < n, "invalid bracket pair");
        let s = sparse(v);
        self.table[j * n + i] = s.iter().map(|(k, c)| (*k, c.negate())).collect();
        self.table[i * n + j] = s;
    }

    pub fn with_params(mut self, params: BTreeMap<String, Rational>) -> Self {
        self.params = params;
        self
    }

    pub fn with_param(mut self, key: &str, value: Rational) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn relabeled(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim(), "label count");
        self.labels = labels;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn params(&self) -> &BTreeMap<String, Rational> {
        &self.params
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Sparse `[e_i, e_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &[(usize, F)] {
        &self.table[i * self.dim() + j]
    }

    /// All non-zero `i < j` brackets in ascending order.
    pub fn brackets(&self) -> impl Iterator<Item = ((usize, usize), &[(usize, F)])> + '_ {
        let n = self.dim();
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .map(move |(i, j)| ((i, j), self.structure(i, j)))
            .filter(|(_, t)| !t.is_empty())
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (k, c) in self.structure(i, j) {
            out[*k] = c.clone();
        }
        out
    }

    /// Bracket of coordinate vectors, assuming correct lengths.
    pub fn br(&self, u: &[F], v: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() || i == j {
                    continue;
                }
                let t = &self.table[i * n + j];
                if t.is_empty() {
                    continue;
                }
                let ab = a.times(b);
                for (k, c) in t {
                    out[*k] = out[*k].plus(&ab.times(c));
                }
            }
        }
        out
    }

    pub fn bracket(&self, u: &[F], v: &[F]) -> Result<Vec<F>> {
        for w in [u, v] {
            if w.len() != self.dim() {
                return Err(Error::DimensionMismatch {
                    expected: self.dim(),
                    found: w.len(),
                });
            }
        }
        Ok(self.br(u, v))
    }

    /// Matrix of `ad u`.
    pub fn ad(&self, u: &[F]) -> Matrix<F> {
        let n = self.dim();
        let cols: Vec<Vec<F>> = (0..n).map(|j| self.br(u, &unit(n, j))).collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix<F> {
        self.ad(&unit(self.dim(), i))
    }

    pub fn jacobi_residual(&self, i: usize, j: usize, k: usize) -> Vec<F> {
        let n = self.dim();
        let (ei, ej, ek) = (unit(n, i), unit(n, j), unit(n, k));
        let a = self.br(&self.bracket_basis(i, j), &ek);
        let b = self.br(&self.bracket_basis(j, k), &ei);
        let c = self.br(&self.bracket_basis(k, i), &ej);
        a.iter().zip(&b).zip(&c).map(|((x, y), z)| x.plus(y).plus(z)).collect()
    }

    pub fn jacobi_defect(&self) -> JacobiReport<F> {
        let n = self.dim();
        let residuals = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                (i + 1..n)
                    .flat_map(move |j| (j + 1..n).map(move |k| (i, j, k)))
                    .filter_map(|(i, j, k)| {
                        let r = self.jacobi_residual(i, j, k);
                        (!is_zero_vec(&r)).then_some(((i, j, k), r))
                    })
            })
            .collect();
        JacobiReport { residuals }
    }

    pub fn is_lie(&self) -> bool {
        self.jacobi_defect().is_zero()
    }

    pub fn map_scalars<G: Scalar>(&self, f: impl Fn(&F) -> G) -> LieAlgebra<G> {
        let table = self
            .table
            .iter()
            .map(|t| {
                t.iter()
                    .map(|(k, c)| (*k, f(c)))
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect();
        LieAlgebra {
            name: self.name.clone(),
            params: self.params.clone(),
            labels: self.labels.clone(),
            table,
        }
    }

    /// Same structure constants, compared entrywise.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.table == other.table
    }

    /// First `i < j` pair whose brackets differ, if any.
    pub fn structure_mismatch(&self, other: &Self) -> Option<(usize, usize)> {
        if self.dim() != other.dim() {
            return Some((0, 0));
        }
        let n = self.dim();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.structure(i, j) != other.structure(i, j))
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let (n, m) = (self.dim(), other.dim());
        let mut labels = self.labels.clone();
        let clash = other.labels.iter().any(|l| self.labels.contains(l));
        labels.extend(
            other
                .labels
                .iter()
                .map(|l| if clash { format!("{l}'") } else { l.clone() }),
        );
        let mut g = Self::abelian(format!("{} + {}", self.name, other.name), labels);
        for ((i, j), t) in self.brackets() {
            let mut v = vec![F::zero(); n + m];
            for (k, c) in t {
                v[*k] = c.clone();
            }
            g.set_bracket(i, j, &v);
        }
        for ((i, j), t) in other.brackets() {
            let mut v = vec![F::zero(); n + m];
            for (k, c) in t {
                v[n + k] = c.clone();
            }
            g.set_bracket(n + i, n + j, &v);
        }
        g
    }

    /// `self ⋉_θ V` where `theta[a]` is the action of the a-th basis element
    /// on `V`. θ is checked to be a representation first.
    pub fn semidirect(&self, module_labels: Vec<String>, theta: &[Matrix<F>]) -> Result<Self> {
        let (n, m) = (self.dim(), module_labels.len());
        if theta.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: theta.len(),
            });
        }
        if let Some(t) = theta.iter().find(|t| t.rows() != m || t.cols() != m) {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: t.rows().max(t.cols()),
            });
        }
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self
                    .structure(i, j)
                    .iter()
                    .fold(Matrix::zeros(m, m), |acc, (k, c)| acc.add(&theta[*k].scale(c)));
                if lhs != theta[i].commutator(&theta[j]) {
                    return Err(Error::NotARepresentation { first: i, second: j });
                }
            }
        }
        let mut labels = self.labels.clone();
        labels.extend(module_labels);
        let mut g = Self::abelian(format!("{} x| R^{m}", self.name), labels);
        for ((i, j), t) in self.brackets() {
            let mut v = vec![F::zero(); n + m];
            for (k, c) in t {
                v[*k] = c.clone();
            }
            g.set_bracket(i, j, &v);
        }
        for (a, th) in theta.iter().enumerate() {
            for b in 0..m {
                let mut v = vec![F::zero(); n];
                v.extend(th.column(b));
                g.set_bracket(a, n + b, &v);
            }
        }
        Ok(g)
    }

    /// Algebra in the basis given by the columns of `t`.
    pub fn change_basis(&self, t: &Matrix<F>, labels: Vec<String>) -> Result<Self> {
        let n = self.dim();
        if t.rows() != n || t.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: t.rows().max(t.cols()),
            });
        }
        let tinv = t.inverse()?;
        let cols: Vec<Vec<F>> = (0..n).map(|a| t.column(a)).collect();
        let mut g = Self::abelian(self.name.clone(), labels).with_params(self.params.clone());
        for a in 0..n {
            for b in a + 1..n {
                let w = tinv.mul_vec(&self.br(&cols[a], &cols[b]));
                g.set_bracket(a, b, &w);
            }
        }
        Ok(g)
    }

    pub fn killing_matrix(&self) -> Result<Matrix<F>> {
        if !F::RING.is_field() {
            return Err(Error::UnsupportedRing(F::RING));
        }
        let n = self.dim();
        let ads: Vec<Matrix<F>> = (0..n).map(|i| self.ad_basis(i)).collect();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = ads[i].mul(&ads[j]).trace();
                k[(j, i)] = t.clone();
                k[(i, j)] = t;
            }
        }
        Ok(k)
    }

    /// Span of all `[u, v]` with `u ∈ a`, `v ∈ b`.
    pub fn bracket_spaces(&self, a: &Subspace<F>, b: &Subspace<F>) -> Result<Subspace<F>> {
        let bv = b.basis_vectors();
        let vecs: Vec<Vec<F>> = a
            .basis_vectors()
            .iter()
            .flat_map(|u| bv.iter().map(move |v| self.br(u, v)))
            .collect();
        Subspace::span(self.dim(), &vecs)
    }

    pub fn full_space(&self) -> Subspace<F> {
        Subspace::full(self.dim())
    }

    pub fn is_subalgebra(&self, w: &Subspace<F>) -> Result<()> {
        let b = w.basis_vectors();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                if !w.contains(&self.br(&b[i], &b[j])) {
                    return Err(Error::NotASubalgebra { first: i, second: j });
                }
            }
        }
        Ok(())
    }

    pub fn is_ideal(&self, w: &Subspace<F>) -> Result<()> {
        let n = self.dim();
        for (r, v) in w.basis_vectors().iter().enumerate() {
            for i in 0..n {
                if !w.contains(&self.br(&unit(n, i), v)) {
                    return Err(Error::NotAnIdeal { basis: i, member: r });
                }
            }
        }
        Ok(())
    }

    /// `self / w` together with the projection matrix. The quotient basis is
    /// the standard vectors outside the echelon pivots of `w`.
    pub fn quotient(&self, w: &Subspace<F>) -> Result<(Self, Matrix<F>)> {
        self.is_ideal(w)?;
        let n = self.dim();
        let comp = w.coordinate_complement();
        let m = comp.len();
        let project = |v: &[F]| -> Vec<F> {
            let r = w.reduce_vector(v);
            comp.iter().map(|&c| r[c].clone()).collect()
        };
        let cols: Vec<Vec<F>> = (0..n).map(|i| project(&unit(n, i))).collect();
        let proj = Matrix::from_columns(m, &cols);
        let labels = comp.iter().map(|&c| self.labels[c].clone()).collect();
        let mut q = Self::abelian(format!("{}/ideal", self.name), labels).with_params(self.params.clone());
        for a in 0..m {
            for b in a + 1..m {
                let v = project(&self.bracket_basis(comp[a], comp[b]));
                q.set_bracket(a, b, &v);
            }
        }
        Ok((q, proj))
    }

    /// Smallest subalgebra containing `w`.
    pub fn generated_subalgebra(&self, w: &Subspace<F>) -> Result<Subspace<F>> {
        let mut cur = w.clone();
        loop {
            let next = cur.sum(&self.bracket_spaces(&cur, &cur)?)?;
            if next.dim() == cur.dim() {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Smallest ideal containing `w`.
    pub fn generated_ideal(&self, w: &Subspace<F>) -> Result<Subspace<F>> {
        let full = self.full_space();
        let mut cur = w.clone();
        loop {
            let next = cur.sum(&self.bracket_spaces(&full, &cur)?)?;
            if next.dim() == cur.dim() {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `g = g¹ ⊇ g² = [g, g¹] ⊇ …` until it stabilizes.
    pub fn lower_central_series(&self) -> Result<Vec<Subspace<F>>> {
        let full = self.full_space();
        let mut out = vec![full.clone()];
        loop {
            let next = self.bracket_spaces(&full, out.last().unwrap())?;
            if next.dim() == out.last().unwrap().dim() {
                return Ok(out);
            }
            let done = next.is_zero();
            out.push(next);
            if done {
                return Ok(out);
            }
        }
    }

    pub fn derived_series(&self) -> Result<Vec<Subspace<F>>> {
        let mut out = vec![self.full_space()];
        loop {
            let last = out.last().unwrap();
            let next = self.bracket_spaces(last, last)?;
            if next.dim() == last.dim() {
                return Ok(out);
            }
            let done = next.is_zero();
            out.push(next);
            if done {
                return Ok(out);
            }
        }
    }

    pub fn center(&self) -> Result<Subspace<F>> {
        let n = self.dim();
        let mut system = Matrix::zeros(0, n);
        for i in 0..n {
            system = system.vstack(&self.ad_basis(i));
        }
        Subspace::span(n, &system.reduce()?.kernel)
    }

    /// Dimensions of `(W_j + k)/k` with `W_1 = p`, `W_{j+1} = W_j + [p, W_j]`.
    pub fn growth_vector(&self, p: &Subspace<F>, k: &Subspace<F>) -> Result<Vec<usize>> {
        Ok(self.filtration(p, k)?.iter().map(|v| v.dim() - k.dim()).collect())
    }

    /// `V_j = W_j + k` for `j = 1..s`, stopping when the flag stabilizes.
    pub fn filtration(&self, p: &Subspace<F>, k: &Subspace<F>) -> Result<Vec<Subspace<F>>> {
        let overlap = p.intersection(k)?.dim();
        if overlap > 0 {
            return Err(Error::OverlappingSubspaces(overlap));
        }
        self.is_subalgebra(k)?;
        let mut w = p.clone();
        let mut out = vec![w.sum(k)?];
        loop {
            let next = w.sum(&self.bracket_spaces(p, &w)?)?;
            if next.dim() == w.dim() {
                // W may keep growing inside k after W + k has stopped
                while out.len() > 1 && out[out.len() - 1].dim() == out[out.len() - 2].dim() {
                    out.pop();
                }
                return Ok(out);
            }
            w = next;
            out.push(w.sum(k)?);
        }
    }

    /// Nilpotentization of `(p, k)` on identity-aligned complements.
    pub fn associated_graded(&self, p: &Subspace<F>, k: &Subspace<F>) -> Result<GradedAlgebra<F>> {
        let n = self.dim();
        let flag = self.filtration(p, k)?;
        let top = flag.last().unwrap();
        if top.dim() != n {
            return Err(Error::NotBracketGenerating {
                reached: top.dim() - k.dim(),
                expected: n - k.dim(),
            });
        }
        let mut levels = vec![k.clone()];
        levels.extend(flag);
        let mut layers: Vec<Vec<Vec<F>>> = Vec::new();
        for j in 1..levels.len() {
            let mut cur = levels[j - 1].clone();
            let mut chosen = Vec::new();
            for row in levels[j].basis_vectors() {
                if !cur.contains(&row) {
                    cur = cur.extend(std::slice::from_ref(&row))?;
                    chosen.push(row);
                }
            }
            layers.push(chosen);
        }
        let s = layers.len();
        let mut adapted = Vec::new();
        let mut offsets = Vec::new();
        let mut labels = Vec::new();
        for (j, layer) in layers.iter().enumerate() {
            offsets.push(adapted.len());
            for (m, v) in layer.iter().enumerate() {
                let nz: Vec<usize> = (0..n).filter(|&c| !v[c].is_zero()).collect();
                labels.push(if nz.len() == 1 && v[nz[0]].is_one() {
                    self.labels[nz[0]].clone()
                } else {
                    format!("L{}_{}", j + 1, m + 1)
                });
                adapted.push(v.clone());
            }
        }
        let total = adapted.len();
        let solvers: Vec<SpanSolver<F>> = (0..s)
            .map(|j| {
                let mut gens = layers[j].clone();
                gens.extend(levels[j].basis_vectors());
                SpanSolver::new(n, &gens)
            })
            .collect::<Result<_>>()?;
        let layer_of: Vec<usize> = (0..s).flat_map(|j| std::iter::repeat_n(j, layers[j].len())).collect();
        let mut gr = LieAlgebra::abelian(format!("gr {}", self.name), labels);
        for a in 0..total {
            for b in a + 1..total {
                let target = layer_of[a] + layer_of[b] + 1;
                if target >= s {
                    continue;
                }
                let w = self.br(&adapted[a], &adapted[b]);
                let coeffs = solvers[target].solve(&w).ok_or_else(|| {
                    Error::Invalid(format!(
                        "bracket of adapted vectors {a}, {b} leaves its filtration level"
                    ))
                })?;
                let mut v = vec![F::zero(); total];
                for (m, c) in coeffs.into_iter().take(layers[target].len()).enumerate() {
                    v[offsets[target] + m] = c;
                }
                gr.set_bracket(a, b, &v);
            }
        }
        Ok(GradedAlgebra {
            algebra: gr,
            layers: layers.iter().map(Vec::len).collect(),
            adapted,
        })
    }
}

impl LieAlgebra<Rational> {
    pub fn killing_signature(&self) -> Result<(usize, usize, usize)> {
        self.killing_matrix()?.sym_signature()
    }

    pub fn to_ring<G: Scalar>(&self) -> LieAlgebra<G> {
        self.map_scalars(G::from_rational)
    }
}

impl LieAlgebra<Gaussian> {
    /// Underlying real algebra in the basis `e_1..e_n, i·e_1..i·e_n`.
    pub fn realify(&self) -> LieAlgebra<Rational> {
        let n = self.dim();
        let lift = |v: &[Rational]| -> Vec<Gaussian> {
            (0..n).map(|k| Gaussian::new(v[k].clone(), v[n + k].clone())).collect()
        };
        let mut labels = self.labels.clone();
        labels.extend(self.labels.iter().map(|l| format!("i*{l}")));
        let mut g = LieAlgebra::abelian(format!("{} (real)", self.name), labels).with_params(self.params.clone());
        for a in 0..2 * n {
            for b in a + 1..2 * n {
                let z = self.br(&lift(&unit(2 * n, a)), &lift(&unit(2 * n, b)));
                let mut v: Vec<Rational> = z.iter().map(|c| c.re.clone()).collect();
                v.extend(z.iter().map(|c| c.im.clone()));
                g.set_bracket(a, b, &v);
            }
        }
        g
    }
}

impl<F: std::fmt::Debug> std::fmt::Debug for LieAlgebra<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = self.labels.len();
        writeln!(f, "LieAlgebra {} (dim {n})", self.name)?;
        for i in 0..n {
            for j in i + 1..n {
                let t = &self.table[i * n + j];
                if t.is_empty() {
                    continue;
                }
                let terms: Vec<String> = t.iter().map(|(k, c)| format!("{c:?}*{}", self.labels[*k])).collect();
                writeln!(f, "  [{}, {}] = {}", self.labels[i], self.labels[j], terms.join(" + "))?;
            }
        }
        Ok(())
    }
}

/// Associated graded algebra with its layer sizes and the vectors of the
/// original algebra that were chosen as the adapted basis.
#[derive(Clone, Debug)]
pub struct GradedAlgebra<F> {
    pub algebra: LieAlgebra<F>,
    pub layers: Vec<usize>,
    pub adapted: Vec<Vec<F>>,
}

impl<F: Scalar> GradedAlgebra<F> {
    /// Exact structure-constant equality with `expected`.
    pub fn matches(&self, expected: &LieAlgebra<F>) -> bool {
        self.algebra.same_structure(expected)
    }

    pub fn is_graded(&self) -> bool {
        let mut layer_of = Vec::new();
        for (j, &d) in self.layers.iter().enumerate() {
            layer_of.extend(std::iter::repeat_n(j, d));
        }
        self.algebra
            .brackets()
            .all(|((a, b), t)| t.iter().all(|(k, _)| layer_of[*k] == layer_of[a] + layer_of[b] + 1))
    }
}

/// Result of [`check_map`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapCheck {
    pub homomorphism: bool,
    pub bijective: bool,
    pub counterexample: Option<(usize, usize)>,
}

impl MapCheck {
    pub fn is_isomorphism(&self) -> bool {
        self.homomorphism && self.bijective
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapMode {
    Homomorphism,
    Isomorphism,
}

/// Checks `φ[e_i, e_j] = [φe_i, φe_j]` for all `i < j`; `phi` is
/// `target.dim × source.dim`.
pub fn check_map<F: Scalar>(source: &LieAlgebra<F>, target: &LieAlgebra<F>, phi: &Matrix<F>) -> Result<MapCheck> {
    if phi.cols() != source.dim() {
        return Err(Error::DimensionMismatch {
            expected: source.dim(),
            found: phi.cols(),
        });
    }
    if phi.rows() != target.dim() {
        return Err(Error::DimensionMismatch {
            expected: target.dim(),
            found: phi.rows(),
        });
    }
    let n = source.dim();
    let images: Vec<Vec<F>> = (0..n).map(|i| phi.column(i)).collect();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let counterexample = pairs
        .par_iter()
        .find_first(|&&(i, j)| phi.mul_vec(&source.bracket_basis(i, j)) != target.br(&images[i], &images[j]))
        .copied();
    let bijective = F::RING.is_field() && phi.is_square() && phi.rank()? == n;
    Ok(MapCheck {
        homomorphism: counterexample.is_none(),
        bijective,
        counterexample,
    })
}

/// Linear map between two algebras.
#[derive(Clone, Debug)]
pub struct LinearMap<F> {
    pub source: LieAlgebra<F>,
    pub target: LieAlgebra<F>,
    pub matrix: Matrix<F>,
}

impl<F: Scalar> LinearMap<F> {
    pub fn new(source: LieAlgebra<F>, target: LieAlgebra<F>, matrix: Matrix<F>) -> Result<Self> {
        if matrix.cols() != source.dim() || matrix.rows() != target.dim() {
            return Err(Error::DimensionMismatch {
                expected: source.dim(),
                found: matrix.cols(),
            });
        }
        Ok(LinearMap { source, target, matrix })
    }

    /// Builds the matrix from the images of the source basis vectors.
    pub fn from_images(source: LieAlgebra<F>, target: LieAlgebra<F>, image: impl Fn(&[F]) -> Vec<F>) -> Result<Self> {
        let n = source.dim();
        let cols: Vec<Vec<F>> = (0..n).map(|i| image(&unit(n, i))).collect();
        if let Some(c) = cols.iter().find(|c| c.len() != target.dim()) {
            return Err(Error::DimensionMismatch {
                expected: target.dim(),
                found: c.len(),
            });
        }
        let m = Matrix::from_columns(target.dim(), &cols);
        Self::new(source, target, m)
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        self.matrix.mul_vec(v)
    }

    pub fn check(&self) -> Result<MapCheck> {
        check_map(&self.source, &self.target, &self.matrix)
    }

    pub fn holds(&self, mode: MapMode) -> Result<bool> {
        let c = self.check()?;
        Ok(match mode {
            MapMode::Homomorphism => c.homomorphism,
            MapMode::Isomorphism => c.is_isomorphism(),
        })
    }

    pub fn compose(&self, after: &LinearMap<F>) -> Result<LinearMap<F>> {
        LinearMap::new(
            self.source.clone(),
            after.target.clone(),
            after.matrix.mul(&self.matrix),
        )
    }
}

/// Image of a subspace spanned by `vectors` under `phi`.
pub fn image_span<F: Scalar>(phi: &Matrix<F>, vectors: &[Vec<F>]) -> Result<Subspace<F>> {
    Subspace::span(phi.rows(), &vectors.iter().map(|v| phi.mul_vec(v)).collect::<Vec<_>>())
}

/// `Σ c_i e_i` helper re-exported for catalog code.
pub fn lin<F: Scalar>(n: usize, terms: &[(usize, F)]) -> Vec<F> {
    let vecs: Vec<Vec<F>> = terms.iter().map(|(i, _)| unit(n, *i)).collect();
    let cs: Vec<F> = terms.iter().map(|(_, c)| c.clone()).collect();
    combine(&cs, &vecs, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coords::{cross, Layout};
    use proptest::prelude::*;

    type Q = Rational;

    fn so3() -> LieAlgebra<Q> {
        LieAlgebra::from_bilinear("so3", Layout::new(&[("e", 3)]).labels(), cross).unwrap()
    }

    fn euclid() -> LieAlgebra<Q> {
        let g = so3();
        let theta: Vec<Matrix<Q>> = (0..3).map(|i| g.ad_basis(i)).collect();
        g.semidirect(vec!["t1".into(), "t2".into(), "t3".into()], &theta)
            .unwrap()
    }

    #[test]
    fn so3_basics() {
        let g = so3();
        assert!(g.is_lie());
        assert_eq!(g.killing_signature().unwrap(), (0, 3, 0));
        assert_eq!(g.center().unwrap().dim(), 0);
        let dims: Vec<usize> = g.derived_series().unwrap().iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![3]);
        let id = Matrix::identity(3);
        assert!(check_map(&g, &g, &id).unwrap().is_isomorphism());
        let double = Matrix::identity(3).scale(&Q::from(2));
        let c = check_map(&g, &g, &double).unwrap();
        assert!(!c.homomorphism);
        assert_eq!(c.counterexample, Some((0, 1)));
    }

    #[test]
    fn non_antisymmetric_rejected() {
        let r = LieAlgebra::<Q>::from_bilinear("bad", vec!["a".into(), "b".into()], |u, v| {
            vec![u[0].times(&v[1]), Q::zero()]
        });
        assert!(matches!(r, Err(Error::Invalid(_))));
    }

    #[test]
    fn mutation_breaks_jacobi() {
        let mut g = euclid();
        assert!(g.is_lie());
        let mut v = g.bracket_basis(0, 1);
        v[2] = v[2].plus(&Q::one());
        v[3] = v[3].plus(&Q::one());
        g.set_bracket(0, 1, &v);
        assert!(!g.is_lie());
    }

    #[test]
    fn semidirect_rejects_non_representation() {
        let g = so3();
        let mut theta: Vec<Matrix<Q>> = (0..3).map(|i| g.ad_basis(i)).collect();
        theta[2] = Matrix::from_ints(&[&[1, 2, 0], &[0, 0, 1], &[3, 0, 0]]);
        assert_eq!(
            g.semidirect(vec!["a".into(), "b".into(), "c".into()], &theta)
                .unwrap_err(),
            Error::NotARepresentation { first: 0, second: 1 }
        );
    }

    #[test]
    fn quotient_of_euclidean_algebra() {
        let e = euclid();
        let t = Subspace::coordinate(6, 3..6);
        let (q, proj) = e.quotient(&t).unwrap();
        assert_eq!(q.dim(), 3);
        assert!(q.same_structure(&so3()));
        assert!(check_map(&e, &q, &proj).unwrap().homomorphism);
        let bad = Subspace::coordinate(6, [0]);
        assert!(matches!(e.quotient(&bad), Err(Error::NotAnIdeal { .. })));
    }

    #[test]
    fn direct_sum_and_zero() {
        let g = so3();
        let s = g.direct_sum(&g);
        assert_eq!(s.dim(), 6);
        assert_eq!(s.killing_signature().unwrap(), (0, 6, 0));
        let zero = LieAlgebra::<Q>::abelian("0", vec![]);
        assert!(g.direct_sum(&zero).same_structure(&g));
    }

    #[test]
    fn realify_abelian_line() {
        let line = LieAlgebra::<Gaussian>::abelian("line", vec!["e".into()]);
        let r = line.realify();
        assert_eq!(r.dim(), 2);
        assert_eq!(r.brackets().count(), 0);
    }

    #[test]
    fn growth_of_heisenberg() {
        let h = LieAlgebra::<Q>::from_bilinear("heis", vec!["x".into(), "y".into(), "z".into()], |u, v| {
            vec![Q::zero(), Q::zero(), &u[0] * &v[1] - &u[1] * &v[0]]
        })
        .unwrap();
        let p = Subspace::coordinate(3, [0, 1]);
        let k = Subspace::zero(3);
        assert_eq!(h.growth_vector(&p, &k).unwrap(), vec![2, 3]);
        let gr = h.associated_graded(&p, &k).unwrap();
        assert!(gr.matches(&h) && gr.is_graded());
        assert_eq!(h.growth_vector(&p, &p), Err(Error::OverlappingSubspaces(2)));
        let short = Subspace::coordinate(3, [0]);
        assert!(matches!(
            h.associated_graded(&short, &k),
            Err(Error::NotBracketGenerating { .. })
        ));
    }

    fn arb_invertible() -> impl Strategy<Value = Matrix<Q>> {
        proptest::collection::vec(-3i64..4, 9)
            .prop_map(|xs| Matrix::from_rows(xs.chunks(3).map(|c| c.iter().map(|&x| Q::from(x)).collect()).collect()))
            .prop_filter("invertible", |m| m.is_invertible().unwrap())
    }

    proptest! {
        #[test]
        fn change_basis_preserves_invariants(t in arb_invertible()) {
            let g = so3();
            let h = g.change_basis(&t, vec!["a".into(), "b".into(), "c".into()]).unwrap();
            prop_assert!(h.is_lie());
            prop_assert_eq!(h.killing_signature().unwrap(), (0, 3, 0));
            prop_assert!(check_map(&h, &g, &t).unwrap().is_isomorphism());
        }

        #[test]
        fn antisymmetry(u in proptest::collection::vec(-5i64..5, 6), v in proptest::collection::vec(-5i64..5, 6)) {
            let e = euclid();
            let u: Vec<Q> = u.into_iter().map(Q::from).collect();
            let v: Vec<Q> = v.into_iter().map(Q::from).collect();
            prop_assert!(is_zero_vec(&e.br(&u, &u)));
            let a = e.br(&u, &v);
            let b = e.br(&v, &u);
            prop_assert!(a.iter().zip(&b).all(|(x, y)| x.plus(y).is_zero()));
        }

        #[test]
        fn closure_is_idempotent(u in proptest::collection::vec(-2i64..3, 6)) {
            let e = euclid();
            let u: Vec<Q> = u.into_iter().map(Q::from).collect();
            let w = Subspace::span(6, &[u]).unwrap();
            let c = e.generated_subalgebra(&w).unwrap();
            prop_assert!(w.is_subspace_of(&c));
            prop_assert_eq!(e.generated_subalgebra(&c).unwrap(), c.clone());
            prop_assert!(e.is_subalgebra(&c).is_ok());
        }
    }
}
