//! JSON interchange for algebras, models and linear maps.
//!
//! Scalars are strings in the exact grammar (`"-3/4"`, `"1/2-5*i"`); no JSON
//! numbers other than indices appear. Import rejects anything that would not
//! re-export to the same bytes, so a successful import→export is always the
//! identity.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, LinearMap};
use crate::matrix::Matrix;
use crate::model::ModelAlgebra;
use crate::scalar::{Gaussian, Rational, Scalar};
use crate::subspace::Subspace;

/// Scalars that have a canonical text form.
pub trait DocScalar: Scalar + FromStr {
    const TAG: &'static str;
}

impl DocScalar for Rational {
    const TAG: &'static str = "rational";
}

impl DocScalar for Gaussian {
    const TAG: &'static str = "gaussian";
}

fn parse_scalar<F: DocScalar>(s: &str) -> Result<F> {
    let v: F = s
        .parse()
        .map_err(|_| Error::Parse(format!("bad {} scalar {s:?}", F::TAG)))?;
    if v.to_string() != s {
        return Err(Error::Parse(format!(
            "scalar {s:?} is not in canonical form (expected {v:?})"
        )));
    }
    Ok(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub k: usize,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<Term>,
}

/// A subspace as coordinate indices when possible, else its reduced basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SubspaceDoc {
    Indices(Vec<usize>),
    Basis(Vec<Vec<String>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub dim: usize,
    pub scalars: String,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subspaces: Option<BTreeMap<String, SubspaceDoc>>,
}

/// An imported algebra in whichever scalar ring the document declares.
#[derive(Clone, Debug)]
pub enum AnyAlgebra {
    Rational(LieAlgebra<Rational>),
    Gaussian(LieAlgebra<Gaussian>),
}

impl AnyAlgebra {
    pub fn name(&self) -> &str {
        match self {
            AnyAlgebra::Rational(g) => g.name(),
            AnyAlgebra::Gaussian(g) => g.name(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyAlgebra::Rational(g) => g.dim(),
            AnyAlgebra::Gaussian(g) => g.dim(),
        }
    }
}

fn subspace_doc<F: DocScalar>(s: &Subspace<F>) -> SubspaceDoc {
    match s.coordinate_indices() {
        Some(ix) => SubspaceDoc::Indices(ix),
        None => SubspaceDoc::Basis(
            s.basis_vectors()
                .iter()
                .map(|r| r.iter().map(F::to_string).collect())
                .collect(),
        ),
    }
}

impl AlgebraDocument {
    pub fn from_algebra<F: DocScalar>(g: &LieAlgebra<F>) -> Self {
        let brackets = g
            .brackets()
            .map(|((i, j), terms)| BracketEntry {
                i,
                j,
                terms: terms
                    .iter()
                    .map(|(k, c)| Term {
                        k: *k,
                        c: c.to_string(),
                    })
                    .collect(),
            })
            .collect();
        AlgebraDocument {
            name: g.name().to_string(),
            params: g.params().iter().map(|(k, v)| (k.clone(), v.to_string())).collect(),
            dim: g.dim(),
            scalars: F::TAG.to_string(),
            basis: g.labels().to_vec(),
            brackets,
            subspaces: None,
        }
    }

    pub fn from_model<F: DocScalar>(m: &ModelAlgebra<F>) -> Self {
        let mut d = Self::from_algebra(&m.algebra);
        d.subspaces = Some(
            m.subspaces()
                .into_iter()
                .map(|(n, s)| (n.to_string(), subspace_doc(s)))
                .collect(),
        );
        d
    }

    pub fn with_subspace<F: DocScalar>(mut self, name: &str, s: &Subspace<F>) -> Self {
        self.subspaces
            .get_or_insert_with(BTreeMap::new)
            .insert(name.to_string(), subspace_doc(s));
        self
    }

    /// Pretty JSON, two-space indent, trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("algebra document: {e}")))
    }

    fn check_shape(&self) -> Result<()> {
        let n = self.dim;
        if self.basis.len() != n {
            return Err(Error::Parse(format!(
                "basis has {} labels for dim {n}",
                self.basis.len()
            )));
        }
        let mut prev: Option<(usize, usize)> = None;
        for b in &self.brackets {
            if b.i >= b.j || b.j >= n {
                return Err(Error::Parse(format!("bracket ({}, {}) needs i < j < {n}", b.i, b.j)));
            }
            if prev.is_some_and(|p| p >= (b.i, b.j)) {
                return Err(Error::Parse(format!(
                    "bracket ({}, {}) out of ascending order",
                    b.i, b.j
                )));
            }
            prev = Some((b.i, b.j));
            if b.terms.is_empty() {
                return Err(Error::Parse(format!("bracket ({}, {}) has no terms", b.i, b.j)));
            }
            for w in b.terms.windows(2) {
                if w[0].k >= w[1].k {
                    return Err(Error::Parse(format!(
                        "terms of ({}, {}) not strictly ascending",
                        b.i, b.j
                    )));
                }
            }
            if let Some(t) = b.terms.iter().find(|t| t.k >= n) {
                return Err(Error::Parse(format!("term index {} out of range", t.k)));
            }
        }
        Ok(())
    }

    /// Imports with the declared scalar ring; errors if the ring differs.
    pub fn to_algebra<F: DocScalar>(&self) -> Result<LieAlgebra<F>> {
        if self.scalars != F::TAG {
            return Err(Error::Parse(format!(
                "document scalars are {}, expected {}",
                self.scalars,
                F::TAG
            )));
        }
        self.check_shape()?;
        let mut table = BTreeMap::new();
        for b in &self.brackets {
            let terms = b
                .terms
                .iter()
                .map(|t| {
                    let c: F = parse_scalar(&t.c)?;
                    if c.is_zero() {
                        return Err(Error::Parse(format!("zero coefficient in ({}, {})", b.i, b.j)));
                    }
                    Ok((t.k, c))
                })
                .collect::<Result<Vec<_>>>()?;
            table.insert((b.i, b.j), terms);
        }
        let params = self
            .params
            .iter()
            .map(|(k, v)| Ok((k.clone(), parse_scalar::<Rational>(v)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        let g = LieAlgebra::from_structure(self.name.clone(), self.basis.clone(), &table)?.with_params(params);
        Ok(g)
    }

    pub fn to_any(&self) -> Result<AnyAlgebra> {
        match self.scalars.as_str() {
            "rational" => Ok(AnyAlgebra::Rational(self.to_algebra()?)),
            "gaussian" => Ok(AnyAlgebra::Gaussian(self.to_algebra()?)),
            other => Err(Error::Parse(format!("unknown scalar ring {other:?}"))),
        }
    }

    /// Named subspace, rejecting non-canonical bases.
    pub fn subspace<F: DocScalar>(&self, name: &str) -> Result<Subspace<F>> {
        let doc = self
            .subspaces
            .as_ref()
            .and_then(|m| m.get(name))
            .ok_or_else(|| Error::UnknownName(format!("subspace {name}")))?;
        let s = match doc {
            SubspaceDoc::Indices(ix) => {
                if ix.iter().any(|&i| i >= self.dim) || ix.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::Parse(format!(
                        "subspace {name}: indices must be ascending and < {}",
                        self.dim
                    )));
                }
                Subspace::coordinate(self.dim, ix.iter().copied())
            }
            SubspaceDoc::Basis(rows) => {
                let vs = rows
                    .iter()
                    .map(|r| {
                        if r.len() != self.dim {
                            return Err(Error::Parse(format!(
                                "subspace {name}: row length {} != {}",
                                r.len(),
                                self.dim
                            )));
                        }
                        r.iter().map(|c| parse_scalar::<F>(c)).collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Subspace::span(self.dim, &vs)?
            }
        };
        if subspace_doc(&s) != *doc {
            return Err(Error::Parse(format!(
                "subspace {name} is not in reduced canonical form"
            )));
        }
        Ok(s)
    }

    /// Full model round trip: algebra plus its `p` and `k` subspaces.
    pub fn to_model(&self) -> Result<ModelAlgebra<Rational>> {
        let g = self.to_algebra::<Rational>()?;
        let p = self.subspace("p")?;
        let k = self
            .subspace("k")
            .or_else(|_| Ok::<_, Error>(Subspace::zero(self.dim)))?;
        ModelAlgebra::new(g, p, k, self.name.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    pub source: String,
    pub target: String,
    pub scalars: String,
    /// `target.dim` rows of `source.dim` entries.
    pub matrix: Vec<Vec<String>>,
}

impl MapDocument {
    pub fn from_map<F: DocScalar>(m: &LinearMap<F>) -> Self {
        MapDocument {
            source: m.source.name().to_string(),
            target: m.target.name().to_string(),
            scalars: F::TAG.to_string(),
            matrix: m
                .matrix
                .row_list()
                .iter()
                .map(|r| r.iter().map(F::to_string).collect())
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("map document: {e}")))
    }

    pub fn to_matrix<F: DocScalar>(&self) -> Result<Matrix<F>> {
        if self.scalars != F::TAG {
            return Err(Error::Parse(format!(
                "map scalars are {}, expected {}",
                self.scalars,
                F::TAG
            )));
        }
        let rows = self
            .matrix
            .iter()
            .map(|r| r.iter().map(|c| parse_scalar::<F>(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if let Some(w) = rows.first().map(Vec::len) {
            if rows.iter().any(|r| r.len() != w) {
                return Err(Error::Parse("ragged map matrix".into()));
            }
        }
        Ok(Matrix::from_rows(rows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::classical::so_complex_gaussian;
    use crate::catalog::families::{c33_iso, f33_iso};

    fn roundtrip(text: &str) -> String {
        let d = AlgebraDocument::from_json(text).unwrap();
        let g = d.to_algebra::<Rational>().unwrap();
        let mut back = AlgebraDocument::from_algebra(&g);
        back.subspaces = d.subspaces.clone();
        back.to_json()
    }

    #[test]
    fn model_roundtrip_is_byte_exact() {
        let m = c33_iso(&Rational::from(5), &Rational::from(-4)).unwrap();
        let text = AlgebraDocument::from_model(&m).to_json();
        assert!(text.ends_with("}\n"));
        assert_eq!(roundtrip(&text), text);
        let d = AlgebraDocument::from_json(&text).unwrap();
        let back = d.to_model().unwrap();
        assert_eq!(back.p, m.p);
        assert_eq!(back.k, m.k);
        assert_eq!(back.algebra.params()["a2"], Rational::from(-4));
    }

    #[test]
    fn sample_bracket_in_the_document() {
        let m = c33_iso(&Rational::from(5), &Rational::from(-4)).unwrap();
        let d = AlgebraDocument::from_model(&m);
        // [x1, z2] = 5 y3 - 4 w3
        let b = d.brackets.iter().find(|b| (b.i, b.j) == (0, 7)).unwrap();
        assert_eq!(
            b.terms,
            vec![Term { k: 5, c: "5".into() }, Term { k: 11, c: "-4".into() }]
        );
    }

    #[test]
    fn gaussian_documents() {
        let g = so_complex_gaussian(3).algebra("so(3,C)").unwrap();
        let text = AlgebraDocument::from_algebra(&g).to_json();
        assert!(text.contains("\"gaussian\""));
        let back = AlgebraDocument::from_json(&text).unwrap().to_any().unwrap();
        assert!(matches!(back, AnyAlgebra::Gaussian(_)));
    }

    #[test]
    fn non_canonical_input_is_rejected() {
        let m = f33_iso().unwrap();
        let text = AlgebraDocument::from_model(&m).to_json();
        let swapped = text.replacen("\"c\": \"1\"", "\"c\": \"2/2\"", 1);
        assert!(AlgebraDocument::from_json(&swapped)
            .unwrap()
            .to_algebra::<Rational>()
            .is_err());
        let floaty = text.replacen("\"c\": \"1\"", "\"c\": 1", 1);
        assert!(AlgebraDocument::from_json(&floaty).is_err());
    }
}
