//! Python bindings. Algebras cross the boundary as JSON documents and
//! scalars as canonical text (`"p/q"`, `"a+b*i"`).

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use carnot33::catalog::families::{a33_iso, c33_iso, f33_iso};
use carnot33::catalog::holonomy::holonomy_analysis;
use carnot33::document::{AlgebraDocument, AnyAlgebra};
use carnot33::equivariance::{equivariant_bilinear_basis, standard_rep, Group};
use carnot33::free::witt_dim;
use carnot33::{LieAlgebra, Rational, Subspace};

fn rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn text<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn witt_dims(n: u32, r: u32) -> Vec<usize> {
    (1..=r).map(|k| witt_dim(n, k)).collect()
}

fn model_json(family: &str, params: &[String]) -> Result<String, String> {
    let model = match (family, params) {
        ("c33", [a1, a2]) => c33_iso(&rational(a1)?, &rational(a2)?),
        ("a33", [kappa]) => a33_iso(&rational(kappa)?),
        ("f33", []) => f33_iso(),
        _ => {
            return Err(format!(
                "unknown family or arity: {family} with {} parameters",
                params.len()
            ))
        }
    }
    .map_err(text)?;
    Ok(AlgebraDocument::from_model(&model).to_json())
}

fn jacobi_ok(doc: &str) -> Result<bool, String> {
    let any = AlgebraDocument::from_json(doc).and_then(|d| d.to_any()).map_err(text)?;
    Ok(match any {
        AnyAlgebra::Rational(g) => g.is_lie(),
        AnyAlgebra::Gaussian(g) => g.is_lie(),
    })
}

fn growth_of(doc: &str, p: &str, k: &str) -> Result<Vec<usize>, String> {
    let d = AlgebraDocument::from_json(doc).map_err(text)?;
    let g: LieAlgebra<Rational> = d.to_algebra().map_err(text)?;
    let ps = d.subspace(p).map_err(text)?;
    let ks = match d.subspaces.as_ref().is_some_and(|m| m.contains_key(k)) {
        true => d.subspace(k).map_err(text)?,
        false => Subspace::zero(g.dim()),
    };
    g.growth_vector(&ps, &ks).map_err(text)
}

fn killing_of(doc: &str) -> Result<(usize, usize, usize), String> {
    let g = match AlgebraDocument::from_json(doc).and_then(|d| d.to_any()).map_err(text)? {
        AnyAlgebra::Rational(g) => g,
        AnyAlgebra::Gaussian(g) => g.realify(),
    };
    g.killing_signature().map_err(text)
}

fn trivial_holonomy(a1: &str, a2: &str) -> Result<Vec<String>, String> {
    let r = holonomy_analysis(&rational(a1)?, &rational(a2)?).map_err(text)?;
    Ok(r.trivial().iter().map(Rational::to_string).collect())
}

fn kernel_dim(v1: &str, v2: &str, w: &str, group: &str) -> Result<usize, String> {
    let g = match group {
        "O3" => Group::O3,
        "SO3" => Group::SO3,
        other => return Err(format!("unknown group {other:?}")),
    };
    let rep = |n: &str| standard_rep(n).map_err(text);
    equivariant_bilinear_basis(&rep(v1)?, &rep(v2)?, &rep(w)?, g)
        .map(|b| b.len())
        .map_err(text)
}

fn py_err(e: String) -> PyErr {
    PyValueError::new_err(e)
}

/// Layer dimensions of the free nilpotent algebra of rank `n`, step `r`.
#[pyfunction]
fn witt(n: u32, r: u32) -> Vec<usize> {
    witt_dims(n, r)
}

/// JSON document for `c33` (`a1`, `a2`), `a33` (`kappa`) or `f33` (no parameters).
#[pyfunction]
#[pyo3(signature = (family, *params))]
fn build(family: &str, params: Vec<String>) -> PyResult<String> {
    model_json(family, &params).map_err(py_err)
}

#[pyfunction]
fn verify_jacobi(doc: &str) -> PyResult<bool> {
    jacobi_ok(doc).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (doc, p = "p", k = "k"))]
fn growth(doc: &str, p: &str, k: &str) -> PyResult<Vec<usize>> {
    growth_of(doc, p, k).map_err(py_err)
}

/// `(positive, negative, zero)` inertia of the Killing form.
#[pyfunction]
fn killing(doc: &str) -> PyResult<(usize, usize, usize)> {
    killing_of(doc).map_err(py_err)
}

/// Rational `c` at which the canonical connection has trivial holonomy.
#[pyfunction]
fn holonomy(a1: &str, a2: &str) -> PyResult<Vec<String>> {
    trivial_holonomy(a1, a2).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (v1, v2, w, group = "O3"))]
fn equivariant_dimension(v1: &str, v2: &str, w: &str, group: &str) -> PyResult<usize> {
    kernel_dim(v1, v2, w, group).map_err(py_err)
}

/// Runs the command-line front end; returns `(exit_code, stdout, stderr)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("carnot33".to_string()).chain(args);
    let code = carnot33::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}

#[pymodule]
fn pycarnot33(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(witt, m)?)?;
    m.add_function(wrap_pyfunction!(build, m)?)?;
    m.add_function(wrap_pyfunction!(verify_jacobi, m)?)?;
    m.add_function(wrap_pyfunction!(growth, m)?)?;
    m.add_function(wrap_pyfunction!(killing, m)?)?;
    m.add_function(wrap_pyfunction!(holonomy, m)?)?;
    m.add_function(wrap_pyfunction!(equivariant_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witt_layers() {
        assert_eq!(witt_dims(3, 3), vec![3, 3, 8]);
    }

    #[test]
    fn documents_cross_as_json() {
        let doc = model_json("c33", &["5".into(), "-4".into()]).unwrap();
        assert!(jacobi_ok(&doc).unwrap());
        assert_eq!(growth_of(&doc, "p", "k").unwrap(), vec![3, 6, 9]);
        assert!(model_json("c33", &["5".into()]).is_err());
        assert!(model_json("a33", &["1.5".into()]).is_err());
    }

    #[test]
    fn killing_distinguishes_g2_forms() {
        let a = model_json("a33", &["1".into()]).unwrap();
        let b = model_json("a33", &["-1".into()]).unwrap();
        assert_eq!(killing_of(&a).unwrap(), (0, 14, 0));
        assert_eq!(killing_of(&b).unwrap(), (8, 6, 0));
    }

    #[test]
    fn holonomy_and_equivariance() {
        assert_eq!(trivial_holonomy("5", "-4").unwrap(), ["-2", "-1", "1", "2"]);
        assert_eq!(kernel_dim("R3", "R3", "R3", "SO3").unwrap(), 1);
        assert_eq!(kernel_dim("R3", "R3", "R3", "O3").unwrap(), 0);
        assert!(kernel_dim("R3", "R3", "R3", "U1").is_err());
    }
}
