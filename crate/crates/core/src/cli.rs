//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failed (including malformed
//! documents), 2 usage error, 3 unsupported parameters.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::catalog::ansatz::{
    build_ansatz, recover_equations, rigid_algebra, verify_rigidity, verify_solution, AnsatzKind,
};
use crate::catalog::classical::{b_algebra, g2_horizontal, so_complex, so_pq, su3, G2Form};
use crate::catalog::families::{a33_iso, c33_iso, f33_iso};
use crate::catalog::holonomy::{holonomy_analysis, holonomy_sweep, rational_samples, Roots};
use crate::catalog::isomorphisms::{build_isomorphism, IsoKind};
use crate::catalog::tables::{build_table, Case};
use crate::document::{AlgebraDocument, AnyAlgebra, MapDocument};
use crate::equivariance::{
    default_lambda_samples, equivariant_bilinear_basis, invariant_ideals_f33, standard_rep, Group,
};
use crate::error::Error;
use crate::free::{
    a33_carnot, c33_carnot, carnot_model, carnot_quotients, cn3_carnot, f33_model, free_nilpotent, ideal_a, ideal_b,
    quaternionic_step2, witt_dim,
};
use crate::lie::{check_map, LieAlgebra};
use crate::model::ModelAlgebra;
use crate::scalar::{Rational, Scalar};
use crate::subspace::Subspace;

type Q = Rational;

#[derive(Parser, Debug)]
#[command(name = "carnot33", version, about = "Exact model-space Lie algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an algebra and write its JSON document.
    Build(BuildArgs),
    /// Build a verified isomorphism and write the map with both algebras.
    Isomorphism(IsoArgs),
    /// Re-verify documents.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Holonomy analysis of the canonical connections on C33(a1, a2).
    Holonomy {
        #[arg(long, allow_hyphen_values = true, value_parser = rational)]
        a1: Q,
        #[arg(long, allow_hyphen_values = true, value_parser = rational)]
        a2: Q,
        /// Also certify every c = p/q with |c| <= 3, q <= 3.
        #[arg(long)]
        sweep: bool,
    },
    /// Solve for equivariant bilinear maps V1 x V2 -> W.
    Equivariant {
        #[arg(long)]
        v1: String,
        #[arg(long)]
        v2: String,
        #[arg(long)]
        w: String,
        #[arg(long, default_value = "O3")]
        group: String,
    },
    /// Carnot algebras with nilpotentization a quotient of f[n,r].
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Growth vector of a document's horizontal subspace.
    Growth {
        file: PathBuf,
        #[arg(long, default_value = "p")]
        p: String,
        #[arg(long, default_value = "k")]
        k: String,
    },
    /// Killing form signature (positive, negative, zero).
    Killing { file: PathBuf },
    /// Layer dimensions of the free nilpotent algebra.
    Witt {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
    },
    /// Symbolic Jacobi analysis of the bracket ansatz.
    Rigidity {
        #[arg(long)]
        kind: String,
    },
    /// Growth of the left-invariant structures on the g2 forms.
    G2Horizontal {
        #[arg(long)]
        form: String,
    },
}

#[derive(Args, Debug)]
struct BuildArgs {
    /// c33, a33, f33, c33-carnot, a33-carnot, f33-carnot, free, cn3, table1,
    /// table2, table3, so, so-complex, b, g2-split, g2-compact, su3, quaternionic
    family: String,
    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    a1: Option<Q>,
    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    a2: Option<Q>,
    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    kappa: Option<Q>,
    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    k: Option<Q>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    case: Option<String>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct IsoArgs {
    /// lemma_bk, lemma_complex, lemma_exceptional, a33_to_g2c, a33_to_g2s,
    /// scaling_c33, scaling_a33, b1_split
    kind: String,
    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    a1: Option<Q>,
    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    a2: Option<Q>,
    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    kappa: Option<Q>,
    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    lambda: Option<Q>,
    #[arg(long)]
    map: Option<PathBuf>,
    #[arg(long)]
    from: Option<PathBuf>,
    #[arg(long)]
    to: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Check the Jacobi identity on every basis triple.
    Jacobi { file: PathBuf },
    /// Check that a map document is an isomorphism between two algebras.
    Iso {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
    },
}

fn rational(s: &str) -> Result<Q, String> {
    s.parse::<Q>().map_err(|e| format!("{e}"))
}

enum Failure {
    Usage(String),
    Verification(String),
    Unsupported(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::OffLocus(_) | Error::IrrationalRadical { .. } | Error::UnsupportedRing(_) => {
                Failure::Unsupported(e.to_string())
            }
            Error::UnknownName(_) => Failure::Usage(e.to_string()),
            _ => Failure::Verification(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

/// Runs one invocation; `args[0]` is the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let (code, text, diag) = match dispatch(cli.command) {
        Ok(text) => (0, text, String::new()),
        Err(Failure::Verification(m)) => (1, String::new(), m),
        Err(Failure::Usage(m)) => (2, String::new(), m),
        Err(Failure::Unsupported(m)) => (3, String::new(), m),
    };
    let _ = out.write_all(text.as_bytes());
    if !diag.is_empty() {
        let _ = writeln!(err, "error: {diag}");
    }
    code
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Build(a) => build(a),
        Command::Isomorphism(a) => isomorphism(a),
        Command::Verify(VerifyCommand::Jacobi { file }) => verify_jacobi(&file),
        Command::Verify(VerifyCommand::Iso { map, from, to }) => verify_iso(&map, &from, &to),
        Command::Holonomy { a1, a2, sweep } => holonomy(&a1, &a2, sweep),
        Command::Equivariant { v1, v2, w, group } => equivariant(&v1, &v2, &w, &group),
        Command::Classify { n, r } => classify(n, r),
        Command::Growth { file, p, k } => growth(&file, &p, &k),
        Command::Killing { file } => killing(&file),
        Command::Witt { n, r } => {
            if n == 0 || r == 0 {
                return Err(Failure::Usage("--n and --r must be positive".into()));
            }
            let dims: Vec<String> = (1..=r).map(|k| witt_dim(n, k).to_string()).collect();
            Ok(format!("{}\n", dims.join(" ")))
        }
        Command::Rigidity { kind } => rigidity(&kind),
        Command::G2Horizontal { form } => {
            let form: G2Form = form.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
            let h = g2_horizontal(form)?;
            Ok(format!(
                "{:?} g2: horizontal dim {}, growth {}\n",
                form,
                h.p.dim(),
                tuple(&h.growth)
            ))
        }
    }
}

fn tuple(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

fn need<T: Clone>(v: &Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
    v.clone()
        .ok_or_else(|| Failure::Usage(format!("{family} needs --{flag}")))
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write_or_return(path: &Option<PathBuf>, text: String, summary: String) -> Outcome {
    match path {
        Some(p) => {
            std::fs::write(p, &text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display())))?;
            Ok(summary)
        }
        None => Ok(text),
    }
}

fn load(path: &Path) -> Result<AlgebraDocument, Failure> {
    Ok(AlgebraDocument::from_json(&read(path)?)?)
}

fn model_doc(m: &ModelAlgebra<Q>) -> AlgebraDocument {
    AlgebraDocument::from_model(m)
}

fn build(a: BuildArgs) -> Outcome {
    let f = a.family.as_str();
    let doc = match f {
        "c33" => model_doc(&c33_iso(&need(&a.a1, "a1", f)?, &need(&a.a2, "a2", f)?)?),
        "a33" => model_doc(&a33_iso(&need(&a.kappa, "kappa", f)?)?),
        "f33" => model_doc(&f33_iso()?),
        "c33-carnot" => model_doc(&carnot_model(c33_carnot())?),
        "a33-carnot" => model_doc(&carnot_model(a33_carnot())?),
        "f33-carnot" => model_doc(&carnot_model(f33_model())?),
        "free" => {
            let (n, r) = (need(&a.n, "n", f)?, need(&a.r, "r", f)?);
            if n == 0 || r == 0 || n > 6 || r > 4 {
                return Err(Failure::Unsupported(format!(
                    "free algebra f[{n},{r}] outside n <= 6, r <= 4"
                )));
            }
            let g = free_nilpotent(n, r);
            let p = Subspace::coordinate(g.dim(), 0..n);
            model_doc(&ModelAlgebra::group(g, p, "free")?)
        }
        "cn3" => {
            let n = need(&a.n, "n", f)?;
            if !(2..=5).contains(&n) {
                return Err(Failure::Unsupported(format!("C[{n},3] needs 2 <= n <= 5")));
            }
            model_doc(&cn3_carnot(n))
        }
        "table1" | "table2" | "table3" => {
            let table = f.as_bytes()[5] - b'0';
            let case = match &a.case {
                Some(c) => Some(c.parse::<Case>().map_err(|e| Failure::Usage(e.to_string()))?),
                None => None,
            };
            let n = a.n.unwrap_or(3);
            let t = build_table(table, case, &need(&a.a1, "a1", f)?, &need(&a.a2, "a2", f)?, n)?;
            model_doc(&t.model)
        }
        "so" => AlgebraDocument::from_algebra(&so_pq(need(&a.p, "p", f)?, a.q.unwrap_or(0))?),
        "so-complex" => AlgebraDocument::from_algebra(&so_complex(need(&a.n, "n", f)?)?),
        "b" => AlgebraDocument::from_algebra(&b_algebra(&need(&a.k, "k", f)?)),
        "g2-split" | "g2-compact" => {
            let form = if f == "g2-split" {
                G2Form::Split
            } else {
                G2Form::Compact
            };
            let h = g2_horizontal(form)?;
            AlgebraDocument::from_algebra(&h.algebra).with_subspace("p", &h.p)
        }
        "su3" => AlgebraDocument::from_algebra(&su3()),
        "quaternionic" => model_doc(&quaternionic_step2()),
        other => return Err(Failure::Usage(format!("unknown family {other:?}"))),
    };
    let summary = format!("wrote {} (dim {})\n", doc.name, doc.dim);
    write_or_return(&a.output, doc.to_json(), summary)
}

fn isomorphism(a: IsoArgs) -> Outcome {
    let kind: IsoKind = a.kind.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
    let mut params = BTreeMap::new();
    for (name, v) in [("a1", &a.a1), ("a2", &a.a2), ("kappa", &a.kappa), ("lambda", &a.lambda)] {
        if kind.params().contains(&name) {
            params.insert(name.to_string(), need(v, name, kind.name())?);
        }
    }
    let map = build_isomorphism(kind, &params)?;
    let map_text = MapDocument::from_map(&map).to_json();
    for (path, g) in [(&a.from, &map.source), (&a.to, &map.target)] {
        if let Some(p) = path {
            std::fs::write(p, AlgebraDocument::from_algebra(g).to_json())
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display())))?;
        }
    }
    let summary = format!("{kind}: {} -> {} verified\n", map.source.name(), map.target.name());
    write_or_return(&a.map, map_text, summary)
}

fn jacobi_report<F: Scalar>(g: &LieAlgebra<F>) -> Outcome {
    let r = g.jacobi_defect();
    match r.first() {
        None => Ok(format!("jacobi ok: {} (dim {})\n", g.name(), g.dim())),
        Some((i, j, k)) => {
            let l = g.labels();
            Err(Failure::Verification(format!(
                "jacobi fails on ({}, {}, {}) in {}",
                l[i],
                l[j],
                l[k],
                g.name()
            )))
        }
    }
}

fn verify_jacobi(path: &Path) -> Outcome {
    match load(path)?.to_any()? {
        AnyAlgebra::Rational(g) => jacobi_report(&g),
        AnyAlgebra::Gaussian(g) => jacobi_report(&g),
    }
}

fn verify_iso(map: &Path, from: &Path, to: &Path) -> Outcome {
    let md = MapDocument::from_json(&read(map)?)?;
    let src: LieAlgebra<Q> = load(from)?.to_algebra()?;
    let dst: LieAlgebra<Q> = load(to)?.to_algebra()?;
    if md.source != src.name() || md.target != dst.name() {
        return Err(Failure::Verification(format!(
            "map is {} -> {}, files hold {} and {}",
            md.source,
            md.target,
            src.name(),
            dst.name()
        )));
    }
    let check = check_map(&src, &dst, &md.to_matrix()?)?;
    if let Some((i, j)) = check.counterexample {
        let l = src.labels();
        return Err(Failure::Verification(format!(
            "bracket [{}, {}] is not preserved",
            l[i], l[j]
        )));
    }
    if !check.bijective {
        return Err(Failure::Verification("map is a homomorphism but not bijective".into()));
    }
    Ok(format!("isomorphism ok: {} -> {}\n", src.name(), dst.name()))
}

fn set(v: &[Q]) -> String {
    let parts: Vec<String> = v.iter().map(Q::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn holonomy(a1: &Q, a2: &Q, sweep: bool) -> Outcome {
    let r = holonomy_analysis(a1, a2)?;
    let mut s = String::new();
    let _ = writeln!(s, "C33({a1}, {a2})");
    match &r.roots {
        Roots::Rational(ts) => {
            let _ = writeln!(s, "roots of t^2 - a1 t - a2 (t = c^2): {}", set(ts));
            if !r.rejected.is_empty() {
                let _ = writeln!(s, "rejected (negative): {}", set(&r.rejected));
            }
            let irrational: Vec<Q> = r.accepted.iter().filter(|t| t.sqrt().is_none()).cloned().collect();
            if !irrational.is_empty() {
                let _ = writeln!(s, "real but irrational c for c^2 in {}", set(&irrational));
            }
        }
        Roots::Irrational { discriminant } => {
            let _ = writeln!(s, "roots irrational: t = (a1 +- sqrt({discriminant}))/2");
        }
        Roots::Complex { discriminant } => {
            let _ = writeln!(s, "no real roots (discriminant {discriminant}); no real c");
        }
    }
    let _ = writeln!(s, "real c exists: {}", if r.real_c_exists() { "yes" } else { "no" });
    let _ = writeln!(s, "trivial holonomy at c in {}", set(&r.trivial()));
    for c in &r.certificates {
        let verdict = if c.trivial() { "trivial" } else { "non-trivial" };
        let _ = writeln!(
            s,
            "  c = {}: closure dim {}, meets k in dim {} -> {verdict}",
            c.c, c.closure_dim, c.meets_k
        );
    }
    if sweep {
        let samples = rational_samples(3, 3);
        let certs = holonomy_sweep(a1, a2, &samples)?;
        let trivial: Vec<Q> = certs.iter().filter(|c| c.trivial()).map(|c| c.c.clone()).collect();
        let _ = writeln!(
            s,
            "sweep over {} rational c: trivial at {}",
            samples.len(),
            set(&trivial)
        );
    }
    Ok(s)
}

fn equivariant(v1: &str, v2: &str, w: &str, group: &str) -> Outcome {
    let g = match group {
        "O3" => Group::O3,
        "SO3" => Group::SO3,
        other => return Err(Failure::Usage(format!("unknown group {other:?}"))),
    };
    let rep = |n: &str| standard_rep(n).map_err(|e| Failure::Usage(e.to_string()));
    let basis = equivariant_bilinear_basis(&rep(v1)?, &rep(v2)?, &rep(w)?, g)?;
    let mats: Vec<Vec<Vec<String>>> = basis
        .iter()
        .map(|b| {
            b.matrix
                .row_list()
                .iter()
                .map(|r| r.iter().map(Q::to_string).collect())
                .collect()
        })
        .collect();
    let doc = json!({ "v1": v1, "v2": v2, "w": w, "group": group, "dimension": basis.len(), "basis": mats });
    let mut text = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    text.push('\n');
    Ok(text)
}

fn classify(n: usize, r: usize) -> Outcome {
    if (n, r) != (3, 3) {
        return Err(Failure::Unsupported(format!(
            "classification is implemented for n = 3, r = 3, not ({n}, {r})"
        )));
    }
    let ideals = invariant_ideals_f33(&default_lambda_samples())?;
    let q = carnot_quotients()?;
    let (a, b) = (ideal_a(), ideal_b());
    let name = |s: &Subspace<Q>| {
        if s.is_zero() {
            "0"
        } else if *s == a {
            "a"
        } else if *s == b {
            "b"
        } else {
            "?"
        }
    };
    let names: Vec<String> = ideals
        .iter()
        .map(|s| format!("{} (dim {})", name(s), s.dim()))
        .collect();
    let mut s = format!("invariant ideals of f[3,3] avoiding the center: {}\n", names.join(", "));
    for (label, g) in [("f[3,3]", &q.free), ("f[3,3]/a", &q.a33), ("f[3,3]/b", &q.c33)] {
        let m = carnot_model(g.clone())?;
        let _ = writeln!(s, "{label}: dim {}, growth {}", g.dim(), tuple(&m.growth_vector()?));
    }
    Ok(s)
}

fn growth(path: &Path, p: &str, k: &str) -> Outcome {
    let doc = load(path)?;
    let g: LieAlgebra<Q> = doc.to_algebra()?;
    let ps = doc.subspace(p)?;
    let has_k = doc.subspaces.as_ref().is_some_and(|m| m.contains_key(k));
    let ks = if has_k {
        doc.subspace(k)?
    } else {
        Subspace::zero(g.dim())
    };
    Ok(format!("{}\n", tuple(&g.growth_vector(&ps, &ks)?)))
}

fn killing(path: &Path) -> Outcome {
    let g = match load(path)?.to_any()? {
        AnyAlgebra::Rational(g) => g,
        AnyAlgebra::Gaussian(g) => g.realify(),
    };
    let (pos, neg, zero) = g.killing_signature()?;
    Ok(format!("({pos},{neg},{zero})\n"))
}

fn rigidity(kind: &str) -> Outcome {
    let kind: AnsatzKind = kind.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
    let mut s = String::new();
    let mut ok = true;
    match kind {
        AnsatzKind::A33 => {
            let ansatz = build_ansatz(kind)?;
            for (e, (name, found)) in ansatz.equations.iter().zip(recover_equations(&ansatz)?) {
                ok &= found;
                let t = e.triple.expect("A33 equations carry triples");
                let _ = writeln!(
                    s,
                    "{name} from triple ({}, {}, {}): {}",
                    t.0,
                    t.1,
                    t.2,
                    if found { "recovered" } else { "NOT recovered" }
                );
            }
            let rep = verify_solution(kind)?;
            ok &= rep.holds();
            let samples: Vec<String> = rep
                .samples
                .iter()
                .map(|(k, z)| format!("{k}:{}", if *z { "0" } else { "nonzero" }))
                .collect();
            let _ = writeln!(s, "solved coefficients, defect at kappa samples: {}", samples.join(" "));
            let _ = writeln!(
                s,
                "solved coefficients, symbolic defect identically zero: {}",
                rep.identically_zero
            );
        }
        AnsatzKind::F33 => {
            let zero = verify_solution(kind)?;
            ok &= zero.holds();
            let _ = writeln!(s, "all-zero assignment is a Lie algebra: {}", zero.holds());
            let t = verify_rigidity()?;
            let missing: Vec<&str> = t.in_span.iter().filter(|(_, f)| !f).map(|(n, _)| n.as_str()).collect();
            ok &= missing.is_empty();
            if missing.is_empty() {
                let _ = writeln!(s, "Eq1..Eq18 all lie in the span of the Jacobi residuals");
            } else {
                let _ = writeln!(s, "not in the residual span: {}", missing.join(", "));
            }
            for step in &t.steps {
                let _ = writeln!(s, "  {step}");
            }
            if let Some(f4) = &t.f4_before_vanishing {
                let _ = writeln!(s, "f4 = {f4} before c2 is forced to vanish");
            }
            ok &= t.all_zero();
            let _ = writeln!(s, "all 18 coefficients zero: {}", t.all_zero());
            let g = rigid_algebra(&t)?;
            let m = f33_iso()?;
            let _ = writeln!(
                s,
                "forced algebra: dim {}, growth {}",
                g.dim(),
                tuple(&m.growth_vector()?)
            );
        }
    }
    if ok {
        Ok(s)
    } else {
        Err(Failure::Verification(s))
    }
}
