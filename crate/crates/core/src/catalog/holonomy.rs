//! When does `p_c = {(x, 0, 0, cx)}` generate a subalgebra transverse to `k`?
//!
//! The answer is `c⁴ − a1 c² − a2 = 0`. Each rational candidate is certified
//! independently by computing the closure of `p_c` and intersecting with `k`.

use rayon::prelude::*;

use crate::catalog::families::{c33_iso, c33_layout};
use crate::catalog::tables::discriminant;
use crate::error::Result;
use crate::lie::LieAlgebra;
use crate::scalar::{cmp_rational, Rational};
use crate::subspace::Subspace;

type Q = Rational;

/// Closure data for one `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub c: Q,
    pub closure_dim: usize,
    /// `dim(closure(p_c) ∩ k)`.
    pub meets_k: usize,
}

impl Certificate {
    pub fn trivial(&self) -> bool {
        self.meets_k == 0
    }
}

/// Roots `t = c²` of `t² − a1 t − a2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Roots {
    /// Rational roots, ascending, without repetition.
    Rational(Vec<Q>),
    /// Real but irrational: `(a1 ± √disc)/2`.
    Irrational { discriminant: Q },
    /// No real root.
    Complex { discriminant: Q },
}

#[derive(Clone, Debug)]
pub struct HolonomyReport {
    pub a1: Q,
    pub a2: Q,
    pub roots: Roots,
    /// Roots `t ≥ 0`; negative ones admit no real `c`.
    pub accepted: Vec<Q>,
    pub rejected: Vec<Q>,
    /// Rational `c` with `c² ∈ accepted`, ascending.
    pub candidates: Vec<Q>,
    /// One certificate per candidate, plus `c = 0`.
    pub certificates: Vec<Certificate>,
}

impl HolonomyReport {
    /// `c` values certified trivial, ascending.
    pub fn trivial(&self) -> Vec<Q> {
        self.certificates
            .iter()
            .filter(|c| c.trivial())
            .map(|c| c.c.clone())
            .collect()
    }

    /// Whether some real `c` exists (possibly irrational).
    pub fn real_c_exists(&self) -> bool {
        match &self.roots {
            Roots::Rational(_) => !self.accepted.is_empty(),
            Roots::Irrational { .. } => {
                // larger root (a1 + √d)/2 is ≥ 0 iff a1 ≥ 0 or a2 ≥ 0
                !self.a1.is_negative() || !self.a2.is_negative()
            }
            Roots::Complex { .. } => false,
        }
    }
}

/// `{(x, 0, 0, cx)}` in `(x, y, z, w)` coordinates.
pub fn p_c(c: &Q) -> Subspace<Q> {
    let l = c33_layout();
    let vs: Vec<Vec<Q>> = (0..3)
        .map(|a| {
            let mut v = vec![Q::zero(); l.dim()];
            v[l.offset("x") + a] = Q::one();
            v[l.offset("w") + a] = c.clone();
            v
        })
        .collect();
    Subspace::span(l.dim(), &vs).expect("three independent vectors")
}

pub fn certify(alg: &LieAlgebra<Q>, k: &Subspace<Q>, c: &Q) -> Result<Certificate> {
    let closure = alg.generated_subalgebra(&p_c(c))?;
    let meets_k = closure.intersection(k)?.dim();
    Ok(Certificate {
        c: c.clone(),
        closure_dim: closure.dim(),
        meets_k,
    })
}

/// `c⁴ − a1 c² − a2 = 0`.
pub fn predicted_trivial(a1: &Q, a2: &Q, c: &Q) -> bool {
    let t = c * c;
    (&t * &t - a1 * &t - a2).is_zero()
}

pub fn holonomy_analysis(a1: &Q, a2: &Q) -> Result<HolonomyReport> {
    let d = discriminant(a1, a2);
    let roots = if d.is_negative() {
        Roots::Complex { discriminant: d }
    } else {
        match d.sqrt() {
            Some(r) => {
                let two = Q::from(2);
                let mut ts = vec![(a1 - &r) / &two, (a1 + &r) / &two];
                ts.dedup();
                Roots::Rational(ts)
            }
            None => Roots::Irrational { discriminant: d },
        }
    };
    let (accepted, rejected): (Vec<Q>, Vec<Q>) = match &roots {
        Roots::Rational(ts) => ts.iter().cloned().partition(|t| !t.is_negative()),
        _ => (vec![], vec![]),
    };
    let mut candidates: Vec<Q> = accepted
        .iter()
        .filter_map(|t| t.sqrt())
        .flat_map(|c| if c.is_zero() { vec![c] } else { vec![-c.clone(), c] })
        .collect();
    candidates.sort_by(cmp_rational);
    candidates.dedup();

    let model = c33_iso(a1, a2)?;
    let mut to_check = candidates.clone();
    if !to_check.iter().any(Q::is_zero) {
        to_check.push(Q::zero());
    }
    to_check.sort_by(cmp_rational);
    let certificates = to_check
        .par_iter()
        .map(|c| certify(&model.algebra, &model.k, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(HolonomyReport {
        a1: a1.clone(),
        a2: a2.clone(),
        roots,
        accepted,
        rejected,
        candidates,
        certificates,
    })
}

/// All `p/q` with `|p/q| ≤ bound`, `1 ≤ q ≤ max_denom`, ascending.
pub fn rational_samples(bound: i64, max_denom: i64) -> Vec<Q> {
    let mut out: Vec<Q> = (1..=max_denom)
        .flat_map(|q| (-bound * q..=bound * q).map(move |p| Q::new(p, q)))
        .collect();
    out.sort_by(cmp_rational);
    out.dedup();
    out
}

/// Certificates at every sample `c`, in parallel.
pub fn holonomy_sweep(a1: &Q, a2: &Q, samples: &[Q]) -> Result<Vec<Certificate>> {
    let model = c33_iso(a1, a2)?;
    samples
        .par_iter()
        .map(|c| certify(&model.algebra, &model.k, c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&n| Q::from(n)).collect()
    }

    #[test]
    fn two_positive_roots() {
        let r = holonomy_analysis(&Q::from(5), &Q::from(-4)).unwrap();
        assert_eq!(r.roots, Roots::Rational(qs(&[1, 4])));
        assert_eq!(r.trivial(), qs(&[-2, -1, 1, 2]));
        let zero = r.certificates.iter().find(|c| c.c.is_zero()).unwrap();
        assert!(!zero.trivial());
    }

    #[test]
    fn one_root_rejected() {
        let r = holonomy_analysis(&Q::zero(), &Q::one()).unwrap();
        assert_eq!(r.accepted, qs(&[1]));
        assert_eq!(r.rejected, qs(&[-1]));
        assert_eq!(r.trivial(), qs(&[-1, 1]));
    }

    #[test]
    fn no_real_c() {
        let r = holonomy_analysis(&Q::zero(), &Q::from(-1)).unwrap();
        assert!(matches!(r.roots, Roots::Complex { .. }));
        assert!(!r.real_c_exists());
        assert!(r.trivial().is_empty());
    }

    #[test]
    fn irrational_roots_are_reported_as_data() {
        let r = holonomy_analysis(&Q::one(), &Q::one()).unwrap();
        assert_eq!(
            r.roots,
            Roots::Irrational {
                discriminant: Q::from(5)
            }
        );
        assert!(r.real_c_exists());
    }

    #[test]
    fn samples_grid() {
        let s = rational_samples(3, 3);
        // 0, ±1..±3 integers plus the thirds and halves strictly between
        assert_eq!(s.len(), 1 + 2 * (3 + 3 + 6));
    }
}
