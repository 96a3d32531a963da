//! Sparse multivariate polynomials with rational coefficients.
//!
//! Used for ansatz brackets whose structure constants are unknown
//! coefficients, and for parametric families evaluated by substitution.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::scalar::{Rational, Ring, Scalar};

/// Product of variables with positive exponents, sorted by variable name.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(Arc<str>, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(name: &str) -> Self {
        Monomial(vec![(Arc::from(name), 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(Arc<str>, u32)] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out: Vec<(Arc<str>, u32)> = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (n, (v, e)) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MultiPoly { terms }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(name), Rational::one());
        MultiPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(v, _)| v.to_string()))
            .collect()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = acc.times(self);
        }
        acc
    }

    /// Replaces the assigned variables; unassigned ones are kept.
    pub fn substitute(&self, assignment: &BTreeMap<String, MultiPoly>) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut value = MultiPoly::constant(c.clone());
            for (v, e) in &m.0 {
                match assignment.get(v.as_ref()) {
                    Some(p) => value = value.times(&p.pow(*e)),
                    None => kept = kept.mul(&Monomial(vec![(v.clone(), *e)])),
                }
            }
            for (m2, c2) in value.terms {
                out.add_term(kept.mul(&m2), c2);
            }
        }
        out
    }

    /// Substitutes rational values for the named variables.
    pub fn substitute_values(&self, values: &BTreeMap<String, Rational>) -> MultiPoly {
        let assignment = values
            .iter()
            .map(|(k, v)| (k.clone(), MultiPoly::constant(v.clone())))
            .collect();
        self.substitute(&assignment)
    }
}

impl Scalar for MultiPoly {
    const RING: Ring = Ring::Polynomial;

    fn zero() -> Self {
        MultiPoly::default()
    }
    fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
    fn times(&self, other: &Self) -> Self {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
    fn negate(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
    fn inverse(&self) -> Option<Self> {
        self.as_constant()?.recip().map(MultiPoly::constant)
    }
    fn from_rational(r: &Rational) -> Self {
        MultiPoly::constant(r.clone())
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        self.plus(&rhs)
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self.minus(&rhs)
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        self.times(&rhs)
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.negate()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then(a.0.cmp(b.0)));
        for (n, (m, c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.0.is_empty() {
                write!(f, "{a}")?;
            } else if a == Rational::one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(name: &str) -> MultiPoly {
        MultiPoly::var(name)
    }

    fn c(n: i64, d: i64) -> MultiPoly {
        MultiPoly::constant(Rational::new(n, d))
    }

    fn assign(pairs: &[(&str, MultiPoly)]) -> BTreeMap<String, MultiPoly> {
        pairs.iter().map(|(k, p)| (k.to_string(), p.clone())).collect()
    }

    #[test]
    fn substitute_constant() {
        let p = v("x").times(&v("x")).plus(&c(1, 1));
        let out = p.substitute(&assign(&[("x", c(2, 1))]));
        assert_eq!(out.as_constant(), Some(Rational::from(5)));
    }

    #[test]
    fn substitute_solved_coefficients() {
        let kappa = v("kappa");
        let p = v("c5").plus(&c(5, 6).times(&v("c8"))).minus(&v("c1"));
        let out = p.substitute(&assign(&[
            ("c8", c(-6, 1).times(&kappa)),
            ("c5", c(7, 1).times(&kappa)),
            ("c1", c(2, 1).times(&kappa)),
        ]));
        assert!(out.is_zero());
    }

    #[test]
    fn substitute_chain_step() {
        // f5 + d2*b5 + b4 with b4 = c2*b5, d2 = b6, then b6 = -c2
        let p = v("f5").plus(&v("d2").times(&v("b5"))).plus(&v("b4"));
        let step = p.substitute(&assign(&[("b4", v("c2").times(&v("b5"))), ("d2", v("b6"))]));
        let out = step.substitute(&assign(&[("b6", v("c2").negate())]));
        assert_eq!(out, v("f5"));
    }

    #[test]
    fn display_and_degree() {
        let p = c(5, 6).times(&v("c9")).minus(&v("c2"));
        assert_eq!(p.to_string(), "-c2 + 5/6*c9");
        let q = v("a").times(&v("a")).times(&v("b")).minus(&c(3, 1));
        assert_eq!(q.to_string(), "a^2*b - 3");
        assert_eq!(q.total_degree(), Some(3));
        assert_eq!(q.variables().into_iter().collect::<Vec<_>>(), vec!["a", "b"]);
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        let term = (-5i64..5, 0u32..3, 0u32..3);
        proptest::collection::vec(term, 0..4).prop_map(|ts| {
            ts.into_iter().fold(MultiPoly::zero(), |acc, (k, ex, ey)| {
                acc.plus(&c(k, 1).times(&v("x").pow(ex)).times(&v("y").pow(ey)))
            })
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), d in arb_poly()) {
            prop_assert_eq!(a.times(&b), b.times(&a));
            prop_assert_eq!(a.times(&b).times(&d), a.times(&b.times(&d)));
            prop_assert_eq!(a.times(&b.plus(&d)), a.times(&b).plus(&a.times(&d)));
            prop_assert!(a.minus(&a).is_zero());
            prop_assert!(a.terms().all(|(_, k)| !k.is_zero()));
        }

        #[test]
        fn substitution_is_a_ring_map(a in arb_poly(), b in arb_poly(), s in arb_poly()) {
            let m = assign(&[("x", s)]);
            prop_assert_eq!(a.times(&b).substitute(&m), a.substitute(&m).times(&b.substitute(&m)));
            prop_assert_eq!(a.plus(&b).substitute(&m), a.substitute(&m).plus(&b.substitute(&m)));
        }
    }
}
