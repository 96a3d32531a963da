use proptest::prelude::*;

use carnot33::catalog::families::{a33_algebra, c33_algebra, c33_iso};
use carnot33::catalog::holonomy::{certify, predicted_trivial};
use carnot33::catalog::isomorphisms::scaling_c33;
use carnot33::document::AlgebraDocument;
use carnot33::{Gaussian, LieAlgebra, Rational};

type Q = Rational;

fn rational() -> impl Strategy<Value = Q> {
    (-12i64..=12, 1i64..=5).prop_map(|(p, q)| Q::new(p, q))
}

fn nonzero() -> impl Strategy<Value = Q> {
    rational().prop_filter("nonzero", |q| !q.is_zero())
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec(rational(), n)
}

/// Cyclic Jacobi sum on arbitrary vectors, not just basis triples.
fn jacobi_sum(g: &LieAlgebra<Q>, u: &[Q], v: &[Q], w: &[Q]) -> Vec<Q> {
    let a = g.br(u, &g.br(v, w));
    let b = g.br(v, &g.br(w, u));
    let c = g.br(w, &g.br(u, v));
    a.iter().zip(&b).zip(&c).map(|((x, y), z)| x + y + z).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rational_text_round_trips(p in -10_000i64..10_000, q in 1i64..500) {
        let r = Q::new(p, q);
        let back: Q = r.to_string().parse().unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn gaussian_text_round_trips(a in rational(), b in rational()) {
        let z = Gaussian::new(a, b);
        let back: Gaussian = z.to_string().parse().unwrap();
        prop_assert_eq!(back, z);
    }

    #[test]
    fn c33_is_lie_on_random_vectors(a1 in rational(), a2 in rational(), u in vector(12), v in vector(12), w in vector(12)) {
        let g = c33_algebra(&a1, &a2);
        prop_assert!(jacobi_sum(&g, &u, &v, &w).iter().all(Q::is_zero));
    }

    #[test]
    fn a33_is_lie_on_random_vectors(kappa in rational(), u in vector(14), v in vector(14), w in vector(14)) {
        let g = a33_algebra(&kappa);
        prop_assert!(jacobi_sum(&g, &u, &v, &w).iter().all(Q::is_zero));
    }

    #[test]
    fn documents_round_trip(a1 in rational(), a2 in rational()) {
        let model = c33_iso(&a1, &a2).unwrap();
        let text = AlgebraDocument::from_model(&model).to_json();
        let doc = AlgebraDocument::from_json(&text).unwrap();
        prop_assert_eq!(doc.to_json(), text);
        let g: LieAlgebra<Q> = doc.to_algebra().unwrap();
        prop_assert!(g.same_structure(&model.algebra));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn dilation_is_an_isomorphism(a1 in rational(), a2 in rational(), lambda in nonzero()) {
        let map = scaling_c33(&a1, &a2, &lambda).unwrap();
        prop_assert!(map.check().unwrap().is_isomorphism());
    }

    /// Parameters built from chosen roots `t1 = c²`, `t2`, so `c` always solves the quartic.
    #[test]
    fn holonomy_closure_matches_quartic(c in nonzero(), t2 in rational(), probe in rational()) {
        let t1 = &c * &c;
        let a1 = &t1 + &t2;
        let a2 = -(&t1 * &t2);
        let model = c33_iso(&a1, &a2).unwrap();
        let cert = certify(&model.algebra, &model.k, &c).unwrap();
        prop_assert!(cert.trivial());
        let other = certify(&model.algebra, &model.k, &probe).unwrap();
        prop_assert_eq!(other.trivial(), predicted_trivial(&a1, &a2, &probe));
    }
}
