use coinv_core::poly::{demazure_sigma, demazure_sigma_bar, divided_difference};
use coinv_core::rings::{build_quotient, RingSpec};
use coinv_core::{Monomial, Polynomial, Rational};
use proptest::prelude::*;

const N: usize = 3;

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..4, N), -4i64..=4, 1i64..=3), 0..6).prop_map(|terms| {
        Polynomial::from_terms(
            N,
            terms
                .into_iter()
                .map(|(e, a, b)| (Monomial::new(&e), Rational::new(a, b))),
        )
    })
}

fn nonzero_poly() -> impl Strategy<Value = Polynomial> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn index() -> impl Strategy<Value = usize> {
    1..N
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(N), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), pt in prop::collection::vec(-3i64..=3, N)) {
        let pt: Vec<Rational> = pt.into_iter().map(Rational::from_integer).collect();
        let (va, vb) = (a.evaluate(&pt).unwrap(), b.evaluate(&pt).unwrap());
        prop_assert_eq!((&a * &b).evaluate(&pt).unwrap(), &va * &vb);
        prop_assert_eq!((&a + &b).evaluate(&pt).unwrap(), &va + &vb);
    }

    #[test]
    fn leading_terms_multiply(a in nonzero_poly(), b in nonzero_poly()) {
        let (ma, ca) = a.leading_term().unwrap();
        let (mb, cb) = b.leading_term().unwrap();
        let (m, c) = (&a * &b).leading_term().unwrap();
        let product: Vec<u32> = ma.exponents().iter().zip(mb.exponents()).map(|(x, y)| x + y).collect();
        prop_assert_eq!(m, Monomial::new(&product));
        prop_assert_eq!(c, &ca * &cb);
    }

    #[test]
    fn divided_differences_square_to_zero(f in poly(), i in index()) {
        let once = divided_difference(i, &f).unwrap();
        prop_assert!(divided_difference(i, &once).unwrap().is_zero());
        // ∂_i f is s_i-symmetric
        prop_assert_eq!(once.swap_variables(i).unwrap(), once);
    }

    #[test]
    fn leibniz_rule(f in poly(), g in poly(), i in index()) {
        // ∂_i(fg) = ∂_i(f) g + s_i(f) ∂_i(g)
        let lhs = divided_difference(i, &(&f * &g)).unwrap();
        let rhs = &(&divided_difference(i, &f).unwrap() * &g)
            + &(&f.swap_variables(i).unwrap() * &divided_difference(i, &g).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn demazure_operators_are_idempotent(f in poly(), i in index()) {
        let once = demazure_sigma(i, &f).unwrap();
        prop_assert_eq!(demazure_sigma(i, &once).unwrap(), once);
        let bar = demazure_sigma_bar(i, &f).unwrap();
        prop_assert_eq!(demazure_sigma_bar(i, &bar).unwrap(), -&bar);
    }

    #[test]
    fn braid_relations(f in poly()) {
        let s = |i: usize, g: &Polynomial| demazure_sigma(i, g).unwrap();
        prop_assert_eq!(s(1, &s(2, &s(1, &f))), s(2, &s(1, &s(2, &f))));
        let d = |i: usize, g: &Polynomial| divided_difference(i, g).unwrap();
        prop_assert_eq!(d(1, &d(2, &d(1, &f))), d(2, &d(1, &d(2, &f))));
        let b = |i: usize, g: &Polynomial| demazure_sigma_bar(i, g).unwrap();
        prop_assert_eq!(b(1, &b(2, &b(1, &f))), b(2, &b(1, &b(2, &f))));
    }

    #[test]
    fn normal_forms_are_linear(f in poly(), g in poly(), a in -3i64..=3) {
        let ring = build_quotient(&RingSpec::mixed_h(N, 1, 1).unwrap()).unwrap();
        let c = Rational::from_integer(a);
        let lhs = ring.normal_form(&(&f.scale(&c) + &g)).unwrap();
        let rhs = &ring.normal_form(&f).unwrap().scale(&c) + &ring.normal_form(&g).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert!(lhs.monomials().all(|m| ring.basis().index_of(m).is_some()));
        prop_assert!(ring.contains(&(&f - &ring.normal_form(&f).unwrap())).unwrap());
    }
}
