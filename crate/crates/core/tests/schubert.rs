use std::collections::BTreeSet;

use coinv_core::combinat::{good_monomials, permutations, subsets};
use coinv_core::poly::divided_difference;
use coinv_core::rings::{build_quotient, RingSpec};
use coinv_core::schubert::*;
use coinv_core::{Monomial, Polynomial, Rational};
use num_traits::Zero;
use proptest::prelude::*;

fn w(s: &str) -> coinv_core::combinat::Word {
    coinv_core::combinat::Word::from_digits(s).unwrap()
}

#[test]
fn divided_differences_walk_down_the_weak_order() {
    let mut table = SchubertTable::new();
    for pi in permutations(4) {
        let s = table.get(&pi).unwrap().with_arity(4).unwrap();
        for i in 1..4 {
            let l = pi.letters();
            if l[i - 1] > l[i] {
                let mut down = l.to_vec();
                down.swap(i - 1, i);
                let expected = table
                    .get(&coinv_core::combinat::Word::new(down))
                    .unwrap()
                    .with_arity(4)
                    .unwrap();
                assert_eq!(divided_difference(i, &s).unwrap(), expected, "{pi} at {i}");
            } else {
                assert!(divided_difference(i, &s).unwrap().is_zero());
            }
        }
        assert!(s.terms().iter().all(|(_, c)| c.is_integer() && !c.is_negative()));
    }
}

#[test]
fn simple_transpositions_and_stability() {
    let mut table = SchubertTable::new();
    for m in 2..=5u32 {
        for i in 1..m {
            let mut letters: Vec<u32> = (1..=m).collect();
            letters.swap(i as usize - 1, i as usize);
            let s = table.get(&coinv_core::combinat::Word::new(letters.clone())).unwrap();
            let n = s.arity();
            let expected = (1..=i as usize).fold(Polynomial::zero(n), |acc, j| &acc + &Polynomial::var(j, n));
            assert_eq!(s, expected);
            letters.push(m + 1);
            assert_eq!(table.get(&coinv_core::combinat::Word::new(letters)).unwrap(), s);
        }
    }
    assert_eq!(table.get(&w("4321")).unwrap().to_string(), "x1^3*x2^2*x3");
}

#[test]
fn leading_terms_are_the_good_monomials() {
    for total in 1..=6 {
        for n in 1..=total {
            let k = total - n;
            for r in 0..=n {
                let set = enumerate_pi_set(n, k, r).unwrap();
                let spec = RingSpec::mixed_h(n, k, r).unwrap();
                assert_eq!(set.elements.len() as u64, spec.expected_dim(), "({n},{k},{r})");
                let basis = SchubertBasis::new(n, k, r).unwrap();
                let leads = basis.leading_monomials().unwrap();
                let distinct: BTreeSet<Monomial> = leads.iter().copied().collect();
                assert_eq!(distinct.len(), leads.len());
                let good: BTreeSet<Monomial> = good_monomials(n, k, r).unwrap().into_iter().collect();
                assert_eq!(distinct, good, "({n},{k},{r})");
                for (pi, lead) in basis.perms.iter().zip(&leads) {
                    assert_eq!(&phi_monomial(pi, n).unwrap(), lead);
                }
                assert!(basis.change_of_basis_is_unitriangular());
            }
        }
    }
}

#[test]
fn sorted_change_of_basis_small() {
    let basis = SchubertBasis::new(2, 2, 1).unwrap();
    let m = basis.sorted_change_of_basis().unwrap();
    assert!(m.is_upper_unitriangular());
    assert_eq!(m.rank(), 6);
}

#[test]
fn expansions_of_basis_elements_and_zero() {
    let basis = SchubertBasis::new(2, 2, 1).unwrap();
    for (j, p) in basis.polynomials.iter().enumerate() {
        let c = basis.expand(p).unwrap();
        for (i, v) in c.iter().enumerate() {
            assert_eq!(v, &if i == j { Rational::from(1) } else { Rational::zero() });
        }
    }
    assert!(basis.expand_map(&Polynomial::zero(2)).unwrap().is_empty());
}

#[test]
fn positivity_on_a_small_case() {
    let finding = positivity_experiment(2, 2, 1).unwrap();
    assert_eq!(finding.pairs_checked, 36);
    assert!(finding.all_nonnegative_integers);
    assert_eq!(finding.counterexamples().count(), 0);
    let json = finding.to_json();
    assert_eq!(json["pairs"].as_array().unwrap().len(), 36);
}

#[test]
fn explicit_groebner_basis_on_the_grid() {
    for n in 1..=5 {
        for k in 1..=3 {
            for r in 0..n {
                let spec = RingSpec::mixed_h(n, k, r).unwrap();
                let report = explicit_groebner_check(&spec).unwrap();
                assert!(report.is_groebner_basis(), "{spec}: {report:?}");
                assert!(report.minimal, "{spec}");
                assert_eq!(report.size, n + subsets(n, n - r + 1).len());
            }
        }
    }
}

#[test]
fn the_five_two_three_characters() {
    let spec = RingSpec::mixed_h(5, 2, 3).unwrap();
    let gb = ExplicitGroebnerBasis::new(&spec).unwrap();
    assert_eq!(gb.truncated_h.len(), 5);
    assert_eq!(gb.characters.len(), 10);
    let reversed_gammas: Vec<Vec<u32>> = gb
        .characters
        .iter()
        .map(|(s, _)| {
            let mut g = coinv_core::combinat::skip_vector(s, 5).unwrap();
            g.reverse();
            g
        })
        .collect();
    let expected: Vec<Vec<u32>> = vec![
        vec![0, 0, 1, 1, 1],
        vec![0, 2, 0, 1, 1],
        vec![3, 0, 0, 1, 1],
        vec![0, 2, 2, 0, 1],
        vec![3, 0, 2, 0, 1],
        vec![3, 3, 0, 0, 1],
        vec![0, 2, 2, 2, 0],
        vec![3, 0, 2, 2, 0],
        vec![3, 3, 0, 2, 0],
        vec![3, 3, 3, 0, 0],
    ];
    assert_eq!(reversed_gammas, expected);
    let ring = build_quotient(&spec).unwrap();
    for (_, kappa) in &gb.characters {
        assert!(ring.contains(kappa).unwrap());
    }
    let h: Vec<String> = gb
        .truncated_h
        .iter()
        .map(|p| p.leading_term().unwrap().0.to_string())
        .collect();
    assert_eq!(h, vec!["x1^3", "x2^4", "x3^5", "x4^6", "x5^7"]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn demazure_character_is_independent_of_sorting(gamma in prop::collection::vec(0u32..4, 1..=5)) {
        for convention in [DemazureConvention::DecreasingBase, DemazureConvention::IncreasingBase] {
            let first = demazure_character_with(&gamma, convention, SortingChoice::First).unwrap();
            let last = demazure_character_with(&gamma, convention, SortingChoice::Last).unwrap();
            prop_assert_eq!(first, last);
        }
    }

    #[test]
    fn key_polynomials_are_positive(gamma in prop::collection::vec(0u32..4, 1..=4)) {
        let kappa = demazure_character(&gamma).unwrap();
        prop_assert!(kappa.terms().iter().all(|(_, c)| c.is_integer() && !c.is_negative()));
        prop_assert_eq!(kappa.coefficient(&Monomial::new(&gamma)), Rational::from(1));
    }
}
