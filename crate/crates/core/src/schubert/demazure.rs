//! Demazure characters and the explicit lex Gröbner basis of `I_{n,k,r}`
//! built from truncated `h`'s and variable-reversed Demazure characters.

use std::collections::BTreeSet;

use num_traits::One;
use serde::Serialize;

use crate::combinat::{skip_monomial, skip_vector, subsets};
use crate::error::{Error, Result};
use crate::groebner::QuotientRing;
use crate::poly::{demazure_sigma, Monomial, Polynomial, Rational, MAX_ARITY};
use crate::rings::{build_quotient, homogeneous, RingSpec};

/// Which weakly monotone exponent vectors are fixed points, `κ_γ = x^γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DemazureConvention {
    /// `κ_γ = x^γ` for weakly increasing `γ`, and `κ_γ = σ_i κ_{γ s_i}`
    /// whenever `γ_i > γ_{i+1}`.
    IncreasingBase,
    /// `κ_γ = x^γ` for weakly decreasing `γ`, and `κ_γ = σ_i κ_{γ s_i}`
    /// whenever `γ_i < γ_{i+1}`. These are the usual key polynomials.
    DecreasingBase,
}

/// Which out-of-order adjacent pair to fix first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SortingChoice {
    First,
    Last,
}

/// The convention under which `in_<(κ_{γ(S)*}(x*)) = x(S)` holds; see the
/// tests for the check that the other one fails.
pub const DEMAZURE_CONVENTION: DemazureConvention = DemazureConvention::DecreasingBase;

pub fn demazure_character(gamma: &[u32]) -> Result<Polynomial> {
    demazure_character_with(gamma, DEMAZURE_CONVENTION, SortingChoice::First)
}

pub fn demazure_character_with(
    gamma: &[u32],
    convention: DemazureConvention,
    choice: SortingChoice,
) -> Result<Polynomial> {
    if gamma.is_empty() || gamma.len() > MAX_ARITY {
        return Err(Error::InvalidParameters(format!(
            "γ of length {} unsupported",
            gamma.len()
        )));
    }
    let out_of_order = |w: &[u32]| match convention {
        DemazureConvention::IncreasingBase => w[0] > w[1],
        DemazureConvention::DecreasingBase => w[0] < w[1],
    };
    let mut positions = gamma
        .windows(2)
        .enumerate()
        .filter(|(_, w)| out_of_order(w))
        .map(|(i, _)| i);
    let pick = match choice {
        SortingChoice::First => positions.next(),
        SortingChoice::Last => positions.next_back(),
    };
    match pick {
        None => Ok(Polynomial::from_monomial(Monomial::new(gamma), Rational::one())),
        Some(i) => {
            let mut swapped = gamma.to_vec();
            swapped.swap(i, i + 1);
            demazure_sigma(i + 1, &demazure_character_with(&swapped, convention, choice)?)
        }
    }
}

/// `κ_{γ(S)*}(x*)`: reverse `γ(S)`, take the character, reverse variables.
pub fn reversed_skip_character(s: &[usize], n: usize, convention: DemazureConvention) -> Result<Polynomial> {
    let mut gamma = skip_vector(s, n)?;
    gamma.reverse();
    Ok(demazure_character_with(&gamma, convention, SortingChoice::First)?.reverse_variables())
}

/// Whether `in_<(κ_{γ(S)*}(x*)) = x(S)` for every `(n-r+1)`-subset `S`.
pub fn leading_term_oracle(n: usize, r: usize, convention: DemazureConvention) -> Result<bool> {
    if r > n {
        return Err(Error::InvalidParameters(format!("r = {r} exceeds n = {n}")));
    }
    for s in subsets(n, n - r + 1) {
        let kappa = reversed_skip_character(&s, n, convention)?;
        let (lead, coeff) = kappa.leading_term()?;
        if lead != skip_monomial(&s, n)? || !coeff.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The candidate lex Gröbner basis of `I_{n,k,r}`.
#[derive(Clone, Debug)]
pub struct ExplicitGroebnerBasis {
    pub spec: RingSpec,
    /// `h_{k+i}(x_i, ..., x_n)` for `i = 1..n`.
    pub truncated_h: Vec<Polynomial>,
    /// `(S, κ_{γ(S)*}(x*))` over `(n-r+1)`-subsets in lex order.
    pub characters: Vec<(Vec<usize>, Polynomial)>,
}

impl ExplicitGroebnerBasis {
    pub fn new(spec: &RingSpec) -> Result<ExplicitGroebnerBasis> {
        let (n, k, r) = (spec.n, spec.k, spec.r);
        let truncated_h = (1..=n)
            .map(|i| homogeneous((k + i) as u32, i..=n, n))
            .collect::<Result<_>>()?;
        let characters = subsets(n, n - r + 1)
            .into_iter()
            .map(|s| {
                let kappa = reversed_skip_character(&s, n, DEMAZURE_CONVENTION)?;
                Ok((s, kappa))
            })
            .collect::<Result<_>>()?;
        Ok(ExplicitGroebnerBasis {
            spec: *spec,
            truncated_h,
            characters,
        })
    }

    pub fn elements(&self) -> Vec<Polynomial> {
        self.truncated_h
            .iter()
            .cloned()
            .chain(self.characters.iter().map(|(_, p)| p.clone()))
            .collect()
    }

    /// `x_i^{k+i}` then `x(S)`.
    pub fn expected_leading_terms(&self) -> Result<Vec<Monomial>> {
        let n = self.spec.n;
        let mut out: Vec<Monomial> = (0..n)
            .map(|i| {
                let mut m = Monomial::one(n);
                m.set_exponent(i, (self.spec.k + i + 1) as u32);
                m
            })
            .collect();
        for (s, _) in &self.characters {
            out.push(skip_monomial(s, n)?);
        }
        Ok(out)
    }

    pub fn check(&self, ring: &QuotientRing) -> Result<ExplicitGroebnerReport> {
        let elements = self.elements();
        let mut all_in_ideal = true;
        for f in &elements {
            all_in_ideal &= ring.contains(f)?;
        }
        let expected = self.expected_leading_terms()?;
        let mut leading_terms_match = true;
        let mut leads = Vec::new();
        for (f, want) in elements.iter().zip(&expected) {
            let (m, c) = f.leading_term()?;
            leading_terms_match &= &m == want && c.is_one();
            leads.push(m);
        }
        // monomials avoiding every leading term; the pure powers bound the box
        let bounds: Vec<u32> = (1..=self.spec.n).map(|i| (self.spec.k + i) as u32).collect();
        let mut avoiding = BTreeSet::new();
        let mut exps = vec![0u32; self.spec.n];
        'outer: loop {
            let m = Monomial::new(&exps);
            if !leads.iter().any(|l| l.divides(&m)) {
                avoiding.insert(m);
            }
            for i in (0..exps.len()).rev() {
                if exps[i] + 1 < bounds[i] {
                    exps[i] += 1;
                    continue 'outer;
                }
                exps[i] = 0;
            }
            break;
        }
        let standard: BTreeSet<Monomial> = ring.basis().monomials().iter().copied().collect();
        let same_initial_ideal = avoiding == standard;
        let mut minimal = true;
        for (a, la) in leads.iter().enumerate() {
            for (b, lb) in leads.iter().enumerate() {
                if a != b && la.divides(lb) {
                    minimal = false;
                }
            }
        }
        Ok(ExplicitGroebnerReport {
            size: elements.len(),
            all_in_ideal,
            leading_terms_match,
            same_initial_ideal,
            minimal,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExplicitGroebnerReport {
    pub size: usize,
    pub all_in_ideal: bool,
    pub leading_terms_match: bool,
    pub same_initial_ideal: bool,
    /// No leading term divides another. Expected when `r < n` and `k > 0`.
    pub minimal: bool,
}

impl ExplicitGroebnerReport {
    pub fn is_groebner_basis(&self) -> bool {
        self.all_in_ideal && self.leading_terms_match && self.same_initial_ideal
    }
}

pub fn explicit_groebner_check(spec: &RingSpec) -> Result<ExplicitGroebnerReport> {
    ExplicitGroebnerBasis::new(spec)?.check(&build_quotient(spec)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_cases() {
        let inc = demazure_character_with(&[0, 0, 1], DemazureConvention::IncreasingBase, SortingChoice::First);
        assert_eq!(inc.unwrap().to_string(), "x3");
        assert_eq!(demazure_character(&[0, 0, 1]).unwrap().to_string(), "x1 + x2 + x3");
        assert_eq!(demazure_character(&[2, 1, 0]).unwrap().to_string(), "x1^2*x2");
        assert_eq!(demazure_character(&[0, 1]).unwrap().to_string(), "x1 + x2");
    }

    #[test]
    fn exactly_one_convention_passes_the_oracle() {
        for n in 1..=5 {
            for r in 0..=n {
                assert!(
                    leading_term_oracle(n, r, DemazureConvention::DecreasingBase).unwrap(),
                    "({n},{r})"
                );
            }
        }
        let increasing_fails =
            (2..=5).any(|n| (0..=n).any(|r| !leading_term_oracle(n, r, DemazureConvention::IncreasingBase).unwrap()));
        assert!(increasing_fails);
    }
}
