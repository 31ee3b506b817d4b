//! Exact sparse multivariate polynomials over the rationals.

mod monomial;
mod operators;
mod polynomial;
mod rational;

pub use monomial::{degree_lex_key, Monomial, MAX_ARITY};
pub use operators::{demazure_sigma, demazure_sigma_bar, divided_difference};
pub(crate) use polynomial::check_permutation;
pub use polynomial::{Polynomial, PolynomialJson, TermJson};
pub use rational::{common_denominator, Rational};

/// Term orders on monomials. Only lex (`x1 > x2 > ... > xn`) is needed; the
/// derived `Ord` on [`Monomial`] implements it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TermOrder {
    #[default]
    Lex,
}

impl TermOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> crate::Result<std::cmp::Ordering> {
        match self {
            TermOrder::Lex => a.lex_compare(b),
        }
    }
}
