//! Newton divided differences and Demazure (isobaric divided difference)
//! operators.
//!
//! Both are computed as an exact quotient by `x_i - x_{i+1}` using synthetic
//! division in `x_i`, with an assertion that the remainder vanishes.

use std::collections::BTreeMap;

use num_traits::One;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::rational::Rational;
use crate::error::Result;

/// Exact division of `num` by `x_i - x_{i+1}` (one-based `i`).
///
/// Panics if the division is not exact; callers only pass numerators that
/// are antisymmetric under `s_i`.
fn divide_by_root_difference(num: &Polynomial, i: usize) -> Polynomial {
    let arity = num.arity();
    let (vi, vj) = (i - 1, i);
    // group by the exponent of x_i; coefficients are polynomials free of x_i
    let mut by_power: BTreeMap<u32, Vec<(Monomial, Rational)>> = BTreeMap::new();
    for (m, c) in num.terms() {
        let mut rest = *m;
        rest.set_exponent(vi, 0);
        by_power.entry(m.exponent(vi)).or_default().push((rest, c.clone()));
    }
    let Some((&top, _)) = by_power.iter().next_back() else {
        return Polynomial::zero(arity);
    };
    let coeff = |e: u32, map: &BTreeMap<u32, Vec<(Monomial, Rational)>>| match map.get(&e) {
        Some(ts) => Polynomial::from_terms(arity, ts.iter().cloned()),
        None => Polynomial::zero(arity),
    };
    let xj = Polynomial::var(vj + 1, arity);
    // num = sum_e c_e x_i^e; dividing by (x_i - x_j):
    // b_{top-1} = c_top, b_{e-1} = c_e + x_j b_e, remainder c_0 + x_j b_0
    let mut quotient = Polynomial::zero(arity);
    let mut carry = Polynomial::zero(arity);
    for e in (1..=top).rev() {
        let b = &coeff(e, &by_power) + &(&xj * &carry);
        let mut shift = Monomial::one(arity);
        shift.set_exponent(vi, e - 1);
        quotient = quotient.add_scaled(&b, &Rational::one(), Some(&shift));
        carry = b;
    }
    let remainder = &coeff(0, &by_power) + &(&xj * &carry);
    assert!(remainder.is_zero(), "numerator not divisible by x{} - x{}", i, i + 1);
    quotient
}

/// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`, one-based `i`.
pub fn divided_difference(i: usize, f: &Polynomial) -> Result<Polynomial> {
    f.check_adjacent_index(i)?;
    let num = f - &f.swap_variables(i)?;
    Ok(divide_by_root_difference(&num, i))
}

/// `σ_i f = (x_i f - x_{i+1} s_i f) / (x_i - x_{i+1})`, one-based `i`.
pub fn demazure_sigma(i: usize, f: &Polynomial) -> Result<Polynomial> {
    f.check_adjacent_index(i)?;
    let n = f.arity();
    let xi = Monomial::var(i - 1, n);
    let xj = Monomial::var(i, n);
    let num = f
        .mul_term(&xi, &Rational::one())
        .add_scaled(&f.swap_variables(i)?, &-Rational::one(), Some(&xj));
    Ok(divide_by_root_difference(&num, i))
}

/// `σ̄_i = σ_i - 1`.
pub fn demazure_sigma_bar(i: usize, f: &Polynomial) -> Result<Polynomial> {
    Ok(&demazure_sigma(i, f)? - f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize, n: usize) -> Polynomial {
        Polynomial::var(i, n)
    }

    #[test]
    fn newton_small_cases() {
        assert_eq!(divided_difference(1, &x(1, 2)).unwrap(), Polynomial::one(2));
        let sq = &x(1, 2) * &x(1, 2);
        assert_eq!(divided_difference(1, &sq).unwrap().to_string(), "x1 + x2");
        let sym = &(&x(1, 3) * &x(2, 3)) + &x(3, 3);
        assert!(divided_difference(1, &sym).unwrap().is_zero());
    }

    #[test]
    fn demazure_small_cases() {
        assert_eq!(demazure_sigma(1, &x(1, 2)).unwrap().to_string(), "x1 + x2");
        assert_eq!(demazure_sigma(1, &Polynomial::one(2)).unwrap(), Polynomial::one(2));
        assert!(demazure_sigma(1, &x(2, 2)).unwrap().is_zero());
    }

    #[test]
    fn index_out_of_range() {
        assert!(divided_difference(0, &x(1, 2)).is_err());
        assert!(divided_difference(2, &x(1, 2)).is_err());
        assert!(demazure_sigma(3, &x(1, 3)).is_err());
    }

    #[test]
    fn higher_powers_match_closed_form() {
        // ∂_1(x1^3 x2) = x1 x2 (x1 + x2)
        let f = &(&(&x(1, 2) * &x(1, 2)) * &x(1, 2)) * &x(2, 2);
        let expect = &(&x(1, 2) * &x(2, 2)) * &(&x(1, 2) + &x(2, 2));
        assert_eq!(divided_difference(1, &f).unwrap(), expect);
    }
}
