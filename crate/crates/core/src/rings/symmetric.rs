//! Elementary, complete homogeneous, power sum and Schur polynomials in a
//! contiguous range of variables, plus their values at rational points.

use std::ops::RangeInclusive;

use num_traits::{One, Zero};

use crate::combinat::{semistandard_tableaux, Partition};
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Rational, MAX_ARITY};

fn check_range(vars: &RangeInclusive<usize>, arity: usize) -> Result<()> {
    if arity > MAX_ARITY {
        return Err(Error::InvalidParameters(format!("arity {arity} exceeds {MAX_ARITY}")));
    }
    if !vars.is_empty() && (*vars.start() == 0 || *vars.end() > arity) {
        return Err(Error::InvalidParameters(format!(
            "variables x{}..x{} not in a ring of arity {arity}",
            vars.start(),
            vars.end()
        )));
    }
    Ok(())
}

/// Exponent vectors over `vars` (one-based) of total degree `d`, each entry
/// at most `cap`.
fn bounded_compositions(d: u32, vars: &RangeInclusive<usize>, arity: usize, cap: u32) -> Vec<Monomial> {
    let vs: Vec<usize> = vars.clone().collect();
    let mut out = Vec::new();
    let mut exps = vec![0u32; arity];
    fn rec(pos: usize, rest: u32, vs: &[usize], cap: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos == vs.len() {
            if rest == 0 {
                out.push(Monomial::new(exps));
            }
            return;
        }
        for e in 0..=rest.min(cap) {
            exps[vs[pos] - 1] = e;
            rec(pos + 1, rest - e, vs, cap, exps, out);
        }
        exps[vs[pos] - 1] = 0;
    }
    rec(0, d, &vs, cap, &mut exps, &mut out);
    out
}

fn sum_of(arity: usize, monomials: Vec<Monomial>) -> Polynomial {
    Polynomial::from_terms(arity, monomials.into_iter().map(|m| (m, Rational::one())))
}

/// `e_d(x_i, ..., x_j)` for `vars = i..=j`; zero when `d` exceeds the number
/// of variables.
pub fn elementary(d: u32, vars: RangeInclusive<usize>, arity: usize) -> Result<Polynomial> {
    check_range(&vars, arity)?;
    Ok(sum_of(arity, bounded_compositions(d, &vars, arity, 1)))
}

/// `h_d(x_i, ..., x_j)`.
pub fn homogeneous(d: u32, vars: RangeInclusive<usize>, arity: usize) -> Result<Polynomial> {
    check_range(&vars, arity)?;
    Ok(sum_of(arity, bounded_compositions(d, &vars, arity, d)))
}

/// `p_d(x_i, ..., x_j)`; `p_0` is taken to be `1`.
pub fn power_sum(d: u32, vars: RangeInclusive<usize>, arity: usize) -> Result<Polynomial> {
    check_range(&vars, arity)?;
    if d == 0 {
        return Ok(Polynomial::one(arity));
    }
    Ok(sum_of(
        arity,
        vars.map(|i| {
            let mut m = Monomial::one(arity);
            m.set_exponent(i - 1, d);
            m
        })
        .collect(),
    ))
}

/// `e_λ(x_1..x_n) = prod_i e_{λ_i}`.
pub fn elementary_product(lambda: &Partition, n: usize) -> Result<Polynomial> {
    let mut acc = Polynomial::one(n);
    for &p in lambda.parts() {
        acc = &acc * &elementary(p, 1..=n, n)?;
    }
    Ok(acc)
}

/// Schur polynomial `s_λ(x_1..x_n)` as a sum over semistandard tableaux.
pub fn schur_polynomial(lambda: &Partition, n: usize) -> Result<Polynomial> {
    check_range(&(1..=n), n)?;
    let terms = semistandard_tableaux(lambda, n as u32).into_iter().map(|t| {
        let mut exps = vec![0u32; n];
        for v in t.iter().flatten() {
            exps[*v as usize - 1] += 1;
        }
        (Monomial::new(&exps), Rational::one())
    });
    Ok(Polynomial::from_terms(n, terms))
}

/// `e_d` evaluated at the given values.
pub fn elementary_value(d: u32, values: &[Rational]) -> Rational {
    // e_j of the first m values, row by row
    let mut e = vec![Rational::zero(); d as usize + 1];
    e[0] = Rational::one();
    for v in values {
        for j in (1..=d as usize).rev() {
            let add = &e[j - 1] * v;
            e[j] += &add;
        }
    }
    e[d as usize].clone()
}

/// `h_d` evaluated at the given values.
pub fn homogeneous_value(d: u32, values: &[Rational]) -> Rational {
    let mut h = vec![Rational::zero(); d as usize + 1];
    h[0] = Rational::one();
    for v in values {
        for j in 1..=d as usize {
            let add = &h[j - 1] * v;
            h[j] += &add;
        }
    }
    h[d as usize].clone()
}
