use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use super::rational::Rational;
use crate::error::{Error, Result};

/// A sparse polynomial with rational coefficients in a fixed number of
/// variables.
///
/// Terms are kept sorted by strictly decreasing lexicographic monomial, and
/// no stored coefficient is zero; the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    arity: usize,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(arity: usize) -> Polynomial {
        Polynomial {
            arity,
            terms: Vec::new(),
        }
    }

    pub fn one(arity: usize) -> Polynomial {
        Polynomial::constant(arity, Rational::one())
    }

    pub fn constant(arity: usize, c: Rational) -> Polynomial {
        Polynomial::from_monomial(Monomial::one(arity), c)
    }

    pub fn from_monomial(m: Monomial, c: Rational) -> Polynomial {
        let arity = m.arity();
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { arity, terms }
    }

    /// The variable `x_i`, one-based.
    pub fn var(i: usize, arity: usize) -> Polynomial {
        Polynomial::from_monomial(Monomial::var(i - 1, arity), Rational::one())
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and
    /// dropping zeros.
    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Polynomial {
        let mut terms: Vec<_> = terms.into_iter().collect();
        for (m, _) in &terms {
            assert_eq!(m.arity(), arity, "monomial arity does not match polynomial");
        }
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        Polynomial {
            arity,
            terms: combine_sorted(terms),
        }
    }

    /// Wraps terms already sorted by strictly decreasing monomial with no zeros.
    pub(crate) fn from_sorted_terms(arity: usize, terms: Vec<(Monomial, Rational)>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { arity, terms }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing lex order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.terms.iter().map(|(m, _)| m)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        match self.terms.binary_search_by(|(t, _)| m.cmp(t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// The lex-greatest term.
    pub fn leading_term(&self) -> Result<(Monomial, Rational)> {
        self.terms.first().cloned().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect();
        Polynomial::from_sorted_terms(self.arity, terms)
    }

    /// The top-degree homogeneous component.
    pub fn top_component(&self) -> Polynomial {
        match self.degree() {
            Some(d) => self.homogeneous_component(d),
            None => self.clone(),
        }
    }

    fn check_arity(&self, other: &Polynomial) -> Result<()> {
        if self.arity != other.arity {
            Err(Error::ArityMismatch(self.arity, other.arity))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        Ok(self.add_scaled(other, &Rational::one(), None))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        Ok(self.add_scaled(other, &-Rational::one(), None))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        Ok(self.mul_impl(other))
    }

    /// `self + c * m * other`, computed by a single merge.
    pub fn add_scaled(&self, other: &Polynomial, c: &Rational, m: Option<&Monomial>) -> Polynomial {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(t, d)| {
            let t = match m {
                Some(m) => *t * *m,
                None => *t,
            };
            (t, d * c)
        });
        let mut next_b = b.next();
        loop {
            match (a.peek(), &next_b) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    out.push(next_b.take().unwrap());
                    next_b = b.next();
                }
                (Some((ma, ca)), Some((mb, cb))) => match ma.cmp(mb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => {
                        out.push(next_b.take().unwrap());
                        next_b = b.next();
                    }
                    Ordering::Equal => {
                        let s = ca + cb;
                        if !s.is_zero() {
                            out.push((*ma, s));
                        }
                        a.next();
                        next_b = b.next();
                    }
                },
            }
        }
        Polynomial::from_sorted_terms(self.arity, out)
    }

    fn mul_impl(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.arity);
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return large.mul_term(m, c);
        }
        let mut prods = Vec::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                prods.push((*ma * *mb, ca * cb));
            }
        }
        prods.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        Polynomial::from_sorted_terms(self.arity, combine_sorted(prods))
    }

    /// `c * m * self`; lex is multiplicative so the order is preserved.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.arity);
        }
        let terms = self.terms.iter().map(|(t, d)| (*t * *m, d * c)).collect();
        Polynomial::from_sorted_terms(self.arity, terms)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        self.mul_term(&Monomial::one(self.arity), c)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.arity);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch(self.arity, point.len()));
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, x) in point.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    v *= &x.pow(e);
                }
            }
            acc += &v;
        }
        Ok(acc)
    }

    /// Applies a monomial map term by term and re-sorts.
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Polynomial {
        let arity = self.arity;
        Polynomial::from_terms(arity, self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// Substitutes `x_i -> x_{perm[i]}` (zero-based). Fails unless `perm` is
    /// a permutation of `0..arity`.
    pub fn permute_variables(&self, perm: &[usize]) -> Result<Polynomial> {
        check_permutation(perm, self.arity)?;
        Ok(self.map_monomials(|m| m.permuted(perm)))
    }

    /// Interchanges `x_i` and `x_{i+1}`, one-based `i`.
    pub fn swap_variables(&self, i: usize) -> Result<Polynomial> {
        self.check_adjacent_index(i)?;
        Ok(self.map_monomials(|m| m.swapped(i - 1)))
    }

    /// `f(x_n, ..., x_1)`.
    pub fn reverse_variables(&self) -> Polynomial {
        self.map_monomials(|m| m.reversed())
    }

    /// The same polynomial in a ring with `arity` variables; `None` if a
    /// dropped variable occurs.
    pub fn with_arity(&self, arity: usize) -> Option<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| m.with_arity(arity).map(|m| (m, c.clone())))
            .collect::<Option<Vec<_>>>()?;
        Some(Polynomial::from_sorted_terms(arity, terms))
    }

    pub(crate) fn check_adjacent_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.arity {
            Err(Error::IndexOutOfRange {
                index: i,
                arity: self.arity,
            })
        } else {
            Ok(())
        }
    }

    /// Canonical text form, terms in decreasing lex order.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn to_json(&self) -> PolynomialJson {
        PolynomialJson {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    exps: m.exponents(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &PolynomialJson) -> Result<Polynomial> {
        let mut terms = Vec::with_capacity(json.terms.len());
        for t in &json.terms {
            if t.exps.len() != json.arity {
                return Err(Error::ArityMismatch(json.arity, t.exps.len()));
            }
            let c: Rational = format!("{}/{}", t.num, t.den)
                .parse()
                .map_err(Error::InvalidParameters)?;
            terms.push((Monomial::new(&t.exps), c));
        }
        Ok(Polynomial::from_terms(json.arity, terms))
    }
}

/// JSON form: `{arity, terms:[{exps:[...], num, den}]}` with the integers
/// written as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub arity: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<u32>,
    pub num: String,
    pub den: String,
}

pub(crate) fn check_permutation(perm: &[usize], arity: usize) -> Result<()> {
    let mut seen = vec![false; arity];
    if perm.len() != arity {
        return Err(Error::NotAPermutation(format!("{perm:?} for arity {arity}")));
    }
    for &p in perm {
        if p >= arity || seen[p] {
            return Err(Error::NotAPermutation(format!("{perm:?}")));
        }
        seen[p] = true;
    }
    Ok(())
}

fn combine_sorted(terms: Vec<(Monomial, Rational)>) -> Vec<(Monomial, Rational)> {
    let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        match out.last_mut() {
            Some((lm, lc)) if *lm == m => *lc += &c,
            _ => {
                if let Some((_, lc)) = out.last() {
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                out.push((m, c));
            }
        }
    }
    if matches!(out.last(), Some((_, c)) if c.is_zero()) {
        out.pop();
    }
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("arity mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("arity mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("arity mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize, n: usize) -> Polynomial {
        Polynomial::var(i, n)
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x(1, 2) + &x(2, 2)) * &(&x(1, 2) - &x(2, 2));
        assert_eq!(p.to_string(), "x1^2 - x2^2");
        let z = Polynomial::zero(2);
        assert_eq!(&p + &z, p);
    }

    #[test]
    fn square_of_sum() {
        let e1 = &x(1, 2) + &x(2, 2);
        assert_eq!((&e1 * &e1).to_string(), "x1^2 + 2*x1*x2 + x2^2");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = &x(1, 3) - &x(1, 3);
        assert!(p.is_zero());
        assert!(p.leading_term().is_err());
    }

    #[test]
    fn leading_terms() {
        let h2 = Polynomial::from_terms(
            2,
            [
                (Monomial::new(&[0, 2]), Rational::one()),
                (Monomial::new(&[1, 1]), Rational::one()),
                (Monomial::new(&[2, 0]), Rational::one()),
            ],
        );
        assert_eq!(h2.leading_term().unwrap(), (Monomial::new(&[2, 0]), Rational::one()));
        let k = &(&(&x(2, 3) * &x(2, 3)) * &x(3, 3)) + &(&(&x(1, 3) * &x(2, 3)) * &x(3, 3));
        assert_eq!(k.leading_term().unwrap().0, Monomial::new(&[1, 1, 1]));
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        assert_eq!(x(1, 2).try_add(&x(1, 3)), Err(Error::ArityMismatch(2, 3)));
        assert!(x(1, 2).try_mul(&x(1, 3)).is_err());
    }

    #[test]
    fn variable_substitutions() {
        let p = Polynomial::from_monomial(Monomial::new(&[2, 0, 1]), Rational::one());
        assert_eq!(p.reverse_variables().to_string(), "x1*x3^2");
        let q = &x(1, 2) + &x(2, 2).scale(&Rational::from_integer(2));
        assert_eq!(q.swap_variables(1).unwrap().to_string(), "2*x1 + x2");
        assert!(q.swap_variables(2).is_err());
        assert!(q.permute_variables(&[0, 0]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = &x(1, 2).scale(&Rational::new(-3, 2)) + &Polynomial::one(2);
        let j = p.to_json();
        assert_eq!(
            serde_json::to_string(&j).unwrap(),
            r#"{"arity":2,"terms":[{"exps":[1,0],"num":"-3","den":"2"},{"exps":[0,0],"num":"1","den":"1"}]}"#
        );
        assert_eq!(Polynomial::from_json(&j).unwrap(), p);
    }

    #[test]
    fn evaluation_and_components() {
        let p = &(&x(1, 2) * &x(2, 2)) + &x(1, 2);
        let v = p
            .evaluate(&[Rational::from_integer(2), Rational::from_integer(3)])
            .unwrap();
        assert_eq!(v, Rational::from_integer(8));
        assert_eq!(p.top_component().to_string(), "x1*x2");
        assert!(!p.is_homogeneous());
    }
}
