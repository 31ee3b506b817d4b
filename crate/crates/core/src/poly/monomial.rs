use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest number of variables a monomial can carry.
pub const MAX_ARITY: usize = 16;

/// A monomial `x1^a1 * ... * xn^an` with a fixed number of variables.
///
/// Exponents are stored inline; unused slots are zero, so the derived
/// ordering on the exponent array is exactly the lexicographic term order
/// with `x1 > x2 > ... > xn`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u8; MAX_ARITY],
    arity: u8,
}

impl Monomial {
    pub fn one(arity: usize) -> Monomial {
        assert!(arity <= MAX_ARITY, "arity {arity} exceeds {MAX_ARITY}");
        Monomial {
            exps: [0; MAX_ARITY],
            arity: arity as u8,
        }
    }

    /// Builds a monomial from its exponent vector.
    ///
    /// Panics if there are more than [`MAX_ARITY`] entries or an exponent
    /// exceeds 255.
    pub fn new(exps: &[u32]) -> Monomial {
        let mut m = Monomial::one(exps.len());
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u8::try_from(e).expect("exponent overflow (max 255)");
        }
        m
    }

    /// The variable `x_{i+1}` (zero-based `i`).
    pub fn var(i: usize, arity: usize) -> Monomial {
        assert!(i < arity);
        let mut m = Monomial::one(arity);
        m.exps[i] = 1;
        m
    }

    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self) -> Vec<u32> {
        self.exps[..self.arity()].iter().map(|&e| e as u32).collect()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn set_exponent(&mut self, i: usize, e: u32) {
        assert!(i < self.arity());
        self.exps[i] = u8::try_from(e).expect("exponent overflow (max 255)");
    }

    /// Lexicographic comparison, checking arities.
    pub fn lex_compare(&self, other: &Monomial) -> Result<Ordering> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity(), other.arity()));
        }
        Ok(self.exps.cmp(&other.exps))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        let mut q = *other;
        for (slot, &e) in q.exps.iter_mut().zip(&self.exps) {
            *slot = slot.checked_sub(e)?;
        }
        Some(q)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (slot, &e) in m.exps.iter_mut().zip(&other.exps) {
            *slot = (*slot).max(e);
        }
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Index of the only variable present, if this is a pure power `x_i^e`, `e > 0`.
    pub fn pure_power_variable(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps[..self.arity()].iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Substitutes `x_i -> x_{perm[i]}` (zero-based).
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut m = Monomial::one(self.arity());
        for (i, &p) in perm.iter().enumerate() {
            m.exps[p] = self.exps[i];
        }
        m
    }

    /// `x_i <-> x_{i+1}` (zero-based `i`).
    pub fn swapped(&self, i: usize) -> Monomial {
        let mut m = *self;
        m.exps.swap(i, i + 1);
        m
    }

    pub fn reversed(&self) -> Monomial {
        let mut m = *self;
        m.exps[..self.arity()].reverse();
        m
    }

    /// The same exponents viewed in a ring with a different number of
    /// variables. Fails if a dropped variable has a nonzero exponent.
    pub fn with_arity(&self, arity: usize) -> Option<Monomial> {
        if arity > MAX_ARITY || self.exps[arity.min(MAX_ARITY)..].iter().any(|&e| e > 0) {
            return None;
        }
        let mut m = *self;
        m.arity = arity as u8;
        Some(m)
    }
}

impl std::ops::Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        debug_assert_eq!(self.arity, rhs.arity);
        let mut m = self;
        for (slot, &e) in m.exps.iter_mut().zip(&rhs.exps) {
            *slot = slot.checked_add(e).expect("exponent overflow (max 255)");
        }
        m
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic with `x1 > x2 > ...`; arity only breaks ties between
/// monomials of different rings.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps.cmp(&other.exps).then(self.arity.cmp(&other.arity))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps[..self.arity()].iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Sort key for graded listings: total degree first, then lex.
pub fn degree_lex_key(m: &Monomial) -> (u32, Monomial) {
    (m.degree(), *m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_first_coordinate_decides() {
        let a = Monomial::new(&[1, 0]);
        let b = Monomial::new(&[0, 5]);
        assert_eq!(a.lex_compare(&b).unwrap(), Ordering::Greater);
        let c = Monomial::new(&[2, 3, 0]);
        assert_eq!(c.lex_compare(&c).unwrap(), Ordering::Equal);
    }

    #[test]
    fn lex_skip_monomials() {
        // x2^2 x4^3 x5^3 x8^5 against x2^2 x4^3 x5^4: decided at x5
        let a = Monomial::new(&[0, 2, 0, 3, 3, 0, 0, 5]);
        let b = Monomial::new(&[0, 2, 0, 3, 4, 0, 0, 0]);
        assert_eq!(a.lex_compare(&b).unwrap(), Ordering::Less);
    }

    #[test]
    fn arity_mismatch() {
        let a = Monomial::new(&[1, 0]);
        let b = Monomial::new(&[1, 0, 0]);
        assert_eq!(a.lex_compare(&b), Err(Error::ArityMismatch(2, 3)));
    }

    #[test]
    fn divisibility() {
        let a = Monomial::new(&[1, 2, 0]);
        let b = Monomial::new(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), Some(Monomial::new(&[1, 0, 1])));
        assert_eq!(a.lcm(&Monomial::new(&[0, 3, 1])), Monomial::new(&[1, 3, 1]));
        assert_eq!(Monomial::new(&[0, 0, 4]).pure_power_variable(), Some(2));
        assert_eq!(Monomial::new(&[0, 1, 4]).pure_power_variable(), None);
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::new(&[2, 0, 1]).to_string(), "x1^2*x3");
        assert_eq!(Monomial::one(3).to_string(), "1");
        assert_eq!(Monomial::new(&[2, 0, 1]).reversed().to_string(), "x1*x3^2");
    }
}
