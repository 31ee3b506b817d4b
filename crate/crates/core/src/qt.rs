//! Polynomials in two formal variables `q`, `t` with integer coefficients.
//!
//! Univariate `q`-polynomials (Hilbert series, q-analogs) are the `t`-free
//! case.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{Map, Value};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QtPolynomial {
    /// `(q-degree, t-degree) -> coefficient`, never zero.
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl QtPolynomial {
    pub fn zero() -> QtPolynomial {
        QtPolynomial::default()
    }

    pub fn one() -> QtPolynomial {
        QtPolynomial::monomial(0, 0, 1)
    }

    pub fn monomial(dq: u32, dt: u32, c: impl Into<BigInt>) -> QtPolynomial {
        let mut p = QtPolynomial::zero();
        p.add_term(dq, dt, c.into());
        p
    }

    pub fn q() -> QtPolynomial {
        QtPolynomial::monomial(1, 0, 1)
    }

    pub fn t() -> QtPolynomial {
        QtPolynomial::monomial(0, 1, 1)
    }

    /// `q^d`.
    pub fn q_pow(d: u32) -> QtPolynomial {
        QtPolynomial::monomial(d, 0, 1)
    }

    /// `sum_d coeffs[d] q^d`.
    pub fn from_q_coeffs<I: Into<BigInt>>(coeffs: impl IntoIterator<Item = I>) -> QtPolynomial {
        let mut p = QtPolynomial::zero();
        for (d, c) in coeffs.into_iter().enumerate() {
            p.add_term(d as u32, 0, c.into());
        }
        p
    }

    pub fn add_term(&mut self, dq: u32, dt: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((dq, dt)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(dq, dt));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, dq: u32, dt: u32) -> BigInt {
        self.terms.get(&(dq, dt)).cloned().unwrap_or_default()
    }

    pub fn is_t_free(&self) -> bool {
        self.terms.keys().all(|&(_, dt)| dt == 0)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Coefficients of `q^0, q^1, ...` for a `t`-free polynomial.
    pub fn q_coefficients(&self) -> Vec<BigInt> {
        assert!(self.is_t_free(), "polynomial depends on t");
        let top = self.terms.keys().map(|&(dq, _)| dq).max();
        match top {
            None => Vec::new(),
            Some(top) => (0..=top).map(|d| self.coefficient(d, 0)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> QtPolynomial {
        let mut p = QtPolynomial::zero();
        for (&(a, b), v) in &self.terms {
            p.add_term(a, b, v * c);
        }
        p
    }

    /// Multiplies by `q^a t^b`.
    pub fn shift(&self, a: u32, b: u32) -> QtPolynomial {
        QtPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(x, y), c)| ((x + a, y + b), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> QtPolynomial {
        (0..e).fold(QtPolynomial::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, q: &BigInt, t: &BigInt) -> BigInt {
        self.terms.iter().map(|(&(a, b), c)| c * q.pow(a) * t.pow(b)).sum()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn set_t(&self, t: i64) -> QtPolynomial {
        let t = BigInt::from(t);
        let mut p = QtPolynomial::zero();
        for (&(a, b), c) in &self.terms {
            p.add_term(a, 0, c * t.pow(b));
        }
        p
    }

    pub fn swap_qt(&self) -> QtPolynomial {
        QtPolynomial {
            terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect(),
        }
    }

    /// JSON object keyed by `"(dq,dt)"`.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (&(a, b), c) in &self.terms {
            let v = match c.to_i64() {
                Some(i) => Value::from(i),
                None => Value::from(c.to_string()),
            };
            map.insert(format!("({a},{b})"), v);
        }
        Value::Object(map)
    }
}

/// `[m]_q = 1 + q + ... + q^{m-1}`.
pub fn q_integer(m: u32) -> QtPolynomial {
    QtPolynomial::from_q_coeffs((0..m).map(|_| 1))
}

/// `[m]_{q,t} = sum_{a+b=m-1} q^a t^b`.
pub fn qt_integer(m: u32) -> QtPolynomial {
    let mut p = QtPolynomial::zero();
    for a in 0..m {
        p.add_term(a, m - 1 - a, BigInt::one());
    }
    p
}

/// `[n]!_q`.
pub fn q_factorial(n: u32) -> QtPolynomial {
    (1..=n).fold(QtPolynomial::one(), |acc, i| &acc * &q_integer(i))
}

/// Gaussian binomial `[m choose i]_q`; zero when `i > m`.
///
/// Computed by the q-Pascal recursion so that no polynomial division is
/// needed.
pub fn q_binomial(m: u32, i: u32) -> QtPolynomial {
    if i > m {
        return QtPolynomial::zero();
    }
    // row[j] = [row choose j]_q
    let mut row = vec![QtPolynomial::one()];
    for len in 1..=m {
        let mut next = vec![QtPolynomial::one(); len as usize + 1];
        for j in 1..len as usize {
            // [len, j] = [len-1, j-1] + q^j [len-1, j]
            next[j] = &row[j - 1] + &row[j].shift(j as u32, 0);
        }
        row = next;
    }
    row[i as usize].clone()
}

impl Add for &QtPolynomial {
    type Output = QtPolynomial;
    fn add(self, rhs: &QtPolynomial) -> QtPolynomial {
        let mut p = self.clone();
        for (&(a, b), c) in &rhs.terms {
            p.add_term(a, b, c.clone());
        }
        p
    }
}

impl Sub for &QtPolynomial {
    type Output = QtPolynomial;
    fn sub(self, rhs: &QtPolynomial) -> QtPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &QtPolynomial {
    type Output = QtPolynomial;
    fn neg(self) -> QtPolynomial {
        QtPolynomial {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Mul for &QtPolynomial {
    type Output = QtPolynomial;
    fn mul(self, rhs: &QtPolynomial) -> QtPolynomial {
        let mut p = QtPolynomial::zero();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &rhs.terms {
                p.add_term(a + x, b + y, c * d);
            }
        }
        p
    }
}

impl Add for QtPolynomial {
    type Output = QtPolynomial;
    fn add(self, rhs: QtPolynomial) -> QtPolynomial {
        &self + &rhs
    }
}

impl Mul for QtPolynomial {
    type Output = QtPolynomial;
    fn mul(self, rhs: QtPolynomial) -> QtPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for QtPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (&(a, b), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut mono = String::new();
            for (var, e) in [("q", a), ("t", b)] {
                match e {
                    0 => {}
                    1 => mono.push_str(var),
                    _ => mono.push_str(&format!("{var}^{e}")),
                }
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QtPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
