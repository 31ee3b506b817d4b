//! The point loci `Y_{n,k,r}`, the lifts of the generators that vanish on
//! them, and vanishing ideals of finite point sets by Buchberger–Möller.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::Serialize;

use super::symmetric::{elementary, elementary_value, homogeneous, homogeneous_value};
use super::{RingSpec, Variant};
use crate::combinat::{enumerate_tail_positive, Word};
use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::poly::{Monomial, Polynomial, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointSet {
    pub arity: usize,
    pub alphas: Vec<Rational>,
    pub points: Vec<Vec<Rational>>,
}

impl PointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The point with `y_j = α_i` whenever letter `j` sits at position `i`.
    pub fn point_of_word(&self, w: &Word) -> Result<Vec<Rational>> {
        if w.len() != self.alphas.len() {
            return Err(Error::InvalidParameters(format!(
                "word {w} has length {}, expected {}",
                w.len(),
                self.alphas.len()
            )));
        }
        let mut point = vec![None; self.arity];
        for (i, &letter) in w.letters().iter().enumerate() {
            if letter == 0 {
                continue;
            }
            let slot = point
                .get_mut(letter as usize - 1)
                .ok_or_else(|| Error::InvalidParameters(format!("letter {letter} exceeds n = {}", self.arity)))?;
            if slot.is_some() {
                return Err(Error::InvalidParameters(format!("letter {letter} repeated in {w}")));
            }
            *slot = Some(self.alphas[i].clone());
        }
        point
            .into_iter()
            .enumerate()
            .map(|(j, y)| y.ok_or_else(|| Error::InvalidParameters(format!("letter {} missing from {w}", j + 1))))
            .collect()
    }

    pub fn word_of_point(&self, point: &[Rational]) -> Result<Word> {
        let mut letters = vec![0u32; self.alphas.len()];
        for (j, y) in point.iter().enumerate() {
            let i = self
                .alphas
                .iter()
                .position(|a| a == y)
                .ok_or_else(|| Error::InvalidParameters(format!("coordinate {y} is not one of the alphas")))?;
            if letters[i] != 0 {
                return Err(Error::InvalidParameters(format!("coordinate {y} repeated")));
            }
            letters[i] = j as u32 + 1;
        }
        Ok(Word::new(letters))
    }
}

/// `α_i = i`. The classical variant uses the `n!` points with `k = 0`.
pub fn build_point_set(spec: &RingSpec) -> Result<PointSet> {
    let (k, r) = match spec.variant {
        Variant::Classical => (0, 0),
        _ => (spec.k, spec.r),
    };
    let alphas: Vec<Rational> = (1..=(spec.n + k) as i64).map(Rational::from).collect();
    let mut set = PointSet {
        arity: spec.n,
        alphas,
        points: Vec::new(),
    };
    let words = enumerate_tail_positive(spec.n, k, r)?;
    set.points = words.iter().map(|w| set.point_of_word(w)).collect::<Result<_>>()?;
    Ok(set)
}

pub fn vanishing_check(f: &Polynomial, y: &PointSet) -> Result<bool> {
    for p in &y.points {
        if !f.evaluate(p)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Inhomogeneous deformations of the generators of `I_{n,k,r}`, in the same
/// order, each vanishing on `Y_{n,k,r}` with `α_i = i`:
/// `sum_i (-1)^i h_{m-i}(x) e_i(α_1..α_{n+k})` for `m = k+1..k+n`, then
/// `sum_i (-1)^i e_{m-i}(x) h_i(α_{n+k-r+1}..α_{n+k})` for `m = n, ..., n-r+1`.
pub fn generator_lifts(spec: &RingSpec) -> Result<Vec<Polynomial>> {
    if spec.variant != Variant::MixedH {
        return Err(Error::InvalidParameters(format!(
            "lifts are defined for the h variant, got {}",
            spec.variant
        )));
    }
    let (n, k, r) = (spec.n, spec.k, spec.r);
    let alphas: Vec<Rational> = (1..=(n + k) as i64).map(Rational::from).collect();
    let tail = &alphas[n + k - r..];
    let sign = |i: u32| {
        if i.is_multiple_of(2) {
            Rational::one()
        } else {
            -Rational::one()
        }
    };
    let mut lifts = Vec::new();
    for m in (k + 1..=k + n).map(|m| m as u32) {
        let mut f = Polynomial::zero(n);
        for i in 0..=m {
            let c = sign(i) * elementary_value(i, &alphas);
            f = f.add_scaled(&homogeneous(m - i, 1..=n, n)?, &c, None);
        }
        lifts.push(f);
    }
    for m in (n - r + 1..=n).rev().map(|m| m as u32) {
        let mut f = Polynomial::zero(n);
        for i in 0..=m {
            let c = sign(i) * homogeneous_value(i, tail);
            f = f.add_scaled(&elementary(m - i, 1..=n, n)?, &c, None);
        }
        lifts.push(f);
    }
    Ok(lifts)
}

/// Reduced lex Gröbner basis of the ideal of all polynomials vanishing on
/// the points.
pub fn vanishing_ideal(y: &PointSet) -> Result<GroebnerBasis> {
    let n = y.arity;
    for p in &y.points {
        if p.len() != n {
            return Err(Error::ArityMismatch(p.len(), n));
        }
    }
    let distinct: BTreeSet<Vec<String>> = y
        .points
        .iter()
        .map(|p| p.iter().map(|c| c.to_string()).collect())
        .collect();
    if distinct.len() != y.points.len() {
        return Err(Error::InvalidParameters("repeated point".into()));
    }

    // Echelon rows over the evaluation space; each row remembers which
    // combination of standard monomials produced it.
    struct Row {
        pivot: usize,
        values: Vec<Rational>,
        combo: Vec<Rational>,
    }
    let mut rows: Vec<Row> = Vec::new();
    let mut standard: Vec<Monomial> = Vec::new();
    let mut gb: Vec<Polynomial> = Vec::new();
    let mut leads: Vec<Monomial> = Vec::new();
    let mut candidates: BTreeSet<Monomial> = BTreeSet::from([Monomial::one(n)]);

    while let Some(t) = candidates.pop_first() {
        if leads.iter().any(|l| l.divides(&t)) {
            continue;
        }
        let t_poly = Polynomial::from_monomial(t, Rational::one());
        let mut values: Vec<Rational> = y.points.iter().map(|p| t_poly.evaluate(p)).collect::<Result<_>>()?;
        let mut combo = vec![Rational::zero(); standard.len() + 1];
        combo[standard.len()] = Rational::one();
        for row in &rows {
            let c = values[row.pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (v, w) in values.iter_mut().zip(&row.values) {
                *v -= &(&c * w);
            }
            for (v, w) in combo.iter_mut().zip(&row.combo) {
                *v -= &(&c * w);
            }
        }
        match values.iter().position(|v| !v.is_zero()) {
            None => {
                let mut terms = vec![(t, Rational::one())];
                terms.extend(standard.iter().zip(&combo).map(|(m, c)| (*m, c.clone())));
                gb.push(Polynomial::from_terms(n, terms));
                leads.push(t);
            }
            Some(pivot) => {
                let inv = values[pivot].recip();
                for v in values.iter_mut().chain(combo.iter_mut()) {
                    *v = &*v * &inv;
                }
                for row in rows.iter_mut() {
                    row.combo.push(Rational::zero());
                    let c = row.values[pivot].clone();
                    if c.is_zero() {
                        continue;
                    }
                    for (v, w) in row.values.iter_mut().zip(&values) {
                        *v -= &(&c * w);
                    }
                    for (v, w) in row.combo.iter_mut().zip(&combo) {
                        *v -= &(&c * w);
                    }
                }
                rows.push(Row { pivot, values, combo });
                standard.push(t);
                for i in 0..n {
                    candidates.insert(t * Monomial::var(i, n));
                }
            }
        }
    }
    Ok(GroebnerBasis::from_elements(n, gb, true, true))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bijection_example() {
        let spec = RingSpec::mixed_h(4, 3, 2).unwrap();
        let y = build_point_set(&spec).unwrap();
        let w = Word::from_digits("0203041").unwrap();
        let p = y.point_of_word(&w).unwrap();
        let expected: Vec<Rational> = [7, 2, 4, 6].iter().map(|&a| Rational::from(a)).collect();
        assert_eq!(p, expected);
        assert_eq!(y.word_of_point(&p).unwrap(), w);
        assert!(y.points.contains(&expected));
    }

    #[test]
    fn single_point_ideal() {
        let y = PointSet {
            arity: 2,
            alphas: vec![Rational::zero()],
            points: vec![vec![Rational::zero(), Rational::zero()]],
        };
        assert_eq!(vanishing_ideal(&y).unwrap().to_text_list(), vec!["x2", "x1"]);
    }

    #[test]
    fn small_lift() {
        let spec = RingSpec::mixed_h(2, 1, 1).unwrap();
        let lifts = generator_lifts(&spec).unwrap();
        let n = 2;
        let e1 = elementary(1, 1..=n, n).unwrap();
        let e2 = elementary(2, 1..=n, n).unwrap();
        let three = Rational::from(3);
        let expected = &(&e2 - &e1.scale(&three)) + &Polynomial::constant(n, Rational::from(9));
        assert_eq!(lifts[2], expected);
        let y = build_point_set(&spec).unwrap();
        assert_eq!(y.len(), 4);
        for f in &lifts {
            assert!(vanishing_check(f, &y).unwrap());
        }
    }
}
