//! Standard monomial bases of finite-dimensional quotients, memoized normal
//! forms in monomial coordinates, and matrices of variable permutations.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{GroebnerBasis, Ideal};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{check_permutation, degree_lex_key, Monomial, Polynomial, Rational};
use crate::qt::QtPolynomial;

/// Sparse coordinates `(index into the standard basis, coefficient)`,
/// indices strictly increasing.
pub type SparseVector = Vec<(usize, Rational)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    /// Sorted by `(degree, lex)`.
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// `degree_counts[d]` standard monomials of degree `d`.
    degree_counts: Vec<usize>,
}

impl QuotientBasis {
    fn new(mut monomials: Vec<Monomial>) -> QuotientBasis {
        monomials.sort_by_key(degree_lex_key);
        let index = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let top = monomials.last().map_or(0, |m| m.degree() as usize + 1);
        let mut degree_counts = vec![0; top];
        for m in &monomials {
            degree_counts[m.degree() as usize] += 1;
        }
        QuotientBasis {
            monomials,
            index,
            degree_counts,
        }
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn degree_counts(&self) -> &[usize] {
        &self.degree_counts
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Index range of the degree-`d` monomials.
    pub fn degree_range(&self, d: usize) -> std::ops::Range<usize> {
        let start: usize = self.degree_counts.iter().take(d).sum();
        start..start + self.degree_counts.get(d).copied().unwrap_or(0)
    }

    /// `sum_m q^{deg m}`.
    pub fn hilbert_series(&self) -> QtPolynomial {
        QtPolynomial::from_q_coeffs(self.degree_counts.iter().map(|&c| BigInt::from(c)))
    }

    /// Exponent vectors, for JSON output.
    pub fn exponent_vectors(&self) -> Vec<Vec<u32>> {
        self.monomials.iter().map(|m| m.exponents()).collect()
    }
}

/// Monomials not divisible by any leading monomial of `g`.
///
/// Fails with [`Error::InfiniteQuotient`] unless every variable has a pure
/// power among the leading monomials.
pub fn standard_monomials(g: &GroebnerBasis) -> Result<QuotientBasis> {
    let n = g.arity();
    let leads = g.leading_monomials();
    for v in 0..n {
        if !leads.iter().any(|m| m.pure_power_variable() == Some(v) || m.is_one()) {
            return Err(Error::InfiniteQuotient(v + 1));
        }
    }
    if g.is_unit() {
        return Ok(QuotientBasis::new(Vec::new()));
    }
    // the standard monomials form an order ideal; grow it from 1
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut frontier = vec![Monomial::one(n)];
    seen.insert(Monomial::one(n));
    while let Some(m) = frontier.pop() {
        for v in 0..n {
            let next = m * Monomial::var(v, n);
            if !seen.contains(&next) && !leads.iter().any(|l| l.divides(&next)) {
                seen.insert(next);
                frontier.push(next);
            }
        }
    }
    Ok(QuotientBasis::new(seen.into_iter().collect()))
}

/// `Q[x]/I` for a zero-dimensional ideal, with normal forms of monomials
/// cached.
///
/// The cache makes repeated reduction of products and permuted monomials
/// cheap; it is filled lazily and is not shared between threads.
#[derive(Debug)]
pub struct QuotientRing {
    gb: GroebnerBasis,
    basis: QuotientBasis,
    memo: RefCell<HashMap<Monomial, Arc<SparseVector>>>,
}

impl QuotientRing {
    pub fn new(ideal: &Ideal) -> Result<QuotientRing> {
        QuotientRing::from_groebner(ideal.groebner_basis())
    }

    pub fn from_groebner(gb: GroebnerBasis) -> Result<QuotientRing> {
        let basis = standard_monomials(&gb)?;
        Ok(QuotientRing {
            gb,
            basis,
            memo: RefCell::new(HashMap::new()),
        })
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn basis(&self) -> &QuotientBasis {
        &self.basis
    }

    pub fn arity(&self) -> usize {
        self.gb.arity()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    fn reducer(&self, m: &Monomial) -> Option<(usize, Monomial)> {
        self.gb.elements().iter().enumerate().find_map(|(i, g)| {
            let lt = g.leading_monomial().expect("nonzero");
            lt.quotient_of(m).map(|q| (i, q))
        })
    }

    /// Normal form of a monomial in standard-basis coordinates.
    pub fn reduce_monomial(&self, m: &Monomial) -> Arc<SparseVector> {
        if let Some(v) = self.memo.borrow().get(m) {
            return v.clone();
        }
        // post-order walk: a monomial is finished once every monomial its
        // reducer rewrites it into is finished
        let mut stack = vec![*m];
        while let Some(&top) = stack.last() {
            if self.memo.borrow().contains_key(&top) {
                stack.pop();
                continue;
            }
            let Some((gi, q)) = self.reducer(&top) else {
                let idx = self.basis.index_of(&top).expect("irreducible monomials are standard");
                self.memo
                    .borrow_mut()
                    .insert(top, Arc::new(vec![(idx, Rational::from(1))]));
                stack.pop();
                continue;
            };
            let g = &self.gb.elements()[gi];
            let children: Vec<(Monomial, &Rational)> = g.terms()[1..].iter().map(|(t, c)| (*t * q, c)).collect();
            let missing: Vec<Monomial> = {
                let memo = self.memo.borrow();
                children
                    .iter()
                    .map(|(c, _)| *c)
                    .filter(|c| !memo.contains_key(c))
                    .collect()
            };
            if !missing.is_empty() {
                stack.extend(missing);
                continue;
            }
            // g is monic: m = q*LT(g) ≡ -sum c_t q*t
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            {
                let memo = self.memo.borrow();
                for (child, c) in &children {
                    for (idx, v) in memo[child].iter() {
                        let e = acc.entry(*idx).or_insert_with(Rational::zero);
                        *e -= &(*c * v);
                    }
                }
            }
            let vec: SparseVector = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            self.memo.borrow_mut().insert(top, Arc::new(vec));
            stack.pop();
        }
        self.memo.borrow()[m].clone()
    }

    pub fn reduce(&self, f: &Polynomial) -> Result<SparseVector> {
        if f.arity() != self.arity() {
            return Err(Error::ArityMismatch(f.arity(), self.arity()));
        }
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (m, c) in f.terms() {
            for (idx, v) in self.reduce_monomial(m).iter() {
                let e = acc.entry(*idx).or_insert_with(Rational::zero);
                *e += &(c * v);
            }
        }
        Ok(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect())
    }

    /// Dense coordinates in the standard monomial basis.
    pub fn coordinates(&self, f: &Polynomial) -> Result<Vec<Rational>> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (i, v) in self.reduce(f)? {
            out[i] = v;
        }
        Ok(out)
    }

    pub fn to_polynomial(&self, v: &SparseVector) -> Polynomial {
        Polynomial::from_terms(
            self.arity(),
            v.iter().map(|(i, c)| (self.basis.monomials[*i], c.clone())),
        )
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        Ok(self.to_polynomial(&self.reduce(f)?))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_empty())
    }

    /// Matrix of `f(x) -> f(x_{perm(1)}, ..., x_{perm(n)})` on each graded
    /// piece; `perm` is zero-based. Column `j` holds the image of the `j`-th
    /// standard monomial of that degree.
    ///
    /// With this convention `matrix(π∘σ) = matrix(π) · matrix(σ)`.
    pub fn permutation_matrices(&self, perm: &[usize]) -> Result<Vec<Matrix>> {
        check_permutation(perm, self.arity())?;
        let mut blocks = Vec::new();
        for d in 0..self.basis.degree_counts.len() {
            let range = self.basis.degree_range(d);
            let mut m = Matrix::zeros(range.len(), range.len());
            for (col, j) in range.clone().enumerate() {
                let image = self.basis.monomials[j].permuted(perm);
                for (i, v) in self.reduce_monomial(&image).iter() {
                    if !range.contains(i) {
                        return Err(Error::Domain("quotient is not graded".into()));
                    }
                    m.set(i - range.start, col, v.clone());
                }
            }
            blocks.push(m);
        }
        Ok(blocks)
    }

    /// Trace of a variable permutation on each graded piece.
    pub fn graded_trace(&self, perm: &[usize]) -> Result<Vec<Rational>> {
        check_permutation(perm, self.arity())?;
        let mut out = Vec::new();
        for d in 0..self.basis.degree_counts.len() {
            let mut t = Rational::zero();
            for j in self.basis.degree_range(d) {
                let image = self.basis.monomials[j].permuted(perm);
                if let Some((_, v)) = self.reduce_monomial(&image).iter().find(|(i, _)| *i == j) {
                    t += v;
                }
            }
            out.push(t);
        }
        Ok(out)
    }

    /// Dimension of the span of `polys` in the quotient.
    pub fn span_rank(&self, polys: &[Polynomial]) -> Result<usize> {
        let rows = polys.iter().map(|p| self.coordinates(p)).collect::<Result<Vec<_>>>()?;
        if rows.is_empty() {
            return Ok(0);
        }
        Ok(Matrix::from_rows(rows)?.rank())
    }
}

/// Standalone version of [`QuotientRing::permutation_matrices`].
pub fn operator_matrix(perm: &[usize], g: &GroebnerBasis) -> Result<Vec<Matrix>> {
    QuotientRing::from_groebner(g.clone())?.permutation_matrices(perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize, n: usize) -> Polynomial {
        Polynomial::var(i, n)
    }

    fn classical(n: usize) -> Ideal {
        // power sums generate the same ideal as the elementary ones over Q
        let gens = (1..=n as u32)
            .map(|d| (1..=n).fold(Polynomial::zero(n), |acc, i| &acc + &x(i, n).pow(d)))
            .collect();
        Ideal::new(n, gens).unwrap()
    }

    #[test]
    fn simple_quotient() {
        let i = Ideal::new(2, vec![x(1, 2).pow(2), x(2, 2)]).unwrap();
        let b = standard_monomials(&i.groebner_basis()).unwrap();
        assert_eq!(b.exponent_vectors(), vec![vec![0, 0], vec![1, 0]]);
    }

    #[test]
    fn infinite_quotient_is_reported() {
        let i = Ideal::new(2, vec![x(1, 2)]).unwrap();
        assert!(matches!(
            standard_monomials(&i.groebner_basis()),
            Err(Error::InfiniteQuotient(2))
        ));
    }

    #[test]
    fn coinvariants_of_three_variables() {
        let ring = QuotientRing::new(&classical(3)).unwrap();
        assert_eq!(ring.dim(), 6);
        assert_eq!(ring.basis().hilbert_series().to_string(), "1 + 2q + 2q^2 + q^3");
        let id = ring.permutation_matrices(&[0, 1, 2]).unwrap();
        for (d, block) in id.iter().enumerate() {
            assert_eq!(*block, Matrix::identity(ring.basis().degree_counts()[d]));
        }
    }

    #[test]
    fn memoized_and_plain_normal_forms_agree() {
        let ring = QuotientRing::new(&classical(3)).unwrap();
        let f = &(&x(1, 3).pow(4) * &x(2, 3)) - &(&x(3, 3).pow(2) * &x(2, 3).pow(3));
        let plain = ring.groebner_basis().normal_form(&f).unwrap();
        assert_eq!(ring.normal_form(&f).unwrap(), plain);
    }

    #[test]
    fn left_action_composes() {
        let ring = QuotientRing::new(&classical(3)).unwrap();
        let p = [1, 2, 0];
        let s = [1, 0, 2];
        let ps: Vec<usize> = (0..3).map(|i| p[s[i]]).collect();
        let mp = ring.permutation_matrices(&p).unwrap();
        let ms = ring.permutation_matrices(&s).unwrap();
        let mps = ring.permutation_matrices(&ps).unwrap();
        for d in 0..mp.len() {
            assert_eq!(&mp[d] * &ms[d], mps[d]);
        }
        assert!(ring.permutation_matrices(&[0, 0, 1]).is_err());
    }
}
