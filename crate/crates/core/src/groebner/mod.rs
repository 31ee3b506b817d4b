//! Lex Gröbner bases by Buchberger's algorithm, normal forms and quotient
//! rings.

mod quotient;

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Rational, TermOrder};

pub use quotient::{operator_matrix, standard_monomials, QuotientBasis, QuotientRing, SparseVector};

/// A finitely generated ideal of `Q[x_1..x_arity]`.
#[derive(Clone, Debug)]
pub struct Ideal {
    arity: usize,
    generators: Vec<Polynomial>,
}

impl Ideal {
    /// Zero generators are dropped; they contribute nothing.
    pub fn new(arity: usize, generators: Vec<Polynomial>) -> Result<Ideal> {
        for g in &generators {
            if g.arity() != arity {
                return Err(Error::ArityMismatch(g.arity(), arity));
            }
        }
        Ok(Ideal {
            arity,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groebner_basis(&self) -> GroebnerBasis {
        reduce_basis(&buchberger(self, TermOrder::Lex))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: TermOrder,
    arity: usize,
    /// Monic, sorted by leading monomial ascending.
    elements: Vec<Polynomial>,
    minimal: bool,
    reduced: bool,
}

impl GroebnerBasis {
    pub(crate) fn from_elements(
        arity: usize,
        mut elements: Vec<Polynomial>,
        minimal: bool,
        reduced: bool,
    ) -> GroebnerBasis {
        elements.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
        GroebnerBasis {
            order: TermOrder::Lex,
            arity,
            elements,
            minimal,
            reduced,
        }
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .filter_map(|g| g.leading_monomial().copied())
            .collect()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.elements
            .iter()
            .any(|g| g.leading_monomial().is_some_and(|m| m.is_one()))
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.arity() != self.arity {
            return Err(Error::ArityMismatch(f.arity(), self.arity));
        }
        Ok(reduce_fully(f, &self.elements))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Independent check that every S-polynomial reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let g = &self.elements;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| reduce_fully(&s_polynomial(&g[i], &g[j]), g).is_zero()))
    }

    /// Canonical text form of each element, for serialization.
    pub fn to_text_list(&self) -> Vec<String> {
        self.elements.iter().map(|g| g.to_text()).collect()
    }
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (mf, cf) = f.leading_term().expect("nonzero");
    let (mg, cg) = g.leading_term().expect("nonzero");
    let l = mf.lcm(&mg);
    let uf = mf.quotient_of(&l).expect("divides lcm");
    let ug = mg.quotient_of(&l).expect("divides lcm");
    f.mul_term(&uf, &cf.recip()).add_scaled(g, &-cg.recip(), Some(&ug))
}

/// Full multivariate division. The reducer of a term is the first element
/// of `basis` whose leading monomial divides it.
fn reduce_fully(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let leads: Vec<(Monomial, Rational)> = basis
        .iter()
        .map(|g| g.leading_term().expect("basis elements are nonzero"))
        .collect();
    let mut rest: BTreeMap<Monomial, Rational> = f.terms().iter().cloned().collect();
    let mut remainder = Vec::new();
    while let Some((m, c)) = rest.pop_last() {
        let Some(idx) = leads.iter().position(|(lt, _)| lt.divides(&m)) else {
            remainder.push((m, c));
            continue;
        };
        let (lt, lc) = &leads[idx];
        let q = lt.quotient_of(&m).expect("divides");
        let factor = &c / lc;
        for (t, d) in &basis[idx].terms()[1..] {
            let key = *t * q;
            let delta = &factor * d;
            match rest.entry(key) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(-delta);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() -= &delta;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
    }
    Polynomial::from_terms(f.arity(), remainder)
}

/// Pair queue key: lcm degree first (normal strategy), then lcm, then the
/// indices, so the run is deterministic.
type PairKey = (u32, Monomial, usize, usize);

/// Buchberger's algorithm with the coprime and chain criteria.
///
/// The result is a Gröbner basis of monic polynomials; it is neither minimal
/// nor reduced in general.
pub fn buchberger(ideal: &Ideal, order: TermOrder) -> GroebnerBasis {
    let TermOrder::Lex = order;
    let arity = ideal.arity;
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut leads: Vec<Monomial> = Vec::new();
    let mut queue: BTreeSet<PairKey> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let unit = |arity| GroebnerBasis::from_elements(arity, vec![Polynomial::one(arity)], true, true);

    let add = |p: Polynomial,
               basis: &mut Vec<Polynomial>,
               leads: &mut Vec<Monomial>,
               queue: &mut BTreeSet<PairKey>,
               pending: &mut HashSet<(usize, usize)>| {
        let p = p.monic();
        let lt = *p.leading_monomial().expect("nonzero");
        let j = basis.len();
        for (i, li) in leads.iter().enumerate() {
            let l = li.lcm(&lt);
            queue.insert((l.degree(), l, i, j));
            pending.insert((i, j));
        }
        basis.push(p);
        leads.push(lt);
        lt.is_one()
    };

    for g in &ideal.generators {
        let r = reduce_fully(g, &basis);
        if !r.is_zero() && add(r, &mut basis, &mut leads, &mut queue, &mut pending) {
            return unit(arity);
        }
    }

    while let Some(key) = queue.pop_first() {
        let (_, lcm, i, j) = key;
        pending.remove(&(i, j));
        if leads[i].is_coprime(&leads[j]) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leads[k].divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = reduce_fully(&s, &basis);
        if !r.is_zero() && add(r, &mut basis, &mut leads, &mut queue, &mut pending) {
            return unit(arity);
        }
    }
    GroebnerBasis::from_elements(arity, basis, false, false)
}

/// Drops elements whose leading monomial is divisible by another's.
pub fn minimize(g: &GroebnerBasis) -> GroebnerBasis {
    let mut kept: Vec<Polynomial> = Vec::new();
    // ascending leading monomials: a divisor of LT(g) sorts no later than g
    for p in &g.elements {
        let lt = p.leading_monomial().expect("nonzero");
        if !kept.iter().any(|q| q.leading_monomial().expect("nonzero").divides(lt)) {
            kept.push(p.monic());
        }
    }
    GroebnerBasis::from_elements(g.arity, kept, true, g.reduced)
}

/// The unique reduced Gröbner basis of the same ideal.
pub fn reduce_basis(g: &GroebnerBasis) -> GroebnerBasis {
    let min = minimize(g);
    let mut elements = min.elements.clone();
    for i in 0..elements.len() {
        let others: Vec<Polynomial> = elements
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let lead = Polynomial::from_terms(g.arity, [elements[i].terms()[0].clone()]);
        let tail = &elements[i] - &lead;
        elements[i] = &lead + &reduce_fully(&tail, &others);
    }
    GroebnerBasis::from_elements(g.arity, elements, true, true)
}

pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial> {
    g.normal_form(f)
}

pub fn ideal_membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.groebner_basis().contains(f)
}

/// Equality of ideals, by comparing reduced Gröbner bases.
pub fn ideal_equals(a: &Ideal, b: &Ideal) -> Result<bool> {
    if a.arity != b.arity {
        return Err(Error::ArityMismatch(a.arity, b.arity));
    }
    Ok(a.groebner_basis() == b.groebner_basis())
}
