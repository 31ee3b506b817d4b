//! Schubert polynomials, the permutations `Π_{n,k,r}` indexing a Schubert
//! basis of `R_{n,k,r}`, and its structure constants.

mod demazure;

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::combinat::{permutations, Word};
use crate::error::{Error, Result};
use crate::groebner::{QuotientRing, SparseVector};
use crate::linalg::Matrix;
use crate::poly::{divided_difference, Monomial, Polynomial, Rational};
use crate::rings::{build_quotient, RingSpec};

pub use demazure::{
    demazure_character, demazure_character_with, explicit_groebner_check, leading_term_oracle, reversed_skip_character,
    DemazureConvention, ExplicitGroebnerBasis, ExplicitGroebnerReport, SortingChoice, DEMAZURE_CONVENTION,
};

/// Largest `m` for which Schubert polynomials of `S_m` are computed.
pub const DEFAULT_SCHUBERT_BOUND: usize = 8;

fn check_perm(pi: &[u32]) -> Result<()> {
    let mut seen = vec![false; pi.len()];
    for &v in pi {
        let i = (v as usize).wrapping_sub(1);
        if i >= seen.len() || seen[i] {
            return Err(Error::NotAPermutation(format!("{pi:?}")));
        }
        seen[i] = true;
    }
    Ok(())
}

/// Drops trailing fixed points; the identity keeps one letter.
fn trimmed(pi: &[u32]) -> Vec<u32> {
    let mut m = pi.len();
    while m > 1 && pi[m - 1] == m as u32 {
        m -= 1;
    }
    pi[..m.max(1)].to_vec()
}

/// Memoized Schubert polynomials, computed top-down from the longest
/// element of `S_m` by `S_{π s_i} = ∂_i S_π` for `π_i > π_{i+1}`.
#[derive(Debug, Default)]
pub struct SchubertTable {
    bound: usize,
    memo: HashMap<Vec<u32>, Polynomial>,
}

impl SchubertTable {
    pub fn new() -> SchubertTable {
        SchubertTable::with_bound(DEFAULT_SCHUBERT_BOUND)
    }

    pub fn with_bound(bound: usize) -> SchubertTable {
        SchubertTable {
            bound,
            memo: HashMap::new(),
        }
    }

    /// `S_π` in as many variables as the largest non-fixed point of `π`
    /// (one variable for the identity).
    pub fn get(&mut self, pi: &Word) -> Result<Polynomial> {
        check_perm(pi.letters())?;
        let t = trimmed(pi.letters());
        if t.len() > self.bound {
            return Err(Error::BoundExceeded(format!(
                "Schubert polynomial of {pi} needs S_{} (bound {})",
                t.len(),
                self.bound
            )));
        }
        self.compute(&t)
    }

    fn compute(&mut self, pi: &[u32]) -> Result<Polynomial> {
        let m = pi.len();
        // walk up the weak order to w0, then come back down
        let mut chain = vec![pi.to_vec()];
        let mut ascents = Vec::new();
        loop {
            let cur = chain.last().expect("nonempty");
            if self.memo.contains_key(cur) {
                break;
            }
            match (0..m - 1).find(|&i| cur[i] < cur[i + 1]) {
                Some(i) => {
                    let mut up = cur.clone();
                    up.swap(i, i + 1);
                    ascents.push(i + 1);
                    chain.push(up);
                }
                None => {
                    let exps: Vec<u32> = (0..m).map(|i| (m - 1 - i) as u32).collect();
                    let top = Polynomial::from_monomial(Monomial::new(&exps), Rational::one());
                    self.memo.insert(cur.clone(), top);
                    break;
                }
            }
        }
        while let Some(i) = ascents.pop() {
            let up = chain.pop().expect("chain longer than ascents");
            let down = chain.last().expect("nonempty").clone();
            let p = divided_difference(i, &self.memo[&up])?;
            self.memo.insert(down, p);
        }
        Ok(self.memo[pi].clone())
    }
}

pub fn schubert_polynomial(pi: &Word) -> Result<Polynomial> {
    SchubertTable::new().get(pi)
}

/// `Π_{n,k,r}`: permutations of `[n+k]` with every descent at a position
/// `<= n` and with `1..=r` among the first `n` letters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermSet {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub elements: Vec<Word>,
}

pub fn enumerate_pi_set(n: usize, k: usize, r: usize) -> Result<PermSet> {
    if r > n {
        return Err(Error::InvalidParameters(format!("r = {r} exceeds n = {n}")));
    }
    let elements = permutations(n + k)
        .into_iter()
        .filter(|pi| {
            let w = pi.letters();
            w.windows(2).enumerate().all(|(i, p)| p[0] < p[1] || i < n) && (1..=r as u32).all(|v| w[..n].contains(&v))
        })
        .collect();
    Ok(PermSet { n, k, r, elements })
}

/// `Φ(π) = prod_{i=1}^n x_{n-i+1}^{d_i}` with `d_i = #{j > i : π_i > π_j}`.
pub fn phi_monomial(pi: &Word, n: usize) -> Result<Monomial> {
    let w = pi.letters();
    if n > w.len() {
        return Err(Error::InvalidParameters(format!("n = {n} exceeds the length of {pi}")));
    }
    let mut exps = vec![0u32; n];
    for i in 0..n {
        exps[n - 1 - i] = w[i + 1..].iter().filter(|&&v| v < w[i]).count() as u32;
    }
    Ok(Monomial::new(&exps))
}

/// `S_π(x_n, ..., x_1)`, in `n` variables.
pub fn reversed_schubert(table: &mut SchubertTable, pi: &Word, n: usize) -> Result<Polynomial> {
    let s = table.get(pi)?;
    let s = s
        .with_arity(n.max(s.arity()))
        .and_then(|p| p.with_arity(n))
        .ok_or_else(|| Error::InvalidParameters(format!("S_{pi} involves variables beyond x{n}")))?;
    Ok(s.reverse_variables())
}

/// The Schubert basis of `R_{n,k,r}`, with normal forms in standard
/// coordinates.
pub struct SchubertBasis {
    pub spec: RingSpec,
    pub ring: QuotientRing,
    pub perms: Vec<Word>,
    pub polynomials: Vec<Polynomial>,
    columns: Vec<SparseVector>,
    /// Basis element whose normal form leads with the given standard
    /// monomial (indexed like the standard basis).
    by_lead: Vec<Option<usize>>,
    unitriangular: bool,
}

impl SchubertBasis {
    pub fn new(n: usize, k: usize, r: usize) -> Result<SchubertBasis> {
        let spec = RingSpec::mixed_h(n, k, r)?;
        let ring = build_quotient(&spec)?;
        let perms = enumerate_pi_set(n, k, r)?.elements;
        let mut table = SchubertTable::with_bound(DEFAULT_SCHUBERT_BOUND.max(n + k));
        let polynomials = perms
            .iter()
            .map(|pi| reversed_schubert(&mut table, pi, n))
            .collect::<Result<Vec<_>>>()?;
        let dim = ring.dim();
        if polynomials.len() != dim {
            return Err(Error::Falsified(format!(
                "|Π| = {} but dim R = {dim} for ({n},{k},{r})",
                polynomials.len()
            )));
        }
        let columns = polynomials.iter().map(|p| ring.reduce(p)).collect::<Result<Vec<_>>>()?;
        let monos = ring.basis().monomials();
        let mut by_lead = vec![None; dim];
        let mut unitriangular = true;
        for (j, (col, p)) in columns.iter().zip(&polynomials).enumerate() {
            // the largest standard monomial in the normal form must be the
            // leading monomial of S_π(x*), with coefficient one
            let top = col.iter().max_by(|a, b| monos[a.0].cmp(&monos[b.0]));
            let lead = p.leading_term()?.0;
            match top {
                Some((i, c)) if monos[*i] == lead && c.is_one() && by_lead[*i].is_none() => by_lead[*i] = Some(j),
                _ => unitriangular = false,
            }
        }
        if !unitriangular {
            return Err(Error::Falsified(format!(
                "Schubert normal forms are not unitriangular for ({n},{k},{r})"
            )));
        }
        Ok(SchubertBasis {
            spec,
            ring,
            perms,
            polynomials,
            columns,
            by_lead,
            unitriangular,
        })
    }

    pub fn dim(&self) -> usize {
        self.perms.len()
    }

    /// Coordinates of `f mod I_{n,k,r}` in the Schubert basis, by peeling off
    /// the largest remaining standard monomial.
    pub fn expand(&self, f: &Polynomial) -> Result<Vec<Rational>> {
        let monos = self.ring.basis().monomials();
        let mut rest: BTreeMap<Monomial, (usize, Rational)> = self
            .ring
            .reduce(f)?
            .into_iter()
            .map(|(i, c)| (monos[i], (i, c)))
            .collect();
        let mut out = vec![Rational::zero(); self.dim()];
        while let Some((_, (i, c))) = rest.pop_last() {
            let j = self.by_lead[i].expect("every standard monomial leads some basis element");
            for (l, v) in &self.columns[j] {
                if *l == i {
                    continue;
                }
                let slot = rest.entry(monos[*l]).or_insert_with(|| (*l, Rational::zero()));
                slot.1 -= &(&c * v);
                if slot.1.is_zero() {
                    rest.remove(&monos[*l]);
                }
            }
            out[j] = c;
        }
        Ok(out)
    }

    pub fn expand_map(&self, f: &Polynomial) -> Result<BTreeMap<Word, Rational>> {
        Ok(self
            .perms
            .iter()
            .cloned()
            .zip(self.expand(f)?)
            .filter(|(_, c)| !c.is_zero())
            .collect())
    }

    /// The leading monomials `in_<(S_π(x*))`, one per basis element.
    pub fn leading_monomials(&self) -> Result<Vec<Monomial>> {
        self.polynomials.iter().map(|p| Ok(p.leading_term()?.0)).collect()
    }

    /// Sorting both the basis and the standard monomials by decreasing
    /// leading monomial makes the change of basis upper unitriangular.
    pub fn change_of_basis_is_unitriangular(&self) -> bool {
        self.unitriangular
    }

    /// The change of basis as a dense matrix, rows and columns sorted by
    /// decreasing leading monomial.
    pub fn sorted_change_of_basis(&self) -> Result<Matrix> {
        let leads = self.leading_monomials()?;
        let dim = self.dim();
        let mut rows: Vec<usize> = (0..dim).collect();
        rows.sort_by(|&a, &b| leads[b].cmp(&leads[a]));
        let monos = self.ring.basis().monomials();
        let mut position = vec![0; dim];
        let mut cols: Vec<usize> = (0..dim).collect();
        cols.sort_by(|&a, &b| monos[b].cmp(&monos[a]));
        for (j, &c) in cols.iter().enumerate() {
            position[c] = j;
        }
        let mut m = Matrix::zeros(dim, dim);
        for (i, &row) in rows.iter().enumerate() {
            for (l, v) in &self.columns[row] {
                m.set(i, position[*l], v.clone());
            }
        }
        Ok(m)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PairExpansion {
    pub left: Word,
    pub right: Word,
    /// Nonzero structure constants keyed by the one-line notation.
    pub coefficients: BTreeMap<String, Rational>,
    pub nonnegative_integers: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PositivityFinding {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub basis_size: usize,
    pub pairs_checked: usize,
    pub all_nonnegative_integers: bool,
    pub pairs: Vec<PairExpansion>,
}

impl PositivityFinding {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).unwrap_or_else(|e| json!({"error": e.to_string()}))
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &PairExpansion> {
        self.pairs.iter().filter(|p| !p.nonnegative_integers)
    }
}

/// Expands `S_π(x*) S_π'(x*)` for every ordered pair; products are computed
/// once per unordered pair.
pub fn positivity_experiment(n: usize, k: usize, r: usize) -> Result<PositivityFinding> {
    let basis = SchubertBasis::new(n, k, r)?;
    let dim = basis.dim();
    let mut pairs = Vec::with_capacity(dim * dim);
    let mut all = true;
    let mut upper: HashMap<(usize, usize), (BTreeMap<String, Rational>, bool)> = HashMap::new();
    for a in 0..dim {
        for b in 0..dim {
            let key = (a.min(b), a.max(b));
            if let Entry::Vacant(slot) = upper.entry(key) {
                let product = &basis.polynomials[key.0] * &basis.polynomials[key.1];
                let coeffs = basis.expand(&product)?;
                let ok = coeffs.iter().all(|c| c.is_integer() && !c.is_negative());
                let map = basis
                    .perms
                    .iter()
                    .zip(coeffs)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(p, c)| (p.to_string(), c))
                    .collect();
                slot.insert((map, ok));
            }
            let (map, ok) = &upper[&key];
            all &= ok;
            pairs.push(PairExpansion {
                left: basis.perms[a].clone(),
                right: basis.perms[b].clone(),
                coefficients: map.clone(),
                nonnegative_integers: *ok,
            });
        }
    }
    Ok(PositivityFinding {
        n,
        k,
        r,
        basis_size: dim,
        pairs_checked: pairs.len(),
        all_nonnegative_integers: all,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_digits(s).unwrap()
    }

    #[test]
    fn small_schubert_polynomials() {
        assert_eq!(schubert_polynomial(&w("123")).unwrap(), Polynomial::one(1));
        assert_eq!(schubert_polynomial(&w("321")).unwrap().to_string(), "x1^2*x2");
        assert_eq!(schubert_polynomial(&w("132")).unwrap().to_string(), "x1 + x2");
        assert_eq!(schubert_polynomial(&w("2134")).unwrap().to_string(), "x1");
        assert!(schubert_polynomial(&w("122")).is_err());
        assert!(SchubertTable::with_bound(3).get(&w("4321")).is_err());
    }

    #[test]
    fn small_pi_set() {
        let set = enumerate_pi_set(2, 2, 1).unwrap();
        let got: Vec<String> = set.elements.iter().map(|p| p.to_string()).collect();
        assert_eq!(got, vec!["1234", "1324", "1423", "2134", "3124", "4123"]);
        assert_eq!(enumerate_pi_set(3, 0, 2).unwrap().elements.len(), 6);
    }

    #[test]
    fn phi_example() {
        // d = (3, 0) for 4123, so x_2^3
        assert_eq!(phi_monomial(&w("4123"), 2).unwrap().to_string(), "x2^3");
    }
}
