//! Graded Frobenius images of the quotients, both from the closed formulas
//! and from traces on the quotient ring, plus the quasisymmetric and
//! noncommutative characteristics.

mod table;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::combinat::{
    all_standard_tableaux, compositions, permutations, standard_tableaux, Composition, Partition, Word,
};
use crate::error::{Error, Result};
use crate::groebner::{ideal_equals, QuotientRing};
use crate::poly::Rational;
use crate::qt::{q_binomial, QtPolynomial};
use crate::rings::{build_ideal, build_quotient, schur_polynomial, RingSpec, Variant};

pub use table::{CharacterTable, DEFAULT_CHARACTER_BOUND};

/// `sum_λ c_λ s_λ` with `c_λ ∈ Z[q,t]`; zero coefficients are not stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    pub n: u32,
    coeffs: BTreeMap<Partition, QtPolynomial>,
}

impl SchurExpansion {
    pub fn zero(n: u32) -> SchurExpansion {
        SchurExpansion {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, lambda: Partition, c: &QtPolynomial) {
        assert_eq!(lambda.size(), self.n, "partition of the wrong size");
        let entry = self.coeffs.entry(lambda.clone()).or_insert_with(QtPolynomial::zero);
        *entry = &*entry + c;
        if entry.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    pub fn coefficient(&self, lambda: &Partition) -> QtPolynomial {
        self.coeffs.get(lambda).cloned().unwrap_or_else(QtPolynomial::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QtPolynomial)> {
        self.coeffs.iter()
    }

    pub fn scale(&self, c: &QtPolynomial) -> SchurExpansion {
        let mut out = SchurExpansion::zero(self.n);
        for (lambda, v) in &self.coeffs {
            out.add_term(lambda.clone(), &(v * c));
        }
        out
    }

    pub fn add(&self, other: &SchurExpansion) -> SchurExpansion {
        let mut out = self.clone();
        for (lambda, v) in &other.coeffs {
            out.add_term(lambda.clone(), v);
        }
        out
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.values().all(QtPolynomial::has_nonnegative_coefficients)
    }

    /// `sum_λ c_λ f^λ`: the graded dimension of the module.
    pub fn hilbert_series(&self) -> QtPolynomial {
        let mut acc = QtPolynomial::zero();
        for (lambda, c) in &self.coeffs {
            acc = &acc + &c.scale(&lambda.num_syt());
        }
        acc
    }

    /// Every coefficient evaluated at `q = t = 1`.
    pub fn at_one(&self) -> BTreeMap<Partition, BigInt> {
        self.coeffs.iter().map(|(l, c)| (l.clone(), c.eval_at_one())).collect()
    }

    /// Expansion in fundamental quasisymmetric functions via
    /// `s_λ = sum_{T ∈ SYT(λ)} F_{Des(T)}`.
    pub fn to_fundamental(&self) -> QSymExpansion {
        let mut out = QSymExpansion::zero(self.n);
        for (lambda, c) in &self.coeffs {
            for t in standard_tableaux(lambda) {
                out.add_term(t.descents(), c);
            }
        }
        out
    }

    /// Coefficients of `sum_λ c_λ s_λ(x_1..x_vars)`, keyed by exponent vector.
    pub fn in_variables(&self, vars: usize) -> Result<BTreeMap<Vec<u32>, QtPolynomial>> {
        let mut out: BTreeMap<Vec<u32>, QtPolynomial> = BTreeMap::new();
        for (lambda, c) in &self.coeffs {
            for (m, a) in schur_polynomial(lambda, vars)?.terms() {
                let entry = out.entry(m.exponents()).or_insert_with(QtPolynomial::zero);
                *entry = &*entry + &c.scale(&a.numer());
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(l, c)| json!({"partition": l.parts(), "coeff": c.to_json()}))
            .collect();
        json!({"n": self.n, "entries": entries})
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(l, c)| {
                let parts: Vec<String> = l.parts().iter().map(|p| p.to_string()).collect();
                format!("({c})*s[{}]", parts.join(","))
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `sum_S c_S F_S` over subsets `S ⊆ [n-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QSymExpansion {
    pub n: u32,
    coeffs: BTreeMap<Vec<u32>, QtPolynomial>,
}

impl QSymExpansion {
    pub fn zero(n: u32) -> QSymExpansion {
        QSymExpansion {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, set: Vec<u32>, c: &QtPolynomial) {
        let entry = self.coeffs.entry(set.clone()).or_insert_with(QtPolynomial::zero);
        *entry = &*entry + c;
        if entry.is_zero() {
            self.coeffs.remove(&set);
        }
    }

    pub fn coefficient(&self, set: &[u32]) -> QtPolynomial {
        self.coeffs.get(set).cloned().unwrap_or_else(QtPolynomial::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &QtPolynomial)> {
        self.coeffs.iter()
    }

    pub fn set_t(&self, t: i64) -> QSymExpansion {
        let mut out = QSymExpansion::zero(self.n);
        for (s, c) in &self.coeffs {
            out.add_term(s.clone(), &c.set_t(t));
        }
        out
    }

    /// `sum_S c_S(1,1)`.
    pub fn total_at_one(&self) -> BigInt {
        self.coeffs.values().map(QtPolynomial::eval_at_one).sum()
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(s, c)| json!({"set": s, "coeff": c.to_json()}))
            .collect();
        json!({"n": self.n, "entries": entries})
    }
}

/// `sum_α c_α s_α` over compositions `α ⊨ n`, with `s_α` the
/// noncommutative ribbon Schur functions.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NSymExpansion {
    pub n: u32,
    coeffs: BTreeMap<Composition, QtPolynomial>,
}

impl NSymExpansion {
    pub fn coefficient(&self, alpha: &Composition) -> QtPolynomial {
        self.coeffs.get(alpha).cloned().unwrap_or_else(QtPolynomial::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &QtPolynomial)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Image under the map to quasisymmetric functions: the ribbon `s_α`
    /// goes to `sum_{π : Des(π) = Des(α)} F_{Des(π^{-1})}`.
    pub fn commutative_image(&self) -> QSymExpansion {
        let mut out = QSymExpansion::zero(self.n);
        let perms = permutations(self.n as usize);
        for (alpha, c) in &self.coeffs {
            let des = alpha.descent_set();
            for pi in &perms {
                if descent_set(pi) == des {
                    out.add_term(descent_set(&inverse(pi)), c);
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(a, c)| json!({"composition": a.parts(), "coeff": c.to_json()}))
            .collect();
        json!({"n": self.n, "entries": entries})
    }
}

fn descent_set(w: &Word) -> Vec<u32> {
    w.descents().into_iter().map(|d| d as u32).collect()
}

fn inverse(pi: &Word) -> Word {
    let mut inv = vec![0u32; pi.len()];
    for (i, &v) in pi.letters().iter().enumerate() {
        inv[v as usize - 1] = i as u32 + 1;
    }
    Word::new(inv)
}

fn check_nkr(n: usize, r: usize) -> Result<()> {
    if n == 0 || r > n {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= n and r <= n, got n = {n}, r = {r}"
        )));
    }
    Ok(())
}

fn prefactor(n: usize, k: usize, r: usize) -> QtPolynomial {
    q_binomial((n + k - r) as u32, k as u32)
}

/// `binom(n+k-r, k)_q sum_{T ∈ SYT(n)} q^{maj T} s_{shape T}`.
pub fn frobenius_formula(n: usize, k: usize, r: usize) -> Result<SchurExpansion> {
    check_nkr(n, r)?;
    let mut out = SchurExpansion::zero(n as u32);
    for t in all_standard_tableaux(n as u32) {
        out.add_term(t.shape(), &QtPolynomial::q_pow(t.maj()));
    }
    Ok(out.scale(&prefactor(n, k, r)))
}

/// Solves for the graded multiplicities from traces of one permutation per
/// cycle type: `c_λ = sum_μ χ^λ(μ) tr_μ / z_μ`, degree by degree.
pub fn frobenius_from_ring(ring: &QuotientRing) -> Result<SchurExpansion> {
    let n = ring.arity() as u32;
    let table = CharacterTable::new(n)?;
    let traces: Vec<Vec<Rational>> = table
        .partitions
        .iter()
        .map(|mu| ring.graded_trace(&mu.representative_permutation()))
        .collect::<Result<_>>()?;
    let z: Vec<Rational> = table
        .partitions
        .iter()
        .map(|mu| Rational::from_bigint(mu.z()))
        .collect();
    let degrees = traces.first().map_or(0, Vec::len);
    let mut out = SchurExpansion::zero(n);
    for (l, lambda) in table.partitions.iter().enumerate() {
        let mut coeff = QtPolynomial::zero();
        for d in 0..degrees {
            let mut c = Rational::zero();
            for ((trace, zm), &chi) in traces.iter().zip(&z).zip(&table.values[l]) {
                c += &(&(&trace[d] * &Rational::from(chi)) / zm);
            }
            if !c.is_integer() || c.is_negative() {
                return Err(Error::Falsified(format!(
                    "multiplicity of s{:?} in degree {d} solved to {c}",
                    lambda.parts()
                )));
            }
            coeff.add_term(d as u32, 0, c.numer());
        }
        out.add_term(lambda.clone(), &coeff);
    }
    Ok(out)
}

pub fn frobenius_from_quotient(spec: &RingSpec) -> Result<SchurExpansion> {
    frobenius_from_ring(&build_quotient(spec)?)
}

/// `grFrob(n,k,r) = grFrob(n,k,r+1) + q^{n-r} grFrob(n,k-1,r)` on the
/// closed formulas, together with the `q`-Pascal relation behind it.
pub fn frobenius_recursion_check(n: usize, k: usize, r: usize) -> Result<bool> {
    if r >= n || k == 0 {
        return Err(Error::InvalidParameters(format!(
            "needs r < n and k > 0, got ({n},{k},{r})"
        )));
    }
    let lhs = frobenius_formula(n, k, r)?;
    let shift = QtPolynomial::q_pow((n - r) as u32);
    let rhs = frobenius_formula(n, k, r + 1)?.add(&frobenius_formula(n, k - 1, r)?.scale(&shift));
    let m = (n + k - r) as u32;
    let pascal = q_binomial(m, k as u32) == &q_binomial(m - 1, k as u32) + &(&shift * &q_binomial(m - 1, k as u32 - 1));
    Ok(lhs == rhs && pascal)
}

/// `sum_w q^{inv w} x^w` over words of length `n+k` with exactly `k` zeros,
/// `n` letters from `1..=vars` and the last `r` letters positive. Zeros carry
/// no variable.
pub fn word_sum_frobenius(n: usize, k: usize, r: usize, vars: usize) -> Result<BTreeMap<Vec<u32>, QtPolynomial>> {
    check_nkr(n, r)?;
    if vars == 0 {
        return Err(Error::InvalidParameters("need at least one variable".into()));
    }
    let len = n + k;
    let mut out: BTreeMap<Vec<u32>, QtPolynomial> = BTreeMap::new();
    let mut w = vec![0u32; len];
    loop {
        let zeros = w.iter().filter(|&&c| c == 0).count();
        if zeros == k && w[len - r..].iter().all(|&c| c > 0) {
            let mut exps = vec![0u32; vars];
            for &c in &w {
                if c > 0 {
                    exps[c as usize - 1] += 1;
                }
            }
            let entry = out.entry(exps).or_insert_with(QtPolynomial::zero);
            entry.add_term(Word::new(w.clone()).inv(), 0, BigInt::one());
        }
        // odometer over {0..vars}^len
        let mut i = len;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if (w[i] as usize) < vars {
                w[i] += 1;
                break;
            }
            w[i] = 0;
        }
    }
}

/// `binom(n+k-r, k)_q sum_{π ∈ S_n} q^{maj π} t^{inv π} F_{Des(π^{-1})}`.
pub fn ch_qt(n: usize, k: usize, r: usize) -> Result<QSymExpansion> {
    check_nkr(n, r)?;
    let pre = prefactor(n, k, r);
    let mut out = QSymExpansion::zero(n as u32);
    for pi in permutations(n) {
        let term = &pre * &QtPolynomial::monomial(pi.maj(), pi.inv(), 1);
        out.add_term(descent_set(&inverse(&pi)), &term);
    }
    Ok(out)
}

/// `binom(n+k-r, k)_q sum_{α ⊨ n} q^{maj α} s_α`.
pub fn ch_nsym(n: usize, k: usize, r: usize) -> Result<NSymExpansion> {
    check_nkr(n, r)?;
    let pre = prefactor(n, k, r);
    let coeffs = compositions(n as u32)
        .into_iter()
        .map(|alpha| {
            let c = &pre * &QtPolynomial::q_pow(alpha.maj());
            (alpha, c)
        })
        .collect();
    Ok(NSymExpansion { n: n as u32, coeffs })
}

/// Graded characters of the quotients by the `h` and the `p` ideals,
/// compared, alongside whether the ideals coincide.
#[derive(Clone, Debug)]
pub struct PowerSumComparison {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub characters_equal: bool,
    pub ideals_equal: bool,
    pub h_character: SchurExpansion,
    pub p_character: SchurExpansion,
}

impl PowerSumComparison {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "k": self.k,
            "r": self.r,
            "characters_equal": self.characters_equal,
            "ideals_equal": self.ideals_equal,
            "h_character": self.h_character.to_json(),
            "p_character": self.p_character.to_json(),
        })
    }
}

pub fn compare_power_sum_variant(n: usize, k: usize, r: usize) -> Result<PowerSumComparison> {
    let h = RingSpec::new(n, k, r, Variant::MixedH)?;
    let p = RingSpec::new(n, k, r, Variant::MixedP)?;
    let h_character = frobenius_from_quotient(&h)?;
    let p_character = frobenius_from_quotient(&p)?;
    Ok(PowerSumComparison {
        n,
        k,
        r,
        characters_equal: h_character == p_character,
        ideals_equal: ideal_equals(&build_ideal(&h)?, &build_ideal(&p)?)?,
        h_character,
        p_character,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn formula_small_case() {
        let f = frobenius_formula(2, 2, 1).unwrap();
        assert_eq!(f.coefficient(&p(&[2])).to_string(), "1 + q + q^2");
        assert_eq!(f.coefficient(&p(&[1, 1])).to_string(), "q + q^2 + q^3");
        let g = frobenius_formula(3, 0, 2).unwrap();
        assert_eq!(g.coefficient(&p(&[3])), QtPolynomial::one());
    }

    #[test]
    fn classical_two_from_traces() {
        let f = frobenius_from_quotient(&RingSpec::classical(2).unwrap()).unwrap();
        assert_eq!(f.coefficient(&p(&[2])), QtPolynomial::one());
        assert_eq!(f.coefficient(&p(&[1, 1])), QtPolynomial::q());
    }

    #[test]
    fn small_characteristics() {
        let c = ch_qt(2, 0, 0).unwrap();
        assert_eq!(c.coefficient(&[]), QtPolynomial::one());
        assert_eq!(c.coefficient(&[1]), QtPolynomial::monomial(1, 1, 1));
        let c1 = ch_qt(1, 2, 1).unwrap();
        assert_eq!(c1.coefficient(&[]), q_binomial(2, 2));
        let nsym = ch_nsym(2, 0, 0).unwrap();
        assert_eq!(
            nsym.coefficient(&Composition::new(vec![2]).unwrap()),
            QtPolynomial::one()
        );
        assert_eq!(
            nsym.coefficient(&Composition::new(vec![1, 1]).unwrap()),
            QtPolynomial::q()
        );
    }

    #[test]
    fn small_word_sums() {
        let w = word_sum_frobenius(1, 0, 0, 2).unwrap();
        assert_eq!(w.len(), 2);
        let w2 = word_sum_frobenius(2, 0, 0, 2).unwrap();
        let expected = frobenius_formula(2, 0, 0).unwrap().in_variables(2).unwrap();
        assert_eq!(w2, expected);
    }

    #[test]
    fn recursion_guard() {
        assert!(frobenius_recursion_check(2, 1, 1).unwrap());
        assert!(frobenius_recursion_check(2, 0, 1).is_err());
        assert!(frobenius_recursion_check(2, 1, 2).is_err());
    }
}
