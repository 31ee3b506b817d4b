//! The ideals `I_{n,k,r}`, `I'_{n,k,r}` and `I_n`, their point-set models and
//! the bases of the quotients built from coinvariant bases.

mod bases;
mod pointset;
mod symmetric;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinat::{partitions_in_box, Partition};
use crate::error::{Error, Result};
use crate::groebner::{Ideal, QuotientRing};
use crate::poly::{Polynomial, MAX_ARITY};
use crate::qt::{q_binomial, q_factorial, QtPolynomial};

pub use bases::{
    artin_basis, descent_monomial, gs_basis, gs_monomial, huang_basis, huang_element, lifted_basis, lifted_rank,
    reduced_words, sigma_bar_along, smallest_reduced_word,
};
pub use pointset::{build_point_set, generator_lifts, vanishing_check, vanishing_ideal, PointSet};
pub use symmetric::{
    elementary, elementary_product, elementary_value, homogeneous, homogeneous_value, power_sum, schur_polynomial,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// `I_{n,k,r}`: complete homogeneous generators.
    #[serde(rename = "h")]
    MixedH,
    /// `I'_{n,k,r}`: power sums in place of the complete homogeneous ones.
    #[serde(rename = "p")]
    MixedP,
    /// `I_n = <e_1, ..., e_n>`.
    Classical,
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Variant> {
        match s {
            "h" => Ok(Variant::MixedH),
            "p" => Ok(Variant::MixedP),
            "classical" => Ok(Variant::Classical),
            _ => Err(Error::InvalidParameters(format!(
                "unknown variant {s:?}; expected h, p or classical"
            ))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::MixedH => "h",
            Variant::MixedP => "p",
            Variant::Classical => "classical",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RingSpec {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub variant: Variant,
}

impl RingSpec {
    pub fn new(n: usize, k: usize, r: usize, variant: Variant) -> Result<RingSpec> {
        if n == 0 || n > MAX_ARITY {
            return Err(Error::InvalidParameters(format!("n = {n} must lie in 1..={MAX_ARITY}")));
        }
        if r > n {
            return Err(Error::InvalidParameters(format!("r = {r} exceeds n = {n}")));
        }
        Ok(RingSpec { n, k, r, variant })
    }

    pub fn mixed_h(n: usize, k: usize, r: usize) -> Result<RingSpec> {
        RingSpec::new(n, k, r, Variant::MixedH)
    }

    pub fn classical(n: usize) -> Result<RingSpec> {
        RingSpec::new(n, 0, 0, Variant::Classical)
    }

    /// `|S_{n,k,r}| = binom(n+k-r, k) n!`; for the classical ring, `n!`.
    pub fn expected_dim(&self) -> u64 {
        let fact: u64 = (1..=self.n as u64).product();
        match self.variant {
            Variant::Classical => fact,
            _ => crate::combinat::binomial((self.n + self.k - self.r) as u64, self.k as u64) * fact,
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.variant {
            Variant::Classical => write!(f, "classical n={}", self.n),
            v => write!(f, "({},{},{}) {v}", self.n, self.k, self.r),
        }
    }
}

/// The generators as listed in the definition: the `h` (or `p`) block
/// `d = k+1..k+n`, then `e_n, e_{n-1}, ..., e_{n-r+1}`.
pub fn generators(spec: &RingSpec) -> Result<Vec<Polynomial>> {
    let n = spec.n;
    let mut gens = Vec::new();
    match spec.variant {
        Variant::Classical => {
            for d in 1..=n as u32 {
                gens.push(elementary(d, 1..=n, n)?);
            }
        }
        Variant::MixedH | Variant::MixedP => {
            for d in spec.k + 1..=spec.k + n {
                gens.push(match spec.variant {
                    Variant::MixedH => homogeneous(d as u32, 1..=n, n)?,
                    _ => power_sum(d as u32, 1..=n, n)?,
                });
            }
            for d in (n - spec.r + 1..=n).rev() {
                gens.push(elementary(d as u32, 1..=n, n)?);
            }
        }
    }
    Ok(gens)
}

pub fn build_ideal(spec: &RingSpec) -> Result<Ideal> {
    Ideal::new(spec.n, generators(spec)?)
}

pub fn build_quotient(spec: &RingSpec) -> Result<QuotientRing> {
    QuotientRing::new(&build_ideal(spec)?)
}

/// `binom(n+k-r, k)_q [n]!_q`.
pub fn hilbert_closed_form(spec: &RingSpec) -> QtPolynomial {
    match spec.variant {
        Variant::Classical => q_factorial(spec.n as u32),
        _ => &q_binomial((spec.n + spec.k - spec.r) as u32, spec.k as u32) * &q_factorial(spec.n as u32),
    }
}

/// Ideal memberships behind the exact sequence `R_{n,k-1,r} -> R_{n,k,r} -> R_{n,k,r+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecursionRelationsReport {
    /// `h_k e_{n-r} ∈ I_{n,k,r}`.
    pub pieri_product: bool,
    /// `h_{k-r+i} e_{n-i+1} ∈ I_{n,k,r}` for each `i` with `k-r+i ≥ 0`.
    pub crucial_relations: Vec<bool>,
    /// `s_{(k+j,1^{n-r-j})} + s_{(k+j+1,1^{n-r-j-1})} ∈ I_{n,k,r}` for
    /// `j = 0..n-r-1`, then `s_{(k+n-r)} ∈ I_{n,k,r}`.
    pub congruence_chain: Vec<bool>,
    /// Both hooks in the Pieri expansion of `h_k e_{n-r}` lie in the ideal.
    pub pieri_terms: bool,
}

impl RecursionRelationsReport {
    pub fn all_hold(&self) -> bool {
        self.pieri_product
            && self.pieri_terms
            && self.crucial_relations.iter().all(|&b| b)
            && self.congruence_chain.iter().all(|&b| b)
    }
}

/// Requires `r < n`, `k > 0`.
pub fn recursion_relations_check(
    ring: &QuotientRing,
    n: usize,
    k: usize,
    r: usize,
) -> Result<RecursionRelationsReport> {
    if r >= n || k == 0 {
        return Err(Error::InvalidParameters(format!(
            "needs r < n and k > 0, got ({n},{k},{r})"
        )));
    }
    let hook = |a: usize, b: usize| schur_polynomial(&Partition::hook(a as u32, b as u32), n);
    let h = |d: usize| homogeneous(d as u32, 1..=n, n);
    let e = |d: usize| elementary(d as u32, 1..=n, n);

    let pieri_product = ring.contains(&(&h(k)? * &e(n - r)?))?;
    let pieri_terms = ring.contains(&hook(k, n - r)?)? && ring.contains(&hook(k + 1, n - r - 1)?)?;
    let mut crucial_relations = Vec::new();
    for i in 1..=r {
        if k + i >= r {
            crucial_relations.push(ring.contains(&(&h(k + i - r)? * &e(n - i + 1)?))?);
        }
    }
    let mut congruence_chain = Vec::new();
    for j in 0..n - r {
        let pair = &hook(k + j, n - r - j)? + &hook(k + j + 1, n - r - j - 1)?;
        congruence_chain.push(ring.contains(&pair)?);
    }
    congruence_chain.push(ring.contains(&hook(k + n - r, 0)?)?);
    Ok(RecursionRelationsReport {
        pieri_product,
        crucial_relations,
        congruence_chain,
        pieri_terms,
    })
}

/// `sum_{λ ⊆ (n-r) x k} q^{|λ|} [n]!_q`, the graded dimension of the direct
/// sum of shifted coinvariant algebras.
pub fn shifted_coinvariant_sum(n: usize, k: usize, r: usize) -> QtPolynomial {
    let mut acc = QtPolynomial::zero();
    for lambda in partitions_in_box(k, (n - r) as u32) {
        acc = &acc + &QtPolynomial::q_pow(lambda.size());
    }
    &acc * &q_factorial(n as u32)
}
