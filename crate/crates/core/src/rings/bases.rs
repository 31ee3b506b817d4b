//! Bases of the coinvariant algebra `R_n` (Artin, Garsia–Stanton, Huang) and
//! the lift of any such basis to `R_{n,k,r}` by elementary symmetric factors.

use num_traits::One;

use super::symmetric::elementary_product;
use super::{RingSpec, Variant};
use crate::combinat::{partitions_in_box, permutations, Word};
use crate::error::{Error, Result};
use crate::groebner::QuotientRing;
use crate::poly::{demazure_sigma_bar, Monomial, Polynomial, Rational};

fn monomial_poly(exps: &[u32]) -> Polynomial {
    Polynomial::from_monomial(Monomial::new(exps), Rational::one())
}

/// `x_1^{i_1} ... x_n^{i_n}` with `0 <= i_j < j`, in ascending lex order.
pub fn artin_basis(n: usize) -> Vec<Polynomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    loop {
        out.push(monomial_poly(&exps));
        // odometer, last variable fastest
        let mut j = n;
        loop {
            if j == 0 {
                out.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
                return out;
            }
            j -= 1;
            if exps[j] + 1 < j as u32 + 1 {
                exps[j] += 1;
                break;
            }
            exps[j] = 0;
        }
    }
}

/// `x_{Des(π)} = prod_{i ∈ Des(π)} x_1 x_2 ... x_i`.
pub fn descent_monomial(pi: &Word) -> Polynomial {
    let n = pi.len();
    let mut exps = vec![0u32; n];
    for d in pi.descents() {
        for e in exps.iter_mut().take(d) {
            *e += 1;
        }
    }
    monomial_poly(&exps)
}

/// `gs_π = prod_{π_i > π_{i+1}} x_{π_1} ... x_{π_i}`.
pub fn gs_monomial(pi: &Word) -> Polynomial {
    let n = pi.len();
    let mut exps = vec![0u32; n];
    for d in pi.descents() {
        for &v in &pi.letters()[..d] {
            exps[v as usize - 1] += 1;
        }
    }
    monomial_poly(&exps)
}

/// Indexed by `S_n` in lex order.
pub fn gs_basis(n: usize) -> Vec<Polynomial> {
    permutations(n).iter().map(gs_monomial).collect()
}

fn check_perm(pi: &Word) -> Result<()> {
    let mut seen = vec![false; pi.len()];
    for &v in pi.letters() {
        let i = (v as usize).wrapping_sub(1);
        if i >= seen.len() || seen[i] {
            return Err(Error::NotAPermutation(pi.to_string()));
        }
        seen[i] = true;
    }
    Ok(())
}

/// `i` (one-based) with `i+1` appearing before `i` in the one-line notation,
/// so that `s_i π` is shorter.
fn left_descents(pi: &[u32]) -> Vec<usize> {
    let mut pos = vec![0; pi.len() + 1];
    for (p, &v) in pi.iter().enumerate() {
        pos[v as usize] = p;
    }
    (1..pi.len()).filter(|&i| pos[i + 1] < pos[i]).collect()
}

fn swap_values(pi: &mut [u32], i: usize) {
    for v in pi.iter_mut() {
        if *v == i as u32 {
            *v += 1;
        } else if *v == i as u32 + 1 {
            *v -= 1;
        }
    }
}

/// The lexicographically smallest `(i_1, ..., i_l)` with `π = s_{i_1} ... s_{i_l}`.
pub fn smallest_reduced_word(pi: &Word) -> Result<Vec<usize>> {
    check_perm(pi)?;
    let mut w = pi.letters().to_vec();
    let mut word = Vec::new();
    while let Some(&i) = left_descents(&w).first() {
        word.push(i);
        swap_values(&mut w, i);
    }
    Ok(word)
}

/// Every reduced word of `π`, in lex order.
pub fn reduced_words(pi: &Word) -> Result<Vec<Vec<usize>>> {
    check_perm(pi)?;
    fn rec(w: &mut Vec<u32>, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let ds = left_descents(w);
        if ds.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in ds {
            swap_values(w, i);
            prefix.push(i);
            rec(w, prefix, out);
            prefix.pop();
            swap_values(w, i);
        }
    }
    let mut out = Vec::new();
    rec(&mut pi.letters().to_vec(), &mut Vec::new(), &mut out);
    Ok(out)
}

/// `σ̄_{i_1} σ̄_{i_2} ... σ̄_{i_l} f`, innermost operator last in the word.
pub fn sigma_bar_along(word: &[usize], f: &Polynomial) -> Result<Polynomial> {
    let mut g = f.clone();
    for &i in word.iter().rev() {
        g = demazure_sigma_bar(i, &g)?;
    }
    Ok(g)
}

/// `σ̄_π x_{Des(π)}`.
pub fn huang_element(pi: &Word) -> Result<Polynomial> {
    sigma_bar_along(&smallest_reduced_word(pi)?, &descent_monomial(pi))
}

/// Indexed by `S_n` in lex order.
pub fn huang_basis(n: usize) -> Result<Vec<Polynomial>> {
    permutations(n).iter().map(huang_element).collect()
}

/// `{ b · e_λ : b ∈ basis, λ ⊆ (n-r) x k }`, ordered by `λ` (size, then
/// reverse-lex) and then by position in `basis`.
pub fn lifted_basis(basis: &[Polynomial], spec: &RingSpec) -> Result<Vec<Polynomial>> {
    if spec.variant != Variant::MixedH {
        return Err(Error::InvalidParameters(format!(
            "needs the h variant, got {}",
            spec.variant
        )));
    }
    let expected = spec.expected_dim() / crate::combinat::binomial((spec.n + spec.k - spec.r) as u64, spec.k as u64);
    if basis.len() as u64 != expected {
        return Err(Error::InvalidParameters(format!(
            "coinvariant basis has {} elements, expected {expected}",
            basis.len()
        )));
    }
    let mut out = Vec::with_capacity(basis.len());
    for lambda in partitions_in_box(spec.k, (spec.n - spec.r) as u32) {
        let e = elementary_product(&lambda, spec.n)?;
        for b in basis {
            out.push(b.try_mul(&e)?);
        }
    }
    Ok(out)
}

/// Rank of the family in the quotient; equal to the dimension exactly when
/// the family descends to a basis.
pub fn lifted_rank(family: &[Polynomial], ring: &QuotientRing) -> Result<usize> {
    ring.span_rank(family)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_digits(s).unwrap()
    }

    #[test]
    fn small_bases() {
        let a: Vec<String> = artin_basis(2).iter().map(|p| p.to_string()).collect();
        assert_eq!(a, vec!["1", "x2"]);
        assert_eq!(artin_basis(4).len(), 24);
        assert_eq!(descent_monomial(&w("21543")).to_string(), "x1^3*x2^2*x3^2*x4");
        assert_eq!(gs_monomial(&w("21")).to_string(), "x2");
        assert_eq!(gs_monomial(&w("12")).to_string(), "1");
    }

    #[test]
    fn reduced_word_shapes() {
        assert_eq!(smallest_reduced_word(&w("123")).unwrap(), Vec::<usize>::new());
        assert_eq!(smallest_reduced_word(&w("213")).unwrap(), vec![1]);
        assert_eq!(reduced_words(&w("321")).unwrap(), vec![vec![1, 2, 1], vec![2, 1, 2]]);
        // multiplying the generators back together recovers the permutation
        let word = smallest_reduced_word(&w("312")).unwrap();
        let mut id = vec![1u32, 2, 3];
        for &i in word.iter().rev() {
            swap_values(&mut id, i);
        }
        assert_eq!(id, vec![3, 1, 2]);
        assert!(smallest_reduced_word(&w("113")).is_err());
    }

    #[test]
    fn huang_two() {
        let h: Vec<String> = huang_basis(2).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(h, vec!["1", "x2"]);
    }
}
