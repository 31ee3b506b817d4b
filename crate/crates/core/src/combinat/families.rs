//! Codes of multiset permutations, skip monomials, staircases and the good
//! monomials that form the lex standard basis of `R_{n,k,r}`.

use std::collections::BTreeSet;

use super::partitions::subsets;
use super::words::Word;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MAX_ARITY};

fn check_nkr(n: usize, r: usize) -> Result<()> {
    if r > n {
        return Err(Error::InvalidParameters(format!("r = {r} exceeds n = {n}")));
    }
    if n > MAX_ARITY {
        return Err(Error::InvalidParameters(format!(
            "n = {n} exceeds the supported arity {MAX_ARITY}"
        )));
    }
    Ok(())
}

/// `c_i` = number of letters `0..i-1` to the right of `i`, for `i = 1..n`.
pub fn code(w: &Word) -> Result<Vec<u32>> {
    let (n, _) = w
        .multiset_shape()
        .ok_or_else(|| Error::Domain(format!("{w} is not a permutation of {{0^k, 1, ..., n}}")))?;
    let letters = w.letters();
    let mut code = vec![0; n];
    for (pos, &a) in letters.iter().enumerate() {
        if a > 0 {
            code[a as usize - 1] = letters[pos + 1..].iter().filter(|&&b| b < a).count() as u32;
        }
    }
    Ok(code)
}

/// `Ψ(w) = x^{code(w)}`.
pub fn psi(w: &Word) -> Result<Monomial> {
    let c = code(w)?;
    if c.len() > MAX_ARITY {
        return Err(Error::InvalidParameters(format!(
            "word has more than {MAX_ARITY} positive letters"
        )));
    }
    Ok(Monomial::new(&c))
}

/// Rebuilds the word of `S_{n,k,r}` whose code is the exponent vector of `m`.
///
/// Letters are inserted in increasing order: when `i` is placed, exactly
/// `c_i` of the `k + i - 1` letters already present must lie to its right.
pub fn phi_inverse(m: &Monomial, n: usize, k: usize, r: usize) -> Result<Word> {
    check_nkr(n, r)?;
    if m.arity() != n {
        return Err(Error::ArityMismatch(m.arity(), n));
    }
    let mut letters = vec![0u32; k];
    for i in 1..=n {
        let c = m.exponent(i - 1) as usize;
        if c > letters.len() {
            return Err(Error::Domain(format!("{m} is not ({n},{k},{r})-good")));
        }
        letters.insert(letters.len() - c, i as u32);
    }
    let w = Word(letters);
    if !w.is_tail_positive(r) {
        return Err(Error::Domain(format!("{m} is not ({n},{k},{r})-good")));
    }
    Ok(w)
}

fn check_subset(s: &[usize], n: usize) -> Result<()> {
    if s.iter().any(|&x| x == 0 || x > n) || s.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameters(format!(
            "{s:?} is not an increasing subset of [{n}]"
        )));
    }
    Ok(())
}

/// `γ(S)`: entry `s_j - j + 1` at position `s_j`, zero elsewhere.
/// `s` is one-based and strictly increasing.
pub fn skip_vector(s: &[usize], n: usize) -> Result<Vec<u32>> {
    check_subset(s, n)?;
    let mut v = vec![0; n];
    for (j, &sj) in s.iter().enumerate() {
        v[sj - 1] = (sj - j) as u32;
    }
    Ok(v)
}

/// The skip monomial `x(S) = x^{γ(S)}`.
pub fn skip_monomial(s: &[usize], n: usize) -> Result<Monomial> {
    if n > MAX_ARITY {
        return Err(Error::InvalidParameters(format!(
            "n = {n} exceeds the supported arity {MAX_ARITY}"
        )));
    }
    Ok(Monomial::new(&skip_vector(s, n)?))
}

/// The `(n,k,r)`-staircase of an `(n-r)`-subset `T`.
pub fn staircase(t: &[usize], n: usize, k: usize) -> Result<Vec<u32>> {
    check_subset(t, n)?;
    let mut out = vec![0; n];
    let mut j = 0;
    for i in 1..=n {
        if t.contains(&i) {
            out[i - 1] = (i + k - 1) as u32;
        } else {
            out[i - 1] = j;
            j += 1;
        }
    }
    Ok(out)
}

/// All `binom(n, r)` staircases, `T` taken in reverse colex order.
pub fn staircases(n: usize, k: usize, r: usize) -> Result<Vec<Vec<u32>>> {
    check_nkr(n, r)?;
    let mut ts = subsets(n, n - r);
    ts.sort_by(|a, b| b.iter().rev().cmp(a.iter().rev()));
    ts.iter().map(|t| staircase(t, n, k)).collect()
}

/// Membership in `M_{n,k,r}` straight from the definition.
pub fn is_good(m: &Monomial, n: usize, k: usize, r: usize) -> Result<bool> {
    check_nkr(n, r)?;
    if m.arity() != n {
        return Err(Error::ArityMismatch(m.arity(), n));
    }
    if (0..n).any(|i| m.exponent(i) as usize > k + i) {
        return Ok(false);
    }
    for s in subsets(n, n - r + 1) {
        if skip_monomial(&s, n)?.divides(m) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every monomial with exponents bounded by `(k, k+1, ..., k+n-1)`, lex order.
fn box_monomials(n: usize, k: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    loop {
        out.push(Monomial::new(&exps));
        // odometer, last variable fastest
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if (exps[i] as usize) < k + i {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
        }
    }
}

/// `M_{n,k,r}`: the bounding box minus multiples of skip monomials, ascending
/// lex order.
pub fn good_monomials(n: usize, k: usize, r: usize) -> Result<Vec<Monomial>> {
    check_nkr(n, r)?;
    let skips: Vec<Monomial> = subsets(n, n - r + 1)
        .iter()
        .map(|s| skip_monomial(s, n))
        .collect::<Result<_>>()?;
    Ok(box_monomials(n, k)
        .into_iter()
        .filter(|m| !skips.iter().any(|s| s.divides(m)))
        .collect())
}

/// Monomials dominated componentwise by at least one staircase, ascending lex.
pub fn good_monomials_by_staircase(n: usize, k: usize, r: usize) -> Result<Vec<Monomial>> {
    let stairs = staircases(n, k, r)?;
    let mut set = BTreeSet::new();
    for st in &stairs {
        let mut exps = vec![0u32; n];
        loop {
            set.insert(Monomial::new(&exps));
            let mut i = n;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if exps[i] < st[i] {
                    exps[i] += 1;
                    break;
                }
                exps[i] = 0;
            }
            if exps.iter().all(|&e| e == 0) {
                break;
            }
        }
    }
    Ok(set.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_digits(s).unwrap()
    }

    #[test]
    fn code_examples() {
        assert_eq!(code(&w("40130052")).unwrap(), vec![2, 0, 3, 6, 1]);
        assert_eq!(code(&w("1234")).unwrap(), vec![0; 4]);
        assert!(code(&w("1134")).is_err());
        // 0, 0 and 1 all sit right of 2
        assert_eq!(psi(&w("2001")).unwrap(), Monomial::new(&[0, 3]));
        assert_eq!(psi(&w("0012")).unwrap(), Monomial::one(2));
    }

    #[test]
    fn inverse_of_code() {
        let m = Monomial::new(&[2, 0, 3, 6, 1]);
        assert_eq!(phi_inverse(&m, 5, 3, 2).unwrap(), w("40130052"));
        // the same word is not 3-tail positive
        assert!(phi_inverse(&m, 5, 3, 3).is_err());
        assert!(phi_inverse(&Monomial::new(&[3, 0]), 2, 2, 1).is_err());
    }

    #[test]
    fn skip_examples() {
        let m = skip_monomial(&[2, 4, 5, 8], 8).unwrap();
        assert_eq!(m.exponents(), vec![0, 2, 0, 3, 3, 0, 0, 5]);
        assert_eq!(skip_monomial(&[1], 3).unwrap(), Monomial::new(&[1, 0, 0]));
        assert_eq!(skip_vector(&[1, 2, 3], 4).unwrap(), vec![1, 1, 1, 0]);
        assert!(skip_vector(&[0, 2], 3).is_err());
        assert!(skip_vector(&[3, 2], 3).is_err());
        assert!(skip_vector(&[4], 3).is_err());
    }

    #[test]
    fn staircase_examples() {
        let expect: Vec<Vec<u32>> = vec![
            vec![0, 1, 2, 5, 6],
            vec![0, 1, 4, 2, 6],
            vec![0, 3, 1, 2, 6],
            vec![2, 0, 1, 2, 6],
            vec![0, 1, 4, 5, 2],
            vec![0, 3, 1, 5, 2],
            vec![2, 0, 1, 5, 2],
            vec![0, 3, 4, 1, 2],
            vec![2, 0, 4, 1, 2],
            vec![2, 3, 0, 1, 2],
        ];
        assert_eq!(staircases(5, 2, 3).unwrap(), expect);
        assert_eq!(staircases(2, 2, 1).unwrap(), vec![vec![0, 3], vec![2, 0]]);
        assert_eq!(staircases(4, 3, 4).unwrap(), vec![vec![0, 1, 2, 3]]);
        assert!(staircases(2, 1, 3).is_err());
    }

    #[test]
    fn good_monomials_small() {
        let got = good_monomials(2, 2, 1).unwrap();
        let expect: Vec<Monomial> = [[0, 0], [0, 1], [0, 2], [0, 3], [1, 0], [2, 0]]
            .iter()
            .map(|e| Monomial::new(e))
            .collect();
        assert_eq!(got, expect);
        assert_eq!(good_monomials(3, 2, 1).unwrap().len(), 36);
        assert_eq!(good_monomials_by_staircase(2, 2, 1).unwrap(), expect);
        assert!(is_good(&Monomial::new(&[0, 3]), 2, 2, 1).unwrap());
        assert!(!is_good(&Monomial::new(&[1, 1]), 2, 2, 1).unwrap());
    }
}
