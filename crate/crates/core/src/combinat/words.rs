use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite word over the nonnegative integers. Positions are reported
/// one-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Word {
        Word(letters)
    }

    /// Parses a string of decimal digits such as `"0203041"`.
    pub fn from_digits(s: &str) -> Result<Word> {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::InvalidParameters(format!("not a digit word: {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `{i : w_i > w_{i+1}}`, one-based.
    pub fn descents(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn maj(&self) -> u32 {
        self.descents().iter().map(|&i| i as u32).sum()
    }

    pub fn inv(&self) -> u32 {
        let w = &self.0;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// True when the last `r` letters are all positive.
    pub fn is_tail_positive(&self, r: usize) -> bool {
        r <= self.0.len() && self.0[self.0.len() - r..].iter().all(|&a| a > 0)
    }

    /// `(n, k)` if this word is a permutation of the multiset `{0^k, 1, ..., n}`.
    pub fn multiset_shape(&self) -> Option<(usize, usize)> {
        let n = self.0.iter().copied().max().unwrap_or(0) as usize;
        let mut seen = vec![false; n + 1];
        let mut zeros = 0;
        for &a in &self.0 {
            if a == 0 {
                zeros += 1;
            } else if std::mem::replace(&mut seen[a as usize], true) {
                return None;
            }
        }
        if seen[1..].iter().all(|&s| s) {
            Some((n, zeros))
        } else {
            None
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&a| a < 10) {
            for a in &self.0 {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Steps `v` to the next permutation in lex order; false at the last one.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All distinct rearrangements of `letters`, in lex order.
pub fn multiset_permutations(letters: &[u32]) -> Vec<Word> {
    let mut v = letters.to_vec();
    v.sort_unstable();
    let mut out = vec![Word(v.clone())];
    while next_permutation(&mut v) {
        out.push(Word(v.clone()));
    }
    out
}

/// All permutations of `{1..n}` in lex order.
pub fn permutations(n: usize) -> Vec<Word> {
    multiset_permutations(&(1..=n as u32).collect::<Vec<_>>())
}

/// The words of `S_{n,k,r}`: rearrangements of `{0^k, 1, ..., n}` whose last
/// `r` letters are positive, in lex order.
pub fn enumerate_tail_positive(n: usize, k: usize, r: usize) -> Result<Vec<Word>> {
    if r > n {
        return Err(Error::InvalidParameters(format!("r = {r} exceeds n = {n}")));
    }
    let mut letters = vec![0; k];
    letters.extend(1..=n as u32);
    Ok(multiset_permutations(&letters)
        .into_iter()
        .filter(|w| w.is_tail_positive(r))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statistics() {
        let w = Word::from_digits("21543").unwrap();
        assert_eq!(w.descents(), vec![1, 3, 4]);
        assert_eq!(w.maj(), 8);
        let id = Word::from_digits("12345").unwrap();
        assert!(id.descents().is_empty());
        assert_eq!((id.inv(), id.maj()), (0, 0));
        assert_eq!(Word::from_digits("40130052").unwrap().inv(), 12);
    }

    #[test]
    fn tail_positive_example() {
        let words: Vec<String> = enumerate_tail_positive(2, 2, 1)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(words, ["0012", "0021", "0102", "0201", "1002", "2001"]);
        assert_eq!(enumerate_tail_positive(3, 2, 2).unwrap().len(), 18);
        assert_eq!(enumerate_tail_positive(4, 0, 2).unwrap(), permutations(4));
        assert!(enumerate_tail_positive(2, 1, 3).is_err());
    }

    #[test]
    fn multiset_shape() {
        assert_eq!(Word::from_digits("40130052").unwrap().multiset_shape(), Some((5, 3)));
        assert_eq!(Word::from_digits("1102").unwrap().multiset_shape(), None);
        assert_eq!(Word::from_digits("003").unwrap().multiset_shape(), None);
    }
}
