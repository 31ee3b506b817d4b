use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, parts weakly decreasing and positive.
///
/// Partitions of the same size are ordered reverse-lexicographically, so
/// `(n)` comes first and `(1^n)` last.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameters(format!("not a partition: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The hook `(a, 1^b)`.
    pub fn hook(a: u32, b: u32) -> Partition {
        let mut parts = vec![a];
        parts.extend(std::iter::repeat_n(1, b as usize));
        Partition::from_unsorted(parts)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// Number of standard Young tableaux of this shape (hook length formula).
    pub fn num_syt(&self) -> BigInt {
        let n = self.size();
        let conj = self.conjugate();
        let mut hooks = BigInt::one();
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.0[j as usize] - i as u32 - 1;
                hooks *= arm + leg + 1;
            }
        }
        factorial(n) / hooks
    }

    /// Size of the centralizer of a permutation of this cycle type,
    /// `prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut i = 0;
        while i < self.0.len() {
            let part = self.0[i];
            let mult = self.0[i..].iter().take_while(|&&p| p == part).count();
            for m in 1..=mult {
                z *= BigInt::from(part) * BigInt::from(m);
            }
            i += mult;
        }
        z
    }

    /// Sign of a permutation of this cycle type.
    pub fn sign(&self) -> i64 {
        let even_cycles = self.0.iter().filter(|&&p| p % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// A permutation of `0..n` with this cycle type, cycles laid out in
    /// consecutive blocks, each block mapping `j -> j+1` and the last entry
    /// back to the first.
    pub fn representative_permutation(&self) -> Vec<usize> {
        let n = self.size() as usize;
        let mut perm = vec![0; n];
        let mut start = 0;
        for &p in &self.0 {
            let p = p as usize;
            for j in 0..p {
                perm[start + j] = start + (j + 1) % p;
            }
            start += p;
        }
        perm
    }

    /// `self ⊆ rows x cols` box.
    pub fn fits_in_box(&self, rows: usize, cols: u32) -> bool {
        self.0.len() <= rows && self.0.first().is_none_or(|&p| p <= cols)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(m: u64, i: u64) -> u64 {
    if i > m {
        return 0;
    }
    let i = i.min(m - i);
    (0..i).fold(1u64, |acc, j| acc * (m - j) / (j + 1))
}

/// Partitions of `n` in reverse-lex order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions with at most `rows` parts, each at most `cols`, sorted by size
/// then reverse-lex.
pub fn partitions_in_box(rows: usize, cols: u32) -> Vec<Partition> {
    fn rec(rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition(cur.clone()));
        if cur.len() == rows {
            return;
        }
        for p in (1..=max).rev() {
            cur.push(p);
            rec(rows, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, cols, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.size().cmp(&b.size()).then(a.cmp(b)));
    out
}

/// A strong composition: a sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Composition> {
        if parts.contains(&0) {
            return Err(Error::InvalidParameters(format!("not a composition: {parts:?}")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Partial sums `{a1, a1+a2, ...}` excluding the total.
    pub fn descent_set(&self) -> Vec<u32> {
        let mut acc = 0;
        let mut out = Vec::new();
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// The composition of `n` attached to a subset of `[n-1]`.
    pub fn from_descent_set(set: &[u32], n: u32) -> Result<Composition> {
        let mut prev = 0;
        let mut parts = Vec::new();
        for &s in set {
            if s <= prev || s >= n {
                return Err(Error::InvalidParameters(format!(
                    "{set:?} is not a subset of [{}]",
                    n.saturating_sub(1)
                )));
            }
            parts.push(s - prev);
            prev = s;
        }
        if n > 0 {
            parts.push(n - prev);
        }
        Ok(Composition(parts))
    }

    /// Sum of the descent set.
    pub fn maj(&self) -> u32 {
        self.descent_set().iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All compositions of `n` in lex order.
pub fn compositions(n: u32) -> Vec<Composition> {
    fn rec(rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in 1..=rest {
            cur.push(p);
            rec(rest - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

/// Compositions of `n` into exactly `len` positive parts, lex order.
pub fn compositions_with_length(n: u32, len: usize) -> Vec<Composition> {
    compositions(n).into_iter().filter(|c| c.0.len() == len).collect()
}

/// `size`-element subsets of `{1..n}`, lex order.
pub fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for s in start..=n {
            if n - s + 1 < size - cur.len() {
                break;
            }
            cur.push(s);
            rec(s + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if size <= n {
        rec(1, n, size, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_listing() {
        let p: Vec<String> = partitions(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(p, ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        assert_eq!(partitions(0), vec![Partition::empty()]);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn hook_lengths_and_classes() {
        let sh = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(sh.num_syt(), BigInt::from(2));
        assert_eq!(Partition::new(vec![3, 2]).unwrap().num_syt(), BigInt::from(5));
        assert_eq!(Partition::new(vec![2, 2, 1, 1]).unwrap().z(), BigInt::from(16));
        assert_eq!(Partition::new(vec![2, 1]).unwrap().sign(), -1);
        assert_eq!(
            Partition::new(vec![3, 2]).unwrap().representative_permutation(),
            vec![1, 2, 0, 4, 3]
        );
    }

    #[test]
    fn box_partitions() {
        let b = partitions_in_box(2, 1);
        assert_eq!(
            b,
            vec![
                Partition::empty(),
                Partition::new(vec![1]).unwrap(),
                Partition::new(vec![1, 1]).unwrap()
            ]
        );
        assert_eq!(partitions_in_box(3, 2).len() as u64, binomial(5, 2));
    }

    #[test]
    fn compositions_and_descents() {
        assert_eq!(compositions(4).len(), 8);
        let c = Composition::new(vec![2, 1, 3]).unwrap();
        assert_eq!(c.descent_set(), vec![2, 3]);
        assert_eq!(c.maj(), 5);
        assert_eq!(Composition::from_descent_set(&[2, 3], 6).unwrap(), c);
        assert_eq!(compositions_with_length(3, 2).len(), 2);
    }

    #[test]
    fn subset_listing() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
        assert_eq!(subsets(3, 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
    }
}
