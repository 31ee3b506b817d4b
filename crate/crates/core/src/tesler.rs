//! α-Tesler matrices, their `q,t`-weights and the Tesler polynomials
//! `Tes(α;q,t)`, plus the comparison of Tesler sums at `t = 0` with the
//! Hilbert series of `R_{n,k,r}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::combinat::{compositions_with_length, Composition};
use crate::error::{Error, Result};
use crate::qt::{qt_integer, QtPolynomial};
use crate::rings::{hilbert_closed_form, RingSpec};

/// Largest `n + k` accepted by [`tesler_hilbert_check`].
pub const DEFAULT_TESLER_BOUND: usize = 7;

/// An upper triangular matrix with nonnegative entries, stored row by row;
/// row `i` holds the entries `u_{i,i}, ..., u_{i,n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TeslerMatrix {
    rows: Vec<Vec<u32>>,
}

impl TeslerMatrix {
    /// Build from full `n x n` rows; entries below the diagonal must be 0.
    pub fn from_rows(full: &[Vec<u32>]) -> Result<TeslerMatrix> {
        let n = full.len();
        let mut rows = Vec::with_capacity(n);
        for (i, row) in full.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidParameters(format!(
                    "row {} has length {}, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            if row[..i].iter().any(|&u| u != 0) {
                return Err(Error::InvalidParameters(format!(
                    "row {} is not upper triangular",
                    i + 1
                )));
            }
            rows.push(row[i..].to_vec());
        }
        Ok(TeslerMatrix { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// `u_{i,j}` with one-based indices; zero below the diagonal.
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        if j < i {
            0
        } else {
            self.rows[i - 1][j - i]
        }
    }

    /// The hook sums `u_{i,i} + ... + u_{i,n} - (u_{1,i} + ... + u_{i-1,i})`.
    pub fn hook_sums(&self) -> Vec<i64> {
        let n = self.size();
        (1..=n)
            .map(|i| {
                let row: i64 = self.rows[i - 1].iter().map(|&u| u as i64).sum();
                let col: i64 = (1..i).map(|h| self.entry(h, i) as i64).sum();
                row - col
            })
            .collect()
    }

    pub fn is_tesler_for(&self, alpha: &[u32]) -> bool {
        alpha.len() == self.size() && self.hook_sums().iter().zip(alpha).all(|(&h, &a)| h == a as i64)
    }

    /// Number of positive entries.
    pub fn pos(&self) -> usize {
        self.rows.iter().flatten().filter(|&&u| u > 0).count()
    }

    fn positive_entries(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.rows.iter().flatten().copied().filter(|&u| u > 0).collect();
        v.sort_unstable();
        v
    }

    pub fn weight(&self) -> QtPolynomial {
        weight_of(self.pos(), self.size(), &self.positive_entries())
    }
}

impl fmt::Display for TeslerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.size();
        let rows: Vec<String> = (1..=n)
            .map(|i| {
                let r: Vec<String> = (1..=n).map(|j| self.entry(i, j).to_string()).collect();
                format!("({})", r.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl fmt::Debug for TeslerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `-(1-q)(1-t)`.
fn minus_m() -> QtPolynomial {
    let one = QtPolynomial::one();
    let m = &(&one - &QtPolynomial::q()) * &(&one - &QtPolynomial::t());
    -&m
}

fn weight_of(pos: usize, n: usize, entries: &[u32]) -> QtPolynomial {
    entries
        .iter()
        .fold(minus_m().pow((pos - n) as u32), |acc, &u| &acc * &qt_integer(u))
}

fn check_alpha(alpha: &[u32]) -> Result<()> {
    if alpha.is_empty() || alpha.contains(&0) {
        return Err(Error::InvalidParameters(format!(
            "α = {alpha:?} must be a nonempty vector of positive integers"
        )));
    }
    Ok(())
}

/// Visit every α-Tesler matrix, as a slice of rows (row `i` starting at the
/// diagonal). Row `i` must sum to `α_i` plus the column sum above the
/// diagonal, which is known once the earlier rows are fixed.
fn for_each_tesler(alpha: &[u32], mut visit: impl FnMut(&[Vec<u32>])) {
    fn fill(rest: u32, row: &mut [u32], j: usize, out: &mut dyn FnMut(&[u32])) {
        if j + 1 == row.len() {
            row[j] = rest;
            out(row);
            return;
        }
        for v in 0..=rest {
            row[j] = v;
            fill(rest - v, row, j + 1, out);
        }
    }
    fn rec(alpha: &[u32], rows: &mut Vec<Vec<u32>>, visit: &mut dyn FnMut(&[Vec<u32>])) {
        let i = rows.len();
        let n = alpha.len();
        if i == n {
            visit(rows);
            return;
        }
        let above: u32 = (0..i).map(|h| rows[h][i - h]).sum();
        let mut row = vec![0; n - i];
        let mut choices = Vec::new();
        fill(alpha[i] + above, &mut row, 0, &mut |r| choices.push(r.to_vec()));
        for r in choices {
            rows.push(r);
            rec(alpha, rows, visit);
            rows.pop();
        }
    }
    rec(alpha, &mut Vec::new(), &mut visit);
}

pub fn enumerate_tesler(alpha: &[u32]) -> Result<Vec<TeslerMatrix>> {
    check_alpha(alpha)?;
    let mut out = Vec::new();
    for_each_tesler(alpha, |rows| out.push(TeslerMatrix { rows: rows.to_vec() }));
    Ok(out)
}

pub fn count_tesler(alpha: &[u32]) -> Result<usize> {
    check_alpha(alpha)?;
    let mut count = 0;
    for_each_tesler(alpha, |_| count += 1);
    Ok(count)
}

/// `Tes(α;q,t)`, the sum of the weights over all α-Tesler matrices.
pub fn tesler_polynomial(alpha: &[u32]) -> Result<QtPolynomial> {
    check_alpha(alpha)?;
    let n = alpha.len();
    // the weight only depends on pos and the multiset of positive entries
    let mut classes: BTreeMap<(usize, Vec<u32>), u64> = BTreeMap::new();
    for_each_tesler(alpha, |rows| {
        let mut entries: Vec<u32> = rows.iter().flatten().copied().filter(|&u| u > 0).collect();
        entries.sort_unstable();
        *classes.entry((entries.len(), entries)).or_default() += 1;
    });
    let mut total = QtPolynomial::zero();
    for ((pos, entries), count) in classes {
        total = &total + &weight_of(pos, n, &entries).scale(&BigInt::from(count));
    }
    Ok(total)
}

/// Which compositions enter the Tesler sum compared with `Hilb(R_{n,k,r})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TeslerIndexSet {
    /// `α ⊨ m` for every `n <= m <= n+k`, `ℓ(α) = n`, `α_1 = ... = α_r = 1`.
    Cumulative,
    /// Only `α ⊨ n+k`. Misses the constant term whenever `k > 0`.
    ExactSize,
}

pub fn tesler_compositions(n: usize, k: usize, r: usize, index: TeslerIndexSet) -> Result<Vec<Composition>> {
    if n == 0 || r > n {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= n and r <= n, got (n,k,r) = ({n},{k},{r})"
        )));
    }
    let sizes = match index {
        TeslerIndexSet::Cumulative => n..=n + k,
        TeslerIndexSet::ExactSize => n + k..=n + k,
    };
    Ok(sizes
        .flat_map(|m| compositions_with_length(m as u32, n))
        .filter(|a| a.parts()[..r].iter().all(|&p| p == 1))
        .collect())
}

/// One row of the Tesler table: α with `Tes(α;q,t)` and its `t = 0` value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TeslerRow {
    pub alpha: Composition,
    pub matrices: usize,
    pub bivariate: QtPolynomial,
    pub at_t_zero: QtPolynomial,
}

pub fn tesler_table(n: usize, k: usize, r: usize, index: TeslerIndexSet) -> Result<Vec<TeslerRow>> {
    tesler_compositions(n, k, r, index)?
        .into_par_iter()
        .map(|alpha| {
            let bivariate = tesler_polynomial(alpha.parts())?;
            Ok(TeslerRow {
                matrices: count_tesler(alpha.parts())?,
                at_t_zero: bivariate.set_t(0),
                bivariate,
                alpha,
            })
        })
        .collect()
}

/// CSV with one row per α: the composition, the number of matrices, and
/// the coefficients of `Tes(α;q,0)` from `q^0` up.
pub fn tesler_csv(rows: &[TeslerRow]) -> String {
    let width = rows
        .iter()
        .map(|r| r.at_t_zero.q_coefficients().len())
        .max()
        .unwrap_or(0);
    let mut out = String::from("alpha,matrices");
    for d in 0..width {
        out.push_str(&format!(",q{d}"));
    }
    out.push('\n');
    for row in rows {
        let parts: Vec<String> = row.alpha.parts().iter().map(|p| p.to_string()).collect();
        out.push_str(&format!("{},{}", parts.join(" "), row.matrices));
        let coeffs = row.at_t_zero.q_coefficients();
        for d in 0..width {
            out.push_str(&format!(",{}", coeffs.get(d).cloned().unwrap_or_default()));
        }
        out.push('\n');
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TeslerVerdict {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub index: TeslerIndexSet,
    pub compositions: usize,
    #[serde(skip)]
    pub tesler_sum: QtPolynomial,
    #[serde(skip)]
    pub hilbert: QtPolynomial,
    pub equal: bool,
}

impl TeslerVerdict {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "k": self.k,
            "r": self.r,
            "index": self.index,
            "compositions": self.compositions,
            "tesler_sum": self.tesler_sum.to_json(),
            "hilbert": self.hilbert.to_json(),
            "equal": self.equal,
        })
    }
}

pub fn tesler_hilbert_verdict(n: usize, k: usize, r: usize, index: TeslerIndexSet) -> Result<TeslerVerdict> {
    if n + k > DEFAULT_TESLER_BOUND {
        return Err(Error::BoundExceeded(format!(
            "n + k = {} exceeds {DEFAULT_TESLER_BOUND}",
            n + k
        )));
    }
    let spec = RingSpec::mixed_h(n, k, r)?;
    let rows = tesler_table(n, k, r, index)?;
    let tesler_sum = rows.iter().fold(QtPolynomial::zero(), |acc, row| &acc + &row.at_t_zero);
    let hilbert = hilbert_closed_form(&spec);
    Ok(TeslerVerdict {
        n,
        k,
        r,
        index,
        compositions: rows.len(),
        equal: tesler_sum == hilbert,
        tesler_sum,
        hilbert,
    })
}

/// Whether the cumulative Tesler sum at `t = 0` equals `Hilb(R_{n,k,r};q)`.
pub fn tesler_hilbert_check(n: usize, k: usize, r: usize) -> Result<bool> {
    Ok(tesler_hilbert_verdict(n, k, r, TeslerIndexSet::Cumulative)?.equal)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_by_one() {
        let all = enumerate_tesler(&[1]).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].to_string(), "[(1)]");
        assert_eq!(tesler_polynomial(&[1]).unwrap(), QtPolynomial::one());
    }

    #[test]
    fn two_by_two() {
        let all = enumerate_tesler(&[1, 1]).unwrap();
        let shown: Vec<String> = all.iter().map(|u| u.to_string()).collect();
        assert_eq!(shown, vec!["[(0,1),(0,2)]", "[(1,0),(0,1)]"]);
        let expected = &(&QtPolynomial::one() + &QtPolynomial::q()) + &QtPolynomial::t();
        assert_eq!(tesler_polynomial(&[1, 1]).unwrap(), expected);
    }

    #[test]
    fn rejects_zero_parts() {
        assert!(enumerate_tesler(&[1, 0]).is_err());
        assert!(enumerate_tesler(&[]).is_err());
    }

    #[test]
    fn from_rows_validates_shape() {
        assert!(TeslerMatrix::from_rows(&[vec![1, 0], vec![1, 1]]).is_err());
        assert!(TeslerMatrix::from_rows(&[vec![1, 0], vec![1]]).is_err());
    }
}
