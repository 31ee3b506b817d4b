//! Irreducible characters of `S_n` by the Murnaghan–Nakayama rule.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::combinat::{factorial, partitions, Partition};
use crate::error::{Error, Result};

pub const DEFAULT_CHARACTER_BOUND: u32 = 7;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterTable {
    pub n: u32,
    /// Rows (irreducibles) and columns (classes) share this order.
    pub partitions: Vec<Partition>,
    /// `values[l][m] = χ^{partitions[l]}(partitions[m])`.
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(n: u32) -> Result<CharacterTable> {
        CharacterTable::with_bound(n, DEFAULT_CHARACTER_BOUND)
    }

    pub fn with_bound(n: u32, bound: u32) -> Result<CharacterTable> {
        if n > bound {
            return Err(Error::BoundExceeded(format!(
                "character table for n = {n} exceeds bound {bound}"
            )));
        }
        let parts = partitions(n);
        let mut memo = HashMap::new();
        let values = parts
            .iter()
            .map(|lambda| {
                parts
                    .iter()
                    .map(|mu| mn_value(lambda.parts(), mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        Ok(CharacterTable {
            n,
            partitions: parts,
            values,
        })
    }

    pub fn index(&self, lambda: &Partition) -> Option<usize> {
        self.partitions.iter().position(|p| p == lambda)
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Option<i64> {
        Some(self.values[self.index(lambda)?][self.index(mu)?])
    }

    /// `sum_μ χ^λ(μ) χ^ν(μ) / z_μ = δ_{λν}` and
    /// `sum_λ χ^λ(μ) χ^λ(ν) = z_μ δ_{μν}`.
    pub fn orthogonality_holds(&self) -> bool {
        let p = self.partitions.len();
        let z: Vec<BigInt> = self.partitions.iter().map(|mu| mu.z()).collect();
        let order = factorial(self.n);
        for a in 0..p {
            for b in 0..p {
                let mut rows = BigInt::zero();
                let mut cols = BigInt::zero();
                for (m, zm) in z.iter().enumerate() {
                    // n!/z_μ is the size of the class
                    rows += &order / zm * self.values[a][m] * self.values[b][m];
                    cols += BigInt::from(self.values[m][a] * self.values[m][b]);
                }
                let expected_rows = if a == b { order.clone() } else { BigInt::zero() };
                let expected_cols = if a == b { z[a].clone() } else { BigInt::zero() };
                if rows != expected_rows || cols != expected_cols {
                    return false;
                }
            }
        }
        true
    }
}

/// `χ^λ(μ)`, stripping rim hooks of length `μ_1, μ_2, ...` via beta-sets.
fn mn_value(lambda: &[u32], mu: &[u32], memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>) -> i64 {
    let Some((&m, rest)) = mu.split_first() else {
        return if lambda.is_empty() { 1 } else { 0 };
    };
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let len = lambda.len() as u32;
    let beta: Vec<u32> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i as u32)
        .collect();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < m || beta.contains(&(b - m)) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > b - m && c < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut next = beta.clone();
        next[i] = b - m;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let shape: Vec<u32> = next
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (len - 1 - j as u32))
            .filter(|&p| p > 0)
            .collect();
        total += sign * mn_value(&shape, rest, memo);
    }
    memo.insert(key, total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn s3_table() {
        let t = CharacterTable::new(3).unwrap();
        let hook = p(&[2, 1]);
        let vals: Vec<i64> = [p(&[1, 1, 1]), p(&[2, 1]), p(&[3])]
            .iter()
            .map(|mu| t.value(&hook, mu).unwrap())
            .collect();
        assert_eq!(vals, vec![2, 0, -1]);
        assert!(t.orthogonality_holds());
    }

    #[test]
    fn trivial_sign_and_degrees() {
        for n in 1..=7 {
            let t = CharacterTable::new(n).unwrap();
            let row = p(&[n]);
            let col = Partition::new(vec![1; n as usize]).unwrap();
            for mu in &t.partitions {
                assert_eq!(t.value(&row, mu), Some(1));
                assert_eq!(t.value(&col, mu), Some(mu.sign()));
            }
            for lambda in &t.partitions {
                assert_eq!(BigInt::from(t.value(lambda, &col).unwrap()), lambda.num_syt());
            }
            assert!(t.orthogonality_holds(), "n = {n}");
        }
        assert!(CharacterTable::new(8).is_err());
        assert!(CharacterTable::with_bound(8, 8).is_ok());
    }
}
