use std::fmt;

use super::partitions::{partitions, Partition};

/// A standard Young tableau in English notation, rows top to bottom.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    pub fn size(&self) -> u32 {
        self.rows.iter().map(|r| r.len() as u32).sum()
    }

    fn row_of(&self, entry: u32) -> usize {
        self.rows
            .iter()
            .position(|r| r.contains(&entry))
            .expect("entry present")
    }

    /// `i` is a descent when `i+1` sits in a strictly lower row than `i`.
    pub fn descents(&self) -> Vec<u32> {
        let n = self.size();
        let mut row = vec![0usize; n as usize + 1];
        for v in 1..=n {
            row[v as usize] = self.row_of(v);
        }
        (1..n).filter(|&i| row[i as usize + 1] > row[i as usize]).collect()
    }

    pub fn maj(&self) -> u32 {
        self.descents().iter().sum()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All standard tableaux of shape `shape`, built by placing the largest
/// entry in each outer corner in turn.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    fn rec(shape: &mut Vec<u32>) -> Vec<Vec<Vec<u32>>> {
        let n: u32 = shape.iter().sum();
        if n == 0 {
            return vec![vec![Vec::new(); shape.len()]];
        }
        let mut out = Vec::new();
        for i in 0..shape.len() {
            let is_corner = shape[i] > 0 && (i + 1 == shape.len() || shape[i + 1] < shape[i]);
            if !is_corner {
                continue;
            }
            shape[i] -= 1;
            for mut t in rec(shape) {
                t[i].push(n);
                out.push(t);
            }
            shape[i] += 1;
        }
        out
    }
    let mut s = shape.parts().to_vec();
    rec(&mut s).into_iter().map(|rows| StandardTableau { rows }).collect()
}

/// All standard tableaux with `n` cells, grouped by shape in reverse-lex
/// order of shapes.
pub fn all_standard_tableaux(n: u32) -> Vec<StandardTableau> {
    partitions(n).iter().flat_map(standard_tableaux).collect()
}

/// Semistandard tableaux of `shape` with entries in `1..=max_entry`,
/// as row lists.
pub fn semistandard_tableaux(shape: &Partition, max_entry: u32) -> Vec<Vec<Vec<u32>>> {
    let parts = shape.parts();
    let cells: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len as usize).map(move |j| (i, j)))
        .collect();
    let mut rows: Vec<Vec<u32>> = parts.iter().map(|&l| vec![0; l as usize]).collect();
    let mut out = Vec::new();
    fn fill(idx: usize, cells: &[(usize, usize)], rows: &mut Vec<Vec<u32>>, max: u32, out: &mut Vec<Vec<Vec<u32>>>) {
        if idx == cells.len() {
            out.push(rows.clone());
            return;
        }
        let (i, j) = cells[idx];
        let lo_row = if j > 0 { rows[i][j - 1] } else { 1 };
        let lo_col = if i > 0 { rows[i - 1][j] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=max {
            rows[i][j] = v;
            fill(idx + 1, cells, rows, max, out);
        }
    }
    fill(0, &cells, &mut rows, max_entry, &mut out);
    out
}
