//! Exact sparse row reduction over the rationals.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Sparse row: strictly increasing column indices, nonzero entries.
pub type SparseRow = Vec<(usize, Scalar)>;

/// Incremental echelon basis. Rows are reduced on their largest column, so
/// callers choose the column order that makes the leading term meaningful.
#[derive(Debug, Default, Clone)]
pub struct Echelon {
    pivots: HashMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row to the span. Returns `true` when it raised the rank.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        loop {
            let (lead, c) = match row.last() {
                None => return false,
                Some((col, c)) => (*col, c.clone()),
            };
            match self.pivots.get(&lead) {
                Some(p) => row = axpy(&row, &-c, p),
                None => {
                    let inv = c.recip();
                    if !inv.is_one() {
                        for (_, x) in row.iter_mut() {
                            *x *= &inv;
                        }
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }
}

/// `a + k*b` on sorted sparse rows.
fn axpy(a: &SparseRow, k: &Scalar, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, k * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + k * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of a family of sparse rows.
pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Rank of a dense matrix given row by row.
pub fn dense_rank(m: &[Vec<Scalar>]) -> usize {
    rank(m.iter().map(|row| {
        row.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, c.clone()))
            .collect()
    }))
}
