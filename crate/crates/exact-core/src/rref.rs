//! Exact Gaussian elimination over Q: dense reduced row-echelon form and an
//! incremental sparse row space for rank computations on large spanning sets.

use crate::Rat;
use num_traits::Zero;
use std::collections::BTreeMap;

/// A sparse row over Q, keyed by column index.
pub type SparseRow = BTreeMap<usize, Rat>;

/// Reduced row-echelon form. Returns (reduced nonzero rows, rank, pivot
/// columns in order). Pivot choice is leftmost column, lowest row index,
/// so the result is reproducible.
pub fn rref(rows: &[Vec<Rat>]) -> (Vec<Vec<Rat>>, usize, Vec<usize>) {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..ncols {
        let Some(sel) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, sel);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..ncols {
                    let s = &m[r][j] * &f;
                    m[i][j] -= s;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    m.truncate(r);
    // remaining rows are zero by construction
    (m, pivots.len(), pivots)
}

/// An incrementally built echelon basis of a subspace of Q^n, for exact rank
/// of large spanning sets without materializing a dense matrix.
#[derive(Default, Clone)]
pub struct RowSpace {
    /// pivot column -> reduced row with leading coefficient 1
    rows: BTreeMap<usize, SparseRow>,
}

impl RowSpace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// The reduced rows keyed by pivot column.
    pub fn raw_rows(&self) -> &BTreeMap<usize, SparseRow> {
        &self.rows
    }

    /// Fully reduce `row` against the basis in place, clearing every entry
    /// that sits in a pivot column (not just the leading one).
    pub fn reduce(&self, row: &mut SparseRow) {
        loop {
            let Some(lead) = row.keys().find(|c| self.rows.contains_key(c)).copied() else {
                return;
            };
            let basis = &self.rows[&lead];
            let f = row[&lead].clone();
            for (c, v) in basis {
                let delta = v * &f;
                let e = row.entry(*c).or_insert_with(Rat::zero);
                *e -= delta;
                if e.is_zero() {
                    row.remove(c);
                }
            }
        }
    }

    /// Insert a vector; returns true if it enlarged the space.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        self.reduce(&mut row);
        let Some((&lead, _)) = row.iter().next() else {
            return false;
        };
        let inv = row[&lead].recip();
        for v in row.values_mut() {
            *v *= &inv;
        }
        // keep existing rows fully reduced against the new pivot
        let new_row = row.clone();
        for r in self.rows.values_mut() {
            if let Some(f) = r.get(&lead).cloned() {
                for (c, v) in &new_row {
                    let delta = v * &f;
                    let e = r.entry(*c).or_insert_with(Rat::zero);
                    *e -= delta;
                    if e.is_zero() {
                        r.remove(c);
                    }
                }
            }
        }
        self.rows.insert(lead, row);
        true
    }

    /// True if the vector lies in the span.
    pub fn contains(&self, row: &SparseRow) -> bool {
        let mut r = row.clone();
        self.reduce(&mut r);
        r.is_empty()
    }

    /// Express `row` in terms of the inserted pivots if it lies in the span:
    /// returns pivot-column -> coefficient.
    pub fn coordinates(&self, row: &SparseRow) -> Option<BTreeMap<usize, Rat>> {
        let mut r = row.clone();
        let mut coords = BTreeMap::new();
        loop {
            let Some(&lead) = r.keys().next() else {
                return Some(coords);
            };
            let basis = self.rows.get(&lead)?;
            let f = r[&lead].clone();
            coords.insert(lead, f.clone());
            for (c, v) in basis {
                let delta = v * &f;
                let e = r.entry(*c).or_insert_with(Rat::zero);
                *e -= delta;
                if e.is_zero() {
                    r.remove(c);
                }
            }
        }
    }
}
