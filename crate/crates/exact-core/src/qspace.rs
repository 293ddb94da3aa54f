//! Finite-dimensional Q-vector spaces presented by generators and relations,
//! with exact projection onto a reduced basis and symmetric-group machinery.

use crate::rref::{RowSpace, SparseRow};
use crate::Rat;
use num_traits::Zero;

/// A quotient of Q^{n_gens} by the span of relation rows. Coordinates are
/// indexed 0..dim against the free (non-pivot) generators.
#[derive(Clone)]
pub struct QSpace {
    pub n_gens: usize,
    pub dim: usize,
    /// coordinate index -> generator index of the corresponding free generator
    pub basis_gens: Vec<usize>,
    /// generator index -> its coordinate vector
    proj: Vec<SparseRow>,
}

impl QSpace {
    /// Build the quotient space Q^{n_gens} / span(relations).
    pub fn new(n_gens: usize, relations: &[SparseRow]) -> QSpace {
        let mut rs = RowSpace::new();
        for r in relations {
            rs.insert(r.clone());
        }
        Self::from_rowspace(n_gens, &rs)
    }

    pub fn from_rowspace(n_gens: usize, rs: &RowSpace) -> QSpace {
        let mut is_pivot = vec![false; n_gens];
        let mut pivot_rows: Vec<Option<SparseRow>> = vec![None; n_gens];
        for (piv, row) in rs.rows_iter() {
            is_pivot[piv] = true;
            pivot_rows[piv] = Some(row.clone());
        }
        let basis_gens: Vec<usize> = (0..n_gens).filter(|&j| !is_pivot[j]).collect();
        let mut coord_of = vec![usize::MAX; n_gens];
        for (i, &g) in basis_gens.iter().enumerate() {
            coord_of[g] = i;
        }
        let mut proj: Vec<SparseRow> = Vec::with_capacity(n_gens);
        for j in 0..n_gens {
            let mut row = SparseRow::new();
            if !is_pivot[j] {
                row.insert(coord_of[j], crate::rat(1));
            } else {
                // e_j = -sum over free columns of the reduced relation row
                for (c, v) in pivot_rows[j].as_ref().unwrap() {
                    if *c != j {
                        row.insert(coord_of[*c], -v.clone());
                    }
                }
            }
            proj.push(row);
        }
        QSpace { n_gens, dim: basis_gens.len(), basis_gens, proj }
    }

    /// Coordinates of a single generator.
    pub fn project_gen(&self, j: usize) -> &SparseRow {
        &self.proj[j]
    }

    /// Coordinates of a linear combination of generators.
    pub fn project(&self, comb: &SparseRow) -> SparseRow {
        let mut out = SparseRow::new();
        for (j, c) in comb {
            for (k, v) in &self.proj[*j] {
                let e = out.entry(*k).or_insert_with(Rat::zero);
                *e += v * c;
                if e.is_zero() {
                    out.remove(k);
                }
            }
        }
        out
    }

    pub fn annihilates(&self, comb: &SparseRow) -> bool {
        self.project(comb).is_empty()
    }
}

impl RowSpace {
    /// Iterate (pivot column, reduced row) pairs.
    pub fn rows_iter(&self) -> impl Iterator<Item = (usize, &SparseRow)> {
        self.raw_rows().iter().map(|(k, v)| (*k, v))
    }
}

/// A symmetric-group action on the generator set of a presentation: apply a
/// permutation (image table on 0..m) to a generator, producing a signed
/// generator.
pub trait GroupAction: Sync {
    fn degree(&self) -> usize;
    fn apply(&self, perm: &[usize], gen: usize) -> (usize, i64);
}

/// All permutations of 0..m with their signs, in lexicographic order.
pub fn permutations_with_sign(m: usize) -> Vec<(Vec<usize>, i64)> {
    use itertools::Itertools;
    (0..m)
        .permutations(m)
        .map(|p| {
            let s = perm_sign(&p);
            (p, s)
        })
        .collect()
}

/// Sign of a permutation given as an image table.
pub fn perm_sign(p: &[usize]) -> i64 {
    let mut inv = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Dimension of the alternating isotypic component of the quotient space,
/// computed as the rank of the projected images of the antisymmetrizer
/// applied to one generator per orbit.
pub fn alternating_multiplicity(space: &QSpace, action: &dyn GroupAction) -> usize {
    let perms = permutations_with_sign(action.degree());
    let mut seen = vec![false; space.n_gens];
    let mut rs = RowSpace::new();
    for g in 0..space.n_gens {
        if seen[g] {
            continue;
        }
        let mut acc = SparseRow::new();
        for (perm, sgn) in &perms {
            let (h, s) = action.apply(perm, g);
            seen[h] = true;
            let coeff = crate::rat(sgn * s);
            for (k, v) in space.project_gen(h) {
                let e = acc.entry(*k).or_insert_with(Rat::zero);
                *e += v * &coeff;
                if e.is_zero() {
                    acc.remove(k);
                }
            }
        }
        rs.insert(acc);
    }
    rs.rank()
}
