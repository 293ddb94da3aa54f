use exact_core::GaussianRational;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("index out of range or repeated: {0:?}")]
    BadIndex(Vec<usize>),
    #[error("no generic configuration found after {0} attempts")]
    SamplingExhausted(usize),
}

/// An ordered configuration of `m` vectors in Q(i)^q, indexed from 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Config {
    pub dim: usize,
    pub points: Vec<Vec<GaussianRational>>,
}

/// Exact determinant by elimination with division (the entries form a field).
pub fn det(mut m: Vec<Vec<GaussianRational>>) -> GaussianRational {
    let n = m.len();
    let mut sign = false;
    let mut acc = GaussianRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return GaussianRational::zero();
        };
        if p != col {
            m.swap(p, col);
            sign = !sign;
        }
        let pivot = m[col][col].clone();
        acc = &acc * &pivot;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pivot;
            for c in col..n {
                let sub = &f * &m[col][c];
                m[r][c] = &m[r][c] - &sub;
            }
        }
    }
    if sign {
        -&acc
    } else {
        acc
    }
}

impl Config {
    pub fn new(dim: usize, points: Vec<Vec<GaussianRational>>) -> Result<Self, ConfigError> {
        if points.iter().any(|p| p.len() != dim) {
            return Err(ConfigError::Degenerate(format!(
                "vectors must have length {dim}"
            )));
        }
        Ok(Config { dim, points })
    }

    pub fn from_ints(dim: usize, entries: &[&[i64]]) -> Self {
        let points = entries
            .iter()
            .map(|row| row.iter().map(|&x| GaussianRational::from_ints(x, 0)).collect())
            .collect();
        Config { dim, points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Determinant bracket |i₁ … i_q| of the selected vectors, in the order
    /// given, so it is antisymmetric in the indices.
    pub fn bracket(&self, idx: &[usize]) -> Result<GaussianRational, ConfigError> {
        if idx.len() != self.dim
            || idx.iter().any(|&i| i >= self.len())
            || (1..idx.len()).any(|k| idx[..k].contains(&idx[k]))
        {
            return Err(ConfigError::BadIndex(idx.to_vec()));
        }
        // rows = vectors, so this is the transpose of the column matrix;
        // transposition leaves the determinant alone
        Ok(det(idx.iter().map(|&i| self.points[i].clone()).collect()))
    }

    /// r(i,j,k,l) = |ik||jl| / (|il||jk|) for four vectors in dim 2.
    pub fn cross_ratio_r(
        &self,
        i: usize,
        j: usize,
        k: usize,
        l: usize,
    ) -> Result<GaussianRational, ConfigError> {
        let ik = self.bracket(&[i, k])?;
        let jl = self.bracket(&[j, l])?;
        let il = self.bracket(&[i, l])?;
        let jk = self.bracket(&[j, k])?;
        if il.is_zero() || jk.is_zero() {
            return Err(ConfigError::Degenerate(format!(
                "vanishing bracket in r({i},{j},{k},{l})"
            )));
        }
        Ok(&(&ik * &jl) / &(&il * &jk))
    }

    /// |i₁i₂i₄||i₂i₃i₅||i₁i₃i₆| / (|i₁i₂i₅||i₂i₃i₆||i₁i₃i₄|) for six
    /// vectors in dim 3 (the generator inside the weight-3 Grassmannian map).
    pub fn triple_ratio(&self, idx: &[usize; 6]) -> Result<GaussianRational, ConfigError> {
        let [a, b, c, d, e, f] = *idx;
        let num = &(&self.bracket(&[a, b, d])? * &self.bracket(&[b, c, e])?)
            * &self.bracket(&[a, c, f])?;
        let den = &(&self.bracket(&[a, b, e])? * &self.bracket(&[b, c, f])?)
            * &self.bracket(&[a, c, d])?;
        if den.is_zero() {
            return Err(ConfigError::Degenerate("triple ratio denominator".into()));
        }
        Ok(&num / &den)
    }

    /// Project every vector except `j` to the quotient by vector `j`,
    /// with the volume form contracted against l_j in the first slot, so
    /// that the quotient bracket |i₁…i_{q−1}| equals |j i₁…i_{q−1}|
    /// upstairs.
    pub fn project(&self, j: usize) -> Result<Config, ConfigError> {
        if j >= self.len() {
            return Err(ConfigError::BadIndex(vec![j]));
        }
        let lj = &self.points[j];
        let Some(p) = lj.iter().position(|x| !x.is_zero()) else {
            return Err(ConfigError::Degenerate("projecting along zero vector".into()));
        };
        let mut points = Vec::with_capacity(self.len() - 1);
        for (i, v) in self.points.iter().enumerate() {
            if i == j {
                continue;
            }
            let f = &v[p] / &lj[p];
            let mut w: Vec<GaussianRational> = (0..self.dim)
                .filter(|&c| c != p)
                .map(|c| &v[c] - &(&f * &lj[c]))
                .collect();
            // expansion of |l_j v …| along the pivot coordinate leaves a
            // factor (−1)^p l_j[p]; absorb it into the first quotient
            // coordinate (a diagonal basis change applied to every vector)
            // so quotient brackets match upstairs ones exactly
            let scale = if p % 2 == 0 { lj[p].clone() } else { -&lj[p] };
            if let Some(first) = w.first_mut() {
                *first = &*first * &scale;
            }
            points.push(w);
        }
        Ok(Config {
            dim: self.dim - 1,
            points,
        })
    }

    /// Forget vector `i`.
    pub fn delete(&self, i: usize) -> Result<Config, ConfigError> {
        if i >= self.len() {
            return Err(ConfigError::BadIndex(vec![i]));
        }
        let mut points = self.points.clone();
        points.remove(i);
        Ok(Config {
            dim: self.dim,
            points,
        })
    }

    /// A canonical representative of the GL_q-orbit: the reduced row
    /// echelon form of the q×m coordinate matrix. Two configurations are
    /// GL-equivalent iff their canonical forms coincide.
    pub fn canonical(&self) -> Config {
        let (q, m) = (self.dim, self.len());
        let mut mat: Vec<Vec<GaussianRational>> = (0..q)
            .map(|r| (0..m).map(|c| self.points[c][r].clone()).collect())
            .collect();
        let mut row = 0;
        for col in 0..m {
            let Some(p) = (row..q).find(|&r| !mat[r][col].is_zero()) else {
                continue;
            };
            mat.swap(p, row);
            let inv = mat[row][col].inv();
            for c in 0..m {
                mat[row][c] = &mat[row][c] * &inv;
            }
            for r in 0..q {
                if r != row && !mat[r][col].is_zero() {
                    let f = mat[r][col].clone();
                    for c in 0..m {
                        let sub = &f * &mat[row][c];
                        mat[r][c] = &mat[r][c] - &sub;
                    }
                }
            }
            row += 1;
            if row == q {
                break;
            }
        }
        let points = (0..m)
            .map(|c| (0..q).map(|r| mat[r][c].clone()).collect())
            .collect();
        Config { dim: q, points }
    }

    /// The dual configuration in dim m − q: rows of a kernel basis of the
    /// q×m matrix whose columns are the vectors.
    pub fn dual(&self) -> Result<Config, ConfigError> {
        let (q, m) = (self.dim, self.len());
        if m <= q {
            return Err(ConfigError::Degenerate(format!(
                "dual needs more than {q} vectors"
            )));
        }
        // matrix rows are the q coordinate functionals on the m columns
        let mut mat: Vec<Vec<GaussianRational>> = (0..q)
            .map(|r| (0..m).map(|c| self.points[c][r].clone()).collect())
            .collect();
        // reduced echelon form
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m {
            let Some(p) = (row..q).find(|&r| !mat[r][col].is_zero()) else {
                continue;
            };
            mat.swap(p, row);
            let inv = mat[row][col].inv();
            for c in 0..m {
                mat[row][c] = &mat[row][c] * &inv;
            }
            for r in 0..q {
                if r != row && !mat[r][col].is_zero() {
                    let f = mat[r][col].clone();
                    for c in 0..m {
                        let sub = &f * &mat[row][c];
                        mat[r][c] = &mat[r][c] - &sub;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == q {
                break;
            }
        }
        if row < q {
            return Err(ConfigError::Degenerate("vectors do not span".into()));
        }
        let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
        // kernel basis: one vector per free column
        let mut points = vec![vec![GaussianRational::zero(); m - q]; m];
        for (k, &fc) in free.iter().enumerate() {
            points[fc][k] = GaussianRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                points[pc][k] = -&mat[r][fc];
            }
        }
        Ok(Config {
            dim: m - q,
            points,
        })
    }
}
