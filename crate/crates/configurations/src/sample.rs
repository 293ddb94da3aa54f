use crate::{Config, ConfigError};
use exact_core::GaussianRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleField {
    Rational,
    /// Gaussian integers; even-weight single-valued polylogarithms vanish on
    /// real arguments, so numeric checks need genuinely complex points.
    GaussianInt,
}

const MAX_ATTEMPTS: usize = 10_000;

/// A generic configuration of `m` integer (or Gaussian-integer) vectors in
/// dim `q` with entries bounded by `height`, deterministic in `seed`.
/// Genericity means every maximal bracket is nonzero, which makes every
/// subset of at most `q` vectors linearly independent.
pub fn random_generic(
    q: usize,
    m: usize,
    height: i64,
    seed: u64,
    field: SampleField,
) -> Result<Config, ConfigError> {
    assert!(height >= 2 && q >= 1 && m >= q);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..MAX_ATTEMPTS {
        let points: Vec<Vec<GaussianRational>> = (0..m)
            .map(|_| {
                (0..q)
                    .map(|_| {
                        let re = rng.gen_range(-height..=height);
                        let im = match field {
                            SampleField::Rational => 0,
                            SampleField::GaussianInt => rng.gen_range(-height..=height),
                        };
                        GaussianRational::from_ints(re, im)
                    })
                    .collect()
            })
            .collect();
        let c = Config { dim: q, points };
        for idx in subsets(m, q) {
            if c.bracket(&idx).unwrap().is_zero() {
                continue 'attempt;
            }
        }
        return Ok(c);
    }
    Err(ConfigError::SamplingExhausted(MAX_ATTEMPTS))
}

fn subsets(m: usize, q: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, m: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..=m - left {
            cur.push(i);
            rec(i + 1, m, left - 1, cur, out);
            cur.pop();
        }
    }
    rec(0, m, q, &mut cur, &mut out);
    out
}
