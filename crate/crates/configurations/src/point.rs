use crate::{Config, ConfigError};
use exact_core::GaussianRational;

/// A point of P¹ over Q(i); ∞ is represented by the vector (1,0) and a
/// finite z by (z,1).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PointP1 {
    Infinity,
    Finite(GaussianRational),
}

impl PointP1 {
    pub fn from_int(z: i64) -> Self {
        PointP1::Finite(GaussianRational::from_ints(z, 0))
    }

    pub fn vector(&self) -> Vec<GaussianRational> {
        match self {
            PointP1::Infinity => vec![GaussianRational::one(), GaussianRational::zero()],
            PointP1::Finite(z) => vec![z.clone(), GaussianRational::one()],
        }
    }
}

fn config_of(points: &[PointP1]) -> Config {
    Config {
        dim: 2,
        points: points.iter().map(|p| p.vector()).collect(),
    }
}

/// [x₁,x₂,x₃,x₄] = (x₁−x₂)(x₃−x₄) / ((x₄−x₁)(x₂−x₃)), projectively;
/// [∞,−1,0,z] = −z.
pub fn cross_ratio_bracket(points: &[PointP1; 4]) -> Result<GaussianRational, ConfigError> {
    let c = config_of(points);
    let num = &c.bracket(&[0, 1])? * &c.bracket(&[2, 3])?;
    let den = &c.bracket(&[3, 0])? * &c.bracket(&[1, 2])?;
    if den.is_zero() {
        return Err(ConfigError::Degenerate("coincident points".into()));
    }
    Ok(&num / &den)
}

/// The Casimir element on 2n points:
/// [x₁,…,x₂ₙ] = −(x₁−x₂)(x₃−x₄)⋯(x₂ₙ₋₁−x₂ₙ) / ((x₂−x₃)⋯(x₂ₙ−x₁)).
/// For six points this equals [x₁,x₂,x₃,x₄]/[x₄,x₅,x₆,x₁].
pub fn casimir(points: &[PointP1]) -> Result<GaussianRational, ConfigError> {
    let n2 = points.len();
    if n2 < 4 || n2 % 2 != 0 {
        return Err(ConfigError::BadIndex((0..n2).collect()));
    }
    let c = config_of(points);
    let mut num = GaussianRational::one();
    let mut den = GaussianRational::one();
    for k in 0..n2 / 2 {
        num = &num * &c.bracket(&[2 * k, 2 * k + 1])?;
        den = &den * &c.bracket(&[(2 * k + 1) % n2, (2 * k + 2) % n2])?;
    }
    if den.is_zero() {
        return Err(ConfigError::Degenerate("coincident points".into()));
    }
    Ok(-&(&num / &den))
}
