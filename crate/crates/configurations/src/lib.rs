//! Exact configurations of vectors over Q(i): determinant brackets,
//! cross-ratios, projection/deletion/duality, and a genericity-checked
//! random sampler.

mod config;
mod expr;
mod point;
mod sample;

pub use config::{det, Config, ConfigError};
pub use expr::RatExpr;
pub use point::{casimir, cross_ratio_bracket, PointP1};
pub use sample::{random_generic, SampleField};
