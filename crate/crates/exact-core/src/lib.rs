//! Exact arithmetic substrate: rationals, Gaussian rationals, unique
//! factorization into canonical irreducibles, wedge/tensor word algebra,
//! and exact linear algebra over Q.

pub mod error;
pub mod factor;
pub mod gaussian;
pub mod lincomb;
pub mod qspace;
pub mod rref;
pub mod wedge;

pub use error::ExactError;
pub use factor::{factorize_gaussian, factorize_rational, ExponentVector, Factor};
pub use gaussian::GaussianRational;
pub use lincomb::LinComb;
pub use qspace::{alternating_multiplicity, GroupAction, QSpace};
pub use rref::{rref, RowSpace, SparseRow};
pub use wedge::wedge;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rat = BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for a rational fraction n/d.
pub fn ratf(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}
