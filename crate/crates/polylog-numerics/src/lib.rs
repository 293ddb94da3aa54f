//! Arbitrary-precision evaluation of classical polylogarithms Li_n and the
//! single-valued polylogarithms ℒ_n, the numeric backbone of identity
//! certification. Arguments arrive as exact Gaussian rationals so that
//! unit-circle and guard-band decisions are exact.

mod bernoulli;
mod complex;
mod li;
mod policy;
mod sv;

pub use bernoulli::bernoulli;
pub use complex::{bigfloat_from_rat, bigfloat_to_f64, with_consts, APComplex};
pub use li::{beta_const, eta_const, li, zeta_const};
pub use policy::{NumError, PrecisionPolicy};
pub use sv::{five_term_residual, sv_polylog};
