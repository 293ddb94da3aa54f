//! Formal polylogarithmic symbols over Q(i): Bloch-group style generators
//! `{x}_n`, `{x,y}_{2,1}`, `{x,y}_{3,1}`, their coboundary maps into tensor
//! complexes, exact functional-equation material at weights 2..4, motivic
//! correlators, residue maps, and a split-specialization certifier that
//! checks claimed identities numerically with independent random draws.

pub mod certify;
pub mod compare;
pub mod coproduct;
pub mod correlator;
pub mod dilog;
pub mod eval;
pub mod gangl;
pub mod lie;
pub mod qrel;
pub mod reduce;
pub mod residue;
pub mod section6;
pub mod value;

pub use certify::{certify_zero, CertifyOptions, Certificate, Verdict};
pub use coproduct::{coproduct, delta_next, ComplexElem, W3};
pub use correlator::{
    correlator_coproduct, correlator_depth_reduce, w3_of_correlator, CorFactor, CorrelatorSym,
};
pub use dilog::canon2;
pub use lie::{s2, s21, s3, s31, s4, LieElem, Sym};
pub use qrel::{q2_element, q3_element_grouped, q3_element_split, q4_element};
pub use reduce::reduce_21;
pub use value::V;

use thiserror::Error;

#[derive(Debug, Error, Clone)]
pub enum MsError {
    #[error("degenerate specialization: {0}")]
    Degenerate(String),
    #[error("numeric evaluation failed: {0}")]
    Numeric(#[from] polylog_numerics::NumError),
    #[error("exact arithmetic failed: {0}")]
    Exact(#[from] exact_core::ExactError),
    #[error("mismatched term shapes between specializations: {0}")]
    ShapeMismatch(String),
}
