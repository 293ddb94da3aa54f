//! The deletion five-term element: for five points x₁..x₅ and a parameter y,
//! the sum over i of `{[x₁,…,x̂_i,…,x₅], y}_{3,1}` has a wedge-of-dilogs
//! obstruction of the form (five-term relation row) ∧ {y}_2, hence vanishing.
//! The certificate exhibits the deletion row, canonicalized, as the standard
//! weight-2 five-term row up to a global sign and a per-index sign pattern.

use crate::dilog::canon2;
use crate::qrel::q2_element;
use crate::value::V;
use crate::MsError;
use configurations::{cross_ratio_bracket, PointP1};
use exact_core::{rat, LinComb, Rat};

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum SignPattern {
    /// row built as Σ {c_i}_2
    Plain,
    /// row built as Σ (−1)^i {c_i}_2
    Alternating,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct DeletionCertificate {
    /// which deletion row matches the five-term row
    pub pattern: SignPattern,
    /// global sign relating the matching deletion row to the five-term row
    pub sign: i64,
}

/// Cross-ratio of the four points left after deleting index `skip`.
fn deletion_cross_ratio(xs: &[V; 5], skip: usize) -> Result<V, MsError> {
    let rest: Vec<V> = (0..5).filter(|&i| i != skip).map(|i| xs[i].clone()).collect();
    cross_ratio_bracket(&[rest[0].clone(), rest[1].clone(), rest[2].clone(), rest[3].clone()])
        .map(PointP1::Finite)
        .map_err(|e| MsError::Degenerate(e.to_string()))
}

/// Canonicalized dilog row of a list of (coefficient, argument) pairs.
fn canon_row(terms: &[(Rat, V)]) -> LinComb<V> {
    let mut row = LinComb::zero();
    for (c, x) in terms {
        if let Some((rep, s)) = canon2(x) {
            row.add_term(rep, c * &rat(s));
        }
    }
    row
}

/// Establish that the deletion row of dilog symbols is, up to global sign and
/// possibly alternating per-index signs, the five-term row of the same five
/// points. Exact; no numerics.
pub fn gangl_delta22(xs: &[V; 5], y: &V) -> Result<DeletionCertificate, MsError> {
    if canon2(y).is_none() {
        return Err(MsError::Degenerate("wedge parameter at 0, 1, or ∞".into()));
    }
    let five_term = canon_row(
        &q2_element(xs)?
            .terms
            .iter()
            .map(|(c, s)| match s {
                crate::lie::Sym::S2(x) => (c.clone(), x.clone()),
                _ => unreachable!("weight-2 element"),
            })
            .collect::<Vec<_>>(),
    );

    for pattern in [SignPattern::Plain, SignPattern::Alternating] {
        let mut terms = Vec::new();
        for i in 0..5 {
            let sign = match pattern {
                SignPattern::Plain => rat(1),
                SignPattern::Alternating => rat(if i % 2 == 0 { 1 } else { -1 }),
            };
            terms.push((sign, deletion_cross_ratio(xs, i)?));
        }
        let row = canon_row(&terms);
        for sign in [1i64, -1] {
            let mut diff = row.clone();
            diff.add_scaled(&five_term, &rat(-sign));
            if diff.is_zero() {
                return Ok(DeletionCertificate { pattern, sign });
            }
        }
    }
    Err(MsError::ShapeMismatch(
        "deletion row is not a five-term row for this configuration".into(),
    ))
}
