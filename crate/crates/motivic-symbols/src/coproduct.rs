//! Coboundary maps of the weight-2..4 polylogarithmic complexes.
//!
//! `coproduct` sends a formal element to its image in the first column of
//! tensors; `delta_next` applies the next differential. Term lists stay in
//! the same deterministic order for every specialization of a family, which
//! is what the split-specialization certifier relies on.
//!
//! The maps used:
//!   δ{x}_2      = (1-x) ∧ x
//!   δ{x}_3      = {x}_2 ⊗ x
//!   δ{x,y}_21   = {(1-y)/(1-x)}_2⊗(y/x) + {y/x}_2⊗((1-y)/(1-x))
//!                 + {x}_2⊗(1-1/y) + {y}_2⊗(1-1/x)
//!   δ{x}_4      = {x}_3 ⊗ x
//!   δ{x,y}_31   = {x,y}_21⊗(x/y) + {x/y}_3⊗((1-x)/(1-y))
//!                 + {x}_3⊗(1-1/y) - {y}_3⊗(1-1/x) - {x}_2 ∧ {y}_2
//! and, for the second differential,
//!   {x}_3⊗u        ↦ {x}_2 ⊗ x∧u          (similarly for {x,y}_21⊗u)
//!   {x}_2∧{y}_2    ↦ {y}_2⊗(1-x)∧x - {x}_2⊗(1-y)∧y
//!   {x}_2⊗u        ↦ (1-x)∧x∧u
//!   {x}_2⊗u∧v      ↦ (1-x)∧x∧u∧v
//! The sign on the Λ²-of-dilogs line is forced by δ∘δ = 0 against the
//! depth-two coproduct above, and is verified by a test.

use crate::lie::{self, LieElem, Sym};
use crate::value::{self, V};
use crate::MsError;
use exact_core::Rat;
use num_traits::Zero;

/// Weight-3 symbol occurring in the left tensor slot of `B_3 ⊗ F^×`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum W3 {
    S3(V),
    S21(V, V),
    One3,
}

/// An element of the direct sum of tensor spaces that the coboundaries land
/// in. Every component is an ordered term list; nothing is merged.
#[derive(Debug, Clone, Default)]
pub struct ComplexElem {
    /// `B_3 ⊗ F^×`: (coef, weight-3 symbol, unit)
    pub b3_u: Vec<(Rat, W3, V)>,
    /// `Λ² B_2`: (coef, a, b) meaning {a}_2 ∧ {b}_2
    pub l2b2: Vec<(Rat, V, V)>,
    /// `B_2 ⊗ F^×`: (coef, dilog argument, unit)
    pub b2_u: Vec<(Rat, V, V)>,
    /// `B_2 ⊗ Λ² F^×`: (coef, dilog argument, u, v)
    pub b2_l2u: Vec<(Rat, V, V, V)>,
    /// `Λ² F^×`
    pub l2u: Vec<(Rat, V, V)>,
    /// `Λ³ F^×`
    pub l3u: Vec<(Rat, V, V, V)>,
    /// `Λ⁴ F^×`
    pub l4u: Vec<(Rat, V, V, V, V)>,
}

impl ComplexElem {
    pub fn is_empty(&self) -> bool {
        self.b3_u.is_empty()
            && self.l2b2.is_empty()
            && self.b2_u.is_empty()
            && self.b2_l2u.is_empty()
            && self.l2u.is_empty()
            && self.l3u.is_empty()
            && self.l4u.is_empty()
    }
}

/// A unit slot must be a nonzero finite value (1 is allowed: it is the
/// trivial unit). 0 and ∞ signal a degenerate specialization.
fn unit(x: V) -> Result<V, MsError> {
    if value::is_zero(&x) || value::is_inf(&x) {
        Err(MsError::Degenerate(format!("unit slot hit {x:?}")))
    } else {
        Ok(x)
    }
}

/// Dilog-argument slots may be anything finite-or-infinite except values at
/// which a *neighbouring unit* would degenerate; those are caught by `unit`.
/// An argument in {0,1,∞} makes the dilog factor zero, which is legitimate,
/// but we reject it so that generic families never silently lose terms.
fn b2_arg(x: V) -> Result<V, MsError> {
    if value::is_zero(&x) || value::is_one(&x) || value::is_inf(&x) {
        Err(MsError::Degenerate(format!("dilog slot hit {x:?}")))
    } else {
        Ok(x)
    }
}

fn w3_terms(sym3: Vec<(Rat, Sym)>) -> Result<Vec<(Rat, W3)>, MsError> {
    sym3.into_iter()
        .map(|(c, s)| {
            let w = match s {
                Sym::S3(x) => W3::S3(x),
                Sym::S21(x, y) => W3::S21(x, y),
                Sym::One3 => W3::One3,
                other => {
                    return Err(MsError::ShapeMismatch(format!(
                        "weight-3 slot got {other:?}"
                    )))
                }
            };
            Ok((c, w))
        })
        .collect()
}

/// First coboundary of a formal element of weight 2, 3, or 4.
pub fn coproduct(e: &LieElem) -> Result<ComplexElem, MsError> {
    let mut out = ComplexElem::default();
    for (c, sym) in &e.terms {
        if c.is_zero() {
            continue;
        }
        match sym {
            Sym::S2(x) => {
                out.l2u
                    .push((c.clone(), unit(value::one_minus(x))?, unit(x.clone())?));
            }
            Sym::S3(x) => {
                out.b2_u.push((c.clone(), b2_arg(x.clone())?, unit(x.clone())?));
            }
            Sym::One3 => {}
            Sym::S21(x, y) => {
                let r = value::div(&value::one_minus(y), &value::one_minus(x));
                let q = value::div(y, x);
                out.b2_u.push((c.clone(), b2_arg(r.clone())?, unit(q.clone())?));
                out.b2_u.push((c.clone(), b2_arg(q)?, unit(r)?));
                out.b2_u
                    .push((c.clone(), b2_arg(x.clone())?, unit(value::one_minus_inv(y))?));
                out.b2_u
                    .push((c.clone(), b2_arg(y.clone())?, unit(value::one_minus_inv(x))?));
            }
            Sym::S4(x) => {
                out.b3_u
                    .push((c.clone(), W3::S3(x.clone()), unit(x.clone())?));
            }
            Sym::S31(x, y) => {
                let xy = value::div(x, y);
                out.b3_u
                    .push((c.clone(), W3::S21(x.clone(), y.clone()), unit(xy.clone())?));
                let u = unit(value::div(&value::one_minus(x), &value::one_minus(y)))?;
                for (k, w) in w3_terms(lie::s3(&xy))? {
                    out.b3_u.push((c * &k, w, u.clone()));
                }
                for (k, w) in w3_terms(lie::s3(x))? {
                    out.b3_u.push((c * &k, w, unit(value::one_minus_inv(y))?));
                }
                for (k, w) in w3_terms(lie::s3(y))? {
                    out.b3_u.push((-(c * &k), w, unit(value::one_minus_inv(x))?));
                }
                out.l2b2.push((-c.clone(), x.clone(), y.clone()));
            }
        }
    }
    Ok(out)
}

/// Weight-3 coboundary as (coef, dilog argument, unit) triples, shared by the
/// `B_3 ⊗ F^×` differential.
fn delta_w3(c: &Rat, w: &W3) -> Result<Vec<(Rat, V, V)>, MsError> {
    Ok(match w {
        W3::One3 => vec![],
        W3::S3(x) => vec![(c.clone(), b2_arg(x.clone())?, unit(x.clone())?)],
        W3::S21(x, y) => {
            let r = value::div(&value::one_minus(y), &value::one_minus(x));
            let q = value::div(y, x);
            vec![
                (c.clone(), b2_arg(r.clone())?, unit(q.clone())?),
                (c.clone(), b2_arg(q)?, unit(r)?),
                (c.clone(), b2_arg(x.clone())?, unit(value::one_minus_inv(y))?),
                (c.clone(), b2_arg(y.clone())?, unit(value::one_minus_inv(x))?),
            ]
        }
    })
}

/// Second coboundary: pushes a tensor-column element one step further along
/// its row of the complex. Λᵏ F^× components are terminal and map to zero.
pub fn delta_next(e: &ComplexElem) -> Result<ComplexElem, MsError> {
    let mut out = ComplexElem::default();
    for (c, w, u) in &e.b3_u {
        for (k, arg, v) in delta_w3(c, w)? {
            out.b2_l2u.push((k, arg, v, u.clone()));
        }
    }
    for (c, a, b) in &e.l2b2 {
        out.b2_l2u.push((
            c.clone(),
            b.clone(),
            unit(value::one_minus(a))?,
            unit(a.clone())?,
        ));
        out.b2_l2u.push((
            -c.clone(),
            a.clone(),
            unit(value::one_minus(b))?,
            unit(b.clone())?,
        ));
    }
    for (c, x, u) in &e.b2_u {
        out.l3u
            .push((c.clone(), unit(value::one_minus(x))?, unit(x.clone())?, u.clone()));
    }
    for (c, x, u, v) in &e.b2_l2u {
        out.l4u.push((
            c.clone(),
            unit(value::one_minus(x))?,
            unit(x.clone())?,
            u.clone(),
            v.clone(),
        ));
    }
    Ok(out)
}
