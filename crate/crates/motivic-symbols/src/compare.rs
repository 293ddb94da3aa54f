//! Exact canonical collections of tensor components, for comparing two
//! formal expressions term-for-term modulo the standard slot symmetries:
//! six-fold dilogarithm orbits, `{x}_3 = {1/x}_3`, multiplicativity and
//! torsion in the unit slots.

use crate::coproduct::{ComplexElem, W3};
use crate::dilog::canon2;
use crate::value::{self, V};
use crate::MsError;
use exact_core::{factorize_gaussian, rat, ExponentVector, Factor, LinComb};

fn fx(v: &V) -> Result<ExponentVector, MsError> {
    match v {
        V::Infinity => Err(MsError::Degenerate("unit slot at infinity".into())),
        V::Finite(z) => Ok(factorize_gaussian(z)?),
    }
}

fn canon_w3(w: &W3) -> W3 {
    match w {
        W3::S3(x) => {
            let ix = value::inv(x);
            W3::S3(if ix < *x { ix } else { x.clone() })
        }
        other => other.clone(),
    }
}

/// `B₂ ⊗ F^×` flattened over (canonical dilog argument, prime factor).
pub fn collect_b2_u(e: &ComplexElem) -> Result<LinComb<(V, Factor)>, MsError> {
    let mut out = LinComb::zero();
    for (c, a, u) in &e.b2_u {
        let Some((rep, s)) = canon2(a) else { continue };
        for (f, exp) in fx(u)?.iter() {
            out.add_term((rep.clone(), *f), &(c * &rat(s)) * exp);
        }
    }
    Ok(out)
}

/// `B₃ ⊗ F^×` flattened over (canonical weight-3 symbol, prime factor).
pub fn collect_b3_u(e: &ComplexElem) -> Result<LinComb<(W3, Factor)>, MsError> {
    let mut out = LinComb::zero();
    for (c, w, u) in &e.b3_u {
        let w = canon_w3(w);
        for (f, exp) in fx(u)?.iter() {
            out.add_term((w.clone(), *f), c * exp);
        }
    }
    Ok(out)
}

/// `Λ² B₂` collected over ordered pairs of canonical dilog arguments.
pub fn collect_l2b2(e: &ComplexElem) -> LinComb<(V, V)> {
    let mut out = LinComb::zero();
    for (c, a, b) in &e.l2b2 {
        let (Some((ra, sa)), Some((rb, sb))) = (canon2(a), canon2(b)) else {
            continue;
        };
        if ra == rb {
            continue;
        }
        let (key, swap) = if ra < rb { ((ra, rb), 1) } else { ((rb, ra), -1) };
        out.add_term(key, c * &rat(sa * sb * swap));
    }
    out
}

/// `Λ² F^×` collected as exact wedges of exponent vectors.
pub fn collect_l2u(e: &ComplexElem) -> Result<LinComb<Vec<Factor>>, MsError> {
    let mut out = LinComb::zero();
    for (c, u, v) in &e.l2u {
        out.add_scaled(&exact_core::wedge(&[&fx(u)?, &fx(v)?]), c);
    }
    Ok(out)
}
