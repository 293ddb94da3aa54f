//! Canonical form for dilogarithm symbols `{x}_2`.
//!
//! The six-element anharmonic orbit of x carries the signs
//!   {x}_2 = -{1/x}_2 = -{1-x}_2 = {(x-1)/x}_2 = {1/(1-x)}_2 = -{x/(x-1)}_2,
//! all of which hold for the Bloch-Wigner function. We pick the Ord-least
//! orbit member as the representative and return it with the relative sign.
//! Symbols at 0, 1, or ∞ vanish and are reported as `None`.

use crate::value::{self, V};

/// `{x}_2 = sign · {rep}_2` with `rep` the canonical orbit member, or `None`
/// if the symbol is zero.
pub fn canon2(x: &V) -> Option<(V, i64)> {
    if value::is_zero(x) || value::is_one(x) || value::is_inf(x) {
        return None;
    }
    let one_minus = value::one_minus(x);
    let orbit: [(V, i64); 6] = [
        (x.clone(), 1),
        (value::inv(x), -1),
        (one_minus.clone(), -1),
        (value::neg(&value::div(&one_minus, x)), 1), // (x-1)/x
        (value::inv(&one_minus), 1),                 // 1/(1-x)
        (value::neg(&value::div(x, &one_minus)), -1), // x/(x-1)
    ];
    orbit.into_iter().min_by(|a, b| a.0.cmp(&b.0))
}
