//! Depth reduction of `{x,y}_{2,1}` to pure trilogarithm terms:
//!
//!   {x,y}_{2,1} = {1-1/x}_3 + {1-1/y}_3 + {(1-y)/(1-x)}_3
//!                 - {(1-1/y)/(1-1/x)}_3 + {y/x}_3 - {1}_3.

use crate::lie::{s3, scale, LieElem};
use crate::value::{self, V};
use exact_core::rat;

/// The six-term trilog expansion of `{x,y}_{2,1}`, valid for x, y ∉ {0,1,∞}.
/// Boundary arguments degrade through the structural rules of the `{·}_3`
/// builder, so e.g. x → 0 reproduces `-{y}_3` and y → 1 gives `-{1-x}_3`.
pub fn reduce_21(x: &V, y: &V) -> LieElem {
    let mut out = LieElem::new(3);
    let one = rat(1);
    out.push(one.clone(), s3(&value::one_minus_inv(x)));
    out.push(one.clone(), s3(&value::one_minus_inv(y)));
    out.push(
        one.clone(),
        s3(&value::div(&value::one_minus(y), &value::one_minus(x))),
    );
    out.push(
        one.clone(),
        scale(
            rat(-1),
            s3(&value::div(
                &value::one_minus_inv(y),
                &value::one_minus_inv(x),
            )),
        ),
    );
    out.push(one.clone(), s3(&value::div(y, x)));
    out.push(one, scale(rat(-1), s3(&value::from_ints(1, 0))));
    out
}
