//! Two-variable symmetry combinations of `{x,y}_{3,1}` that vanish modulo
//! the image of `{·}_4`. Membership in that image is equivalent to the
//! wedge-of-dilogs component of the coboundary vanishing, which happens
//! formally here: after canonicalizing both dilog slots, the Λ²B₂ terms
//! cancel exactly.

use crate::coproduct::coproduct;
use crate::dilog::canon2;
use crate::lie::{s31, LieElem};
use crate::value::{self, V};
use crate::MsError;
use exact_core::{rat, LinComb};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    /// {x,y} + {y,x}
    SwapAntisymmetry,
    /// {x,y} − {1/x, 1/y}
    JointInversion,
    /// {x,y} − {1−x, 1−y}
    JointReflection,
    /// {x,y} + {x,1−y} + {x/y,(1−x)/(1−y)} + {x/y,(1−y)/(1−x)}
    FourTerm,
    /// {x,y} + {x,1−y}
    SecondSlotReflection,
    /// {x,y} + {x,1/y}
    SecondSlotInversion,
}

pub const ALL_SYMMETRIES: [Symmetry; 6] = [
    Symmetry::SwapAntisymmetry,
    Symmetry::JointInversion,
    Symmetry::JointReflection,
    Symmetry::FourTerm,
    Symmetry::SecondSlotReflection,
    Symmetry::SecondSlotInversion,
];

/// The combination of `{·,·}_{3,1}` symbols asserted to die in the quotient.
pub fn symmetry_combination(which: Symmetry, x: &V, y: &V) -> LieElem {
    let mut e = LieElem::new(4);
    e.push(rat(1), s31(x, y));
    match which {
        Symmetry::SwapAntisymmetry => e.push(rat(1), s31(y, x)),
        Symmetry::JointInversion => {
            e.push(rat(-1), s31(&value::inv(x), &value::inv(y)));
        }
        Symmetry::JointReflection => {
            e.push(rat(-1), s31(&value::one_minus(x), &value::one_minus(y)));
        }
        Symmetry::FourTerm => {
            e.push(rat(1), s31(x, &value::one_minus(y)));
            let q = value::div(x, y);
            let r = value::div(&value::one_minus(x), &value::one_minus(y));
            e.push(rat(1), s31(&q, &r));
            e.push(rat(1), s31(&q, &value::inv(&r)));
        }
        Symmetry::SecondSlotReflection => e.push(rat(1), s31(x, &value::one_minus(y))),
        Symmetry::SecondSlotInversion => e.push(rat(1), s31(x, &value::inv(y))),
    }
    e
}

/// Exact vanishing of the Λ²B₂ component of the coboundary, after
/// canonicalizing both dilog slots.
pub fn delta22_vanishes(e: &LieElem) -> Result<bool, MsError> {
    let cop = coproduct(e)?;
    let mut acc: LinComb<(V, V)> = LinComb::zero();
    for (c, a, b) in &cop.l2b2 {
        let (Some((ra, sa)), Some((rb, sb))) = (canon2(a), canon2(b)) else {
            continue; // a degenerate slot makes the whole wedge term zero
        };
        if ra == rb {
            continue;
        }
        let (key, swap) = if ra < rb { ((ra, rb), 1) } else { ((rb, ra), -1) };
        acc.add_term(key, c * &rat(sa * sb * swap));
    }
    Ok(acc.is_zero())
}
