//! Projective arithmetic on points of P¹ over Q(i), with the conventions
//! needed by the symbol calculus: ∞ absorbs sums, 1/0 = ∞, 1/∞ = 0.
//! Indeterminate forms (∞ − ∞, 0·∞, 0/0, ∞/∞) panic; callers are expected
//! to validate genericity before doing arithmetic.

use configurations::PointP1;
use exact_core::GaussianRational;

pub type V = PointP1;

pub fn fin(z: GaussianRational) -> V {
    PointP1::Finite(z)
}

pub fn from_ints(re: i64, im: i64) -> V {
    PointP1::Finite(GaussianRational::from_ints(re, im))
}

pub fn is_inf(x: &V) -> bool {
    matches!(x, PointP1::Infinity)
}

pub fn is_zero(x: &V) -> bool {
    matches!(x, PointP1::Finite(z) if z.is_zero())
}

pub fn is_one(x: &V) -> bool {
    matches!(x, PointP1::Finite(z) if z.is_one())
}

/// Finite representative; panics on ∞.
pub fn finite(x: &V) -> &GaussianRational {
    match x {
        PointP1::Finite(z) => z,
        PointP1::Infinity => panic!("expected a finite point"),
    }
}

pub fn neg(x: &V) -> V {
    match x {
        PointP1::Infinity => PointP1::Infinity,
        PointP1::Finite(z) => PointP1::Finite(-z.clone()),
    }
}

pub fn add(x: &V, y: &V) -> V {
    match (x, y) {
        (PointP1::Infinity, PointP1::Infinity) => panic!("indeterminate ∞ + ∞ context"),
        (PointP1::Infinity, _) | (_, PointP1::Infinity) => PointP1::Infinity,
        (PointP1::Finite(a), PointP1::Finite(b)) => PointP1::Finite(a + b),
    }
}

pub fn sub(x: &V, y: &V) -> V {
    add(x, &neg(y))
}

pub fn mul(x: &V, y: &V) -> V {
    match (x, y) {
        (PointP1::Infinity, o) | (o, PointP1::Infinity) => {
            if is_zero(o) {
                panic!("indeterminate 0 · ∞");
            }
            PointP1::Infinity
        }
        (PointP1::Finite(a), PointP1::Finite(b)) => PointP1::Finite(a * b),
    }
}

pub fn inv(x: &V) -> V {
    match x {
        PointP1::Infinity => PointP1::Finite(GaussianRational::zero()),
        PointP1::Finite(z) if z.is_zero() => PointP1::Infinity,
        PointP1::Finite(z) => PointP1::Finite(z.inv()),
    }
}

pub fn div(x: &V, y: &V) -> V {
    if is_inf(x) && is_inf(y) {
        panic!("indeterminate ∞ / ∞");
    }
    if is_zero(x) && is_zero(y) {
        panic!("indeterminate 0 / 0");
    }
    mul(x, &inv(y))
}

/// 1 − x.
pub fn one_minus(x: &V) -> V {
    sub(&from_ints(1, 0), x)
}

/// 1 − 1/x = (x − 1)/x.
pub fn one_minus_inv(x: &V) -> V {
    one_minus(&inv(x))
}
