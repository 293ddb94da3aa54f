//! Checks of the depth-two → trilog reduction.

use motivic_symbols::certify::{all_zero, certify_zero, random_point, CertifyOptions};
use motivic_symbols::coproduct::coproduct;
use motivic_symbols::eval::Evaluator;
use motivic_symbols::lie::{s21, LieElem};
use motivic_symbols::reduce::reduce_21;
use motivic_symbols::value::{self, from_ints};
use polylog_numerics::{bigfloat_to_f64, PrecisionPolicy};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// At x = 0 the reduction degrades to {1-1/y}_3 + {1-y}_3 - {1}_3, whose
/// value is -L3(y) by the trilog three-term relation.
#[test]
fn boundary_first_argument_zero_evaluates_to_minus_trilog() {
    let mut ev = Evaluator::new(PrecisionPolicy::default());
    for (a, b) in [(2, 1), (-3, 2), (5, -4), (2, 7)] {
        let y = from_ints(a, b);
        let zero = from_ints(0, 0);
        let got = bigfloat_to_f64(&ev.eval_lie(&reduce_21(&zero, &y)).unwrap());
        let want = -bigfloat_to_f64(&ev.sv(3, &y).unwrap());
        assert!((got - want).abs() < 1e-15, "x=0, y={y:?}: {got} vs {want}");
    }
}

/// At y = 1 the reduction degrades to {1-1/x}_3 + {1/x}_3 - {1}_3, whose
/// value is -L3(1-x).
#[test]
fn boundary_second_argument_one_evaluates_to_minus_trilog() {
    let mut ev = Evaluator::new(PrecisionPolicy::default());
    for (a, b) in [(2, 1), (-3, 2), (5, -4), (2, 7)] {
        let x = from_ints(a, b);
        let one = from_ints(1, 0);
        let got = bigfloat_to_f64(&ev.eval_lie(&reduce_21(&x, &one)).unwrap());
        let want = -bigfloat_to_f64(&ev.sv(3, &value::one_minus(&x)).unwrap());
        assert!((got - want).abs() < 1e-15, "x={x:?}, y=1: {got} vs {want}");
    }
}

/// The depth-two symbol minus its trilog expansion has certified-zero
/// coproduct: the depth-two coboundary and the sum of pure-trilog
/// coboundaries agree, which ties the two independent formulas together.
#[test]
fn reduction_is_compatible_with_the_coboundary() {
    let opts = CertifyOptions { trials: 12, seed: 23, ..Default::default() };
    let certs = certify_zero(
        "depth-two reduction coproduct",
        |rng| {
            let x = random_point(rng, 8);
            let y = random_point(rng, 8);
            if x == y {
                return Err(motivic_symbols::MsError::Degenerate("x=y".into()));
            }
            let mut e = LieElem::new(3);
            e.push(exact_core::rat(1), s21(&x, &y));
            let e = e.concat(&reduce_21(&x, &y).negated());
            coproduct(&e)
        },
        &opts,
    )
    .unwrap();
    assert!(all_zero(&certs), "{certs:?}");
}
