use exact_core::rat;
use motivic_symbols::certify::{exact_layer_zero, random_point};
use motivic_symbols::compare::collect_l2u;
use motivic_symbols::coproduct::{coproduct, delta_next, W3};
use motivic_symbols::lie::{s31, s4, LieElem};
use motivic_symbols::qrel::q2_element;
use motivic_symbols::section6::delta22_vanishes;
use motivic_symbols::value::from_ints;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn tetralog_coboundary_is_trilog_tensor_argument() {
    let x = from_ints(3, 1);
    let mut e = LieElem::new(4);
    e.push(rat(1), s4(&x));
    let c = coproduct(&e).unwrap();
    assert_eq!(c.b3_u, vec![(rat(1), W3::S3(x.clone()), x)]);
    assert!(c.l2b2.is_empty());
}

#[test]
fn depth_two_coboundary_wedge_part() {
    let x = from_ints(3, 1);
    let y = from_ints(-2, 1);
    let mut e = LieElem::new(4);
    e.push(rat(1), s31(&x, &y));
    let c = coproduct(&e).unwrap();
    assert_eq!(c.l2b2, vec![(rat(-1), x.clone(), y.clone())]);
    // first tensor term carries the depth-two symbol against x/y
    assert!(matches!(&c.b3_u[0], (c0, W3::S21(a, b), _) if *c0 == rat(1) && *a == x && *b == y));
}

#[test]
fn equal_argument_depth_two_wedge_part_vanishes() {
    let x = from_ints(3, 1);
    let mut e = LieElem::new(4);
    e.push(rat(1), s31(&x, &x));
    // {x}_2 ∧ {x}_2 dies under antisymmetry
    assert!(delta22_vanishes(&e).unwrap());
    // and the depth-two tensor factor sits against the trivial unit x/x = 1
    let c = coproduct(&e).unwrap();
    assert!(matches!(&c.b3_u[0], (_, W3::S21(_, _), u) if *u == from_ints(1, 0)));
}

fn random_weight4(rng: &mut ChaCha8Rng) -> LieElem {
    let mut e = LieElem::new(4);
    for _ in 0..4 {
        let c = rat(rng.gen_range(-3..=3));
        let x = random_point(rng, 6);
        if rng.gen_bool(0.5) {
            e.push(c, s4(&x));
        } else {
            let mut y = random_point(rng, 6);
            while y == x {
                y = random_point(rng, 6);
            }
            e.push(c, s31(&x, &y));
        }
    }
    e
}

#[test]
fn coboundary_composed_with_itself_is_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut checked = 0;
    while checked < 50 {
        let e = random_weight4(&mut rng);
        let Ok(c1) = coproduct(&e) else { continue };
        let Ok(c2) = delta_next(&c1) else { continue };
        assert!(
            exact_layer_zero(&c2).unwrap(),
            "second coboundary of a coboundary must vanish: {e:?}"
        );
        // and one step further into Λ⁴
        let c3 = delta_next(&c2).unwrap();
        assert!(exact_layer_zero(&c3).unwrap());
        checked += 1;
    }
}

#[test]
fn five_term_element_has_exact_wedge_coboundary_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut checked = 0;
    while checked < 25 {
        let pts: Vec<_> = (0..5).map(|_| random_point(&mut rng, 8)).collect();
        let Ok(e) = q2_element(&pts.clone().try_into().unwrap()) else {
            continue;
        };
        if e.terms.len() != 5 {
            continue; // a cross-ratio landed on 0, 1, or ∞
        }
        let Ok(c) = coproduct(&e) else { continue };
        assert!(collect_l2u(&c).unwrap().is_zero());
        checked += 1;
    }
}
