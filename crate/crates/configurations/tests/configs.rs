use configurations::{
    casimir, cross_ratio_bracket, random_generic, Config, ConfigError, PointP1, RatExpr,
    SampleField,
};
use exact_core::{GaussianRational, LinComb};

fn std_config() -> Config {
    // v1=(1,0), v2=(0,1), v3=(1,1), v4=(1,2)
    Config::from_ints(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, 2]])
}

#[test]
fn bracket_examples() {
    let c = std_config();
    assert_eq!(c.bracket(&[0, 1]).unwrap(), GaussianRational::one());
    assert_eq!(c.bracket(&[1, 0]).unwrap(), -&GaussianRational::one());
    assert_eq!(c.bracket(&[2, 3]).unwrap(), GaussianRational::one());
    assert!(matches!(c.bracket(&[0, 0]), Err(ConfigError::BadIndex(_))));
}

#[test]
fn cross_ratio_r_half() {
    let c = std_config();
    assert_eq!(
        c.cross_ratio_r(0, 1, 2, 3).unwrap(),
        GaussianRational::from_rat(exact_core::ratf(1, 2))
    );
}

#[test]
fn bracket_cross_ratio_pins() {
    // [∞, −1, 0, 5] = −5
    let pts = [
        PointP1::Infinity,
        PointP1::from_int(-1),
        PointP1::from_int(0),
        PointP1::from_int(5),
    ];
    assert_eq!(
        cross_ratio_bracket(&pts).unwrap(),
        GaussianRational::from_ints(-5, 0)
    );

    // inversion under a cyclic shift
    let pts2 = [
        PointP1::from_int(-1),
        PointP1::from_int(0),
        PointP1::from_int(5),
        PointP1::Infinity,
    ];
    let a = cross_ratio_bracket(&pts).unwrap();
    let b = cross_ratio_bracket(&pts2).unwrap();
    assert_eq!(&a * &b, GaussianRational::one());
}

#[test]
fn casimir_shapes() {
    let xs: Vec<PointP1> = [7, -1, 0, 5, 2, 11].iter().map(|&z| PointP1::from_int(z)).collect();
    let z = casimir(&xs).unwrap();
    let a = cross_ratio_bracket(&[xs[0].clone(), xs[1].clone(), xs[2].clone(), xs[3].clone()])
        .unwrap();
    let b = cross_ratio_bracket(&[xs[3].clone(), xs[4].clone(), xs[5].clone(), xs[0].clone()])
        .unwrap();
    assert_eq!(z, &a / &b);
}

#[test]
fn one_minus_r_is_negative_cluster_cross_ratio() {
    // 1 − r(1,2,3,4) equals the bracket cross-ratio of the associated points
    // of P¹, i.e. minus the positive (cluster) normalization of it.
    for seed in 0..100 {
        let c = random_generic(2, 4, 10, seed, SampleField::GaussianInt).unwrap();
        let r = c.cross_ratio_r(0, 1, 2, 3).unwrap();
        let num = &c.bracket(&[0, 1]).unwrap() * &c.bracket(&[2, 3]).unwrap();
        let den = &c.bracket(&[3, 0]).unwrap() * &c.bracket(&[1, 2]).unwrap();
        let br = &num / &den;
        assert_eq!(&GaussianRational::one() - &r, br);
    }
}

#[test]
fn r_invariant_under_rescaling() {
    let mut c = std_config();
    let r0 = c.cross_ratio_r(0, 1, 2, 3).unwrap();
    let s = GaussianRational::from_ints(3, 2);
    for x in c.points[2].iter_mut() {
        *x = &*x * &s;
    }
    assert_eq!(c.cross_ratio_r(0, 1, 2, 3).unwrap(), r0);
}

#[test]
fn plucker_relation() {
    for seed in 0..50 {
        let c = random_generic(2, 4, 12, seed, SampleField::GaussianInt).unwrap();
        let mut s = &c.bracket(&[0, 1]).unwrap() * &c.bracket(&[2, 3]).unwrap();
        s = &s - &(&c.bracket(&[0, 2]).unwrap() * &c.bracket(&[1, 3]).unwrap());
        s = &s + &(&c.bracket(&[0, 3]).unwrap() * &c.bracket(&[1, 2]).unwrap());
        assert!(s.is_zero());
    }
}

#[test]
fn anharmonic_identities() {
    for seed in 0..30 {
        let c = random_generic(2, 4, 10, seed, SampleField::Rational).unwrap();
        let pts: Vec<PointP1> = (0..4)
            .map(|i| {
                let v = &c.points[i];
                if v[1].is_zero() {
                    PointP1::Infinity
                } else {
                    PointP1::Finite(&v[0] / &v[1])
                }
            })
            .collect();
        let x = cross_ratio_bracket(&[pts[0].clone(), pts[1].clone(), pts[2].clone(), pts[3].clone()]);
        let swapped =
            cross_ratio_bracket(&[pts[0].clone(), pts[2].clone(), pts[1].clone(), pts[3].clone()]);
        let cycled =
            cross_ratio_bracket(&[pts[1].clone(), pts[2].clone(), pts[3].clone(), pts[0].clone()]);
        let (Ok(x), Ok(swapped), Ok(cycled)) = (x, swapped, cycled) else {
            continue;
        };
        assert_eq!(swapped, &GaussianRational::one() - &x);
        assert_eq!(&x * &cycled, GaussianRational::one());
    }
}

#[test]
fn projection_example() {
    // project((e1, e2, e1+e2, e1+2e2), 1) — dropping the first point — gives
    // 1-dim values 1, 1, 2
    let c = std_config();
    let p = c.project(0).unwrap();
    assert_eq!(p.dim, 1);
    let vals: Vec<_> = p.points.iter().map(|v| v[0].clone()).collect();
    assert_eq!(
        vals,
        vec![
            GaussianRational::one(),
            GaussianRational::one(),
            GaussianRational::from_ints(2, 0)
        ]
    );
}

#[test]
fn projection_bracket_compatibility() {
    for seed in 0..30 {
        let c = random_generic(3, 5, 8, seed, SampleField::GaussianInt).unwrap();
        let p = c.project(0).unwrap();
        // |i j|_quotient = |0 i j| upstairs (quotient indices shifted by one)
        for i in 0..4 {
            for j in i + 1..4 {
                assert_eq!(
                    p.bracket(&[i, j]).unwrap(),
                    c.bracket(&[0, i + 1, j + 1]).unwrap()
                );
            }
        }
    }
}

#[test]
fn dual_preserves_cross_ratios() {
    for seed in 0..30 {
        let c = random_generic(2, 4, 9, seed, SampleField::GaussianInt).unwrap();
        let dd = c.dual().unwrap().dual().unwrap();
        assert_eq!(dd.dim, 2);
        assert_eq!(
            c.cross_ratio_r(0, 1, 2, 3).unwrap(),
            dd.cross_ratio_r(0, 1, 2, 3).unwrap()
        );
    }
}

#[test]
fn duality_swaps_projection_and_deletion() {
    // p_j ∘ ∗ agrees with ∗ ∘ ∂_j up to GL, detected through cross-ratios
    for seed in 0..50 {
        let c = random_generic(2, 6, 7, seed, SampleField::GaussianInt).unwrap();
        let lhs = c.dual().unwrap().project(0).unwrap(); // 5 pts, dim 3
        let rhs = c.delete(0).unwrap().dual().unwrap(); // 5 pts, dim 3
        assert_eq!(lhs.dim, rhs.dim);
        assert_eq!(lhs.canonical(), rhs.canonical());
    }
}

#[test]
fn boundary_maps_square_to_zero() {
    // ∂ = Σ (−1)^{s−1} ∂_s on formal Z-linear combinations
    fn boundary(x: &LinComb<Config>) -> LinComb<Config> {
        let mut out = LinComb::zero();
        for (c, coeff) in x.iter() {
            for s in 0..c.len() {
                let sign = if s % 2 == 0 { 1 } else { -1 };
                out.add_term(c.delete(s).unwrap(), coeff.clone() * exact_core::rat(sign));
            }
        }
        out
    }
    fn projection(x: &LinComb<Config>) -> LinComb<Config> {
        let mut out = LinComb::zero();
        for (c, coeff) in x.iter() {
            for s in 0..c.len() {
                let sign = if s % 2 == 0 { 1 } else { -1 };
                out.add_term(
                    c.project(s).unwrap().canonical(),
                    coeff.clone() * exact_core::rat(sign),
                );
            }
        }
        out
    }
    for seed in 0..10 {
        let c = random_generic(3, 6, 6, seed, SampleField::Rational).unwrap();
        let x = LinComb::single(c, exact_core::rat(1));
        assert!(boundary(&boundary(&x)).is_zero());
        assert!(projection(&projection(&x)).is_zero());
    }
}

#[test]
fn triple_ratio_cyclic_symmetry() {
    for seed in 0..20 {
        let c = random_generic(3, 6, 8, seed, SampleField::GaussianInt).unwrap();
        let v0 = c.triple_ratio(&[0, 1, 2, 3, 4, 5]).unwrap();
        // (123)(456) cyclic shift fixes the value
        let v1 = c.triple_ratio(&[1, 2, 0, 4, 5, 3]).unwrap();
        assert_eq!(v0, v1);
    }
}

#[test]
fn sampler_determinism_and_genericity() {
    let a = random_generic(2, 5, 10, 42, SampleField::Rational).unwrap();
    let b = random_generic(2, 5, 10, 42, SampleField::Rational).unwrap();
    assert_eq!(a, b);
    let c = random_generic(2, 5, 10, 43, SampleField::Rational).unwrap();
    assert_ne!(a, c);
    for i in 0..5 {
        for j in i + 1..5 {
            assert!(!a.bracket(&[i, j]).unwrap().is_zero());
        }
    }
}

#[test]
fn rat_expr_is_a_field_homomorphism() {
    let c = std_config();
    let e = (RatExpr::bracket(&[0, 2]) * RatExpr::bracket(&[1, 3]))
        / (RatExpr::bracket(&[0, 3]) * RatExpr::bracket(&[1, 2]));
    assert_eq!(e.eval(&c).unwrap(), c.cross_ratio_r(0, 1, 2, 3).unwrap());
    let f = RatExpr::int(1) - RatExpr::CrossR(0, 1, 2, 3);
    assert_eq!(
        f.eval(&c).unwrap(),
        &GaussianRational::one() - &c.cross_ratio_r(0, 1, 2, 3).unwrap()
    );
}
