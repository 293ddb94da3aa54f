use astro_float::BigFloat;
use configurations::PointP1;
use exact_core::{ratf, GaussianRational};
use polylog_numerics::{
    bigfloat_to_f64, five_term_residual, li, sv_polylog, NumError, PrecisionPolicy,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const P: usize = 192;

fn policy() -> PrecisionPolicy {
    PrecisionPolicy::default()
}

fn gq(nre: i64, dre: i64, nim: i64, dim: i64) -> GaussianRational {
    GaussianRational::new(ratf(nre, dre), ratf(nim, dim))
}

/// |a − b| as f64, where b is a ≥30-digit decimal reference value
fn diff_str(a: &BigFloat, b: &str) -> f64 {
    let r = polylog_numerics::with_consts(|cc| {
        BigFloat::parse(b, astro_float::Radix::Dec, P, astro_float::RoundingMode::ToEven, cc)
    });
    bigfloat_to_f64(&a.sub(&r, P, astro_float::RoundingMode::ToEven).abs())
}

#[test]
fn li_basics() {
    let pol = policy();
    assert!(li(2, &GaussianRational::zero(), &pol).unwrap().is_zero());

    // ζ(3) to well past 30 digits; reference from an independent oracle
    let z3 = li(3, &GaussianRational::one(), &pol).unwrap();
    assert!(diff_str(&z3.re, "1.2020569031595942853997381615114499907649862923405") < 1e-40);

    // Im Li₂(i) is Catalan's constant
    let l2i = li(2, &GaussianRational::i(), &pol).unwrap();
    assert!(diff_str(&l2i.im, "0.91596559417721901505460351493238411077414937428167") < 1e-40);

    // interior point, cross-checked externally
    let z = gq(3, 10, 4, 10);
    let v = li(2, &z, &pol).unwrap();
    assert!(diff_str(&v.re, "0.26659686674274043416117576432380132759967118763615") < 1e-19);
    assert!(diff_str(&v.im, "0.46136289181910897318911695919599860054610535279923") < 1e-19);
}

#[test]
fn li_rejects_bad_arguments() {
    let pol = policy();
    // |z| > 1
    assert!(li(2, &gq(2, 1, 0, 1), &pol).is_err());
    // on the circle but no closed form: (3+4i)/5
    assert!(matches!(
        li(2, &gq(3, 5, 4, 5), &pol),
        Err(NumError::GuardBand(_))
    ));
    // guard band
    assert!(matches!(
        li(2, &gq(9995, 10000, 0, 1), &pol),
        Err(NumError::GuardBand(_))
    ));
    // Li₁(1)
    assert!(li(1, &GaussianRational::one(), &pol).is_err());
}

#[test]
fn sv_polylog_pins() {
    let pol = policy();
    // ℒ₂(1) = 0
    let v = sv_polylog(2, &PointP1::from_int(1), &pol).unwrap();
    assert!(bigfloat_to_f64(&v.abs()) < 1e-40);
    // ℒ₂(i) = Catalan
    let v = sv_polylog(2, &PointP1::Finite(GaussianRational::i()), &pol).unwrap();
    assert!(diff_str(&v, "0.91596559417721901505460351493238411077414937428167") < 1e-40);
    // ℒ₃(1) = ζ(3)
    let v = sv_polylog(3, &PointP1::Finite(GaussianRational::one()), &pol).unwrap();
    assert!(diff_str(&v, "1.2020569031595942853997381615114499907649862923405") < 1e-40);
    // ℒ₃((2+i)/4), full three-term formula, external reference
    let v = sv_polylog(3, &PointP1::Finite(gq(1, 2, 1, 4)), &pol).unwrap();
    assert!(diff_str(&v, "0.90670249387831551316295980627894689635911958728213") < 1e-19);
    // ℒ_n(0) = ℒ_n(∞) = 0
    for n in 2..=4 {
        assert!(sv_polylog(n, &PointP1::from_int(0), &pol).unwrap().is_zero());
        assert!(sv_polylog(n, &PointP1::Infinity, &pol).unwrap().is_zero());
    }
}

fn random_gaussian(rng: &mut ChaCha8Rng) -> GaussianRational {
    gq(
        rng.gen_range(-8i64..=8),
        rng.gen_range(1i64..=8),
        rng.gen_range(-8i64..=8),
        rng.gen_range(1i64..=8),
    )
}

fn in_guard_band(z: &GaussianRational, pol: &PrecisionPolicy) -> bool {
    use num_traits::ToPrimitive;
    let n = z.norm().to_f64().unwrap_or(1.0);
    n > pol.guard_lo * pol.guard_lo && n < pol.guard_hi * pol.guard_hi
}

#[test]
fn bloch_wigner_match() {
    // ℒ₂(z) = Im Li₂(z) + arg(1−z)·log|z| — pins the B₁ = −1/2 convention
    let pol = policy();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut done = 0;
    while done < 100 {
        let z = random_gaussian(&mut rng);
        if z.is_zero() || z.is_one() || z.norm() >= exact_core::rat(1) {
            continue;
        }
        let lhs = sv_polylog(2, &PointP1::Finite(z.clone()), &pol).unwrap();
        let li2 = li(2, &z, &pol).unwrap();
        let one_minus = &GaussianRational::one() - &z;
        let zf = polylog_numerics::APComplex::from_gaussian(&z, P);
        let wf = polylog_numerics::APComplex::from_gaussian(&one_minus, P);
        let rm = astro_float::RoundingMode::ToEven;
        let bw = li2.im.add(&wf.arg(P).mul(&zf.ln_abs(P), P, rm), P, rm);
        assert!(bigfloat_to_f64(&lhs.sub(&bw, P, rm).abs()) < 1e-30);
        done += 1;
    }
}

#[test]
fn inversion_relation() {
    // ℒ_n(z) + (−1)^n ℒ_n(1/z) = 0 on 100 random z per weight
    let pol = policy();
    for n in 2..=4 {
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let mut done = 0;
        while done < 100 {
            let z = random_gaussian(&mut rng);
            if z.is_zero() || in_guard_band(&z, &pol) {
                continue;
            }
            let a = match sv_polylog(n, &PointP1::Finite(z.clone()), &pol) {
                Ok(v) => v,
                Err(_) => continue,
            };
            let b = sv_polylog(n, &PointP1::Finite(z.inv()), &pol).unwrap();
            let rm = astro_float::RoundingMode::ToEven;
            let resid = if n % 2 == 0 {
                a.add(&b, P, rm)
            } else {
                a.sub(&b, P, rm)
            };
            assert!(
                bigfloat_to_f64(&resid.abs()) < 1e-15,
                "n={n} residual {}",
                bigfloat_to_f64(&resid.abs())
            );
            done += 1;
        }
    }
}

#[test]
fn trilog_triple() {
    // ℒ₃(x) + ℒ₃(1−x) + ℒ₃(1−x⁻¹) = ζ(3)
    let pol = policy();
    let rm = astro_float::RoundingMode::ToEven;
    let zeta3 = sv_polylog(3, &PointP1::from_int(1), &pol).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut done = 0;
    while done < 25 {
        let x = random_gaussian(&mut rng);
        if x.is_zero() || x.is_one() {
            continue;
        }
        let args = [
            x.clone(),
            &GaussianRational::one() - &x,
            &GaussianRational::one() - &x.inv(),
        ];
        if args.iter().any(|a| in_guard_band(a, &pol)) {
            continue;
        }
        let mut acc = BigFloat::from_i64(0, P);
        for a in &args {
            acc = acc.add(&sv_polylog(3, &PointP1::Finite(a.clone()), &pol).unwrap(), P, rm);
        }
        assert!(bigfloat_to_f64(&acc.sub(&zeta3, P, rm).abs()) < 1e-15);
        done += 1;
    }
}

#[test]
fn conjugation_parity() {
    let pol = policy();
    let rm = astro_float::RoundingMode::ToEven;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..30 {
        let z = random_gaussian(&mut rng);
        if z.is_zero() || in_guard_band(&z, &pol) {
            continue;
        }
        let c = z.conj();
        for n in 2..=3 {
            let a = sv_polylog(n, &PointP1::Finite(z.clone()), &pol).unwrap();
            let b = sv_polylog(n, &PointP1::Finite(c.clone()), &pol).unwrap();
            let resid = if n % 2 == 0 {
                a.add(&b, P, rm)
            } else {
                a.sub(&b, P, rm)
            };
            assert!(bigfloat_to_f64(&resid.abs()) < 1e-30);
        }
    }
}

#[test]
fn five_term() {
    let pol = policy();
    // the pinned tuple (∞, −1, 0, 1, 2)
    let pts = [
        PointP1::Infinity,
        PointP1::from_int(-1),
        PointP1::from_int(0),
        PointP1::from_int(1),
        PointP1::from_int(2),
    ];
    let r = five_term_residual(&pts, &pol).unwrap();
    assert!(bigfloat_to_f64(&r) < 1e-18);

    // random Gaussian-rational tuples
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut done = 0;
    while done < 40 {
        let pts: Vec<PointP1> = (0..5)
            .map(|_| PointP1::Finite(random_gaussian(&mut rng)))
            .collect();
        let pts: [PointP1; 5] = pts.try_into().unwrap();
        match five_term_residual(&pts, &pol) {
            Ok(r) => {
                assert!(bigfloat_to_f64(&r) < 1e-18, "residual {}", bigfloat_to_f64(&r));
                done += 1;
            }
            Err(_) => continue, // coincident points or guard band: resample
        }
    }

    // degenerate tuple errors out
    let bad = [
        PointP1::from_int(0),
        PointP1::from_int(0),
        PointP1::from_int(1),
        PointP1::from_int(2),
        PointP1::from_int(3),
    ];
    assert!(five_term_residual(&bad, &pol).is_err());
}
