use configurations::PointP1;
use motivic_symbols::certify::{all_zero, certify_lie_zero, certify_zero, random_point, CertifyOptions};
use motivic_symbols::coproduct::coproduct;
use motivic_symbols::eval::Evaluator;
use motivic_symbols::lie::collect_weight3;
use motivic_symbols::qrel::{q2_element, q3_element_grouped, q3_element_split, q4_element};
use motivic_symbols::value::{from_ints, V};
use motivic_symbols::MsError;
use polylog_numerics::{bigfloat_to_f64, PrecisionPolicy};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn distinct_points(rng: &mut ChaCha8Rng, n: usize, height: i64) -> Vec<V> {
    let mut pts: Vec<V> = Vec::new();
    while pts.len() < n {
        let p = random_point(rng, height);
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    pts
}

#[test]
fn five_term_relation_on_a_named_tuple() {
    let pts = [
        PointP1::Infinity,
        from_ints(-1, 0),
        from_ints(0, 0),
        from_ints(1, 0),
        from_ints(2, 0),
    ];
    let e = q2_element(&pts).unwrap();
    assert_eq!(e.terms.len(), 5);
    let mut ev = Evaluator::new(PrecisionPolicy::default());
    let r = bigfloat_to_f64(&ev.eval_lie(&e).unwrap()).abs();
    assert!(r < 1e-15, "residual {r}");
}

#[test]
fn five_term_relation_numeric_100_tuples() {
    let opts = CertifyOptions { trials: 100, seed: 11, ..Default::default() };
    let cert = certify_lie_zero(
        "five-term, random Gaussian tuples",
        |rng| {
            let pts = distinct_points(rng, 5, 8);
            q2_element(&pts.try_into().unwrap())
        },
        &opts,
    )
    .unwrap();
    assert_eq!(cert.verdict, motivic_symbols::certify::Verdict::Zero, "{cert:?}");
}

#[test]
fn weight3_relation_two_printed_shapes_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10 {
        let pts: [V; 6] = distinct_points(&mut rng, 6, 8).try_into().unwrap();
        let (Ok(a), Ok(b)) = (q3_element_split(&pts), q3_element_grouped(&pts)) else {
            continue;
        };
        let mut d = collect_weight3(&a);
        d.sub(&collect_weight3(&b));
        assert!(d.is_zero(), "shapes disagree at {pts:?}: {d:?}");
    }
}

#[test]
fn weight3_relation_numeric_100_tuples() {
    let opts = CertifyOptions { trials: 100, seed: 13, ..Default::default() };
    let cert = certify_lie_zero(
        "weight-3 relation, trilog substitution",
        |rng| {
            let pts = distinct_points(rng, 6, 8);
            q3_element_split(&pts.try_into().unwrap())
        },
        &opts,
    )
    .unwrap();
    assert_eq!(cert.verdict, motivic_symbols::certify::Verdict::Zero, "{cert:?}");
}

#[test]
fn weight3_relation_coproduct_certified_zero() {
    let opts = CertifyOptions { trials: 4, seed: 17, ..Default::default() };
    let certs = certify_zero(
        "weight-3 relation coproduct",
        |rng| {
            let pts: [V; 6] = distinct_points(rng, 6, 8)
                .try_into()
                .map_err(|_| MsError::Degenerate("draw".into()))?;
            coproduct(&q3_element_split(&pts)?)
        },
        &opts,
    )
    .unwrap();
    assert!(all_zero(&certs), "{certs:?}");
}

#[test]
fn weight4_relation_coproduct_certified_zero_smoke() {
    let opts = CertifyOptions { trials: 2, seed: 19, ..Default::default() };
    let certs = certify_zero(
        "weight-4 relation coproduct",
        |rng| {
            let pts: [V; 7] = distinct_points(rng, 7, 6)
                .try_into()
                .map_err(|_| MsError::Degenerate("draw".into()))?;
            coproduct(&q4_element(&pts)?)
        },
        &opts,
    )
    .unwrap();
    assert!(all_zero(&certs), "{certs:?}");
}
