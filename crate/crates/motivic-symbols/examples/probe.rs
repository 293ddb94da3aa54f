//! Scratch probe: per-block functional values for the weight-4 cyclic
//! relation, to solve for the sign pattern that makes the coproduct vanish.

use configurations::{casimir, cross_ratio_bracket, PointP1};
use exact_core::{factorize_gaussian, rat, Factor, GaussianRational};
use motivic_symbols::coproduct::{coproduct, ComplexElem};
use motivic_symbols::eval::Evaluator;
use motivic_symbols::lie::{s31, s4, LieElem};
use motivic_symbols::value::V;
use num_traits::ToPrimitive;
use polylog_numerics::{bigfloat_to_f64, PrecisionPolicy};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

fn gp(rng: &mut ChaCha8Rng) -> V {
    loop {
        let a = rng.gen_range(-6i64..=6);
        let b = rng.gen_range(-6i64..=6);
        let g = GaussianRational::from_ints(a, b);
        if !g.is_zero() && g != GaussianRational::one() {
            return PointP1::Finite(g);
        }
    }
}

fn crv(pts: &[V], idx: [usize; 4]) -> V {
    let n = pts.len();
    let arr = [
        pts[idx[0] % n].clone(),
        pts[idx[1] % n].clone(),
        pts[idx[2] % n].clone(),
        pts[idx[3] % n].clone(),
    ];
    PointP1::Finite(cross_ratio_bracket(&arr).unwrap())
}

fn nu(seeded: &mut HashMap<Factor, f64>, v: &V, rng: &mut ChaCha8Rng) -> f64 {
    let g = match v {
        V::Finite(z) => z.clone(),
        V::Infinity => panic!("inf unit"),
    };
    let ev = factorize_gaussian(&g).unwrap();
    let mut s = 0.0;
    for (f, e) in ev.iter() {
        let w = *seeded
            .entry(*f)
            .or_insert_with(|| rng.gen::<f64>() * 2.0 - 1.0);
        s += w * e.to_f64().unwrap();
    }
    s
}

fn phi_b3(
    e: &ComplexElem,
    ev: &mut Evaluator,
    weights: &mut HashMap<Factor, f64>,
    wrng: &mut ChaCha8Rng,
) -> Option<f64> {
    let mut phi = 0.0;
    for (c, w, u) in &e.b3_u {
        let l = bigfloat_to_f64(&ev.eval_w3(w).ok()?);
        phi += c.to_f64().unwrap_or(f64::NAN) * l * nu(weights, u, wrng);
    }
    Some(phi)
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let mut ev = Evaluator::new(PrecisionPolicy::default());
    'outer: for trial in 0..12u64 {
        let mut pts = Vec::new();
        while pts.len() < 7 {
            let p = gp(&mut rng);
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
        // blocks: cyclic sums of individual structures
        let mut blocks: Vec<LieElem> = Vec::new();
        for _ in 0..11 {
            blocks.push(LieElem::new(4));
        }
        for j in 0..7 {
            let a = crv(&pts, [j, j + 1, j + 2, j + 3]);
            let b1 = crv(&pts, [j + 3, j + 5, j + 6, j]);
            let b2 = crv(&pts, [j + 3, j + 4, j + 6, j]);
            let b3 = crv(&pts, [j + 3, j + 4, j + 5, j]);
            blocks[0].push(rat(1), s31(&a, &b1));
            blocks[1].push(rat(1), s31(&a, &b2));
            blocks[2].push(rat(1), s31(&a, &b3));
            blocks[3].push(rat(1), s4(&crv(&pts, [j, j + 1, j + 3, j + 5])));
            let rot: Vec<V> = (0..6).map(|i| pts[(j + i) % 7].clone()).collect();
            blocks[4].push(rat(1), s4(&PointP1::Finite(casimir(&rot).unwrap())));
            blocks[5].push(rat(1), s31(&b1, &a));
            blocks[6].push(rat(1), s31(&b2, &a));
            blocks[7].push(rat(1), s31(&b3, &a));
            blocks[8].push(rat(1), s4(&a));
            blocks[9].push(
                rat(1),
                s4(&motivic_symbols::value::neg(&PointP1::Finite(casimir(&rot).unwrap()))),
            );
            blocks[10].push(
                rat(1),
                s4(&motivic_symbols::value::neg(&crv(&pts, [j, j + 1, j + 3, j + 5]))),
            );
        }
        let mut weights: HashMap<Factor, f64> = HashMap::new();
        let mut wrng = ChaCha8Rng::seed_from_u64(1000 + trial);
        let mut vals = Vec::new();
        for b in &blocks {
            let e = match coproduct(b) {
                Ok(e) => e,
                Err(er) => {
                    println!("trial {trial}: block err {er}");
                    continue 'outer;
                }
            };
            // NB: weights map shared across blocks so ν is one functional
            match phi_b3(&e, &mut ev, &mut weights, &mut wrng) {
                Some(v) => vals.push(v),
                None => {
                    println!("trial {trial}: eval err");
                    continue 'outer;
                }
            }
        }
        println!("trial {trial}:");
        for (i, v) in vals.iter().enumerate() {
            println!("   block {i}: {v:.12}");
        }
        let printed = -vals[0] + vals[1] - vals[2] - vals[3] + 3.0*vals[4];
        println!("   candidate pattern residual = {printed:.6e}");
    }
    println!("probe done");
}
