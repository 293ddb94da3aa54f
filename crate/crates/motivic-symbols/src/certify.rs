//! Vanishing certifier for tensor-complex elements, combining an exact layer
//! (multiplicative-group linear algebra on Gaussian-prime exponent vectors)
//! with a probabilistic numeric layer built on split functionals.
//!
//! A *family* is a closure that draws a random generic specialization and
//! returns the element built at that specialization, with its term lists in
//! a draw-independent order. Each trial draws two independent specializations
//! σ and τ and evaluates mixed functionals such as
//!     Φ = Σ_i c_i · ℒ₃(f_i(σ)) · ν(g_i(τ))
//! where ν is a random real-weight functional on Gaussian-prime exponents.
//! ℒ_n kills all specialization relations in the Bloch-group slots and ν
//! kills torsion and multiplicativity in the F^× slots, so a true identity
//! always passes; a nonzero element fails with overwhelming probability.
//! Exact components (pure Λᵏ F^× words, and the Λ²-word attached to each
//! dilogarithm class in B₂ ⊗ Λ²F^×) are required to vanish identically at
//! every drawn specialization.

use crate::coproduct::{ComplexElem, W3};
use crate::dilog::canon2;
use crate::eval::{bf_from_f64, bf_scale_rat, Evaluator};
use crate::lie::LieElem;
use crate::value::{self, V};
use crate::MsError;
use astro_float::{BigFloat, RoundingMode};
use exact_core::{factorize_gaussian, wedge, ExponentVector, Factor, LinComb, Rat};
use num_traits::ToPrimitive;
use polylog_numerics::{bigfloat_to_f64, NumError, PrecisionPolicy};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;

const RM: RoundingMode = RoundingMode::ToEven;

#[derive(Debug, Clone, Copy)]
pub struct CertifyOptions {
    pub trials: usize,
    pub seed: u64,
    pub bits: usize,
    /// numeric-layer tolerance on |Φ|
    pub tol: f64,
    /// attempts allowed per trial before giving up on finding a generic draw
    pub max_resamples: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            trials: 20,
            seed: 0x5eed_cafe,
            bits: 192,
            tol: 1e-15,
            max_resamples: 64,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "ZERO")]
    Zero,
    #[serde(rename = "NONZERO")]
    NonZero,
}

#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub check: String,
    /// "exact" or "numeric"
    pub layer: String,
    pub verdict: Verdict,
    pub residual_max: f64,
    pub trials: usize,
    pub seed: u64,
    pub precision_bits: usize,
}

pub fn all_zero(certs: &[Certificate]) -> bool {
    certs.iter().all(|c| c.verdict == Verdict::Zero)
}

// ---------------------------------------------------------------------------
// random real-weight functionals on F^× ⊗ Q

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn factor_key(f: &Factor) -> u64 {
    match f {
        Factor::Rational(p) => splitmix(*p),
        Factor::Gaussian(a, b) => splitmix(splitmix(*a as u64) ^ (*b as u64)),
    }
}

/// ν(f) ∈ [−1, 1), deterministic in (seed, factor).
fn nu_weight(seed: u64, f: &Factor) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(splitmix(seed ^ factor_key(f)));
    rng.gen::<f64>() * 2.0 - 1.0
}

/// ν extended linearly to exponent vectors, accumulated at `p` bits so that
/// linearity holds to working precision rather than f64 precision.
fn nu(seed: u64, ev: &ExponentVector, p: usize) -> BigFloat {
    let mut acc = BigFloat::from_i8(0, p);
    for (f, e) in ev.iter() {
        let term = bf_from_f64(nu_weight(seed, f), p)
            .mul(&bf_from_f64(e.to_f64().unwrap_or(f64::NAN), p), p, RM);
        acc = acc.add(&term, p, RM);
    }
    acc
}

/// Exponent vector of a multiplicative-group slot; 0 and ∞ are degenerate.
fn fx(v: &V) -> Result<ExponentVector, MsError> {
    match v {
        V::Infinity => Err(MsError::Degenerate("unit slot at infinity".into())),
        V::Finite(z) => Ok(factorize_gaussian(z)?),
    }
}

// ---------------------------------------------------------------------------
// exact layer

/// Exact vanishing of the Λᵏ F^× components and of the Λ²-word attached to
/// each dilogarithm class in the B₂ ⊗ Λ²F^× component, at one specialization.
pub fn exact_layer_zero(e: &ComplexElem) -> Result<bool, MsError> {
    let mut l2: LinComb<Vec<Factor>> = LinComb::zero();
    for (c, u, v) in &e.l2u {
        l2.add_scaled(&wedge(&[&fx(u)?, &fx(v)?]), c);
    }
    if !l2.is_zero() {
        return Ok(false);
    }

    let mut l3: LinComb<Vec<Factor>> = LinComb::zero();
    for (c, u, v, w) in &e.l3u {
        l3.add_scaled(&wedge(&[&fx(u)?, &fx(v)?, &fx(w)?]), c);
    }
    if !l3.is_zero() {
        return Ok(false);
    }

    let mut l4: LinComb<Vec<Factor>> = LinComb::zero();
    for (c, u, v, w, t) in &e.l4u {
        l4.add_scaled(&wedge(&[&fx(u)?, &fx(v)?, &fx(w)?, &fx(t)?]), c);
    }
    if !l4.is_zero() {
        return Ok(false);
    }

    let mut by_class: BTreeMap<V, LinComb<Vec<Factor>>> = BTreeMap::new();
    for (c, x, u, v) in &e.b2_l2u {
        let (rep, sign) = canon2(x)
            .ok_or_else(|| MsError::Degenerate("dilog class at a degenerate point".into()))?;
        let word = wedge(&[&fx(u)?, &fx(v)?]);
        by_class
            .entry(rep)
            .or_insert_with(LinComb::zero)
            .add_scaled(&word, &(c * exact_core::rat(sign)));
    }
    Ok(by_class.values().all(|w| w.is_zero()))
}

// ---------------------------------------------------------------------------
// numeric layer

fn shapes_align(a: &ComplexElem, b: &ComplexElem) -> bool {
    fn tags(e: &ComplexElem) -> (Vec<(u8, Rat)>, Vec<Rat>, Vec<Rat>, Vec<Rat>) {
        let b3 = e
            .b3_u
            .iter()
            .map(|(c, w, _)| {
                let t = match w {
                    W3::S3(_) => 0u8,
                    W3::S21(_, _) => 1,
                    W3::One3 => 2,
                };
                (t, c.clone())
            })
            .collect();
        (
            b3,
            e.l2b2.iter().map(|(c, _, _)| c.clone()).collect(),
            e.b2_u.iter().map(|(c, _, _)| c.clone()).collect(),
            e.b2_l2u.iter().map(|(c, _, _, _)| c.clone()).collect(),
        )
    }
    tags(a) == tags(b) && a.l2u.len() == b.l2u.len() && a.l3u.len() == b.l3u.len()
        && a.l4u.len() == b.l4u.len()
}

struct TrialResult {
    exact_zero: bool,
    residual: f64,
}

fn run_trial<F>(
    family: &F,
    rng: &mut ChaCha8Rng,
    opts: &CertifyOptions,
    nu_seed: u64,
) -> Result<TrialResult, MsError>
where
    F: Fn(&mut ChaCha8Rng) -> Result<ComplexElem, MsError>,
{
    let sigma = family(rng)?;
    let tau = family(rng)?;
    if !shapes_align(&sigma, &tau) {
        return Err(MsError::Degenerate(
            "specializations produced different term shapes".into(),
        ));
    }

    let exact_zero = exact_layer_zero(&sigma)? && exact_layer_zero(&tau)?;

    let p = opts.bits;
    let mut ev = Evaluator::new(PrecisionPolicy::with_bits(p));
    let nu1 = nu_seed;
    let nu2 = splitmix(nu_seed ^ 0x0dd_ba11);
    let zero = || BigFloat::from_i8(0, p);
    let mut residual = 0.0f64;
    let track = |phi: &BigFloat, residual: &mut f64| {
        let a = bigfloat_to_f64(phi).abs();
        if a > *residual {
            *residual = a;
        }
    };

    // B₃ ⊗ F^×, both orientations of the split
    let mut phi_a = zero();
    let mut phi_b = zero();
    for ((c, w_s, u_s), (_, w_t, u_t)) in sigma.b3_u.iter().zip(&tau.b3_u) {
        let l_s = ev.eval_w3(w_s)?;
        let l_t = ev.eval_w3(w_t)?;
        let n_t = nu(nu1, &fx(u_t)?, p);
        let n_s = nu(nu1, &fx(u_s)?, p);
        phi_a = phi_a.add(&bf_scale_rat(&l_s.mul(&n_t, p, RM), c, p), p, RM);
        phi_b = phi_b.add(&bf_scale_rat(&l_t.mul(&n_s, p, RM), c, p), p, RM);
    }
    track(&phi_a, &mut residual);
    track(&phi_b, &mut residual);

    // Λ² B₂
    let mut phi = zero();
    for ((c, a_s, b_s), (_, a_t, b_t)) in sigma.l2b2.iter().zip(&tau.l2b2) {
        let t1 = ev.sv(2, a_s)?.mul(&ev.sv(2, b_t)?, p, RM);
        let t2 = ev.sv(2, b_s)?.mul(&ev.sv(2, a_t)?, p, RM);
        phi = phi.add(&bf_scale_rat(&t1.sub(&t2, p, RM), c, p), p, RM);
    }
    track(&phi, &mut residual);

    // B₂ ⊗ F^×
    let mut phi_a = zero();
    let mut phi_b = zero();
    for ((c, x_s, u_s), (_, x_t, u_t)) in sigma.b2_u.iter().zip(&tau.b2_u) {
        let n_t = nu(nu1, &fx(u_t)?, p);
        let n_s = nu(nu1, &fx(u_s)?, p);
        phi_a = phi_a.add(&bf_scale_rat(&ev.sv(2, x_s)?.mul(&n_t, p, RM), c, p), p, RM);
        phi_b = phi_b.add(&bf_scale_rat(&ev.sv(2, x_t)?.mul(&n_s, p, RM), c, p), p, RM);
    }
    track(&phi_a, &mut residual);
    track(&phi_b, &mut residual);

    // B₂ ⊗ Λ² F^×
    let mut phi = zero();
    for ((c, x_s, _, _), (_, _, u_t, v_t)) in sigma.b2_l2u.iter().zip(&tau.b2_l2u) {
        let eu = fx(u_t)?;
        let ev_ = fx(v_t)?;
        let w = nu(nu1, &eu, p)
            .mul(&nu(nu2, &ev_, p), p, RM)
            .sub(&nu(nu1, &ev_, p).mul(&nu(nu2, &eu, p), p, RM), p, RM);
        let term = ev.sv(2, x_s)?.mul(&w, p, RM);
        phi = phi.add(&bf_scale_rat(&term, c, p), p, RM);
    }
    track(&phi, &mut residual);

    Ok(TrialResult { exact_zero, residual })
}

fn resampling<T>(
    opts: &CertifyOptions,
    mut body: impl FnMut() -> Result<T, MsError>,
) -> Result<T, MsError> {
    let mut attempts = 0;
    loop {
        attempts += 1;
        match body() {
            Ok(t) => return Ok(t),
            Err(MsError::Degenerate(_)) | Err(MsError::Numeric(NumError::GuardBand(_)))
                if attempts < opts.max_resamples => {}
            Err(e) => return Err(e),
        }
    }
}

/// Certify that every specialization of the family is zero. Returns one
/// certificate per layer (exact, numeric).
pub fn certify_zero<F>(
    check: &str,
    family: F,
    opts: &CertifyOptions,
) -> Result<Vec<Certificate>, MsError>
where
    F: Fn(&mut ChaCha8Rng) -> Result<ComplexElem, MsError>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut exact_all = true;
    let mut residual_max = 0.0f64;
    for trial in 0..opts.trials {
        let nu_seed = splitmix(opts.seed).wrapping_add(trial as u64);
        let r = resampling(opts, || run_trial(&family, &mut rng, opts, nu_seed))?;
        exact_all &= r.exact_zero;
        if r.residual > residual_max {
            residual_max = r.residual;
        }
    }
    Ok(vec![
        Certificate {
            check: check.to_string(),
            layer: "exact".into(),
            verdict: if exact_all { Verdict::Zero } else { Verdict::NonZero },
            residual_max: 0.0,
            trials: opts.trials,
            seed: opts.seed,
            precision_bits: opts.bits,
        },
        Certificate {
            check: check.to_string(),
            layer: "numeric".into(),
            verdict: if residual_max < opts.tol {
                Verdict::Zero
            } else {
                Verdict::NonZero
            },
            residual_max,
            trials: opts.trials,
            seed: opts.seed,
            precision_bits: opts.bits,
        },
    ])
}

/// Certify numerically that a weight ≤ 3 formal family evaluates to zero
/// under the single-valued polylogarithms.
pub fn certify_lie_zero<F>(
    check: &str,
    family: F,
    opts: &CertifyOptions,
) -> Result<Certificate, MsError>
where
    F: Fn(&mut ChaCha8Rng) -> Result<LieElem, MsError>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut residual_max = 0.0f64;
    for _ in 0..opts.trials {
        let r = resampling(opts, || {
            let e = family(&mut rng)?;
            let mut ev = Evaluator::new(PrecisionPolicy::with_bits(opts.bits));
            Ok(bigfloat_to_f64(&ev.eval_lie(&e)?).abs())
        })?;
        if r > residual_max {
            residual_max = r;
        }
    }
    Ok(Certificate {
        check: check.to_string(),
        layer: "numeric".into(),
        verdict: if residual_max < opts.tol {
            Verdict::Zero
        } else {
            Verdict::NonZero
        },
        residual_max,
        trials: opts.trials,
        seed: opts.seed,
        precision_bits: opts.bits,
    })
}

/// Convenience: draw a random nonzero Gaussian-integer point with entries in
/// [−height, height], avoiding 0 and 1.
pub fn random_point(rng: &mut ChaCha8Rng, height: i64) -> V {
    loop {
        let re = rng.gen_range(-height..=height);
        let im = rng.gen_range(-height..=height);
        let p = value::from_ints(re, im);
        if !value::is_zero(&p) && !value::is_one(&p) {
            return p;
        }
    }
}
