use crate::complex::{APComplex, RM};
use crate::policy::{NumError, PrecisionPolicy};
use astro_float::BigFloat;
use exact_core::GaussianRational;
use num_traits::{One, Signed, ToPrimitive};

/// Convergence-accelerated alternating sum Σ_{k≥0} (−1)^k a_k
/// (Cohen–Rodriguez Villegas–Zagier); geometric rate (3+√8)^{−n}.
fn alternating_sum(a: impl Fn(usize, usize) -> BigFloat, p: usize) -> BigFloat {
    let digits = (p as f64 * std::f64::consts::LOG10_2).ceil();
    let n = (digits * 1.35) as usize + 12;
    let sqrt8 = BigFloat::from_i64(8, p).sqrt(p, RM);
    let base = BigFloat::from_i64(3, p).add(&sqrt8, p, RM);
    let mut d = base.powi(n, p, RM);
    let inv = d.reciprocal(p, RM);
    d = d.add(&inv, p, RM).mul(&BigFloat::from_f64(0.5, p), p, RM);
    let mut b = BigFloat::from_i64(-1, p);
    let mut c = d.neg();
    let mut s = BigFloat::from_i64(0, p);
    for k in 0..n {
        c = b.sub(&c, p, RM);
        s = s.add(&c.mul(&a(k, p), p, RM), p, RM);
        // b ← b (k+n)(k−n) / ((k+1/2)(k+1))
        let num = BigFloat::from_i64(((k + n) as i64) * (k as i64 - n as i64), p);
        let den = BigFloat::from_f64((k as f64 + 0.5) * (k as f64 + 1.0), p);
        b = b.mul(&num, p, RM).div(&den, p, RM);
    }
    s.div(&d, p, RM)
}

/// η(s) = Σ_{k≥1} (−1)^{k−1} k^{−s}
pub fn eta_const(s: usize, p: usize) -> BigFloat {
    alternating_sum(
        |k, p| BigFloat::from_i64((k + 1) as i64, p).powi(s, p, RM).reciprocal(p, RM),
        p,
    )
}

/// Dirichlet β(s) = Σ_{k≥0} (−1)^k (2k+1)^{−s}
pub fn beta_const(s: usize, p: usize) -> BigFloat {
    alternating_sum(
        |k, p| BigFloat::from_i64((2 * k + 1) as i64, p).powi(s, p, RM).reciprocal(p, RM),
        p,
    )
}

/// ζ(s) = η(s) / (1 − 2^{1−s}) for s ≥ 2
pub fn zeta_const(s: usize, p: usize) -> BigFloat {
    let two_pow = BigFloat::from_i64(2, p).powi(s - 1, p, RM).reciprocal(p, RM);
    let denom = BigFloat::from_i64(1, p).sub(&two_pow, p, RM);
    eta_const(s, p).div(&denom, p, RM)
}

fn is_unit(z: &GaussianRational, re: i64, im: i64) -> bool {
    z == &GaussianRational::from_ints(re, im)
}

/// Li_n(z) = Σ_{k≥1} z^k/k^n for |z| ≤ 1 (closed forms on the circle at
/// z ∈ {1, −1, ±i}; everything else on the circle or in the guard band is
/// rejected — the samplers resample instead).
pub fn li(n: usize, z: &GaussianRational, policy: &PrecisionPolicy) -> Result<APComplex, NumError> {
    let p = policy.bits;
    assert!(n >= 1);
    if z.is_zero() {
        return Ok(APComplex::zero(p));
    }
    let norm = z.norm(); // |z|² exactly
    if norm > exact_core::rat(1) {
        return Err(NumError::Degenerate(format!("|z| > 1 in Li_{n}")));
    }
    if norm.is_one() {
        return match () {
            _ if is_unit(z, 1, 0) => {
                if n == 1 {
                    Err(NumError::Degenerate("Li_1(1) diverges".into()))
                } else {
                    Ok(APComplex::real(zeta_const(n, p), p))
                }
            }
            _ if is_unit(z, -1, 0) => Ok(APComplex::real(eta_const(n, p).neg(), p)),
            _ if is_unit(z, 0, 1) || is_unit(z, 0, -1) => {
                let re = eta_const(n, p)
                    .mul(&BigFloat::from_i64(2, p).powi(n, p, RM).reciprocal(p, RM), p, RM)
                    .neg();
                let im = beta_const(n, p);
                Ok(APComplex {
                    re,
                    im: if z.im.is_positive() { im } else { im.neg() },
                })
            }
            _ => Err(NumError::GuardBand(
                "argument on the unit circle without a closed form".into(),
            )),
        };
    }
    let a2 = norm.to_f64().unwrap_or(1.0);
    if a2 > policy.guard_lo * policy.guard_lo {
        return Err(NumError::GuardBand(format!("|z|² = {a2}")));
    }
    let zf = APComplex::from_gaussian(z, p);
    if n == 1 {
        // −log(1 − z), principal branch
        let one = APComplex::real(BigFloat::from_i64(1, p), p);
        return Ok(one.sub(&zf, p).ln(p).neg());
    }
    // series length from the tail bound |z|^{K+1} K^{−n} / (1 − |z|)
    let a = a2.sqrt();
    let ln_tol = policy.tail_tol_log10 as f64 * std::f64::consts::LN_10;
    let mut terms = 16usize;
    loop {
        let k = terms as f64;
        let bound = (k + 1.0) * a.ln() - (n as f64) * k.ln() - (1.0 - a).ln();
        if bound <= ln_tol {
            break;
        }
        terms *= 2;
        if terms > policy.max_terms {
            return Err(NumError::PrecisionUnreachable(format!(
                "series for Li_{n}(|z| = {a:.6}) needs more than {} terms",
                policy.max_terms
            )));
        }
    }
    let mut zk = zf.clone();
    let mut s = zf.clone();
    for k in 2..=terms {
        zk = zk.mul(&zf, p);
        let kn = BigFloat::from_i64(k as i64, p).powi(n, p, RM);
        s = s.add(&zk.scale(&kn.reciprocal(p, RM), p), p);
    }
    Ok(s)
}
