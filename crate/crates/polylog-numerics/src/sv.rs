use crate::bernoulli::bernoulli_upto;
use crate::complex::{bigfloat_from_rat, APComplex, RM};
use crate::li::li;
use crate::policy::{NumError, PrecisionPolicy};
use astro_float::BigFloat;
use configurations::{cross_ratio_bracket, PointP1};
use exact_core::{rat, Rat};
use num_traits::One;

/// Single-valued polylogarithm
/// ℒ_n(z) = π_n(Σ_{k=0}^{n−1} (2^k B_k/k!) Li_{n−k}(z) logᵏ|z|),
/// with π_n = Re for odd n, Im for even n; ℒ_n(0) = ℒ_n(∞) = 0, and
/// |z| > 1 handled through the inversion ℒ_n(z) = (−1)^{n−1} ℒ_n(1/z).
pub fn sv_polylog(n: usize, z: &PointP1, policy: &PrecisionPolicy) -> Result<BigFloat, NumError> {
    assert!((2..=4).contains(&n));
    let p = policy.bits;
    let z = match z {
        PointP1::Infinity => return Ok(BigFloat::from_i64(0, p)),
        PointP1::Finite(z) if z.is_zero() => return Ok(BigFloat::from_i64(0, p)),
        PointP1::Finite(z) => z,
    };
    let norm = z.norm();
    if norm > rat(1) {
        let v = sv_polylog(n, &PointP1::Finite(z.inv()), policy)?;
        return Ok(if n % 2 == 0 { v.neg() } else { v });
    }
    let bern = bernoulli_upto(n - 1);
    let mut acc = APComplex::zero(p);
    if norm.is_one() {
        // log|z| = 0: only the k = 0 term survives
        acc = li(n, z, policy)?;
    } else {
        let zf = APComplex::from_gaussian(z, p);
        let log_abs = zf.ln_abs(p);
        let mut log_pow = BigFloat::from_i64(1, p);
        let mut factorial = rat(1);
        let mut two_pow = rat(1);
        for (k, bk) in bern.iter().enumerate() {
            if k > 0 {
                factorial *= rat(k as i64);
                two_pow *= rat(2);
                log_pow = log_pow.mul(&log_abs, p, RM);
            }
            let coeff: Rat = &two_pow * bk / &factorial;
            if num_traits::Zero::is_zero(&coeff) {
                continue;
            }
            let term = li(n - k, z, policy)?
                .scale(&log_pow, p)
                .scale(&bigfloat_from_rat(&coeff, p), p);
            acc = acc.add(&term, p);
        }
    }
    Ok(if n % 2 == 1 { acc.re } else { acc.im })
}

/// |Σ_{i ∈ Z/5} ℒ₂([s_i, s_{i+1}, s_{i+2}, s_{i+3}])| — the five-term
/// relation residual for five distinct points of P¹.
pub fn five_term_residual(
    points: &[PointP1; 5],
    policy: &PrecisionPolicy,
) -> Result<BigFloat, NumError> {
    let p = policy.bits;
    let mut acc = BigFloat::from_i64(0, p);
    for i in 0..5 {
        let quad = [
            points[i].clone(),
            points[(i + 1) % 5].clone(),
            points[(i + 2) % 5].clone(),
            points[(i + 3) % 5].clone(),
        ];
        let r = cross_ratio_bracket(&quad)
            .map_err(|e| NumError::Degenerate(e.to_string()))?;
        acc = acc.add(&sv_polylog(2, &PointP1::Finite(r), policy)?, p, RM);
    }
    Ok(acc.abs())
}
