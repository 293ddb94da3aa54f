//! Unique factorization of nonzero elements of Q and Q(i) into canonical
//! irreducibles, with exponents in Q. Units (-1, i) are dropped: coefficients
//! live in Q, which kills torsion in the multiplicative group.

use crate::{GaussianRational, LinComb, Rat};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::ExactError;

/// A canonical irreducible factor: a rational prime, or a Gaussian prime in
/// its first-quadrant associate form (re > 0, im >= 0).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Factor {
    Rational(u64),
    Gaussian(i64, i64),
}

/// An element of F^x tensor Q: finitely many irreducible factors with
/// rational exponents. Multiplication of field elements is addition here.
pub type ExponentVector = LinComb<Factor>;

const BUDGET_BITS: u64 = 64;

/// Factor a nonzero rational over Z, dropping the sign.
pub fn factorize_rational(x: &Rat) -> Result<ExponentVector, ExactError> {
    if x.is_zero() {
        return Err(ExactError::ZeroElement);
    }
    let mut out = ExponentVector::zero();
    accumulate_int(x.numer(), crate::rat(1), &mut out)?;
    accumulate_int(x.denom(), crate::rat(-1), &mut out)?;
    Ok(out)
}

fn accumulate_int(n: &BigInt, scale: Rat, out: &mut ExponentVector) -> Result<(), ExactError> {
    let n = n.abs();
    if n.bits() > BUDGET_BITS {
        return Err(ExactError::FactorizationBudget(n.to_string()));
    }
    let n = n.to_u64().ok_or_else(|| ExactError::FactorizationBudget(n.to_string()))?;
    for (p, e) in factor_u64(n) {
        out.add_term(Factor::Rational(p), &scale * crate::rat(e as i64));
    }
    Ok(())
}

/// Factor a nonzero Gaussian rational over Z[i], dropping units.
pub fn factorize_gaussian(x: &GaussianRational) -> Result<ExponentVector, ExactError> {
    if x.is_zero() {
        return Err(ExactError::ZeroElement);
    }
    // Clear denominators: x = (a + b i) / d with a, b, d integers.
    let g = num_integer::Integer::gcd(x.re.denom(), x.im.denom());
    let d = x.re.denom() * x.im.denom() / g;
    let a = (&x.re * Rat::from_integer(d.clone())).to_integer();
    let b = (&x.im * Rat::from_integer(d.clone())).to_integer();

    let mut out = ExponentVector::zero();
    accumulate_gauss_int(&a, &b, crate::rat(1), &mut out)?;
    // d is a positive integer; factor it over Z[i].
    accumulate_gauss_int(&d, &BigInt::zero(), crate::rat(-1), &mut out)?;
    Ok(out)
}

fn accumulate_gauss_int(
    a: &BigInt,
    b: &BigInt,
    scale: Rat,
    out: &mut ExponentVector,
) -> Result<(), ExactError> {
    if a.is_zero() && b.is_zero() {
        return Err(ExactError::ZeroElement);
    }
    let norm: BigInt = a * a + b * b;
    if norm.bits() > BUDGET_BITS {
        return Err(ExactError::FactorizationBudget(norm.to_string()));
    }
    let (mut za, mut zb) = (
        a.to_i128().ok_or_else(|| ExactError::FactorizationBudget(norm.to_string()))?,
        b.to_i128().ok_or_else(|| ExactError::FactorizationBudget(norm.to_string()))?,
    );
    let n = norm.to_u64().expect("norm fits after bits check");
    for (p, _) in factor_u64(n) {
        // Gaussian primes above p, and their multiplicity in z = za + zb i.
        for gp in gaussian_primes_above(p) {
            let mut e = 0i64;
            loop {
                match gauss_divide_exact(za, zb, gp) {
                    Some((qa, qb)) => {
                        za = qa;
                        zb = qb;
                        e += 1;
                    }
                    None => break,
                }
            }
            if e != 0 {
                out.add_term(Factor::Gaussian(gp.0 as i64, gp.1 as i64), &scale * crate::rat(e));
            }
        }
    }
    debug_assert_eq!(za * za + zb * zb, 1, "leftover must be a unit");
    Ok(())
}

/// Exact division in Z[i]: z / w if w | z, else None.
fn gauss_divide_exact(za: i128, zb: i128, w: (i128, i128)) -> Option<(i128, i128)> {
    let (wa, wb) = w;
    let n = wa * wa + wb * wb;
    // z * conj(w) = (za*wa + zb*wb) + (zb*wa - za*wb) i
    let ra = za * wa + zb * wb;
    let rb = zb * wa - za * wb;
    if ra % n == 0 && rb % n == 0 {
        Some((ra / n, rb / n))
    } else {
        None
    }
}

/// The canonical (first-quadrant) associate: re > 0 and im >= 0.
fn canonical_associate(mut a: i128, mut b: i128) -> (i128, i128) {
    for _ in 0..4 {
        if a > 0 && b >= 0 {
            return (a, b);
        }
        // multiply by i
        let (na, nb) = (-b, a);
        a = na;
        b = nb;
    }
    unreachable!("nonzero Gaussian integer has a first-quadrant associate");
}

/// Canonical Gaussian primes dividing the rational prime p.
fn gaussian_primes_above(p: u64) -> Vec<(i128, i128)> {
    if p == 2 {
        return vec![canonical_associate(1, 1)];
    }
    if p % 4 == 3 {
        return vec![(p as i128, 0)];
    }
    // p = 1 mod 4: split. Find s with s^2 = -1 mod p, then gcd(p, s + i).
    let s = sqrt_minus_one(p);
    let g = gauss_gcd((p as i128, 0), (s as i128, 1));
    let g = canonical_associate(g.0, g.1);
    let h = canonical_associate(g.0, -g.1);
    let mut v = vec![g, h];
    v.sort();
    v.dedup();
    v
}

fn gauss_gcd(mut x: (i128, i128), mut y: (i128, i128)) -> (i128, i128) {
    while y.0 != 0 || y.1 != 0 {
        // nearest-integer quotient of x / y
        let n = y.0 * y.0 + y.1 * y.1;
        let ra = x.0 * y.0 + x.1 * y.1;
        let rb = x.1 * y.0 - x.0 * y.1;
        let qa = div_round(ra, n);
        let qb = div_round(rb, n);
        let rem = (x.0 - (qa * y.0 - qb * y.1), x.1 - (qa * y.1 + qb * y.0));
        x = y;
        y = rem;
    }
    x
}

fn div_round(a: i128, b: i128) -> i128 {
    // round a/b to the nearest integer (b > 0)
    if a >= 0 {
        (2 * a + b) / (2 * b)
    } else {
        -((-2 * a + b) / (2 * b))
    }
}

fn sqrt_minus_one(p: u64) -> u64 {
    // For a quadratic non-residue a, a^((p-1)/4) is a square root of -1.
    let mut a = 2u64;
    loop {
        if pow_mod(a, (p - 1) / 2, p) == p - 1 {
            return pow_mod(a, (p - 1) / 4, p);
        }
        a += 1;
    }
}

// ---------- u64 factorization: trial division + Brent-Pollard rho ----------

pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    if n <= 1 {
        return out;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    let mut stack = vec![n];
    let mut found: Vec<u64> = Vec::new();
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u64(m) {
            found.push(m);
            continue;
        }
        let d = pollard_rho(m);
        stack.push(d);
        stack.push(m / d);
    }
    found.sort_unstable();
    let mut i = 0;
    while i < found.len() {
        let p = found[i];
        let mut e = 0;
        while i < found.len() && found[i] == p {
            e += 1;
            i += 1;
        }
        out.push((p, e));
    }
    out.sort_unstable();
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    // Brent's cycle variant with batched gcds and a stepwise backtrack when
    // a batch overshoots; n is odd, composite, with no small factors.
    let m = 64u64;
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let mut y = 2u64;
        let mut g = 1u64;
        let mut q = 1u64;
        let mut x = y;
        let mut ys = y;
        let mut r = 1u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0u64;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd_u64(q, n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            // redo the last batch one step at a time
            g = 1;
            while g == 1 {
                ys = f(ys);
                g = gcd_u64(x.abs_diff(ys), n);
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
