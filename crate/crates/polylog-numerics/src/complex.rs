use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use exact_core::{GaussianRational, Rat};
use std::cell::RefCell;

pub(crate) const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

/// Run `f` with the thread-local constants cache (π, logarithm tables, …).
pub fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

fn bigint_to_float(n: &num_bigint::BigInt, p: usize) -> BigFloat {
    if let Ok(small) = i128::try_from(n) {
        return BigFloat::from_i128(small, p);
    }
    with_consts(|cc| BigFloat::parse(&n.to_string(), Radix::Dec, p, RM, cc))
}

pub fn bigfloat_from_rat(q: &Rat, p: usize) -> BigFloat {
    bigint_to_float(q.numer(), p).div(&bigint_to_float(q.denom(), p), p, RM)
}

pub fn bigfloat_to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let Some(e) = x.exponent() else { return f64::NAN };
    // mantissa in [0.5, 1): take the top 64 bits
    let Some(words) = x.mantissa_digits() else {
        return f64::NAN;
    };
    let top = *words.last().unwrap_or(&0) as f64 / (u64::MAX as f64 + 1.0);
    let next = if words.len() > 1 {
        words[words.len() - 2] as f64 / ((u64::MAX as f64 + 1.0) * (u64::MAX as f64 + 1.0))
    } else {
        0.0
    };
    let mag = (top + next) * 2f64.powi(e);
    if x.is_negative() {
        -mag
    } else {
        mag
    }
}

/// A complex number with arbitrary-precision real and imaginary parts.
#[derive(Debug, Clone)]
pub struct APComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl APComplex {
    pub fn zero(p: usize) -> Self {
        APComplex {
            re: BigFloat::from_i64(0, p),
            im: BigFloat::from_i64(0, p),
        }
    }

    pub fn real(re: BigFloat, p: usize) -> Self {
        APComplex {
            re,
            im: BigFloat::from_i64(0, p),
        }
    }

    pub fn from_gaussian(z: &GaussianRational, p: usize) -> Self {
        APComplex {
            re: bigfloat_from_rat(&z.re, p),
            im: bigfloat_from_rat(&z.im, p),
        }
    }

    pub fn from_f64s(re: f64, im: f64, p: usize) -> Self {
        APComplex {
            re: BigFloat::from_f64(re, p),
            im: BigFloat::from_f64(im, p),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Self, p: usize) -> Self {
        APComplex {
            re: self.re.add(&o.re, p, RM),
            im: self.im.add(&o.im, p, RM),
        }
    }

    pub fn sub(&self, o: &Self, p: usize) -> Self {
        APComplex {
            re: self.re.sub(&o.re, p, RM),
            im: self.im.sub(&o.im, p, RM),
        }
    }

    pub fn mul(&self, o: &Self, p: usize) -> Self {
        APComplex {
            re: self.re.mul(&o.re, p, RM).sub(&self.im.mul(&o.im, p, RM), p, RM),
            im: self.re.mul(&o.im, p, RM).add(&self.im.mul(&o.re, p, RM), p, RM),
        }
    }

    pub fn div(&self, o: &Self, p: usize) -> Self {
        let d = o.abs2(p);
        let num = self.mul(&o.conj(), p);
        APComplex {
            re: num.re.div(&d, p, RM),
            im: num.im.div(&d, p, RM),
        }
    }

    pub fn neg(&self) -> Self {
        APComplex {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub fn conj(&self) -> Self {
        APComplex {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn scale(&self, s: &BigFloat, p: usize) -> Self {
        APComplex {
            re: self.re.mul(s, p, RM),
            im: self.im.mul(s, p, RM),
        }
    }

    pub fn abs2(&self, p: usize) -> BigFloat {
        self.re.mul(&self.re, p, RM).add(&self.im.mul(&self.im, p, RM), p, RM)
    }

    pub fn abs(&self, p: usize) -> BigFloat {
        self.abs2(p).sqrt(p, RM)
    }

    /// ½ log(re² + im²)
    pub fn ln_abs(&self, p: usize) -> BigFloat {
        let half = BigFloat::from_f64(0.5, p);
        with_consts(|cc| self.abs2(p).ln(p, RM, cc)).mul(&half, p, RM)
    }

    /// Principal argument via atan2.
    pub fn arg(&self, p: usize) -> BigFloat {
        atan2(&self.im, &self.re, p)
    }

    /// Principal-branch complex logarithm.
    pub fn ln(&self, p: usize) -> Self {
        APComplex {
            re: self.ln_abs(p),
            im: self.arg(p),
        }
    }
}

pub(crate) fn atan2(y: &BigFloat, x: &BigFloat, p: usize) -> BigFloat {
    with_consts(|cc| {
        let pi = cc.pi(p, RM);
        if x.is_zero() && y.is_zero() {
            return BigFloat::from_i64(0, p);
        }
        if x.is_zero() {
            let half = BigFloat::from_f64(0.5, p).mul(&pi, p, RM);
            return if y.is_negative() { half.neg() } else { half };
        }
        let base = y.div(x, p, RM).atan(p, RM, cc);
        if x.is_negative() {
            if y.is_negative() {
                base.sub(&pi, p, RM)
            } else {
                base.add(&pi, p, RM)
            }
        } else {
            base
        }
    })
}


