//! Numeric evaluation of symbols through the single-valued polylogarithms,
//! with a per-run cache keyed by (weight, argument).

use crate::coproduct::W3;
use crate::lie::{LieElem, Sym};
use crate::reduce::reduce_21;
use crate::value::V;
use crate::MsError;
use astro_float::{BigFloat, RoundingMode};
use exact_core::Rat;
use polylog_numerics::{bigfloat_from_rat, sv_polylog, zeta_const, PrecisionPolicy};
use std::collections::HashMap;

const RM: RoundingMode = RoundingMode::ToEven;

pub struct Evaluator {
    pub policy: PrecisionPolicy,
    cache: HashMap<(u8, V), BigFloat>,
}

impl Evaluator {
    pub fn new(policy: PrecisionPolicy) -> Self {
        Evaluator { policy, cache: HashMap::new() }
    }

    pub fn bits(&self) -> usize {
        self.policy.bits
    }

    /// ℒ_n(x) for n in 2..=4, cached.
    pub fn sv(&mut self, n: u8, x: &V) -> Result<BigFloat, MsError> {
        if let Some(v) = self.cache.get(&(n, x.clone())) {
            return Ok(v.clone());
        }
        let v = sv_polylog(n as usize, x, &self.policy)?;
        self.cache.insert((n, x.clone()), v.clone());
        Ok(v)
    }

    pub fn zeta3(&self) -> BigFloat {
        zeta_const(3, self.policy.bits)
    }

    /// Value of a weight-3 tensor-slot symbol; `{x,y}_{2,1}` goes through its
    /// trilog expansion.
    pub fn eval_w3(&mut self, w: &W3) -> Result<BigFloat, MsError> {
        match w {
            W3::S3(x) => self.sv(3, x),
            W3::One3 => Ok(self.zeta3()),
            W3::S21(x, y) => self.eval_lie(&reduce_21(x, y)),
        }
    }

    /// Value of a weight-2 or weight-3 symbol. Weight-4 symbols have no
    /// direct single-valued evaluation here; only their coproducts are
    /// checked numerically.
    pub fn eval_sym(&mut self, s: &Sym) -> Result<BigFloat, MsError> {
        match s {
            Sym::S2(x) => self.sv(2, x),
            Sym::S3(x) => self.sv(3, x),
            Sym::One3 => Ok(self.zeta3()),
            Sym::S21(x, y) => self.eval_lie(&reduce_21(x, y)),
            other => Err(MsError::ShapeMismatch(format!(
                "no direct numeric value for {other:?}"
            ))),
        }
    }

    pub fn eval_lie(&mut self, e: &LieElem) -> Result<BigFloat, MsError> {
        let p = self.bits();
        let mut acc = BigFloat::from_i8(0, p);
        for (c, s) in &e.terms {
            let v = self.eval_sym(s)?;
            acc = acc.add(&v.mul(&bigfloat_from_rat(c, p), p, RM), p, RM);
        }
        Ok(acc)
    }
}

pub fn bf_add(a: &BigFloat, b: &BigFloat, p: usize) -> BigFloat {
    a.add(b, p, RM)
}

pub fn bf_mul(a: &BigFloat, b: &BigFloat, p: usize) -> BigFloat {
    a.mul(b, p, RM)
}

pub fn bf_sub(a: &BigFloat, b: &BigFloat, p: usize) -> BigFloat {
    a.sub(b, p, RM)
}

pub fn bf_scale_rat(a: &BigFloat, c: &Rat, p: usize) -> BigFloat {
    a.mul(&bigfloat_from_rat(c, p), p, RM)
}

pub fn bf_from_f64(x: f64, p: usize) -> BigFloat {
    BigFloat::from_f64(x, p)
}
