//! Residue maps for one-parameter specializations.
//!
//! A `LocalFn` is an exact rational function of a local parameter t over
//! Q(i), enough to read off a valuation and a leading coefficient. The tame
//! symbol θ on a wedge word extracts the coefficient of the uniformizer:
//!   θ(a₁ ∧ … ∧ a_m) = Σ_i (−1)^{i−1} ord(a_i) · ā₁ ∧ … âᵢ … ∧ ā_m
//! with ā the leading unit reduction, and is independent of the chosen
//! uniformizer. The specialization s_v reduces every symbol argument to its
//! image in P¹ of the residue field; the residue of a tensor component is
//! s_v ⊗ θ.

use crate::lie::{s21, s3, scale, LieElem};
use crate::MsError;
use exact_core::{factorize_gaussian, rat, wedge, Factor, GaussianRational, LinComb};
use crate::value::V;

/// An exact rational function num(t)/den(t) with Gaussian-rational
/// coefficients, stored low degree first.
#[derive(Debug, Clone)]
pub struct LocalFn {
    num: Vec<GaussianRational>,
    den: Vec<GaussianRational>,
}

fn trim(p: &mut Vec<GaussianRational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &[GaussianRational], b: &[GaussianRational]) -> Vec<GaussianRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![GaussianRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    trim(&mut out);
    out
}

fn poly_add(a: &[GaussianRational], b: &[GaussianRational]) -> Vec<GaussianRational> {
    let mut out = Vec::with_capacity(a.len().max(b.len()));
    for i in 0..a.len().max(b.len()) {
        let x = a.get(i).cloned().unwrap_or_else(GaussianRational::zero);
        let y = b.get(i).cloned().unwrap_or_else(GaussianRational::zero);
        out.push(&x + &y);
    }
    trim(&mut out);
    out
}

impl LocalFn {
    pub fn constant(z: GaussianRational) -> Self {
        let mut num = vec![z];
        trim(&mut num);
        LocalFn { num, den: vec![GaussianRational::one()] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussianRational::from_ints(n, 0))
    }

    /// The local parameter t itself.
    pub fn parameter() -> Self {
        LocalFn {
            num: vec![GaussianRational::zero(), GaussianRational::one()],
            den: vec![GaussianRational::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut num = poly_add(&poly_mul(&self.num, &o.den), &poly_mul(&o.num, &self.den));
        trim(&mut num);
        LocalFn { num, den: poly_mul(&self.den, &o.den) }
    }

    pub fn neg(&self) -> Self {
        LocalFn { num: self.num.iter().map(|c| -c.clone()).collect(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        LocalFn { num: poly_mul(&self.num, &o.num), den: poly_mul(&self.den, &o.den) }
    }

    pub fn inv(&self) -> Result<Self, MsError> {
        if self.is_zero() {
            return Err(MsError::Degenerate("inverting the zero function".into()));
        }
        Ok(LocalFn { num: self.den.clone(), den: self.num.clone() })
    }

    pub fn div(&self, o: &Self) -> Result<Self, MsError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn one_minus(&self) -> Self {
        Self::from_int(1).sub(self)
    }

    pub fn one_minus_inv(&self) -> Result<Self, MsError> {
        Ok(self.inv()?.one_minus())
    }

    fn trailing(p: &[GaussianRational]) -> usize {
        p.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Valuation at t = 0.
    pub fn ord(&self) -> Result<i64, MsError> {
        if self.is_zero() {
            return Err(MsError::Degenerate("valuation of the zero function".into()));
        }
        Ok(Self::trailing(&self.num) as i64 - Self::trailing(&self.den) as i64)
    }

    /// Leading unit coefficient: the value of the function divided by
    /// t^ord, at t = 0.
    pub fn lead(&self) -> Result<GaussianRational, MsError> {
        if self.is_zero() {
            return Err(MsError::Degenerate("leading term of the zero function".into()));
        }
        let n = &self.num[Self::trailing(&self.num)];
        let d = &self.den[Self::trailing(&self.den)];
        Ok(n / d)
    }

    /// Image in P¹ of the residue field.
    pub fn reduction(&self) -> Result<V, MsError> {
        let o = self.ord()?;
        Ok(match o.cmp(&0) {
            std::cmp::Ordering::Greater => V::Finite(GaussianRational::zero()),
            std::cmp::Ordering::Less => V::Infinity,
            std::cmp::Ordering::Equal => V::Finite(self.lead()?),
        })
    }

    /// Substitute t → c·t (change of uniformizer by a unit).
    pub fn rescale_parameter(&self, c: &GaussianRational) -> Self {
        let sub = |p: &[GaussianRational]| {
            let mut pw = GaussianRational::one();
            p.iter()
                .map(|k| {
                    let out = k * &pw;
                    pw = &pw * c;
                    out
                })
                .collect()
        };
        LocalFn { num: sub(&self.num), den: sub(&self.den) }
    }
}

/// Tame symbol on a wedge word of local functions, returned as an exact
/// wedge of Gaussian-prime exponent vectors of the leading units.
pub fn theta(word: &[LocalFn]) -> Result<LinComb<Vec<Factor>>, MsError> {
    let mut out = LinComb::zero();
    for i in 0..word.len() {
        let o = word[i].ord()?;
        if o == 0 {
            continue;
        }
        let mut evs = Vec::new();
        for (j, w) in word.iter().enumerate() {
            if j != i {
                evs.push(factorize_gaussian(&w.lead()?)?);
            }
        }
        let refs: Vec<_> = evs.iter().collect();
        let sign = if i % 2 == 0 { 1 } else { -1 };
        out.add_scaled(&wedge(&refs), &rat(sign * o));
    }
    Ok(out)
}

/// Residue of the coboundary of `{x,y}_{3,1}` along a one-parameter family:
/// each tensor term contributes ord(unit slot) times the symbol with both
/// arguments reduced; the wedge-of-dilogs part has no unit slot and
/// contributes nothing.
pub fn residue_delta31(x: &LocalFn, y: &LocalFn) -> Result<LieElem, MsError> {
    let mut out = LieElem::new(3);
    let xr = x.reduction()?;
    let yr = y.reduction()?;

    // {x,y}_{2,1} ⊗ x/y
    out.push(rat(x.div(y)?.ord()?), s21(&xr, &yr));
    // {x/y}_3 ⊗ (1−x)/(1−y)
    out.push(
        rat(x.one_minus().div(&y.one_minus())?.ord()?),
        s3(&x.div(y)?.reduction()?),
    );
    // {x}_3 ⊗ (1 − 1/y)
    out.push(rat(y.one_minus_inv()?.ord()?), s3(&xr));
    // −{y}_3 ⊗ (1 − 1/x)
    out.push(rat(x.one_minus_inv()?.ord()?), scale(rat(-1), s3(&yr)));
    Ok(out)
}
