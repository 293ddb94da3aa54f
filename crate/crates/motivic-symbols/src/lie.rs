//! Formal generators of the weight-2..4 polylogarithmic Lie coalgebra:
//! `{x}_2`, `{x}_3`, `{x}_4`, the depth-two symbols `{x,y}_{2,1}` and
//! `{x,y}_{3,1}`, and the constant `{1}_3`.
//!
//! Builders apply only the *structural* specialization rules (arguments that
//! are literally 0, 1, or ∞). Value-dependent canonicalization is deliberately
//! left to the exact-check layer: elements built here keep their terms in a
//! stable order so that two random specializations of the same formal family
//! produce term lists that align index by index.

use crate::value::{self, V};
use exact_core::{rat, Rat};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sym {
    /// `{x}_2`
    S2(V),
    /// `{x}_3`
    S3(V),
    /// `{x}_4`
    S4(V),
    /// `{x,y}_{2,1}`
    S21(V, V),
    /// `{x,y}_{3,1}`
    S31(V, V),
    /// `{1}_3`
    One3,
}

impl Sym {
    pub fn weight(&self) -> u8 {
        match self {
            Sym::S2(_) => 2,
            Sym::S3(_) | Sym::S21(_, _) | Sym::One3 => 3,
            Sym::S4(_) | Sym::S31(_, _) => 4,
        }
    }
}

/// A formal linear combination of symbols of a single weight, kept as an
/// ordered term list (no collection / merging).
#[derive(Debug, Clone, Default)]
pub struct LieElem {
    pub weight: u8,
    pub terms: Vec<(Rat, Sym)>,
}

impl LieElem {
    pub fn new(weight: u8) -> Self {
        LieElem { weight, terms: Vec::new() }
    }

    pub fn push(&mut self, coef: Rat, terms: Vec<(Rat, Sym)>) {
        for (c, s) in terms {
            debug_assert_eq!(s.weight(), self.weight);
            self.terms.push((&coef * &c, s));
        }
    }

    pub fn push1(&mut self, coef: Rat, sym: Sym) {
        self.push(coef, vec![(rat(1), sym)]);
    }

    pub fn negated(&self) -> Self {
        LieElem {
            weight: self.weight,
            terms: self.terms.iter().map(|(c, s)| (-c, s.clone())).collect(),
        }
    }

    /// Concatenation of term lists (formal sum).
    pub fn concat(mut self, other: &LieElem) -> Self {
        debug_assert_eq!(self.weight, other.weight);
        self.terms.extend(other.terms.iter().cloned());
        self
    }
}

fn special(x: &V) -> bool {
    value::is_zero(x) || value::is_one(x) || value::is_inf(x)
}

/// `{x}_2`; zero at 0, 1, ∞.
pub fn s2(x: &V) -> Vec<(Rat, Sym)> {
    if special(x) {
        vec![]
    } else {
        vec![(rat(1), Sym::S2(x.clone()))]
    }
}

/// `{x}_3`; zero at 0 and ∞, the constant `{1}_3` at 1.
pub fn s3(x: &V) -> Vec<(Rat, Sym)> {
    if value::is_zero(x) || value::is_inf(x) {
        vec![]
    } else if value::is_one(x) {
        vec![(rat(1), Sym::One3)]
    } else {
        vec![(rat(1), Sym::S3(x.clone()))]
    }
}

/// `{x}_4`; zero at 0, 1, ∞.
pub fn s4(x: &V) -> Vec<(Rat, Sym)> {
    if special(x) {
        vec![]
    } else {
        vec![(rat(1), Sym::S4(x.clone()))]
    }
}

/// `{x,y}_{2,1}` with the boundary specializations
/// `{0,y} = -{y}_3`, `{∞,y} = 0`, `{x,1} = -{1-x}_3`.
pub fn s21(x: &V, y: &V) -> Vec<(Rat, Sym)> {
    if value::is_inf(x) {
        return vec![];
    }
    if value::is_zero(x) {
        return scale(rat(-1), s3(y));
    }
    if value::is_one(y) {
        return scale(rat(-1), s3(&value::one_minus(x)));
    }
    vec![(rat(1), Sym::S21(x.clone(), y.clone()))]
}

/// `{x,y}_{3,1}` with the boundary specializations
/// `{1,y} = 0`, `{x,0} = -{x}_4`, `{x,1} = -{1-1/x}_4 - {1-x}_4 + {x}_4`.
pub fn s31(x: &V, y: &V) -> Vec<(Rat, Sym)> {
    if value::is_one(x) {
        return vec![];
    }
    if value::is_zero(y) {
        return scale(rat(-1), s4(x));
    }
    if value::is_one(y) {
        let mut out = scale(rat(-1), s4(&value::one_minus_inv(x)));
        out.extend(scale(rat(-1), s4(&value::one_minus(x))));
        out.extend(s4(x));
        return out;
    }
    vec![(rat(1), Sym::S31(x.clone(), y.clone()))]
}

pub fn scale(c: Rat, terms: Vec<(Rat, Sym)>) -> Vec<(Rat, Sym)> {
    terms.into_iter().map(|(k, s)| (&c * &k, s)).collect()
}

/// Collect a weight-3 element into a canonical linear combination, using the
/// inversion symmetry `{x}_3 = {1/x}_3` (Ord-least representative kept).
pub fn collect_weight3(e: &LieElem) -> exact_core::LinComb<Sym> {
    let mut out = exact_core::LinComb::zero();
    for (c, s) in &e.terms {
        let key = match s {
            Sym::S3(x) => {
                let ix = value::inv(x);
                Sym::S3(if ix < *x { ix } else { x.clone() })
            }
            other => other.clone(),
        };
        out.add_term(key, c.clone());
    }
    out
}
