use crate::{Config, ConfigError};
use exact_core::{GaussianRational, Rat};

/// A formal rational expression in point labels, evaluable at any config
/// with enough points. Identities get stated once as expressions and then
/// specialized at several configurations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RatExpr {
    Const(Rat),
    Bracket(Vec<usize>),
    CrossR(usize, usize, usize, usize),
    Neg(Box<RatExpr>),
    Add(Box<RatExpr>, Box<RatExpr>),
    Sub(Box<RatExpr>, Box<RatExpr>),
    Mul(Box<RatExpr>, Box<RatExpr>),
    Div(Box<RatExpr>, Box<RatExpr>),
}

impl RatExpr {
    pub fn int(n: i64) -> Self {
        RatExpr::Const(exact_core::rat(n))
    }

    pub fn bracket(idx: &[usize]) -> Self {
        RatExpr::Bracket(idx.to_vec())
    }

    pub fn eval(&self, c: &Config) -> Result<GaussianRational, ConfigError> {
        Ok(match self {
            RatExpr::Const(q) => GaussianRational::from_rat(q.clone()),
            RatExpr::Bracket(idx) => c.bracket(idx)?,
            RatExpr::CrossR(i, j, k, l) => c.cross_ratio_r(*i, *j, *k, *l)?,
            RatExpr::Neg(a) => -&a.eval(c)?,
            RatExpr::Add(a, b) => &a.eval(c)? + &b.eval(c)?,
            RatExpr::Sub(a, b) => &a.eval(c)? - &b.eval(c)?,
            RatExpr::Mul(a, b) => &a.eval(c)? * &b.eval(c)?,
            RatExpr::Div(a, b) => {
                let d = b.eval(c)?;
                if d.is_zero() {
                    return Err(ConfigError::Degenerate("division by zero".into()));
                }
                &a.eval(c)? / &d
            }
        })
    }
}

macro_rules! expr_op {
    ($trait:ident, $method:ident, $variant:ident) => {
        impl std::ops::$trait for RatExpr {
            type Output = RatExpr;
            fn $method(self, rhs: RatExpr) -> RatExpr {
                RatExpr::$variant(Box::new(self), Box::new(rhs))
            }
        }
    };
}

expr_op!(Add, add, Add);
expr_op!(Sub, sub, Sub);
expr_op!(Mul, mul, Mul);
expr_op!(Div, div, Div);

impl std::ops::Neg for RatExpr {
    type Output = RatExpr;
    fn neg(self) -> RatExpr {
        RatExpr::Neg(Box::new(self))
    }
}
