//! Correlator symbols: a base point and a cyclic word of arguments, with the
//! cut coproduct, rewriting of low-weight factors, and depth reduction by
//! inclusion–exclusion on the base point.

use crate::coproduct::{ComplexElem, W3};
use crate::lie::{s21, s3, Sym};
use crate::value::{self, V};
use crate::MsError;
use configurations::{cross_ratio_bracket, PointP1};
use exact_core::{rat, Rat};

/// Global orientation of the cut coproduct, fixed so that the weight-2
/// coproduct of `Cor_∞(b₁,b₂,b₃)` is
/// (b₂−b₁)∧(b₁−b₃) + (b₁−b₃)∧(b₃−b₂) + (b₃−b₂)∧(b₂−b₁).
const CUT_SIGN: i64 = -1;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CorrelatorSym {
    pub base: V,
    /// cyclic word, stored in its lexicographically least rotation
    pub args: Vec<V>,
}

impl CorrelatorSym {
    pub fn new(base: V, args: Vec<V>) -> Self {
        let n = args.len();
        let least = (0..n)
            .map(|r| {
                (0..n).map(|i| args[(r + i) % n].clone()).collect::<Vec<_>>()
            })
            .min()
            .unwrap_or_default();
        CorrelatorSym { base, args: least }
    }

    pub fn weight(&self) -> usize {
        self.args.len().saturating_sub(1)
    }

    /// A correlator with an argument equal to its own base point is zero.
    pub fn is_zero(&self) -> bool {
        self.args.iter().any(|a| *a == self.base)
    }
}

/// A factor produced by cutting a correlator: the weight-1 and weight-2 arcs
/// are rewritten as a multiplicative-group element and a dilogarithm symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorFactor {
    /// weight 1 over the base ∞: the difference b₀ − b₁
    Unit(V),
    /// weight 2: `{[a,b,c,d]}_2`
    B2(V),
    /// weight ≥ 3, or weight 1 over a finite base
    Cor(CorrelatorSym),
}

/// Rewrites an arc into a factor; `None` if the factor is zero (degenerate
/// cross-ratio, equal weight-1 endpoints, or an argument at the base point).
fn arc_factor(base: &V, arc: &[V]) -> Option<CorFactor> {
    if arc.iter().any(|a| a == base) {
        return None;
    }
    match arc.len() {
        2 => {
            let d = value::sub(&arc[0], &arc[1]);
            if value::is_zero(&d) {
                return None;
            }
            if value::is_inf(base) {
                Some(CorFactor::Unit(d))
            } else {
                // reduction to the base at ∞: (p−q)/((a−p)(a−q)), the sign
                // being torsion that every downstream functional kills
                let u = value::div(
                    &d,
                    &value::mul(
                        &value::sub(base, &arc[0]),
                        &value::sub(base, &arc[1]),
                    ),
                );
                Some(CorFactor::Unit(u))
            }
        }
        3 => {
            let c = cross_ratio_bracket(&[
                base.clone(),
                arc[0].clone(),
                arc[1].clone(),
                arc[2].clone(),
            ])
            .ok()
            .map(PointP1::Finite)?;
            if value::is_zero(&c) || value::is_one(&c) {
                None
            } else {
                Some(CorFactor::B2(c))
            }
        }
        _ => Some(CorFactor::Cor(CorrelatorSym::new(base.clone(), arc.to_vec()))),
    }
}

/// The cut coproduct: for every ordered pair of distinct marked positions
/// (i, j) the word splits into the arcs b_i…b_j and b_j…b_{i−1}; arcs of
/// weight zero are skipped. Terms whose factors vanish are dropped.
pub fn correlator_coproduct(c: &CorrelatorSym) -> Vec<(Rat, CorFactor, CorFactor)> {
    let n = c.args.len(); // weight m = n − 1
    let mut out = Vec::new();
    if c.is_zero() || n < 3 {
        return out;
    }
    for i in 0..n {
        for j in 0..n {
            let w1 = (j + n - i) % n;
            if w1 == 0 || w1 == n - 1 {
                continue; // one of the two arcs would carry weight zero
            }
            let w2 = n - 1 - w1;
            let arc1: Vec<V> = (0..=w1).map(|k| c.args[(i + k) % n].clone()).collect();
            let arc2: Vec<V> = (0..=w2).map(|k| c.args[(j + k) % n].clone()).collect();
            let (Some(f1), Some(f2)) = (arc_factor(&c.base, &arc1), arc_factor(&c.base, &arc2))
            else {
                continue;
            };
            out.push((rat(CUT_SIGN), f1, f2));
        }
    }
    out
}

/// Express a weight-3 correlator over the base ∞ through the depth-two
/// symbols, using shift and rescale invariance:
/// `Cor_∞(0,x,1,y) = {x,y}_{2,1}` and `Cor_∞(0,0,1,y) = −{y}_3`.
pub fn w3_of_correlator(c: &CorrelatorSym) -> Result<Vec<(Rat, W3)>, MsError> {
    if !value::is_inf(&c.base) || c.args.len() != 4 {
        return Err(MsError::ShapeMismatch(
            "weight-3 rewriting needs four arguments over the base ∞".into(),
        ));
    }
    if c.is_zero() {
        return Ok(vec![]);
    }
    let a = &c.args;
    // a rotation with a repeated adjacent pair first, if any
    let pair_rot = (0..4).find(|&r| a[r] == a[(r + 1) % 4]);
    let sym3: Vec<(Rat, Sym)> = if let Some(r) = pair_rot {
        let z = &a[r];
        let u = value::sub(&a[(r + 2) % 4], z);
        let v = value::sub(&a[(r + 3) % 4], z);
        if value::is_zero(&u) || value::is_zero(&v) {
            return Err(MsError::Degenerate("three coincident arguments".into()));
        }
        // Cor_∞(0,0,u,v) = −{v/u}_3
        crate::lie::scale(rat(-1), s3(&value::div(&v, &u)))
    } else {
        // all windows distinct: shift a₀ to 0 and rescale a₂ to 1
        let d = value::sub(&a[2], &a[0]);
        if value::is_zero(&d) {
            return Err(MsError::Degenerate(
                "opposite arguments coincide; no normalizing rotation".into(),
            ));
        }
        let x = value::div(&value::sub(&a[1], &a[0]), &d);
        let y = value::div(&value::sub(&a[3], &a[0]), &d);
        s21(&x, &y)
    };
    sym3
        .into_iter()
        .map(|(k, s)| {
            Ok((
                k,
                match s {
                    Sym::S3(x) => W3::S3(x),
                    Sym::S21(x, y) => W3::S21(x, y),
                    Sym::One3 => W3::One3,
                    other => {
                        return Err(MsError::ShapeMismatch(format!(
                            "unexpected weight-3 rewrite {other:?}"
                        )))
                    }
                },
            ))
        })
        .collect()
}

/// Collect cut terms into tensor-complex components: the heavier factor goes
/// to the left slot, with a sign when the wedge had it on the right.
pub fn cuts_to_complex(terms: &[(Rat, CorFactor, CorFactor)]) -> Result<ComplexElem, MsError> {
    let mut out = ComplexElem::default();
    for (c, f1, f2) in terms {
        match (f1, f2) {
            (CorFactor::Unit(u), CorFactor::Unit(v)) => out.l2u.push((c.clone(), u.clone(), v.clone())),
            (CorFactor::B2(a), CorFactor::Unit(u)) => out.b2_u.push((c.clone(), a.clone(), u.clone())),
            (CorFactor::Unit(u), CorFactor::B2(a)) => out.b2_u.push((-c.clone(), a.clone(), u.clone())),
            (CorFactor::B2(a), CorFactor::B2(b)) => out.l2b2.push((c.clone(), a.clone(), b.clone())),
            (CorFactor::Cor(s), CorFactor::Unit(u)) if s.weight() == 3 => {
                for (k, w) in w3_of_correlator(s)? {
                    out.b3_u.push((c * &k, w, u.clone()));
                }
            }
            (CorFactor::Unit(u), CorFactor::Cor(s)) if s.weight() == 3 => {
                for (k, w) in w3_of_correlator(s)? {
                    out.b3_u.push((-(c * &k), w, u.clone()));
                }
            }
            other => {
                return Err(MsError::ShapeMismatch(format!(
                    "cut factors not collectible: {other:?}"
                )))
            }
        }
    }
    Ok(out)
}

/// Depth reduction by moving the base point: the inclusion–exclusion sum over
/// subsets of argument positions replaced by the old base. Terms with an
/// argument at the new base vanish and are dropped.
pub fn correlator_depth_reduce(c: &CorrelatorSym, new_base: &V) -> Vec<(Rat, CorrelatorSym)> {
    let n = c.args.len();
    let mut out = Vec::new();
    if *new_base == c.base {
        out.push((rat(1), c.clone()));
        return out;
    }
    for mask in 0u32..(1 << n) {
        let args: Vec<V> = (0..n)
            .map(|i| {
                if mask & (1 << i) != 0 {
                    c.base.clone()
                } else {
                    c.args[i].clone()
                }
            })
            .collect();
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        let s = CorrelatorSym::new(new_base.clone(), args);
        if !s.is_zero() {
            out.push((rat(sign), s));
        }
    }
    out
}
