//! Alternating word algebra: expand a wedge of linear forms over an ordered
//! alphabet into the canonical basis of sorted words with sign normalization.

use crate::{LinComb, Rat};
use num_traits::One;

/// Sort `letters`, returning the permutation sign, or None on a repeat.
pub fn sort_with_sign<L: Ord + Clone>(letters: &[L]) -> Option<(Vec<L>, i64)> {
    let mut v: Vec<L> = letters.to_vec();
    let mut sign = 1i64;
    // insertion sort; word lengths are at most 4
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j] < v[j - 1] {
            v.swap(j, j - 1);
            sign = -sign;
            j -= 1;
        }
    }
    for w in v.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some((v, sign))
}

/// Multilinear alternating expansion of f_1 ^ ... ^ f_k, where each f_i is a
/// linear combination of letters. Result is over canonical sorted words.
pub fn wedge<L: Ord + Clone>(factors: &[&LinComb<L>]) -> LinComb<Vec<L>> {
    let mut out: LinComb<Vec<L>> = LinComb::single(Vec::new(), Rat::one());
    for f in factors {
        let mut next: LinComb<Vec<L>> = LinComb::zero();
        for (word, c) in out.iter() {
            for (l, d) in f.iter() {
                let mut w = word.clone();
                w.push(l.clone());
                if let Some((sorted, sign)) = sort_with_sign(&w) {
                    next.add_term(sorted, c * d * crate::rat(sign));
                }
            }
        }
        out = next;
    }
    out
}

/// Wedge of two alternating words (concatenate and re-sort with sign).
pub fn wedge_words<L: Ord + Clone>(
    a: &LinComb<Vec<L>>,
    b: &LinComb<Vec<L>>,
) -> LinComb<Vec<L>> {
    let mut out = LinComb::zero();
    for (wa, ca) in a.iter() {
        for (wb, cb) in b.iter() {
            let mut w = wa.clone();
            w.extend(wb.iter().cloned());
            if let Some((sorted, sign)) = sort_with_sign(&w) {
                out.add_term(sorted, ca * cb * crate::rat(sign));
            }
        }
    }
    out
}
