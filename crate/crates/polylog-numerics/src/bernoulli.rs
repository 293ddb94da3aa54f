use exact_core::{rat, Rat};

/// Bernoulli number B_k in the convention B₁ = −1/2 (the one that makes the
/// single-valued dilogarithm equal Bloch–Wigner; pinned by a test).
pub fn bernoulli(k: usize) -> Rat {
    bernoulli_upto(k).pop().unwrap()
}

pub(crate) fn bernoulli_upto(k: usize) -> Vec<Rat> {
    // Σ_{j=0}^{m} C(m+1, j) B_j = 0 for m ≥ 1
    let mut b: Vec<Rat> = vec![rat(1)];
    for m in 1..=k {
        let mut acc = rat(0);
        let mut binom = rat(1); // C(m+1, j)
        for (j, bj) in b.iter().enumerate() {
            acc += &binom * bj;
            binom = binom * rat((m + 1 - j) as i64) / rat((j + 1) as i64);
        }
        b.push(-acc / rat((m + 1) as i64));
    }
    b
}
