use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumError {
    #[error("argument in the unit-circle guard band: {0}")]
    GuardBand(String),
    #[error("tolerance unreachable within the term budget: {0}")]
    PrecisionUnreachable(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
}

#[derive(Debug, Clone, Copy)]
pub struct PrecisionPolicy {
    /// working precision in bits
    pub bits: usize,
    /// absolute tolerance for internal series tails
    pub tail_tol_log10: i32,
    /// hard cap on series terms
    pub max_terms: usize,
    /// reject |z| strictly inside (guard_lo, guard_hi) unless |z| = 1 exactly
    pub guard_lo: f64,
    pub guard_hi: f64,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy {
            bits: 192,
            tail_tol_log10: -20,
            max_terms: 20_000_000,
            guard_lo: 0.999,
            guard_hi: 1.001,
        }
    }
}

impl PrecisionPolicy {
    /// Scale the tail target with the mantissa, keeping the default pair
    /// (192 bits, 10⁻²⁰) fixed; the target is clamped to [-45, -10] and is
    /// always negative.
    pub fn with_bits(bits: usize) -> Self {
        let t = (-((20 * bits) as i32) / 192).clamp(-45, -10);
        PrecisionPolicy {
            bits,
            tail_tol_log10: t,
            ..Default::default()
        }
    }
}
