//! Evaluation budget for the enumeration-heavy routines, expressed as a
//! total count of elementary box/count operations. One knob, overridable
//! through the KORU_BUDGET environment variable.

pub const DEFAULT_BUDGET: u128 = 100_000_000;

pub fn evaluation_budget() -> u128 {
    match std::env::var("KORU_BUDGET") {
        Ok(v) => v.parse().unwrap_or(DEFAULT_BUDGET),
        Err(_) => DEFAULT_BUDGET,
    }
}

/// 2^bits, saturating far beyond any sane budget instead of overflowing.
pub fn pow2_saturating(bits: u32) -> u128 {
    if bits >= 127 {
        u128::MAX
    } else {
        1u128 << bits
    }
}
