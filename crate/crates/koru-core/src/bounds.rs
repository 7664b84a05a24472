//! Bennett/Bernstein tail bounds and the discrepancy bound formulas.
//!
//! Convention: `delta` is the SUCCESS probability. A bound holds "with
//! probability at least delta", so larger delta asks for a stronger
//! guarantee and yields a larger threshold. This is the opposite of the
//! common 1-delta failure-rate convention.

use crate::error::{Error, Result};

/// Inputs of the bound calculator. `variance_budget` is the constant B
/// bounding the variance of the aggregated contributions; the Korobov
/// families satisfy B = s.
#[derive(Debug, Clone, Copy)]
pub struct BoundParams {
    pub m: u32,
    pub s: u32,
    pub delta: f64,
    pub variance_budget: f64,
    pub range_bound: f64,
}

impl BoundParams {
    pub fn new(m: u32, s: u32, delta: f64) -> Result<Self> {
        Self::with_variance(m, s, delta, s as f64)
    }

    pub fn with_variance(m: u32, s: u32, delta: f64, variance_budget: f64) -> Result<Self> {
        if !(delta > 0.0 && delta < 1.0) {
            return Err(Error::InvalidParameter(format!("delta must be in (0,1), got {delta}")));
        }
        if variance_budget <= 0.0 {
            return Err(Error::InvalidParameter("variance budget must be positive".into()));
        }
        Ok(BoundParams { m, s, delta, variance_budget, range_bound: 1.0 })
    }

    /// L = log(2 (2^m + 1)^s) - log(1 - delta), the union-bound log term.
    pub fn log_term(&self) -> f64 {
        2.0f64.ln() + self.s as f64 * ((1u64 << self.m) as f64 + 1.0).ln() - (1.0 - self.delta).ln()
    }
}

/// Bennett function h(u) = (1+u) log(1+u) - u.
pub fn bennett_h(u: f64) -> Result<f64> {
    if u < 0.0 {
        return Err(Error::InvalidParameter(format!("bennett_h needs u >= 0, got {u}")));
    }
    Ok((1.0 + u) * u.ln_1p() - u)
}

/// Two-sided Bennett tail: P(|S| >= t) <= 2 exp(-(v/c^2) h(ct/v)).
pub fn bennett_tail(v: f64, c: f64, t: f64) -> Result<f64> {
    if v <= 0.0 || c <= 0.0 {
        return Err(Error::InvalidParameter("bennett_tail needs v > 0 and c > 0".into()));
    }
    if t < 0.0 {
        return Err(Error::InvalidParameter("bennett_tail needs t >= 0".into()));
    }
    Ok((2.0 * (-(v / (c * c)) * bennett_h(c * t / v)?).exp()).clamp(0.0, 2.0))
}

/// Bernstein tail: P(|S| >= t) <= 2 exp(-t^2 / (2(v + ct/3))).
pub fn bernstein_tail(v: f64, c: f64, t: f64) -> Result<f64> {
    if v <= 0.0 || c <= 0.0 {
        return Err(Error::InvalidParameter("bernstein_tail needs v > 0 and c > 0".into()));
    }
    if t < 0.0 {
        return Err(Error::InvalidParameter("bernstein_tail needs t >= 0".into()));
    }
    Ok((2.0 * (-t * t / (2.0 * (v + c * t / 3.0))).exp()).clamp(0.0, 2.0))
}

/// Positive root of t^2 - (2/3) L t - 2 B L = 0 with
/// L = log(2 (2^m+1)^s) - log(1-delta): the smallest threshold at which
/// the union-bounded Bernstein tail drops to 1 - delta.
pub fn t_zero(params: &BoundParams) -> f64 {
    let l = params.log_term();
    let b = params.variance_budget;
    l / 3.0 * (1.0 + (1.0 + 18.0 * b / l).sqrt())
}

/// The constant (1/3)(1 + sqrt(1 + 18/log 3)) = 1.723... in front of the
/// theorem bounds.
pub fn leading_constant() -> f64 {
    (1.0 + (1.0 + 18.0 / 3.0f64.ln()).sqrt()) / 3.0
}

/// Discrepancy bound of the main theorems for a union with N = 2^{2m}
/// points: 1.723... * (s (log(2N) + 1) + log 2 - log(1-delta)) / sqrt(N).
pub fn theorem_bound(n: u64, s: u32, delta: f64) -> Result<f64> {
    if !n.is_power_of_two() || !n.trailing_zeros().is_multiple_of(2) || n < 4 {
        return Err(Error::InvalidParameter(format!("N must be 2^(2m) for some m >= 1, got {n}")));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::InvalidParameter(format!("delta must be in (0,1), got {delta}")));
    }
    let numer =
        s as f64 * ((2.0 * n as f64).ln() + 1.0) + 2.0f64.ln() - (1.0 - delta).ln();
    Ok(leading_constant() * numer / (n as f64).sqrt())
}

/// The generic-family bound: t_zero / 2^m + s / 2^m.
pub fn pgen_bound(params: &BoundParams) -> f64 {
    let pow = (1u64 << params.m) as f64;
    t_zero(params) / pow + params.s as f64 / pow
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bennett_h_values() {
        assert_eq!(bennett_h(0.0).unwrap(), 0.0);
        // h(e-1) = e*1 - (e-1) = 1
        assert!((bennett_h(std::f64::consts::E - 1.0).unwrap() - 1.0).abs() < 1e-12);
        assert!(bennett_h(-0.1).is_err());
    }

    #[test]
    fn bennett_h_dominates_bernstein_profile() {
        // h(u) >= u^2 / (2(1 + u/3)) on a log-spaced sample
        let mut u = 1e-6;
        while u <= 1e6 {
            let h = bennett_h(u).unwrap();
            let lower = u * u / (2.0 * (1.0 + u / 3.0));
            // the two sides agree to O(u^4) near 0, so allow float slack
            let slack = 1e-14 * u.max(u * u);
            assert!(h >= lower - slack, "u={u}");
            u *= 3.7;
        }
    }

    #[test]
    fn tails_at_zero_and_monotonicity() {
        assert_eq!(bennett_tail(2.0, 1.0, 0.0).unwrap(), 2.0);
        assert_eq!(bernstein_tail(2.0, 1.0, 0.0).unwrap(), 2.0);
        let mut prev = 2.0;
        for i in 1..50 {
            let t = i as f64 * 0.3;
            let cur = bennett_tail(2.0, 1.0, t).unwrap();
            assert!(cur <= prev);
            prev = cur;
        }
        assert!(bernstein_tail(3.0, 1.0, 1e9).unwrap() < 1e-300);
        assert!(bennett_tail(0.0, 1.0, 1.0).is_err());
        assert!(bernstein_tail(1.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn bennett_never_exceeds_bernstein() {
        for &v in &[0.01, 0.5, 1.0, 4.0, 100.0] {
            for &c in &[0.1, 1.0, 3.0] {
                for i in 0..40 {
                    let t = i as f64 * 0.5;
                    assert!(
                        bennett_tail(v, c, t).unwrap() <= bernstein_tail(v, c, t).unwrap() + 1e-15,
                        "v={v} c={c} t={t}"
                    );
                }
            }
        }
    }

    #[test]
    fn t_zero_solves_quadratic() {
        for m in 1..=10u32 {
            for s in 1..=10u32 {
                for &delta in &[0.1, 0.5, 0.9] {
                    let params = BoundParams::new(m, s, delta).unwrap();
                    let l = params.log_term();
                    let t0 = t_zero(&params);
                    let residual = t0 * t0 - 2.0 / 3.0 * l * t0 - 2.0 * s as f64 * l;
                    assert!(residual.abs() <= 1e-9 * t0 * t0, "m={m} s={s} delta={delta}");
                }
            }
        }
    }

    #[test]
    fn t_zero_monotone() {
        let base = t_zero(&BoundParams::new(4, 2, 0.5).unwrap());
        assert!(t_zero(&BoundParams::new(5, 2, 0.5).unwrap()) > base);
        assert!(t_zero(&BoundParams::new(4, 3, 0.5).unwrap()) > base);
        assert!(t_zero(&BoundParams::new(4, 2, 0.9).unwrap()) > base);
        assert!(BoundParams::new(4, 2, 1.0).is_err());
        assert!(BoundParams::new(4, 2, 0.0).is_err());
    }

    #[test]
    fn leading_constant_value() {
        let c = leading_constant();
        assert!((c - 1.7231).abs() <= 5e-4);
        assert!(c > 1.0);
    }

    #[test]
    fn theorem_bound_hand_value() {
        // N=256, s=2, delta=0.5: 1.723... * (2 (ln 512 + 1) + ln 2 - ln 0.5) / 16
        let expected = leading_constant()
            * (2.0 * (512.0f64.ln() + 1.0) + 2.0f64.ln() - 0.5f64.ln())
            / 16.0;
        assert!((theorem_bound(256, 2, 0.5).unwrap() - expected).abs() < 1e-14);
        assert!(theorem_bound(100, 2, 0.5).is_err());
        assert!(theorem_bound(8, 2, 0.5).is_err()); // 2^3 is not 2^(2m)
    }

    #[test]
    fn theorem_bound_monotonicity() {
        let mut prev = theorem_bound(1 << 4, 2, 0.5).unwrap();
        for e in (6..=20u32).step_by(2) {
            let cur = theorem_bound(1u64 << e, 2, 0.5).unwrap();
            assert!(cur < prev, "N=2^{e}");
            prev = cur;
        }
        assert!(theorem_bound(256, 2, 0.9).unwrap() > theorem_bound(256, 2, 0.1).unwrap());
    }

    #[test]
    fn pgen_reduces_to_t_zero_form() {
        let params = BoundParams::new(4, 2, 0.5).unwrap();
        let expected = t_zero(&params) / 16.0 + 2.0 / 16.0;
        assert!((pgen_bound(&params) - expected).abs() < 1e-15);
    }

    #[test]
    fn pgen_small_variance_limit() {
        // B -> 0+: bracket -> 2, bound -> 2L/(3 2^m) + s/2^m
        let params = BoundParams::with_variance(4, 2, 0.5, 1e-12).unwrap();
        let l = params.log_term();
        let limit = 2.0 * l / (3.0 * 16.0) + 2.0 / 16.0;
        assert!((pgen_bound(&params) - limit).abs() < 1e-6);
    }

    #[test]
    fn theorem_bound_dominates_pgen() {
        // Theorem 1 is a relaxation of the pgen formula at B = s
        for m in 1..=10u32 {
            for s in 1..=10u32 {
                for &delta in &[0.1, 0.5, 0.9] {
                    let params = BoundParams::new(m, s, delta).unwrap();
                    let thm = theorem_bound(1u64 << (2 * m), s, delta).unwrap();
                    assert!(
                        thm >= pgen_bound(&params) - 1e-12,
                        "m={m} s={s} delta={delta}"
                    );
                }
            }
        }
    }

    #[test]
    fn variance_scaled_bennett_profile_is_decreasing_in_v() {
        // g(v) = v h(t/v) decreases in v for fixed t
        for i in 1..=20 {
            let t = i as f64 * 0.37;
            let mut prev = f64::INFINITY;
            for j in 1..=30 {
                let v = j as f64 * 0.25;
                let g = v * bennett_h(t / v).unwrap();
                assert!(g <= prev + 1e-12, "t={t} v={v}");
                prev = g;
            }
        }
    }
}
