//! Independent oracles used only by the integration tests: these
//! deliberately avoid the library's own code paths for the quantities
//! they check.

/// First m fractional binary digits of g(x)/p(x), by schoolbook Laurent
/// long division on raw coefficient masks (bit i = coefficient of x^i).
/// Assumes deg g < m = deg p.
pub fn laurent_digits(g: u64, p: u64, m: u32) -> u32 {
    let mut state = g;
    let mut digits = 0u32;
    for _ in 0..m {
        state <<= 1;
        digits <<= 1;
        if state >> m & 1 == 1 {
            digits |= 1;
            state ^= p;
        }
    }
    digits
}

/// Positive root of f(t) = t^2 - (2/3) L t - 2 B L by bisection.
pub fn bisect_t_zero(l: f64, b: f64) -> f64 {
    let f = |t: f64| t * t - 2.0 / 3.0 * l * t - 2.0 * b * l;
    let mut hi = 1.0;
    while f(hi) < 0.0 {
        hi *= 2.0;
    }
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = (lo + hi) / 2.0;
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo + hi) / 2.0
}

/// One pass/fail line per criterion; panics on failure so the harness
/// also reports it.
pub fn criterion(name: &str, instances: u64, failures: &[String]) {
    if failures.is_empty() {
        println!("acceptance {name}: PASS ({instances} instances)");
    } else {
        println!("acceptance {name}: FAIL ({} violations)", failures.len());
        panic!("{name}: {:?}", &failures[..failures.len().min(5)]);
    }
}
