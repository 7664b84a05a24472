//! Walsh coefficients c_k(b) of the indicator of [0, b).
//!
//! c_k(b) = 2^{-m} sum_{v=0}^{b 2^m - 1} wal_k(v/2^m), so c_0(b) = b and
//! 1_{[0,b)}(x) = sum_{k<2^m} c_k(b) wal_k(x) for x in Q_{2^m}. The
//! numerators are integers over 2^m, so the whole module works in exact
//! dyadic arithmetic.

use crate::dyadic::{bit_reverse, walsh, Dyadic, ExtendedDyadic};
use crate::error::{Error, Result};
use crate::frac::DyadicFrac;

/// All 2^m coefficient numerators for one upper bound b: values[k] is
/// 2^m * c_k(b).
#[derive(Debug, Clone)]
pub struct CoeffTable {
    pub m: u32,
    pub b: ExtendedDyadic,
    pub numerators: Vec<i64>,
}

impl CoeffTable {
    /// Builds the table in O(m 2^m) by a Walsh-Hadamard transform of the
    /// indicator vector of {0,..,b 2^m - 1}, permuted by the m-bit
    /// reversal that realizes the digit pairing convention.
    pub fn build(b: ExtendedDyadic) -> CoeffTable {
        let m = b.m;
        let n = 1usize << m;
        let mut a = vec![0i64; n];
        for v in 0..b.num as usize {
            a[bit_reverse(v as u32, m) as usize] = 1;
        }
        let mut half = 1;
        while half < n {
            for start in (0..n).step_by(half * 2) {
                for i in start..start + half {
                    let (u, w) = (a[i], a[i + half]);
                    a[i] = u + w;
                    a[i + half] = u - w;
                }
            }
            half *= 2;
        }
        CoeffTable { m, b, numerators: a }
    }

    /// c_k(b) as an exact dyadic rational.
    pub fn coeff(&self, k: u32) -> Result<DyadicFrac> {
        if k >= 1 << self.m {
            return Err(Error::FrequencyOutOfRange { k: k as u64, m: self.m });
        }
        Ok(DyadicFrac::new(self.numerators[k as usize] as i128, self.m))
    }

    /// Evaluates the Walsh series sum_k c_k wal_k(x) exactly; the result
    /// is always 0 or 1 for x in Q_{2^m}.
    pub fn series_at(&self, x: Dyadic) -> Result<i128> {
        if x.m != self.m {
            return Err(Error::ScaleMismatch(x.m, self.m));
        }
        let mut acc: i128 = 0;
        for k in 0..1u32 << self.m {
            acc += self.numerators[k as usize] as i128 * walsh(k, x)? as i128;
        }
        debug_assert!(acc % (1i128 << self.m) == 0);
        Ok(acc >> self.m)
    }
}

/// c_k(b) by direct summation of Walsh values. The stated defining sum;
/// `CoeffTable::build` is the fast route and must agree.
pub fn walsh_coeff(k: u32, b: ExtendedDyadic) -> Result<DyadicFrac> {
    if k >= 1 << b.m {
        return Err(Error::FrequencyOutOfRange { k: k as u64, m: b.m });
    }
    let mut sum: i64 = 0;
    for v in 0..b.num {
        sum += walsh(k, Dyadic::new(v, b.m))? as i64;
    }
    Ok(DyadicFrac::new(sum as i128, b.m))
}

/// Product coefficient c_k(b) = prod_j c_{k_j}(b_j).
pub fn walsh_coeff_vec(k: &[u32], b: &[ExtendedDyadic]) -> Result<DyadicFrac> {
    if k.len() != b.len() {
        return Err(Error::DimensionMismatch(k.len(), b.len()));
    }
    let mut acc = DyadicFrac::ONE;
    for (&kj, &bj) in k.iter().zip(b) {
        acc = acc * walsh_coeff(kj, bj)?;
    }
    Ok(acc)
}

/// Checkable oracle of the Walsh-series identity: evaluates the series
/// for 1_{[0,b)}(x) and asserts it matches the direct comparison x < b.
pub fn indicator_via_walsh(x: Dyadic, b: ExtendedDyadic) -> Result<u8> {
    if x.m != b.m {
        return Err(Error::ScaleMismatch(x.m, b.m));
    }
    let direct = u8::from(x.num < b.num);
    let series = CoeffTable::build(b).series_at(x)?;
    if series != direct as i128 {
        return Err(Error::InvariantViolation(format!(
            "Walsh series gives {series} but direct indicator is {direct} at x={}/2^{}, b={}/2^{}",
            x.num, x.m, b.num, b.m
        )));
    }
    Ok(direct)
}

/// Sum over every nonzero frequency vector of c_k(b) and of c_k(b)^2,
/// computed by brute force over all 2^{ms} vectors in exact arithmetic.
/// Callers compare against the closed forms 1 - prod(b) and
/// prod(b)(1 - prod(b)).
pub fn coeff_identity_report(b: &[ExtendedDyadic]) -> Result<(DyadicFrac, DyadicFrac)> {
    let s = b.len();
    if s == 0 {
        return Err(Error::InvalidParameter("empty bound vector".into()));
    }
    let m = b[0].m;
    for bj in b {
        if bj.m != m {
            return Err(Error::ScaleMismatch(m, bj.m));
        }
    }
    let total_bits = m as u128 * s as u128;
    if total_bits > 30 {
        return Err(Error::BudgetExceeded { needed: 1u128 << total_bits, budget: 1 << 30 });
    }
    let tables: Vec<CoeffTable> = b.iter().map(|&bj| CoeffTable::build(bj)).collect();
    let n = 1u64 << m;
    let mut sum = DyadicFrac::ZERO;
    let mut sum_sq = DyadicFrac::ZERO;
    let mut k = vec![0u32; s];
    loop {
        if k.iter().any(|&kj| kj != 0) {
            let mut c = DyadicFrac::ONE;
            for j in 0..s {
                c = c * tables[j].coeff(k[j])?;
            }
            sum = sum + c;
            sum_sq = sum_sq + c * c;
        }
        // odometer over {0,..,2^m-1}^s
        let mut j = 0;
        loop {
            if j == s {
                return Ok((sum, sum_sq));
            }
            k[j] += 1;
            if (k[j] as u64) < n {
                break;
            }
            k[j] = 0;
            j += 1;
        }
    }
}
