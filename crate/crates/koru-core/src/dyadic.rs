//! Depth-m dyadic rationals, digital shifts and Walsh functions.
//!
//! A `Dyadic` is x = num / 2^m with num in {0,..,2^m-1}. Reading the
//! m-bit window of num from the most significant bit down gives the
//! digits xi_1, xi_2, ..., xi_m of x = xi_1/2 + ... + xi_m/2^m.
//!
//! The k-th Walsh function is (-1)^(xi_1 k_0 + xi_2 k_1 + ... + xi_m k_{m-1}):
//! the MOST significant fractional digit of x pairs with the LEAST
//! significant bit of k. This pairing is realized once, here, by an m-bit
//! reversal of the numerator; everything downstream inherits it.

use crate::error::{Error, Result};
use crate::frac::DyadicFrac;

/// x = num / 2^m in [0, 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dyadic {
    pub num: u32,
    pub m: u32,
}

/// b = num / 2^m in [0, 1]; only used for box upper bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtendedDyadic {
    pub num: u32,
    pub m: u32,
}

impl Dyadic {
    pub fn new(num: u32, m: u32) -> Self {
        debug_assert!(m >= 1 && num < (1 << m));
        Dyadic { num, m }
    }

    pub fn zero(m: u32) -> Self {
        Dyadic { num: 0, m }
    }

    pub fn value(self) -> f64 {
        self.num as f64 / (1u64 << self.m) as f64
    }

    pub fn frac(self) -> DyadicFrac {
        DyadicFrac::new(self.num as i128, self.m)
    }

    /// Digit-wise addition mod 2: XOR of the numerators.
    pub fn digital_shift(self, sigma: Dyadic) -> Result<Dyadic> {
        if self.m != sigma.m {
            return Err(Error::ScaleMismatch(self.m, sigma.m));
        }
        Ok(Dyadic { num: self.num ^ sigma.num, m: self.m })
    }
}

impl ExtendedDyadic {
    pub fn new(num: u32, m: u32) -> Self {
        debug_assert!(m >= 1 && num <= (1 << m));
        ExtendedDyadic { num, m }
    }

    pub fn one(m: u32) -> Self {
        ExtendedDyadic { num: 1 << m, m }
    }

    pub fn value(self) -> f64 {
        self.num as f64 / (1u64 << self.m) as f64
    }

    pub fn frac(self) -> DyadicFrac {
        DyadicFrac::new(self.num as i128, self.m)
    }
}

/// Reverse the low m bits of v.
pub fn bit_reverse(v: u32, m: u32) -> u32 {
    v.reverse_bits() >> (32 - m)
}

/// wal_k(x) for k < 2^m: parity of popcount(bit_reverse_m(x.num) & k).
pub fn walsh(k: u32, x: Dyadic) -> Result<i32> {
    if k >= 1 << x.m {
        return Err(Error::FrequencyOutOfRange { k: k as u64, m: x.m });
    }
    let paired = bit_reverse(x.num, x.m) & k;
    Ok(if paired.count_ones().is_multiple_of(2) { 1 } else { -1 })
}

/// Product Walsh function over s coordinates.
pub fn walsh_vec(k: &[u32], x: &[Dyadic]) -> Result<i32> {
    if k.len() != x.len() {
        return Err(Error::DimensionMismatch(k.len(), x.len()));
    }
    let mut sign = 1;
    for (&kj, &xj) in k.iter().zip(x) {
        sign *= walsh(kj, xj)?;
    }
    Ok(sign)
}

/// An s-vector of shifts sharing one scale m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftVector {
    pub coords: Vec<Dyadic>,
}

impl ShiftVector {
    pub fn new(coords: Vec<Dyadic>) -> Result<Self> {
        if let Some(first) = coords.first() {
            let m = first.m;
            for c in &coords {
                if c.m != m {
                    return Err(Error::ScaleMismatch(m, c.m));
                }
            }
        }
        Ok(ShiftVector { coords })
    }

    pub fn zero(m: u32, s: usize) -> Self {
        ShiftVector { coords: vec![Dyadic::zero(m); s] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}
