//! Exact arithmetic on dyadic fractions num / 2^exp.
//!
//! Every exact quantity in this crate (point coordinates, box volumes,
//! local discrepancies, Walsh coefficients and their products) has a
//! power-of-two denominator, so a single signed-numerator type covers all
//! of them without a bignum dependency. Numerators live in i128; callers
//! are responsible for staying inside the documented scale budgets.

use std::cmp::Ordering;

/// A signed dyadic rational num / 2^exp, kept normalized (num odd or zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DyadicFrac {
    num: i128,
    exp: u32,
}

impl DyadicFrac {
    pub const ZERO: DyadicFrac = DyadicFrac { num: 0, exp: 0 };
    pub const ONE: DyadicFrac = DyadicFrac { num: 1, exp: 0 };

    pub fn new(num: i128, exp: u32) -> Self {
        DyadicFrac { num, exp }.normalize()
    }

    pub fn from_int(n: i128) -> Self {
        DyadicFrac { num: n, exp: 0 }
    }

    fn normalize(mut self) -> Self {
        if self.num == 0 {
            self.exp = 0;
        } else {
            while self.exp > 0 && self.num % 2 == 0 {
                self.num /= 2;
                self.exp -= 1;
            }
        }
        self
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn denominator_log2(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn abs(self) -> Self {
        DyadicFrac { num: self.num.abs(), exp: self.exp }
    }

    /// Division by a power of two is exact and always representable.
    pub fn div_pow2(self, e: u32) -> Self {
        DyadicFrac { num: self.num, exp: self.exp + e }.normalize()
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / (self.exp as f64).exp2()
    }
}

impl std::ops::Neg for DyadicFrac {
    type Output = Self;
    fn neg(self) -> Self {
        DyadicFrac { num: -self.num, exp: self.exp }
    }
}

impl std::ops::Add for DyadicFrac {
    type Output = Self;
    fn add(self, other: Self) -> Self {
        let exp = self.exp.max(other.exp);
        let a = self.num << (exp - self.exp);
        let b = other.num << (exp - other.exp);
        DyadicFrac { num: a + b, exp }.normalize()
    }
}

impl std::ops::Sub for DyadicFrac {
    type Output = Self;
    fn sub(self, other: Self) -> Self {
        self + -other
    }
}

impl std::ops::Mul for DyadicFrac {
    type Output = Self;
    fn mul(self, other: Self) -> Self {
        DyadicFrac { num: self.num * other.num, exp: self.exp + other.exp }.normalize()
    }
}

impl PartialOrd for DyadicFrac {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DyadicFrac {
    fn cmp(&self, other: &Self) -> Ordering {
        let exp = self.exp.max(other.exp);
        let a = self.num << (exp - self.exp);
        let b = other.num << (exp - other.exp);
        a.cmp(&b)
    }
}

impl std::fmt::Display for DyadicFrac {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}
