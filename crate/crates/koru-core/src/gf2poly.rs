//! Polynomials over GF(2) encoded as bitmasks: bit i is the coefficient
//! of x^i, so the mask value equals the integer identified with the
//! polynomial. Addition is XOR, multiplication is carryless shift-XOR.
//!
//! The 64-bit mask admits degrees up to 63, so products of two
//! polynomials of degree < m stay in range for every scale m <= 31.

use crate::error::{Error, Result};

/// Largest scale m for which products of two degree-<m polynomials fit
/// in the 64-bit mask.
pub const MAX_SCALE: u32 = 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf2Poly(pub u64);

impl Gf2Poly {
    pub const ZERO: Gf2Poly = Gf2Poly(0);
    pub const ONE: Gf2Poly = Gf2Poly(1);
    /// The monomial x.
    pub const X: Gf2Poly = Gf2Poly(2);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Degree as the index of the highest set bit; `None` for the zero
    /// polynomial (degree minus infinity).
    pub fn degree(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros())
        }
    }

    /// Long division: returns (quotient, remainder) with
    /// deg(remainder) < deg(divisor).
    pub fn divmod(self, divisor: Gf2Poly) -> Result<(Gf2Poly, Gf2Poly)> {
        let d = divisor.degree().ok_or(Error::ZeroModulus)?;
        let mut rem = self.0;
        let mut quo = 0u64;
        while let Some(r) = Gf2Poly(rem).degree() {
            if r < d {
                break;
            }
            let shift = r - d;
            quo ^= 1 << shift;
            rem ^= divisor.0 << shift;
        }
        Ok((Gf2Poly(quo), Gf2Poly(rem)))
    }

    // not std::ops::Rem: division by zero is a recoverable error here
    #[allow(clippy::should_implement_trait)]
    pub fn rem(self, modulus: Gf2Poly) -> Result<Gf2Poly> {
        Ok(self.divmod(modulus)?.1)
    }

    /// (self * other) mod p.
    pub fn mul_mod(self, other: Gf2Poly, p: Gf2Poly) -> Result<Gf2Poly> {
        if p.degree().unwrap_or(0) < 1 {
            return Err(Error::ZeroModulus);
        }
        (self * other).rem(p)
    }

    /// self^e mod p by square-and-multiply; self^0 = 1 mod p.
    pub fn pow_mod(self, e: u64, p: Gf2Poly) -> Result<Gf2Poly> {
        if p.degree().unwrap_or(0) < 1 {
            return Err(Error::ZeroModulus);
        }
        let mut base = self.rem(p)?;
        let mut result = Gf2Poly::ONE.rem(p)?;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_mod(base, p)?;
            }
            base = base.mul_mod(base, p)?;
            e >>= 1;
        }
        Ok(result)
    }

    /// Irreducibility over GF(2) by trial division against every
    /// polynomial of degree 1..=deg/2. Deterministic, desk scale.
    pub fn is_irreducible(self) -> Result<bool> {
        let d = self.degree().ok_or(Error::DegreeZero)?;
        if d == 0 {
            return Err(Error::DegreeZero);
        }
        // every mask in 2..2^(d/2+1) has degree in 1..=d/2
        for f in 2u64..1u64 << (d / 2 + 1) {
            let f = Gf2Poly(f);
            if self.rem(f)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_hex(self) -> String {
        format!("0x{:x}", self.0)
    }

    pub fn from_hex(s: &str) -> Result<Gf2Poly> {
        let t = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")).unwrap_or(s);
        u64::from_str_radix(t, 16)
            .map(Gf2Poly)
            .map_err(|e| Error::Parse(format!("bad polynomial mask {s:?}: {e}")))
    }
}

/// Coefficient-wise addition mod 2.
impl std::ops::Add for Gf2Poly {
    type Output = Gf2Poly;
    #[allow(clippy::suspicious_arithmetic_impl)] // GF(2) addition IS xor
    fn add(self, other: Gf2Poly) -> Gf2Poly {
        Gf2Poly(self.0 ^ other.0)
    }
}

/// Carryless product. Panics on overflow of the 64-bit mask in debug
/// builds; callers stay within `MAX_SCALE`.
impl std::ops::Mul for Gf2Poly {
    type Output = Gf2Poly;
    fn mul(self, other: Gf2Poly) -> Gf2Poly {
        let mut acc = 0u64;
        let mut a = self.0;
        let mut b = other.0;
        while b != 0 {
            if b & 1 != 0 {
                acc ^= a;
            }
            a <<= 1;
            b >>= 1;
        }
        Gf2Poly(acc)
    }
}

/// Multiply by x^e.
impl std::ops::Shl<u32> for Gf2Poly {
    type Output = Gf2Poly;
    fn shl(self, e: u32) -> Gf2Poly {
        Gf2Poly(self.0 << e)
    }
}

/// All 2^m polynomials of degree < m, in ascending integer order.
pub fn enumerate_gm(m: u32) -> impl Iterator<Item = Gf2Poly> {
    assert!((1..=MAX_SCALE).contains(&m), "scale out of range");
    (0..1u64 << m).map(Gf2Poly)
}

/// All irreducible polynomials of degree exactly m, ascending.
pub fn irreducible_polys(m: u32) -> Vec<Gf2Poly> {
    assert!((1..=MAX_SCALE).contains(&m), "scale out of range");
    (1u64 << m..1u64 << (m + 1))
        .map(Gf2Poly)
        .filter(|p| p.is_irreducible().unwrap())
        .collect()
}

/// Smallest irreducible polynomial of degree m in integer order; the
/// default modulus for "auto" configurations.
pub fn smallest_irreducible(m: u32) -> Gf2Poly {
    irreducible_polys(m)[0]
}

impl std::fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_hex())
    }
}
