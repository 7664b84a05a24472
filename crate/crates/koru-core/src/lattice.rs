//! Korobov polynomial lattice point sets over GF(2) and their multiset
//! unions.
//!
//! The map nu_m sends g(x)/p(x) to the first m fractional binary digits
//! of its Laurent expansion. With deg g < m = deg p this is one long
//! division: the quotient of g(x) x^m by p(x) is exactly the numerator
//! sum_{l=1}^m a_{-l} 2^{m-l}.

use crate::dyadic::{Dyadic, ShiftVector};
use crate::error::{Error, Result};
use crate::gf2poly::Gf2Poly;
use rayon::prelude::*;

/// One s-dimensional point with depth-m dyadic coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub coords: Vec<Dyadic>,
}

/// An ordered multiset of points sharing scale m and dimension s,
/// stored as flat coordinate numerators. Multiplicity is preserved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    pub m: u32,
    pub s: usize,
    coords: Vec<u32>,
}

impl PointSet {
    pub fn new(m: u32, s: usize) -> Self {
        PointSet { m, s, coords: Vec::new() }
    }

    pub fn with_capacity(m: u32, s: usize, n: usize) -> Self {
        PointSet { m, s, coords: Vec::with_capacity(n * s) }
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.s
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn push(&mut self, point: &Point) -> Result<()> {
        if point.coords.len() != self.s {
            return Err(Error::DimensionMismatch(point.coords.len(), self.s));
        }
        for c in &point.coords {
            if c.m != self.m {
                return Err(Error::ScaleMismatch(c.m, self.m));
            }
            self.coords.push(c.num);
        }
        Ok(())
    }

    pub fn push_numerators(&mut self, nums: &[u32]) -> Result<()> {
        if nums.len() != self.s {
            return Err(Error::DimensionMismatch(nums.len(), self.s));
        }
        debug_assert!(nums.iter().all(|&n| n < 1 << self.m));
        self.coords.extend_from_slice(nums);
        Ok(())
    }

    /// Coordinate numerators of point i.
    pub fn point(&self, i: usize) -> &[u32] {
        &self.coords[i * self.s..(i + 1) * self.s]
    }

    pub fn iter_points(&self) -> impl Iterator<Item = &[u32]> {
        self.coords.chunks_exact(self.s)
    }

    pub fn extend(&mut self, other: &PointSet) -> Result<()> {
        if other.m != self.m {
            return Err(Error::ScaleMismatch(other.m, self.m));
        }
        if other.s != self.s {
            return Err(Error::DimensionMismatch(other.s, self.s));
        }
        self.coords.extend_from_slice(&other.coords);
        Ok(())
    }
}

/// nu_m(g/p): truncated Laurent expansion of g(x)/p(x) via the quotient
/// of g(x) x^m by p(x).
pub fn nu_m(g: Gf2Poly, p: Gf2Poly, m: u32) -> Result<Dyadic> {
    if p.degree() != Some(m) {
        return Err(Error::BadModulus { mask: p.0, expected: m });
    }
    let g = g.rem(p)?;
    let (quotient, _) = (g << m).divmod(p)?;
    Ok(Dyadic::new(quotient.0 as u32, m))
}

fn check_modulus(p: Gf2Poly, m: u32) -> Result<()> {
    if p.degree() != Some(m) || !p.is_irreducible()? {
        return Err(Error::BadModulus { mask: p.0, expected: m });
    }
    Ok(())
}

/// Point n of the Korobov lattice with generator q and modulus p:
/// coordinate j is nu_m(n q^{j-1} mod p).
pub fn korobov_point(n: u64, q: Gf2Poly, p: Gf2Poly, s: usize) -> Result<Point> {
    let m = p.degree().ok_or(Error::ZeroModulus)?;
    check_modulus(p, m)?;
    let npoly = Gf2Poly(n);
    let mut coords = Vec::with_capacity(s);
    let mut qpow = Gf2Poly::ONE;
    for _ in 0..s {
        coords.push(nu_m(npoly.mul_mod(qpow, p)?, p, m)?);
        qpow = qpow.mul_mod(q, p)?;
    }
    Ok(Point { coords })
}

/// The full Korobov polynomial lattice point set P_p(q): 2^m points in
/// index order.
pub fn korobov_set(q: Gf2Poly, p: Gf2Poly, s: usize) -> Result<PointSet> {
    let m = p.degree().ok_or(Error::ZeroModulus)?;
    check_modulus(p, m)?;
    let mut set = PointSet::with_capacity(m, s, 1 << m);
    for n in 0..1u64 << m {
        set.push(&korobov_point(n, q, p, s)?)?;
    }
    Ok(set)
}

/// Coordinate-wise digital shift of every point; multiplicities are
/// preserved.
pub fn shift_set(set: &PointSet, sigma: &ShiftVector) -> Result<PointSet> {
    if sigma.dim() != set.s {
        return Err(Error::DimensionMismatch(sigma.dim(), set.s));
    }
    let mut out = PointSet::with_capacity(set.m, set.s, set.len());
    let mut buf = vec![0u32; set.s];
    for point in set.iter_points() {
        for (j, (&num, sig)) in point.iter().zip(&sigma.coords).enumerate() {
            if sig.m != set.m {
                return Err(Error::ScaleMismatch(sig.m, set.m));
            }
            buf[j] = num ^ sig.num;
        }
        out.push_numerators(&buf)?;
    }
    Ok(out)
}

/// Which union a recipe builds: independently drawn generators, or the
/// full generator family 0..2^m-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnionMode {
    Theorem1,
    Theorem2,
}

impl UnionMode {
    pub fn as_str(self) -> &'static str {
        match self {
            UnionMode::Theorem1 => "thm1",
            UnionMode::Theorem2 => "thm2",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "thm1" | "theorem1" => Ok(UnionMode::Theorem1),
            "thm2" | "theorem2" => Ok(UnionMode::Theorem2),
            other => Err(Error::Parse(format!("unknown union mode {other:?}"))),
        }
    }
}

/// Everything needed to rebuild a multiset union bit-identically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionRecipe {
    pub p: Gf2Poly,
    pub m: u32,
    pub s: usize,
    pub mode: UnionMode,
    pub q_list: Vec<Gf2Poly>,
    pub shifts: Vec<ShiftVector>,
    pub seed: u64,
}

impl UnionRecipe {
    pub fn validate(&self) -> Result<()> {
        check_modulus(self.p, self.m)?;
        let r = 1usize << self.m;
        if self.q_list.len() != r {
            return Err(Error::InvalidParameter(format!(
                "recipe needs {r} generators, has {}",
                self.q_list.len()
            )));
        }
        if self.shifts.len() != r {
            return Err(Error::InvalidParameter(format!(
                "recipe needs {r} shift vectors, has {}",
                self.shifts.len()
            )));
        }
        if self.mode == UnionMode::Theorem2 {
            for (i, q) in self.q_list.iter().enumerate() {
                if q.0 != i as u64 {
                    return Err(Error::InvalidParameter(
                        "theorem2 recipes must list generators 0..2^m-1 in order".into(),
                    ));
                }
            }
        }
        for sig in &self.shifts {
            if sig.dim() != self.s {
                return Err(Error::DimensionMismatch(sig.dim(), self.s));
            }
        }
        Ok(())
    }

    /// Constituent r: P_p(q_r) shifted by sigma_r.
    pub fn constituent(&self, r: usize) -> Result<PointSet> {
        if r >= self.q_list.len() {
            return Err(Error::IndexOutOfRange(r));
        }
        let lattice = korobov_set(self.q_list[r], self.p, self.s)?;
        shift_set(&lattice, &self.shifts[r])
    }
}

/// The multiset union of all 2^m shifted constituents, concatenated in
/// r-order; N = 2^{2m}.
pub fn build_union(recipe: &UnionRecipe) -> Result<PointSet> {
    recipe.validate()?;
    let r_count = 1usize << recipe.m;
    // constituents may be generated in parallel; concatenation stays in
    // r-order regardless of completion order
    let parts: Vec<Result<PointSet>> =
        (0..r_count).into_par_iter().map(|r| recipe.constituent(r)).collect();
    let mut union = PointSet::with_capacity(recipe.m, recipe.s, r_count << recipe.m);
    for part in parts {
        union.extend(&part?)?;
    }
    Ok(union)
}

/// The index l < 2^m with l(x) = n(x) + n'(x) over GF(2); satisfies
/// x_n(q) + x_{n'}(q) = x_l(q) coordinate-wise.
pub fn translate_index(n: u64, n_prime: u64) -> u64 {
    n ^ n_prime
}
