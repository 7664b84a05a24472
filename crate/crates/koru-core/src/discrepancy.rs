//! Local discrepancy, the dyadic-grid maximum with its s/2^m correction,
//! and exact star discrepancy by critical-box enumeration.
//!
//! For a point set with depth-m dyadic coordinates, the maximum of
//! |Delta| over boxes with corners in the extended dyadic grid differs
//! from the true star discrepancy by at most s/2^m, so
//! grid_max <= D* <= grid_max + s/2^m.

use crate::budget::{evaluation_budget, pow2_saturating};
use crate::dyadic::ExtendedDyadic;
use crate::error::{Error, Result};
use crate::frac::DyadicFrac;
use crate::lattice::{PointSet, UnionRecipe};
use num_rational::Ratio;
use rayon::prelude::*;

/// An anchored box [0, b) with b in the extended dyadic grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchoredBox {
    pub upper: Vec<ExtendedDyadic>,
}

impl AnchoredBox {
    pub fn new(upper: Vec<ExtendedDyadic>) -> Result<Self> {
        if let Some(first) = upper.first() {
            for u in &upper {
                if u.m != first.m {
                    return Err(Error::ScaleMismatch(first.m, u.m));
                }
            }
        }
        Ok(AnchoredBox { upper })
    }

    pub fn from_numerators(nums: &[u32], m: u32) -> Self {
        AnchoredBox { upper: nums.iter().map(|&t| ExtendedDyadic::new(t, m)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.upper.len()
    }

    pub fn m(&self) -> u32 {
        self.upper.first().map(|u| u.m).expect("empty box")
    }

    /// Exact volume prod_j b_j over denominator 2^{ms}.
    pub fn volume(&self) -> DyadicFrac {
        let mut v = DyadicFrac::ONE;
        for u in &self.upper {
            v = v * u.frac();
        }
        v
    }

    /// Does the (half-open) box contain the point with these numerators?
    pub fn contains(&self, point: &[u32]) -> bool {
        point.iter().zip(&self.upper).all(|(&x, b)| x < b.num)
    }
}

/// A(J,P)/N - lambda(J) as an exact rational.
pub fn local_discrepancy(set: &PointSet, b: &AnchoredBox) -> Result<Ratio<i128>> {
    if b.dim() != set.s {
        return Err(Error::DimensionMismatch(b.dim(), set.s));
    }
    if b.m() != set.m {
        return Err(Error::ScaleMismatch(b.m(), set.m));
    }
    let n = set.len() as i128;
    if n == 0 {
        return Err(Error::InvalidParameter("empty point set".into()));
    }
    let count = set.iter_points().filter(|pt| b.contains(pt)).count() as i128;
    let vol = b.volume();
    // A/N - num/2^exp over the common denominator N * 2^exp
    let den = n << vol.denominator_log2();
    Ok(Ratio::new(count * (1i128 << vol.denominator_log2()) - vol.numerator() * n, den))
}

/// Grid maximum of |Delta|, the s/2^m correction, and the attaining box.
#[derive(Debug, Clone)]
pub struct DiscrepancyReport {
    pub grid_max: f64,
    pub correction: f64,
    pub upper_bound: f64,
    pub argmax_box: AnchoredBox,
    pub exact: Option<f64>,
}

impl DiscrepancyReport {
    /// Flat key/value text rendering, one `key value` pair per line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("grid_max {:.16e}\n", self.grid_max));
        out.push_str(&format!("correction {:.16e}\n", self.correction));
        out.push_str(&format!("upper_bound {:.16e}\n", self.upper_bound));
        let nums: Vec<String> = self.argmax_box.upper.iter().map(|u| u.num.to_string()).collect();
        out.push_str(&format!("argmax_box {}\n", nums.join(" ")));
        if let Some(e) = self.exact {
            out.push_str(&format!("exact {e:.16e}\n"));
        }
        out
    }
}

fn check_grid_budget(m: u32, s: usize, budget: u128) -> Result<u128> {
    let cells = pow2_saturating(m * s as u32);
    if cells > budget {
        return Err(Error::BudgetExceeded { needed: cells, budget });
    }
    Ok(cells)
}

/// Maximum of |Delta(P, J(b))| over every b in the extended dyadic grid,
/// via an s-dimensional cumulative count array. Ties in the maximum go
/// to the lexicographically smallest b.
pub fn grid_discrepancy(set: &PointSet) -> Result<DiscrepancyReport> {
    grid_discrepancy_with_budget(set, evaluation_budget())
}

pub fn grid_discrepancy_with_budget(set: &PointSet, budget: u128) -> Result<DiscrepancyReport> {
    let (m, s) = (set.m, set.s);
    if set.is_empty() {
        return Err(Error::InvalidParameter("empty point set".into()));
    }
    let cells = check_grid_budget(m, s, budget)? as usize;
    let side = 1usize << m;

    let mut counts = vec![0u64; cells];
    for pt in set.iter_points() {
        let mut idx = 0usize;
        for &num in pt.iter().rev() {
            idx = idx * side + num as usize;
        }
        counts[idx] += 1;
    }
    // cumulative sums axis by axis; after all axes, counts[c] is the
    // number of points in the closed cell prefix [0, c]
    for axis in 0..s {
        let stride = side.pow(axis as u32);
        for idx in 0..cells {
            if !(idx / stride).is_multiple_of(side) {
                counts[idx] += counts[idx - stride];
            }
        }
    }

    let n = set.len() as u64;
    // |Delta| numerators over the shared denominator N * 2^{ms}
    let exact_ok = (64 - n.leading_zeros()) + m * s as u32 <= 126;

    let boxes_per_slab = (side as u64 + 1).pow(s as u32 - 1);
    let slab_max = |t_first: u32| -> (i128, Vec<u32>) {
        let mut best: i128 = -1;
        let mut best_box: Vec<u32> = Vec::new();
        let mut t = vec![0u32; s];
        t[0] = t_first;
        for _ in 0..boxes_per_slab {
            // A([0, t)) from the cumulative array; any zero side is empty
            let a = if t.contains(&0) {
                0u64
            } else {
                let mut idx = 0usize;
                for &tj in t.iter().rev() {
                    idx = idx * side + (tj as usize - 1);
                }
                counts[idx]
            };
            let num = if exact_ok {
                let vol: i128 = t.iter().map(|&tj| tj as i128).product();
                (a as i128 * (1i128 << (m * s as u32)) - vol * n as i128).abs()
            } else {
                let vol: f64 = t.iter().map(|&tj| tj as f64 / side as f64).product();
                let delta = (a as f64 / n as f64 - vol).abs();
                (delta * n as f64 * (side as f64).powi(s as i32)).round() as i128
            };
            if num > best {
                best = num;
                best_box = t.clone();
            }
            // odometer with the last coordinate fastest keeps lex order on t
            for j in (1..s).rev() {
                t[j] += 1;
                if t[j] <= side as u32 {
                    break;
                }
                t[j] = 0;
            }
        }
        (best, best_box)
    };

    // slabs evaluate in parallel; the reduction below walks them in
    // t_1-order so the result is independent of thread count
    let slabs: Vec<(i128, Vec<u32>)> =
        (0..=side as u32).into_par_iter().map(slab_max).collect();
    let (mut best, mut best_box) = (-1i128, Vec::new());
    for (v, bx) in slabs {
        if v > best {
            best = v;
            best_box = bx;
        }
    }

    let den = n as f64 * (side as f64).powi(s as i32);
    let grid_max = best as f64 / den;
    let correction = s as f64 / side as f64;
    Ok(DiscrepancyReport {
        grid_max,
        correction,
        upper_bound: grid_max + correction,
        argmax_box: AnchoredBox::from_numerators(&best_box, m),
        exact: None,
    })
}

/// Exact star discrepancy by enumeration of critical boxes: corners
/// range over the per-dimension coordinate values plus 1.
pub fn star_discrepancy_exact(set: &PointSet) -> Result<f64> {
    star_discrepancy_exact_with_budget(set, evaluation_budget())
}

pub fn star_discrepancy_exact_with_budget(set: &PointSet, budget: u128) -> Result<f64> {
    let (m, s) = (set.m, set.s);
    if set.is_empty() {
        return Err(Error::InvalidParameter("empty point set".into()));
    }
    let side = 1u32 << m;
    let mut grids: Vec<Vec<u32>> = Vec::with_capacity(s);
    for j in 0..s {
        let mut vals: Vec<u32> = set.iter_points().map(|pt| pt[j]).collect();
        vals.push(side);
        vals.sort_unstable();
        vals.dedup();
        grids.push(vals);
    }
    let corners: u128 = grids.iter().map(|g| g.len() as u128).product();
    let needed = corners * set.len() as u128;
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }

    let n = set.len() as i128;
    let scale = 1i128 << (m * s as u32);
    let mut best: i128 = 0;
    let mut idx = vec![0usize; s];
    loop {
        let z: Vec<u32> = (0..s).map(|j| grids[j][idx[j]]).collect();
        let mut closed = 0i128;
        let mut open = 0i128;
        for pt in set.iter_points() {
            if pt.iter().zip(&z).all(|(&x, &zj)| x <= zj) {
                closed += 1;
            }
            if pt.iter().zip(&z).all(|(&x, &zj)| x < zj) {
                open += 1;
            }
        }
        let vol: i128 = z.iter().map(|&zj| zj as i128).product();
        // both sides over the denominator N * 2^{ms}
        best = best.max(closed * scale - vol * n).max(vol * n - open * scale);
        let mut j = 0;
        loop {
            if j == s {
                return Ok(best as f64 / (n as f64 * scale as f64));
            }
            idx[j] += 1;
            if idx[j] < grids[j].len() {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
    }
}

/// Delta of constituent r of a union: Y_r(J) in theorem-1 mode, X_r(J)
/// in theorem-2 mode (the subtracted expectation is exactly lambda(J)).
pub fn per_lattice_contribution(
    recipe: &UnionRecipe,
    r: usize,
    b: &AnchoredBox,
) -> Result<Ratio<i128>> {
    local_discrepancy(&recipe.constituent(r)?, b)
}

/// Iterator over every box corner in the extended grid {0,..,2^m}^s.
pub fn all_grid_boxes(m: u32, s: usize) -> impl Iterator<Item = Vec<u32>> {
    let side = 1u32 << m;
    let total = ((side + 1) as u64).pow(s as u32);
    (0..total).map(move |mut flat| {
        let mut t = vec![0u32; s];
        for j in (0..s).rev() {
            t[j] = (flat % (side as u64 + 1)) as u32;
            flat /= side as u64 + 1;
        }
        t
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::PointSet;
    use num_traits::Zero;

    fn set_from(m: u32, s: usize, pts: &[&[u32]]) -> PointSet {
        let mut set = PointSet::new(m, s);
        for p in pts {
            set.push_numerators(p).unwrap();
        }
        set
    }

    #[test]
    fn local_discrepancy_hand_values() {
        let set = set_from(1, 2, &[&[0, 0], &[1, 1]]);
        // b = (1, 1): all points counted, volume 1
        let b = AnchoredBox::from_numerators(&[2, 2], 1);
        assert!(local_discrepancy(&set, &b).unwrap().is_zero());
        // b = (0, 0): empty box
        let b = AnchoredBox::from_numerators(&[0, 0], 1);
        assert!(local_discrepancy(&set, &b).unwrap().is_zero());
        // b = (1, 1/2): one point inside, volume 1/2
        let b = AnchoredBox::from_numerators(&[2, 1], 1);
        assert!(local_discrepancy(&set, &b).unwrap().is_zero());
        // m=2 scale: P={(0,0),(1/2,1/2)}, b=(3/4,3/4): 2/2 - 9/16 = 7/16
        let set = set_from(2, 2, &[&[0, 0], &[2, 2]]);
        let b = AnchoredBox::from_numerators(&[3, 3], 2);
        assert_eq!(local_discrepancy(&set, &b).unwrap(), Ratio::new(7, 16));
    }

    #[test]
    fn local_discrepancy_dimension_mismatch() {
        let set = set_from(1, 2, &[&[0, 0]]);
        let b = AnchoredBox::from_numerators(&[1], 1);
        assert!(local_discrepancy(&set, &b).is_err());
    }

    #[test]
    fn grid_single_point_at_origin() {
        // {0} in s=1, m=1: max |Delta| is 1/2 at b = 1/2
        let set = set_from(1, 1, &[&[0]]);
        let rep = grid_discrepancy(&set).unwrap();
        assert_eq!(rep.grid_max, 0.5);
        assert_eq!(rep.argmax_box.upper[0].num, 1);
        assert_eq!(rep.correction, 0.5);
        assert_eq!(rep.upper_bound, 1.0);
    }

    #[test]
    fn grid_uniform_lattice_is_exact_zero() {
        // P = Q_{2^m} in s=1: Delta vanishes at every grid b
        for m in 1..=4u32 {
            let pts: Vec<Vec<u32>> = (0..1u32 << m).map(|v| vec![v]).collect();
            let refs: Vec<&[u32]> = pts.iter().map(|p| p.as_slice()).collect();
            let set = set_from(m, 1, &refs);
            let rep = grid_discrepancy(&set).unwrap();
            assert_eq!(rep.grid_max, 0.0, "m={m}");
        }
    }

    #[test]
    fn grid_deterministic_across_thread_counts() {
        let set = set_from(3, 2, &[&[1, 4], &[6, 2], &[3, 3], &[0, 7], &[5, 5]]);
        let base = grid_discrepancy(&set).unwrap();
        for threads in [1usize, 2, 4] {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
            let rep = pool.install(|| grid_discrepancy(&set).unwrap());
            assert_eq!(rep.grid_max, base.grid_max);
            assert_eq!(rep.argmax_box, base.argmax_box);
        }
    }

    #[test]
    fn grid_matches_naive_enumeration() {
        // naive per-box counting as the oracle
        let mut rng = 0x12345u64;
        let mut next = move || {
            rng ^= rng << 13;
            rng ^= rng >> 7;
            rng ^= rng << 17;
            rng
        };
        for m in 1..=3u32 {
            for s in 1..=2usize {
                let n_pts = 5;
                let mut set = PointSet::new(m, s);
                for _ in 0..n_pts {
                    let nums: Vec<u32> = (0..s).map(|_| (next() % (1 << m)) as u32).collect();
                    set.push_numerators(&nums).unwrap();
                }
                let mut naive_best = Ratio::new(0, 1);
                for t in all_grid_boxes(m, s) {
                    let b = AnchoredBox::from_numerators(&t, m);
                    let d = local_discrepancy(&set, &b).unwrap();
                    let d = if d < Ratio::zero() { -d } else { d };
                    if d > naive_best {
                        naive_best = d;
                    }
                }
                let rep = grid_discrepancy(&set).unwrap();
                let naive = *naive_best.numer() as f64 / *naive_best.denom() as f64;
                assert!((rep.grid_max - naive).abs() < 1e-12, "m={m} s={s}");
            }
        }
    }

    #[test]
    fn exact_star_hand_values() {
        // {0} in s=1: boxes shrinking toward 0 give discrepancy 1
        let set = set_from(1, 1, &[&[0]]);
        assert_eq!(star_discrepancy_exact(&set).unwrap(), 1.0);
        // {0, 1/2} in s=1: D* = 1/2
        let set = set_from(1, 1, &[&[0], &[1]]);
        assert_eq!(star_discrepancy_exact(&set).unwrap(), 0.5);
    }

    #[test]
    fn exact_star_budget_guard() {
        let set = set_from(3, 2, &[&[1, 4], &[6, 2], &[3, 3], &[0, 7], &[5, 5]]);
        let err = star_discrepancy_exact_with_budget(&set, 10);
        assert!(matches!(err, Err(Error::BudgetExceeded { .. })));
        assert!(matches!(
            grid_discrepancy_with_budget(&set, 10),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn report_renders_key_values() {
        let set = set_from(1, 1, &[&[0]]);
        let rep = grid_discrepancy(&set).unwrap();
        let text = rep.render();
        assert!(text.contains("grid_max"));
        assert!(text.contains("argmax_box 1"));
    }
}
