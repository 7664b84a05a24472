//! Seeded Monte Carlo studies of the union constructions: draw random
//! generators and shifts, build the union, evaluate the grid discrepancy
//! plus correction, and compare against the theorem bound.
//!
//! Reproducibility contract: trial t of an experiment with seed S uses
//! the ChaCha12 counter-based stream keyed by S with stream id t, so
//! trials are independent, parallelizable, and bit-identical across
//! runs and thread schedules. Draw order inside a trial is fixed:
//! generators q_1..q_{2^m} first (theorem-1 mode only), then the shift
//! vectors sigma_1..sigma_{2^m}, coordinate by coordinate.

use crate::bounds::theorem_bound;
use crate::discrepancy::{grid_discrepancy, local_discrepancy, AnchoredBox};
use crate::dyadic::{Dyadic, ShiftVector};
use crate::error::{Error, Result};
use crate::gf2poly::{smallest_irreducible, Gf2Poly};
use crate::io::recipe_to_string;
use crate::lattice::{UnionMode, UnionRecipe};
use rand::RngCore;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub m: u32,
    pub s: usize,
    pub delta: f64,
    pub mode: UnionMode,
    pub trials: u64,
    pub seed: u64,
    /// None means "auto": the smallest irreducible polynomial of degree
    /// m in integer order.
    pub p: Option<Gf2Poly>,
    /// Debug aid: force every shift to zero.
    pub zero_shifts: bool,
}

impl ExperimentConfig {
    pub fn modulus(&self) -> Gf2Poly {
        self.p.unwrap_or_else(|| smallest_irreducible(self.m))
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::InvalidParameter("trials must be >= 1".into()));
        }
        if !(self.delta > 0.0 && self.delta < 1.0) {
            return Err(Error::InvalidParameter("delta must be in (0,1)".into()));
        }
        let p = self.modulus();
        if p.degree() != Some(self.m) || !p.is_irreducible()? {
            return Err(Error::BadModulus { mask: p.0, expected: self.m });
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct TrialRecord {
    pub trial: u64,
    /// SHA-256 of the recipe text, hex, first 16 characters.
    pub recipe_digest: String,
    pub grid_max: f64,
    pub upper_bound: f64,
    pub theorem_bound: f64,
    pub satisfied: bool,
    /// Max |Y_r| over all constituents at the boxes sampled for this
    /// trial.
    pub max_contribution: f64,
    /// Y_r values at the fixed diagnostic box, for the summary's
    /// statistical sanity checks.
    pub fixed_box_contributions: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct ExperimentSummary {
    pub trials: u64,
    pub success_fraction: f64,
    /// min, 25%, median, 75%, max of upper_bound / theorem_bound.
    pub ratio_quantiles: [f64; 5],
    pub mean_fixed_box_contribution: f64,
    pub var_fixed_box_sum: f64,
    /// Statistical sanity flags: non-empty means "looks off", never a
    /// hard failure.
    pub flags: Vec<String>,
}

/// The ChaCha12 stream for (seed, trial): a named counter-based
/// generator; distinct trials get disjoint streams by construction.
pub fn derive_trial_rng(seed: u64, trial: u64) -> ChaCha12Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    let mut rng = ChaCha12Rng::from_seed(key);
    rng.set_stream(trial);
    rng
}

/// Uniform draw from {0,..,2^bits - 1} by masking a uniform word;
/// exactly uniform, no rejection.
pub fn draw_bits(rng: &mut ChaCha12Rng, bits: u32) -> u64 {
    debug_assert!((1..=63).contains(&bits));
    rng.next_u64() & ((1u64 << bits) - 1)
}

/// Draws the recipe for one trial. Fully determined by (config, trial).
pub fn draw_recipe(cfg: &ExperimentConfig, trial: u64) -> Result<UnionRecipe> {
    cfg.validate()?;
    let mut rng = derive_trial_rng(cfg.seed, trial);
    let r_count = 1usize << cfg.m;
    let q_list: Vec<Gf2Poly> = match cfg.mode {
        UnionMode::Theorem1 => {
            (0..r_count).map(|_| Gf2Poly(draw_bits(&mut rng, cfg.m))).collect()
        }
        UnionMode::Theorem2 => (0..r_count as u64).map(Gf2Poly).collect(),
    };
    let shifts: Vec<ShiftVector> = (0..r_count)
        .map(|_| {
            let coords = (0..cfg.s)
                .map(|_| {
                    if cfg.zero_shifts {
                        Dyadic::zero(cfg.m)
                    } else {
                        Dyadic::new(draw_bits(&mut rng, cfg.m) as u32, cfg.m)
                    }
                })
                .collect();
            ShiftVector::new(coords)
        })
        .collect::<Result<_>>()?;
    Ok(UnionRecipe {
        p: cfg.modulus(),
        m: cfg.m,
        s: cfg.s,
        mode: cfg.mode,
        q_list,
        shifts,
        seed: cfg.seed,
    })
}

fn recipe_digest(recipe: &UnionRecipe) -> String {
    let hash = Sha256::digest(recipe_to_string(recipe).as_bytes());
    hash.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

/// The fixed diagnostic box b = (1/2, .., 1/2) used by the statistical
/// sanity checks.
fn fixed_box(m: u32, s: usize) -> AnchoredBox {
    AnchoredBox::from_numerators(&vec![1u32 << (m - 1); s], m)
}

fn run_trial(cfg: &ExperimentConfig, trial: u64, bound: f64) -> Result<TrialRecord> {
    let recipe = draw_recipe(cfg, trial)?;
    let union = crate::lattice::build_union(&recipe)?;
    let report = grid_discrepancy(&union)?;

    // per-lattice contributions at the fixed box and at the argmax box
    let diag = fixed_box(cfg.m, cfg.s);
    let r_count = 1usize << cfg.m;
    let mut fixed_contribs = Vec::with_capacity(r_count);
    let mut max_contrib = 0f64;
    for r in 0..r_count {
        let constituent = recipe.constituent(r)?;
        let at_fixed = local_discrepancy(&constituent, &diag)?;
        let at_fixed = *at_fixed.numer() as f64 / *at_fixed.denom() as f64;
        fixed_contribs.push(at_fixed);
        let at_argmax = local_discrepancy(&constituent, &report.argmax_box)?;
        let at_argmax = (*at_argmax.numer() as f64 / *at_argmax.denom() as f64).abs();
        max_contrib = max_contrib.max(at_fixed.abs()).max(at_argmax);
    }

    Ok(TrialRecord {
        trial,
        recipe_digest: recipe_digest(&recipe),
        grid_max: report.grid_max,
        upper_bound: report.upper_bound,
        theorem_bound: bound,
        satisfied: report.upper_bound <= bound,
        max_contribution: max_contrib,
        fixed_box_contributions: fixed_contribs,
    })
}

pub fn run_experiment(cfg: &ExperimentConfig) -> Result<(Vec<TrialRecord>, ExperimentSummary)> {
    cfg.validate()?;
    let n = 1u64 << (2 * cfg.m);
    let bound = theorem_bound(n, cfg.s as u32, cfg.delta)?;

    // trials run in parallel; collect preserves trial order
    let records: Vec<TrialRecord> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| run_trial(cfg, t, bound))
        .collect::<Result<_>>()?;

    let trials = cfg.trials as f64;
    let successes = records.iter().filter(|r| r.satisfied).count() as f64;
    let mut ratios: Vec<f64> = records.iter().map(|r| r.upper_bound / r.theorem_bound).collect();
    ratios.sort_by(|a, b| a.total_cmp(b));
    let quantile = |q: f64| -> f64 {
        let idx = ((ratios.len() - 1) as f64 * q).round() as usize;
        ratios[idx]
    };
    let ratio_quantiles = [quantile(0.0), quantile(0.25), quantile(0.5), quantile(0.75), quantile(1.0)];

    // sanity checks on the fixed diagnostic box: E[Y_r] = 0 and
    // Var[sum_r Y_r] <= s; both flag, never fail
    let r_count = (1u64 << cfg.m) as f64;
    let all_contribs: Vec<f64> =
        records.iter().flat_map(|r| r.fixed_box_contributions.iter().copied()).collect();
    let mean = all_contribs.iter().sum::<f64>() / all_contribs.len() as f64;
    let sums: Vec<f64> =
        records.iter().map(|r| r.fixed_box_contributions.iter().sum::<f64>()).collect();
    let sum_mean = sums.iter().sum::<f64>() / trials;
    let var = if cfg.trials > 1 {
        sums.iter().map(|v| (v - sum_mean).powi(2)).sum::<f64>() / (trials - 1.0)
    } else {
        0.0
    };

    let mut flags = Vec::new();
    let mean_threshold = 4.0 * (cfg.s as f64 / r_count).sqrt() / (trials * r_count).sqrt();
    if mean.abs() > mean_threshold {
        flags.push(format!(
            "mean fixed-box contribution {mean:.3e} exceeds threshold {mean_threshold:.3e}"
        ));
    }
    let var_se = if cfg.trials > 1 { var * (2.0 / (trials - 1.0)).sqrt() } else { 0.0 };
    if var > cfg.s as f64 + 5.0 * var_se {
        flags.push(format!(
            "variance of summed contributions {var:.3e} exceeds s + 5 SE = {:.3e}",
            cfg.s as f64 + 5.0 * var_se
        ));
    }

    let summary = ExperimentSummary {
        trials: cfg.trials,
        success_fraction: successes / trials,
        ratio_quantiles,
        mean_fixed_box_contribution: mean,
        var_fixed_box_sum: var,
        flags,
    };
    Ok((records, summary))
}

/// CSV rendering, one record per row, floating point with 17
/// significant digits.
pub fn records_to_csv(records: &[TrialRecord]) -> String {
    let mut out =
        String::from("trial,recipe_digest,grid_max,upper_bound,theorem_bound,satisfied,max_contribution\n");
    for r in records {
        out.push_str(&format!(
            "{},{},{:.16e},{:.16e},{:.16e},{},{:.16e}\n",
            r.trial,
            r.recipe_digest,
            r.grid_max,
            r.upper_bound,
            r.theorem_bound,
            r.satisfied,
            r.max_contribution
        ));
    }
    out
}

impl ExperimentSummary {
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("trials {}\n", self.trials));
        out.push_str(&format!("success_fraction {:.16e}\n", self.success_fraction));
        out.push_str(&format!(
            "ratio_quantiles {:.16e} {:.16e} {:.16e} {:.16e} {:.16e}\n",
            self.ratio_quantiles[0],
            self.ratio_quantiles[1],
            self.ratio_quantiles[2],
            self.ratio_quantiles[3],
            self.ratio_quantiles[4]
        ));
        out.push_str(&format!(
            "mean_fixed_box_contribution {:.16e}\n",
            self.mean_fixed_box_contribution
        ));
        out.push_str(&format!("var_fixed_box_sum {:.16e}\n", self.var_fixed_box_sum));
        out.push_str(&format!("flags {}\n", self.flags.len()));
        for f in &self.flags {
            out.push_str(&format!("flag {f}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(mode: UnionMode) -> ExperimentConfig {
        ExperimentConfig {
            m: 3,
            s: 2,
            delta: 0.5,
            mode,
            trials: 4,
            seed: 1,
            p: None,
            zero_shifts: false,
        }
    }

    #[test]
    fn rng_streams_are_reproducible_and_distinct() {
        let a: Vec<u64> = {
            let mut r = derive_trial_rng(1, 0);
            (0..4).map(|_| r.next_u64()).collect()
        };
        let b: Vec<u64> = {
            let mut r = derive_trial_rng(1, 0);
            (0..4).map(|_| r.next_u64()).collect()
        };
        assert_eq!(a, b);
        let c: Vec<u64> = {
            let mut r = derive_trial_rng(1, 1);
            (0..4).map(|_| r.next_u64()).collect()
        };
        assert_ne!(a, c);
    }

    // Frozen regression vector for the stream (seed=1, trial=0),
    // generated once; any change here breaks every recorded experiment.
    #[test]
    fn rng_regression_vector() {
        let mut r = derive_trial_rng(1, 0);
        let draws: Vec<u64> = (0..4).map(|_| r.next_u64()).collect();
        let expected = expected_first_draws();
        assert_eq!(draws, expected);
    }

    fn expected_first_draws() -> Vec<u64> {
        // recorded from the implementation at freeze time; see
        // rng_regression_vector
        vec![
            17775802688163677458,
            694158859003031790,
            1107131862495274057,
            1215212188379644563,
        ]
    }

    #[test]
    fn masked_draws_stay_in_range() {
        let mut r = derive_trial_rng(7, 3);
        for _ in 0..1000 {
            assert!(draw_bits(&mut r, 5) < 32);
        }
    }

    #[test]
    fn recipes_are_deterministic() {
        let cfg = config(UnionMode::Theorem1);
        let a = draw_recipe(&cfg, 2).unwrap();
        let b = draw_recipe(&cfg, 2).unwrap();
        assert_eq!(a, b);
        assert_ne!(draw_recipe(&cfg, 3).unwrap(), a);
    }

    #[test]
    fn theorem2_recipes_enumerate_generators() {
        let cfg = config(UnionMode::Theorem2);
        let recipe = draw_recipe(&cfg, 0).unwrap();
        for (i, q) in recipe.q_list.iter().enumerate() {
            assert_eq!(q.0, i as u64);
        }
    }

    #[test]
    fn zero_shift_debug_flag() {
        let mut cfg = config(UnionMode::Theorem2);
        cfg.zero_shifts = true;
        let recipe = draw_recipe(&cfg, 0).unwrap();
        assert!(recipe.shifts.iter().all(|s| s.coords.iter().all(|c| c.num == 0)));
        // the unshifted Korobov p-set union is reproduced deterministically
        let again = draw_recipe(&cfg, 0).unwrap();
        assert_eq!(recipe, again);
    }

    #[test]
    fn experiment_records_are_reproducible() {
        let cfg = config(UnionMode::Theorem1);
        let (records_a, _) = run_experiment(&cfg).unwrap();
        let (records_b, _) = run_experiment(&cfg).unwrap();
        assert_eq!(records_to_csv(&records_a), records_to_csv(&records_b));
        assert_eq!(records_a.len(), 4);
    }

    #[test]
    fn experiment_reproducible_across_thread_counts() {
        let cfg = config(UnionMode::Theorem2);
        let base = records_to_csv(&run_experiment(&cfg).unwrap().0);
        for threads in [1usize, 3] {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
            let csv = pool.install(|| records_to_csv(&run_experiment(&cfg).unwrap().0));
            assert_eq!(csv, base);
        }
    }

    #[test]
    fn config_validation() {
        let mut cfg = config(UnionMode::Theorem1);
        cfg.trials = 0;
        assert!(cfg.validate().is_err());
        let mut cfg = config(UnionMode::Theorem1);
        cfg.delta = 1.0;
        assert!(cfg.validate().is_err());
        let mut cfg = config(UnionMode::Theorem1);
        cfg.p = Some(Gf2Poly(0b1001)); // x^3 + 1 is reducible
        assert!(cfg.validate().is_err());
    }
}
