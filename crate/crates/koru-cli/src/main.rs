//! `koru`: generate Korobov polynomial lattice unions, measure their
//! star discrepancy, evaluate the matching probabilistic bounds, and run
//! the exhaustive verification suites.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 invariant violation,
//! 3 statistical sanity flag raised.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use koru_core::experiments::{draw_recipe, records_to_csv};
use koru_core::io::{pointset_from_str, pointset_to_string, recipe_to_string};
use koru_core::*;

#[derive(Parser)]
#[command(
    name = "koru",
    version,
    about = "Korobov polynomial lattice unions over GF(2) and their star discrepancy",
    long_about = "Korobov polynomial lattice unions over GF(2) and their star discrepancy.\n\n\
        Throughout, --delta is the SUCCESS probability: bounds hold with \
        probability at least delta, so larger delta yields a larger threshold.\n\
        Set KORU_BUDGET to override the evaluation budget (default 100000000)."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List all irreducible polynomials of degree m as hex masks
    GenPoly {
        #[arg(long)]
        m: u32,
    },
    /// Generate a single Korobov lattice point set
    Gen {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        s: usize,
        /// Generator polynomial, hex mask (e.g. 0x3)
        #[arg(long)]
        q: String,
        /// Modulus, hex mask; default: smallest irreducible of degree m
        #[arg(long)]
        p: Option<String>,
        /// Output file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a shifted union and write the point set plus its recipe
    Union {
        /// thm1 (random generators) or thm2 (all generators 0..2^m-1)
        #[arg(long)]
        mode: String,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        seed: u64,
        /// Trial index within the seed's stream
        #[arg(long, default_value_t = 0)]
        trial: u64,
        #[arg(long)]
        p: Option<String>,
        /// Force all shifts to zero
        #[arg(long)]
        zero_shifts: bool,
        /// Point set goes to OUT, the recipe to OUT.recipe
        #[arg(long)]
        out: PathBuf,
    },
    /// Grid discrepancy (and optionally the exact star discrepancy) of a
    /// point-set file
    Disc {
        #[arg(long = "in")]
        input: PathBuf,
        /// Also run the exact critical-box computation
        #[arg(long)]
        exact: bool,
    },
    /// Evaluate the probabilistic discrepancy bounds
    Bound {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        s: u32,
        /// Success probability in (0,1)
        #[arg(long)]
        delta: f64,
        /// Variance budget; default s
        #[arg(long = "B")]
        variance: Option<f64>,
    },
    /// Run a brute-force verification suite
    Verify {
        /// One of: lemma-aux, fine3, lemma-q, lemma-edelta, lemma-kp,
        /// char-sum, translation, nu-m
        #[arg(long)]
        suite: String,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        s: usize,
        /// Restrict lemma-edelta / lemma-kp to one modulus
        #[arg(long)]
        p: Option<String>,
        /// Random point sets for lemma-q
        #[arg(long, default_value_t = 50)]
        sets: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run seeded randomized trials against the theorem bound
    Experiment {
        /// Key/value config file; overrides the individual flags
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        m: u32,
        #[arg(long, default_value_t = 2)]
        s: usize,
        #[arg(long, default_value_t = 0.5)]
        delta: f64,
        #[arg(long, default_value = "thm1")]
        mode: String,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        zero_shifts: bool,
        /// Write the per-trial CSV here
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn parse_poly(s: &str) -> Result<Gf2Poly> {
    Gf2Poly::from_hex(s)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(Error::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_config(path: &PathBuf) -> Result<ExperimentConfig> {
    let text = fs::read_to_string(path)?;
    let mut cfg = ExperimentConfig {
        m: 0,
        s: 0,
        delta: 0.0,
        mode: UnionMode::Theorem1,
        trials: 0,
        seed: 0,
        p: None,
        zero_shifts: false,
    };
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || Error::Parse(format!("config line {}: {line:?}", i + 1));
        let (key, value) = line.split_once(char::is_whitespace).ok_or_else(bad)?;
        let value = value.trim();
        match key {
            "m" => cfg.m = value.parse().map_err(|_| bad())?,
            "s" => cfg.s = value.parse().map_err(|_| bad())?,
            "delta" => cfg.delta = value.parse().map_err(|_| bad())?,
            "mode" => cfg.mode = UnionMode::parse(value)?,
            "trials" => cfg.trials = value.parse().map_err(|_| bad())?,
            "seed" => cfg.seed = value.parse().map_err(|_| bad())?,
            "p" => cfg.p = Some(parse_poly(value)?),
            "zero_shifts" => cfg.zero_shifts = value.parse().map_err(|_| bad())?,
            _ => return Err(bad()),
        }
    }
    Ok(cfg)
}

/// Ok(true) means a statistical flag was raised (exit 3); library errors
/// map to exit codes in main.
fn run(cmd: Cmd) -> Result<bool> {
    match cmd {
        Cmd::GenPoly { m } => {
            if m == 0 || m > 24 {
                return Err(Error::InvalidParameter(format!("m must be in 1..=24, got {m}")));
            }
            for p in irreducible_polys(m) {
                println!("{}", p.to_hex());
            }
            Ok(false)
        }
        Cmd::Gen { m, s, q, p, out } => {
            let p = match p {
                Some(hex) => parse_poly(&hex)?,
                None => smallest_irreducible(m),
            };
            let set = korobov_set(parse_poly(&q)?, p, s)?;
            emit(&out, &pointset_to_string(&set))?;
            Ok(false)
        }
        Cmd::Union { mode, m, s, seed, trial, p, zero_shifts, out } => {
            let cfg = ExperimentConfig {
                m,
                s,
                delta: 0.5, // unused by generation
                mode: UnionMode::parse(&mode)?,
                trials: trial + 1,
                seed,
                p: p.as_deref().map(parse_poly).transpose()?,
                zero_shifts,
            };
            cfg.validate()?;
            let recipe = draw_recipe(&cfg, trial)?;
            let set = build_union(&recipe)?;
            fs::write(&out, pointset_to_string(&set))?;
            let mut recipe_path = out.into_os_string();
            recipe_path.push(".recipe");
            fs::write(recipe_path, recipe_to_string(&recipe))?;
            Ok(false)
        }
        Cmd::Disc { input, exact } => {
            let set = pointset_from_str(&fs::read_to_string(input)?)?;
            let mut report = grid_discrepancy(&set)?;
            if exact && report.exact.is_none() {
                report.exact = Some(star_discrepancy_exact(&set)?);
            }
            print!("{}", report.render());
            Ok(false)
        }
        Cmd::Bound { m, s, delta, variance } => {
            let params = match variance {
                Some(b) => BoundParams::with_variance(m, s, delta, b)?,
                None => BoundParams::new(m, s, delta)?,
            };
            let t0 = t_zero(&params);
            println!("log_term {:.16e}", params.log_term());
            println!("t_zero {t0:.16e}");
            println!(
                "bernstein_at_t0 {:.16e}",
                bernstein_tail(params.variance_budget, params.range_bound, t0)?
            );
            println!("theorem_bound {:.16e}", theorem_bound(1u64 << (2 * m), s, delta)?);
            println!("pgen_bound {:.16e}", pgen_bound(&params));
            Ok(false)
        }
        Cmd::Verify { suite, m, s, p, sets, seed } => {
            let p = p.as_deref().map(parse_poly).transpose()?;
            let res = match suite.as_str() {
                "lemma-aux" => verify_lemma_aux(m, s)?,
                "fine3" => verify_fine3(m)?,
                "lemma-q" => verify_shift_expectation_random(m, s, sets, 8, seed)?,
                "lemma-edelta" => match p {
                    Some(p) => {
                        let mut total = None;
                        for t in koru_core::discrepancy::all_grid_boxes(m, s) {
                            let b = AnchoredBox::from_numerators(&t, m);
                            let sub = verify_variance(p, s, &b)?;
                            total = Some(merge(total, sub));
                        }
                        total.expect("grid is never empty")
                    }
                    None => verify_variance_all(m, s)?,
                },
                "lemma-kp" => match p {
                    Some(p) => verify_kp_bound(p, s)?,
                    None => verify_kp_all(m, s)?,
                },
                "char-sum" => verify_char_sum(m, s)?,
                "translation" => verify_translation(m, s)?,
                "nu-m" => verify_nu_equivalence(m)?,
                other => {
                    return Err(Error::InvalidParameter(format!("unknown suite {other:?}")))
                }
            };
            print!("{}", res.render());
            if !res.pass {
                return Err(Error::InvariantViolation(format!(
                    "suite {} found {} violations",
                    res.suite,
                    res.witnesses.len()
                )));
            }
            Ok(false)
        }
        Cmd::Experiment { config, m, s, delta, mode, trials, seed, p, zero_shifts, csv } => {
            let cfg = match config {
                Some(path) => parse_config(&path)?,
                None => ExperimentConfig {
                    m,
                    s,
                    delta,
                    mode: UnionMode::parse(&mode)?,
                    trials,
                    seed,
                    p: p.as_deref().map(parse_poly).transpose()?,
                    zero_shifts,
                },
            };
            let (records, summary) = run_experiment(&cfg)?;
            if let Some(path) = csv {
                fs::write(path, records_to_csv(&records))?;
            }
            print!("{}", summary.render());
            Ok(!summary.flags.is_empty())
        }
    }
}

fn merge(acc: Option<VerificationResult>, sub: VerificationResult) -> VerificationResult {
    match acc {
        None => sub,
        Some(mut acc) => {
            acc.instances_checked += sub.instances_checked;
            acc.max_violation = acc.max_violation.max(sub.max_violation);
            acc.pass &= sub.pass;
            acc.witnesses.extend(sub.witnesses);
            acc.witnesses.truncate(10);
            acc
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap's help/version output is a success, anything else a
            // usage error
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.cmd) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(3),
        Err(e @ Error::InvariantViolation(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
