//! Multiset unions of digitally shifted Korobov polynomial lattice point
//! sets over GF(2), their star discrepancy, the matching concentration
//! bounds, and exhaustive small-instance verification of the underlying
//! identities.

pub mod bounds;
pub mod budget;
pub mod discrepancy;
pub mod dyadic;
pub mod error;
pub mod experiments;
pub mod frac;
pub mod gf2poly;
pub mod io;
pub mod lattice;
pub mod oracle;
pub mod walshcoef;

pub use bounds::{
    bennett_h, bennett_tail, bernstein_tail, leading_constant, pgen_bound, t_zero, theorem_bound,
    BoundParams,
};
pub use discrepancy::{
    grid_discrepancy, local_discrepancy, per_lattice_contribution, star_discrepancy_exact,
    AnchoredBox, DiscrepancyReport,
};
pub use dyadic::{walsh, walsh_vec, Dyadic, ExtendedDyadic, ShiftVector};
pub use error::{Error, Result};
pub use experiments::{run_experiment, ExperimentConfig, ExperimentSummary, TrialRecord};
pub use frac::DyadicFrac;
pub use gf2poly::{enumerate_gm, irreducible_polys, smallest_irreducible, Gf2Poly};
pub use lattice::{
    build_union, korobov_point, korobov_set, nu_m, shift_set, translate_index, Point, PointSet,
    UnionMode, UnionRecipe,
};
pub use oracle::{
    assumption_b, assumption_b_korobov, laurent_nu, verify_char_sum, verify_fine3,
    verify_kp_all, verify_kp_bound, verify_lemma_aux, verify_nu_equivalence,
    verify_shift_expectation, verify_shift_expectation_random, verify_translation,
    verify_variance, verify_variance_all, VerificationResult,
};
pub use walshcoef::{coeff_identity_report, indicator_via_walsh, walsh_coeff, walsh_coeff_vec, CoeffTable};
