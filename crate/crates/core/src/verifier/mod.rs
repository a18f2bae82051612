//! Theorem-level suites and the command-line runner.

mod cli;
mod homo;
pub mod linalg;
mod report;
mod simplicial;
mod suites;

pub use cli::{cli_main, key_instances, parse_gauge_spec, standard_gauge_pairs, Suite, ARITY3_ORDER};
pub use homo::{homo_kernel, quad_classes, verify_homo, HomoKernel};
pub use report::{Graded, Outcome, Status, VerificationReport, Witness};
pub use simplicial::{
    annihilation_report, cocycle_report, inhomo_combination, prop_u_derivation,
    verify_cocycle_equation, verify_prop_last, verify_prop_u,
};
pub use suites::{
    apply_univariate, bernoulli_combination, eq3_lhs, eq3_rhs, euler_part, kv1_witness,
    series_data, verify_kv1, verify_prop_key, verify_series_identities, verify_theorem,
    y_linear_part, SeriesData,
};
