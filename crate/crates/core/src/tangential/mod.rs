//! Tangential derivations `x_i -> [x_i, a_i]`, their divergence cocycles and
//! the correspondence with quadratic traces.

mod derivation;
mod divergence;
mod drinfeld;

pub use derivation::{SimplicialPattern, TangentialDerivation};
pub use divergence::{act_on_trace, div, div_quad, divergence_in};
pub use drinfeld::{derivation_from_quadratic_trace, drinfeld_tuple, quadratic_trace};
