//! Words and truncated series in the free associative algebra.

mod adjoint;
mod series;
mod word;

pub use adjoint::ad_apply;
pub use series::{AssocSeries, Decomposition};
pub(crate) use series::write_terms;
pub use word::{Word, MAX_ARITY};
