//! Truncated free Lie algebra in the Lyndon basis.

mod bch;
mod kernels;
mod lie;
mod lyndon;
pub mod parse;
mod univariate;

pub use bch::{bch, bch_multi, ch_t, ch_t_derivative, ch_t_multi};
pub use kernels::{kernel_series, kernel_series_by_name, Kernel};
pub use lie::{check_dynkin, dynkin_left_normed, dynkin_right_normed, LieElement};
pub use lyndon::{is_lyndon, lyndon_words, necklace_lyndon_count, LyndonWord};
pub use parse::parse_lie;
pub use univariate::{apply_operator_series, RationalUnivariateSeries};
