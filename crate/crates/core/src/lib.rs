//! Exact computations in truncated free Lie algebras for the
//! Kashiwara-Vergne equations.
//!
//! The crate builds explicit rational solutions `(A, B)` of the first KV
//! equation by factorizing the Campbell-Hausdorff series, and certifies
//! degree by degree that every such solution also satisfies the quadratic
//! trace equation
//!
//! ```text
//! tr^quad(x dA/dx + y dB/dy) = 1/2 tr^quad(f(x) + f(y) - f(ch(x,y)))
//! ```
//!
//! together with the intermediate statements its proof passes through.
//! All coefficients are exact rationals and every series carries its
//! truncation order.
//!
//! Module map:
//! - [`wordcore`]: words, associative series, `tau`, the right-letter
//!   decomposition and the extended adjoint action.
//! - [`liecore`]: the Lyndon basis, BCH series, substitution and operator
//!   kernels such as `t/(1-e^{-t})`.
//! - [`traces`]: cyclic words and their quotient by signed reversal.
//! - [`tangential`]: tangential derivations, divergence cocycles and the
//!   correspondence between quadratic traces and homogeneous tuples.
//! - [`kvsolver`]: solutions of the first KV equation and their gauge family.
//! - [`verifier`]: the theorem-level suites and the CLI driver.

pub mod error;
pub mod json;
pub mod kvsolver;
pub mod liecore;
pub mod random;
pub mod rational;
pub mod tangential;
pub mod traces;
pub mod verifier;
pub mod wordcore;

pub use error::{Error, Result};

pub use liecore::{LieElement, LyndonWord, RationalUnivariateSeries};
pub use kvsolver::KvSolution;
pub use rational::Q;
pub use tangential::TangentialDerivation;
pub use traces::{QuadTraceSeries, TraceSeries};
pub use wordcore::{AssocSeries, Word};
