//! Cyclic words `tr_n = Ass_n / C_n` and the further quotient
//! `tr_n^quad = Ass_n / <A_n, C_n>` by signed reversal.

mod classes;
mod series;

pub use classes::{CyclicWord, QuadCyclicClass};
pub use series::{
    trace_pairing, tr, tr_quad, Plain, Quad, QuadTraceSeries, TraceSeries, TraceSeriesIn,
    TraceSpace,
};
