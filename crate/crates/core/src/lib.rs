// Negated float comparisons are how NaN gets rejected alongside out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod atlas;
pub mod engine;
pub mod error;
pub mod oracles;
pub mod report;
pub mod series;
pub mod slices;

pub use atlas::ExtremalFamily;
pub use error::{Error, Result};
pub use series::{MajorantSum, TailBound, TruncatedSeries, DEFAULT_ORDER};
