//! Fuzzy-number arithmetic and fractional calculus.
//!
//! * [`fuzzy`]: fuzzy sets, alpha-cuts, fuzzy numbers on an alpha grid.
//! * [`gh`]: generalized Hukuhara difference and generalized division,
//!   their approximate variants and the CPS decomposition.
//! * [`frac`]: Riemann-Liouville, Caputo, Grunwald-Letnikov and Hilfer
//!   operators on sampled real functions.
//! * [`fuzzy_calculus`]: gH-derivative, fuzzy integrals and fractional
//!   operators on fuzzy-valued functions.
//! * [`hybrid`]: level-set Picard solver for `d/dt[u / f(t,u)] = g(t,u)`
//!   with a fuzzy initial value.
//! * [`cli`] and [`json`]: the batch front end and its file formats.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod frac;
pub mod fuzzy;
pub mod fuzzy_calculus;
pub mod gh;
pub mod hybrid;
pub mod isotonic;
pub mod json;
pub mod sampled;

pub use error::{Error, NotExistsReason, Result};
pub use fuzzy::{AlphaGrid, FuzzyNumber, Interval};
pub use sampled::SampledFunction;
