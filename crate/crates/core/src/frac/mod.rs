//! Real-valued fractional calculus on uniformly sampled functions.
//!
//! Orders of derivatives are restricted to `(0, 1)`. Every operator takes a
//! [`SampledFunction`](crate::SampledFunction) and a sample index `k`, and
//! integrates from the first abscissa `a` up to `a + k h`.

mod operators;
mod special;

pub use operators::{
    caputo_derivative, caputo_series, gl_coefficients, gl_derivative, hilfer_derivative, rl_derivative,
    rl_integral, rl_integral_series, HilferOrder,
};
pub(crate) use operators::differentiate;
pub use special::{beta, gamma, ln_gamma, power_rule, rgamma, PowerKind};
