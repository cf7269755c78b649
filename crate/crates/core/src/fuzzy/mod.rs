//! Fuzzy sets and fuzzy numbers.
//!
//! [`DiscreteFuzzySet`] covers finite universes. [`FuzzyNumber`] is the
//! level-set representation used everywhere else: a shared [`AlphaGrid`] and
//! one lower/upper endpoint pair per level.

mod discrete;
mod extension;
mod grid;
mod interval;
mod number;
mod validity;

pub use discrete::{DiscreteFuzzySet, SetOp};
pub use extension::{envelope, is_convex, zadeh_extend, DEFAULT_ENVELOPE_SAMPLES, REPAIR_TOLERANCE_SCALE};
pub use grid::{AlphaGrid, DEFAULT_LEVELS};
pub use interval::{Interval, IntervalBox};
pub use number::FuzzyNumber;
pub use validity::{
    enforce_nesting, tolerance, validate_endpoints, ValidityReport, Violation, ViolationKind, TOLERANCE_SCALE,
};
