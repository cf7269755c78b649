use std::fmt;

use crate::error::{Error, Result};

/// Compact real interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo > hi {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    /// Builds the interval without checking `lo <= hi`; callers uphold it.
    pub(crate) fn new_unchecked(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "[{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn point(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn half_width(&self) -> f64 {
        0.5 * (self.hi - self.lo)
    }

    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn is_singleton(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn magnitude(&self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval::new_unchecked(self.lo + other.lo, self.hi + other.hi)
    }

    pub fn neg(&self) -> Interval {
        Interval::new_unchecked(-self.hi, -self.lo)
    }

    pub fn scale(&self, k: f64) -> Interval {
        if k >= 0.0 {
            Interval::new_unchecked(k * self.lo, k * self.hi)
        } else {
            Interval::new_unchecked(k * self.hi, k * self.lo)
        }
    }

    /// Interval product: min and max of the four endpoint products.
    pub fn mul(&self, other: &Interval) -> Interval {
        let p = [
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        ];
        let lo = p.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = p.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval::new_unchecked(lo, hi)
    }

    /// `[1/hi, 1/lo]`; `None` when zero lies in the interval.
    pub fn recip(&self) -> Option<Interval> {
        if self.contains(0.0) {
            return None;
        }
        Some(Interval::new_unchecked(1.0 / self.hi, 1.0 / self.lo))
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval::new_unchecked(self.lo.min(other.lo), self.hi.max(other.hi))
    }

    /// Largest endpoint deviation.
    pub fn distance(&self, other: &Interval) -> f64 {
        (self.lo - other.lo).abs().max((self.hi - other.hi).abs())
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Cartesian product of intervals.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalBox {
    components: Vec<Interval>,
}

impl IntervalBox {
    pub fn new(components: Vec<Interval>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Parameter("a box needs at least one component".into()));
        }
        Ok(IntervalBox { components })
    }

    pub fn components(&self) -> &[Interval] {
        &self.components
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_reversed() {
        assert!(Interval::new(2.0, 1.0).is_err());
        assert!(Interval::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn midpoint_form() {
        let a = Interval::new(-1.0, 3.0).unwrap();
        assert_eq!(a.midpoint(), 1.0);
        assert_eq!(a.half_width(), 2.0);
    }

    #[test]
    fn product_and_reciprocal() {
        let a = Interval::new(-2.0, 3.0).unwrap();
        let b = Interval::new(-1.0, 4.0).unwrap();
        assert_eq!(a.mul(&b), Interval::new(-8.0, 12.0).unwrap());
        assert!(a.recip().is_none());
        let c = Interval::new(2.0, 4.0).unwrap();
        assert_eq!(c.recip().unwrap(), Interval::new(0.25, 0.5).unwrap());
    }

    #[test]
    fn negative_scale_swaps() {
        let a = Interval::new(1.0, 3.0).unwrap();
        assert_eq!(a.scale(-1.0), Interval::new(-3.0, -1.0).unwrap());
    }
}
