use crate::error::{Error, Result};

/// Real function sampled at `a + k h`, `k = 0..=M`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    a: f64,
    h: f64,
    values: Vec<f64>,
}

impl SampledFunction {
    pub fn new(a: f64, h: f64, values: Vec<f64>) -> Result<Self> {
        if !(h > 0.0) || !h.is_finite() {
            return Err(Error::Parameter(format!("step must be positive, got {h}")));
        }
        if values.len() < 2 {
            return Err(Error::Parameter(format!(
                "need at least 2 samples, got {}",
                values.len()
            )));
        }
        Ok(SampledFunction { a, h, values })
    }

    /// Samples `f` on `[a, a + steps * h]`.
    pub fn from_fn(a: f64, h: f64, steps: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = (0..=steps).map(|k| f(a + k as f64 * h)).collect();
        SampledFunction::new(a, h, values)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Index of the last sample.
    pub fn last(&self) -> usize {
        self.values.len() - 1
    }

    pub fn abscissa(&self, k: usize) -> f64 {
        self.a + k as f64 * self.h
    }

    pub(crate) fn check_index(&self, k: usize) -> Result<()> {
        if k > self.last() {
            return Err(Error::Range { index: k, last: self.last() });
        }
        Ok(())
    }

    /// Same abscissae, new values.
    pub(crate) fn with_values(&self, values: Vec<f64>) -> SampledFunction {
        debug_assert_eq!(values.len(), self.values.len());
        SampledFunction { a: self.a, h: self.h, values }
    }
}
