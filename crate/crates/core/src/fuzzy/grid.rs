use crate::error::{Error, Result};

/// Default number of alpha intervals (101 levels).
pub const DEFAULT_LEVELS: usize = 100;

/// Partition `0 = a_0 < a_1 < ... < a_N = 1` of the membership range.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaGrid {
    levels: Vec<f64>,
}

impl AlphaGrid {
    pub fn new(levels: Vec<f64>) -> Result<Self> {
        if levels.len() < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least 2 levels, got {}",
                levels.len()
            )));
        }
        if levels[0] != 0.0 || *levels.last().unwrap() != 1.0 {
            return Err(Error::InvalidGrid(
                "first level must be 0 and last level must be 1".into(),
            ));
        }
        if let Some(i) = levels.windows(2).position(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidGrid(format!(
                "levels not strictly increasing at index {}",
                i + 1
            )));
        }
        Ok(AlphaGrid { levels })
    }

    /// `n` equal steps, `n + 1` levels. Panics if `n == 0`.
    pub fn uniform(n: usize) -> Self {
        assert!(n > 0, "uniform alpha grid needs at least one step");
        let mut levels: Vec<f64> = (0..=n).map(|i| i as f64 / n as f64).collect();
        levels[n] = 1.0;
        AlphaGrid { levels }
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Index `i` with `levels[i] <= alpha <= levels[i + 1]` plus the
    /// interpolation weight of the upper neighbour.
    pub(crate) fn bracket(&self, alpha: f64) -> (usize, f64) {
        let a = alpha.clamp(0.0, 1.0);
        let n = self.levels.len() - 1;
        match self
            .levels
            .binary_search_by(|l| l.partial_cmp(&a).unwrap_or(std::cmp::Ordering::Less))
        {
            Ok(i) if i == n => (n - 1, 1.0),
            Ok(i) => (i, 0.0),
            Err(i) => {
                let lo = i - 1;
                let t = (a - self.levels[lo]) / (self.levels[i] - self.levels[lo]);
                (lo, t)
            }
        }
    }
}

impl Default for AlphaGrid {
    fn default() -> Self {
        AlphaGrid::uniform(DEFAULT_LEVELS)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_endpoints_exact() {
        let g = AlphaGrid::uniform(3);
        assert_eq!(g.levels(), &[0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0]);
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(AlphaGrid::new(vec![0.0]).is_err());
        assert!(AlphaGrid::new(vec![0.1, 1.0]).is_err());
        assert!(AlphaGrid::new(vec![0.0, 0.5, 0.5, 1.0]).is_err());
        assert!(AlphaGrid::new(vec![0.0, 0.9]).is_err());
        assert!(AlphaGrid::new(vec![0.0, 0.25, 1.0]).is_ok());
    }

    #[test]
    fn bracket_on_and_off_grid() {
        let g = AlphaGrid::uniform(4);
        assert_eq!(g.bracket(0.0), (0, 0.0));
        assert_eq!(g.bracket(1.0), (3, 1.0));
        assert_eq!(g.bracket(0.5), (2, 0.0));
        let (i, t) = g.bracket(0.3);
        assert_eq!(i, 1);
        assert!((t - 0.2).abs() < 1e-12);
    }
}
