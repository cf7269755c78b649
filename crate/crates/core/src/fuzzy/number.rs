use crate::error::{Error, Result};

use super::grid::AlphaGrid;
use super::interval::Interval;
use super::validity::{enforce_nesting, validate_endpoints, ValidityReport};

/// A fuzzy number stored by its alpha-cuts `[lower[i], upper[i]]` on a grid.
///
/// Invariants: `lower` nondecreasing, `upper` nonincreasing, `lower <= upper`
/// at every level. Off-grid cuts are linear interpolations between the
/// bracketing levels.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyNumber {
    grid: AlphaGrid,
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl FuzzyNumber {
    /// Validates raw endpoints. Violations within tolerance are clamped.
    pub fn from_endpoints(grid: AlphaGrid, mut lower: Vec<f64>, mut upper: Vec<f64>) -> Result<Self> {
        if lower.len() != grid.len() || upper.len() != grid.len() {
            return Err(Error::Parameter(format!(
                "expected {} endpoints per side, got {} and {}",
                grid.len(),
                lower.len(),
                upper.len()
            )));
        }
        let report = validate_endpoints(&lower, &upper);
        if !report.is_valid {
            return Err(Error::Validation(report));
        }
        enforce_nesting(&mut lower, &mut upper);
        Ok(FuzzyNumber { grid, lower, upper })
    }

    /// Like [`FuzzyNumber::from_endpoints`] but repairs any violation with the
    /// backward nested-union sweep instead of failing.
    pub(crate) fn from_endpoints_repaired(grid: AlphaGrid, mut lower: Vec<f64>, mut upper: Vec<f64>) -> Self {
        debug_assert_eq!(lower.len(), grid.len());
        enforce_nesting(&mut lower, &mut upper);
        FuzzyNumber { grid, lower, upper }
    }

    /// Trapezoidal number `<a, b, c, d>` with support `[a, d]` and core `[b, c]`.
    pub fn trapezoid(a: f64, b: f64, c: f64, d: f64, grid: &AlphaGrid) -> Result<Self> {
        if !(a <= b && b <= c && c <= d) {
            return Err(Error::Ordering { a, b, c, d });
        }
        let lower = grid.levels().iter().map(|&t| lerp(a, b, t)).collect();
        let upper = grid.levels().iter().map(|&t| lerp(d, c, t)).collect();
        FuzzyNumber::from_endpoints(grid.clone(), lower, upper)
    }

    pub fn triangular(a: f64, b: f64, c: f64, grid: &AlphaGrid) -> Result<Self> {
        FuzzyNumber::trapezoid(a, b, b, c, grid)
    }

    pub fn crisp(x: f64, grid: &AlphaGrid) -> Self {
        FuzzyNumber {
            grid: grid.clone(),
            lower: vec![x; grid.len()],
            upper: vec![x; grid.len()],
        }
    }

    pub fn grid(&self) -> &AlphaGrid {
        &self.grid
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn cut_at(&self, i: usize) -> Interval {
        Interval::new_unchecked(self.lower[i], self.upper[i])
    }

    pub fn cuts(&self) -> impl Iterator<Item = Interval> + '_ {
        (0..self.grid.len()).map(move |i| self.cut_at(i))
    }

    /// The alpha = 1 cut.
    pub fn core(&self) -> Interval {
        self.cut_at(self.grid.len() - 1)
    }

    /// The closure of the support (alpha = 0 cut).
    pub fn support(&self) -> Interval {
        self.cut_at(0)
    }

    pub fn is_crisp(&self) -> bool {
        self.lower.iter().zip(&self.upper).all(|(l, u)| l == u) && self.lower.windows(2).all(|w| w[0] == w[1])
    }

    /// Cut at an arbitrary grade; linear interpolation between grid levels.
    pub fn alpha_cut(&self, alpha: f64) -> Interval {
        let (i, t) = self.grid.bracket(alpha);
        if t == 0.0 {
            return self.cut_at(i);
        }
        if t == 1.0 {
            return self.cut_at(i + 1);
        }
        let lo = lerp(self.lower[i], self.lower[i + 1], t);
        let hi = lerp(self.upper[i], self.upper[i + 1], t);
        Interval::new_unchecked(lo, hi.max(lo))
    }

    /// Membership grade of `x`: the largest alpha whose (interpolated) cut contains `x`.
    pub fn membership(&self, x: f64) -> f64 {
        let levels = self.grid.levels();
        let top = levels.len() - 1;
        if x < self.lower[0] || x > self.upper[0] {
            return 0.0;
        }
        let from_lower = if x >= self.lower[top] {
            1.0
        } else {
            // last level whose lower endpoint is still <= x
            let i = self.lower.iter().rposition(|&l| l <= x).unwrap_or(0);
            let span = self.lower[i + 1] - self.lower[i];
            levels[i] + (x - self.lower[i]) / span * (levels[i + 1] - levels[i])
        };
        let from_upper = if x <= self.upper[top] {
            1.0
        } else {
            let i = self.upper.iter().rposition(|&u| u >= x).unwrap_or(0);
            let span = self.upper[i] - self.upper[i + 1];
            levels[i] + (self.upper[i] - x) / span * (levels[i + 1] - levels[i])
        };
        from_lower.min(from_upper)
    }

    fn check_grid(&self, other: &FuzzyNumber) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        Ok(())
    }

    fn levelwise(&self, other: &FuzzyNumber, op: impl Fn(Interval, Interval) -> Interval) -> Result<FuzzyNumber> {
        self.check_grid(other)?;
        let (lower, upper) = self
            .cuts()
            .zip(other.cuts())
            .map(|(a, b)| {
                let c = op(a, b);
                (c.lo(), c.hi())
            })
            .unzip();
        Ok(FuzzyNumber::from_endpoints_repaired(self.grid.clone(), lower, upper))
    }

    pub fn add(&self, other: &FuzzyNumber) -> Result<FuzzyNumber> {
        self.levelwise(other, |a, b| a.add(&b))
    }

    /// Minkowski difference `u + (-1) v`.
    pub fn sub(&self, other: &FuzzyNumber) -> Result<FuzzyNumber> {
        self.levelwise(other, |a, b| a.add(&b.neg()))
    }

    pub fn mul(&self, other: &FuzzyNumber) -> Result<FuzzyNumber> {
        self.levelwise(other, |a, b| a.mul(&b))
    }

    pub fn scale(&self, k: f64) -> FuzzyNumber {
        let (lower, upper) = self
            .cuts()
            .map(|c| {
                let s = c.scale(k);
                (s.lo(), s.hi())
            })
            .unzip();
        FuzzyNumber::from_endpoints_repaired(self.grid.clone(), lower, upper)
    }

    pub fn neg(&self) -> FuzzyNumber {
        self.scale(-1.0)
    }

    /// Sup over levels of the larger endpoint deviation.
    pub fn distance(&self, other: &FuzzyNumber) -> Result<f64> {
        self.check_grid(other)?;
        Ok(self
            .cuts()
            .zip(other.cuts())
            .fold(0.0, |m, (a, b)| m.max(a.distance(&b))))
    }

    /// Distance to the crisp zero.
    pub fn norm(&self) -> f64 {
        self.cuts().fold(0.0, |m, c| m.max(c.magnitude()))
    }

    /// Re-expresses `self` on another grid by interpolating its cuts.
    pub fn resample(&self, grid: &AlphaGrid) -> FuzzyNumber {
        let (lower, upper) = grid
            .levels()
            .iter()
            .map(|&a| {
                let c = self.alpha_cut(a);
                (c.lo(), c.hi())
            })
            .unzip();
        FuzzyNumber::from_endpoints_repaired(grid.clone(), lower, upper)
    }

    pub fn validity(&self) -> ValidityReport {
        validate_endpoints(&self.lower, &self.upper)
    }
}

pub(crate) fn lerp(a: f64, b: f64, t: f64) -> f64 {
    if t == 0.0 {
        a
    } else if t == 1.0 {
        b
    } else {
        a + t * (b - a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn tri(a: f64, b: f64, c: f64) -> FuzzyNumber {
        FuzzyNumber::triangular(a, b, c, &AlphaGrid::default()).unwrap()
    }

    #[test]
    fn trapezoid_support_and_core() {
        let u = FuzzyNumber::trapezoid(20.0, 25.0, 35.0, 40.0, &AlphaGrid::default()).unwrap();
        assert_eq!(u.alpha_cut(0.0), Interval::new(20.0, 40.0).unwrap());
        assert_eq!(u.alpha_cut(1.0), Interval::new(25.0, 35.0).unwrap());
    }

    #[test]
    fn degenerate_trapezoid_is_crisp() {
        let u = FuzzyNumber::trapezoid(5.0, 5.0, 5.0, 5.0, &AlphaGrid::default()).unwrap();
        assert!(u.is_crisp());
        assert!(u.lower().iter().chain(u.upper()).all(|&x| x == 5.0));
    }

    #[test]
    fn trapezoid_half_cut() {
        let u = FuzzyNumber::trapezoid(12.0, 15.0, 15.0, 19.0, &AlphaGrid::default()).unwrap();
        let c = u.alpha_cut(0.5);
        assert_abs_diff_eq!(c.lo(), 13.5, epsilon = 1e-14);
        assert_abs_diff_eq!(c.hi(), 17.0, epsilon = 1e-14);
    }

    #[test]
    fn trapezoid_rejects_bad_order() {
        let r = FuzzyNumber::trapezoid(1.0, 0.0, 2.0, 3.0, &AlphaGrid::default());
        assert!(matches!(r, Err(Error::Ordering { .. })));
    }

    #[test]
    fn cuts_of_triangle() {
        let u = tri(0.0, 1.0, 2.0);
        assert_eq!(u.alpha_cut(1.0), Interval::point(1.0));
        assert_eq!(u.alpha_cut(0.0), Interval::new(0.0, 2.0).unwrap());
        let c = u.alpha_cut(0.25);
        assert_abs_diff_eq!(c.lo(), 0.25, epsilon = 1e-14);
        assert_abs_diff_eq!(c.hi(), 1.75, epsilon = 1e-14);
        // off-grid on a coarse grid interpolates linearly
        let coarse = FuzzyNumber::triangular(0.0, 1.0, 2.0, &AlphaGrid::uniform(2)).unwrap();
        let c = coarse.alpha_cut(0.25);
        assert_abs_diff_eq!(c.lo(), 0.25, epsilon = 1e-14);
    }

    #[test]
    fn membership_of_triangle() {
        let u = tri(0.0, 1.0, 2.0);
        assert_eq!(u.membership(1.0), 1.0);
        assert_abs_diff_eq!(u.membership(0.5), 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(u.membership(1.5), 0.5, epsilon = 1e-12);
        assert_eq!(u.membership(5.0), 0.0);
        assert_eq!(u.membership(-0.1), 0.0);
    }

    #[test]
    fn membership_uses_interpolated_curves() {
        let coarse = FuzzyNumber::triangular(0.0, 1.0, 2.0, &AlphaGrid::uniform(2)).unwrap();
        assert_abs_diff_eq!(coarse.membership(0.3), 0.3, epsilon = 1e-12);
    }

    #[test]
    fn arithmetic_examples() {
        let s = tri(0.0, 1.0, 2.0).add(&tri(1.0, 2.0, 3.0)).unwrap();
        assert!(s.distance(&tri(1.0, 3.0, 5.0)).unwrap() < 1e-14);
        assert_eq!(tri(1.0, 2.0, 3.0).scale(-1.0), tri(-3.0, -2.0, -1.0));
        let two = FuzzyNumber::crisp(2.0, &AlphaGrid::default());
        assert!(two.mul(&tri(1.0, 2.0, 3.0)).unwrap().distance(&tri(2.0, 4.0, 6.0)).unwrap() < 1e-14);
    }

    #[test]
    fn grid_mismatch() {
        let a = tri(0.0, 1.0, 2.0);
        let b = FuzzyNumber::triangular(0.0, 1.0, 2.0, &AlphaGrid::uniform(4)).unwrap();
        assert!(matches!(a.add(&b), Err(Error::GridMismatch)));
        assert!(matches!(a.distance(&b), Err(Error::GridMismatch)));
        assert_eq!(b.resample(a.grid()).distance(&a).unwrap(), 0.0);
    }

    #[test]
    fn distance_self_zero() {
        let u = tri(-1.0, 0.5, 4.0);
        assert_eq!(u.distance(&u).unwrap(), 0.0);
    }

    #[test]
    fn rejects_invalid_endpoints() {
        let g = AlphaGrid::uniform(1);
        let r = FuzzyNumber::from_endpoints(g, vec![0.0, 2.0], vec![1.0, 1.0]);
        assert!(matches!(r, Err(Error::Validation(_))));
    }
}
