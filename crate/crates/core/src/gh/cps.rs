use serde::{Deserialize, Serialize};

use crate::error::{Error, NotExistsReason, Result};
use crate::fuzzy::{tolerance, validate_endpoints, AlphaGrid, FuzzyNumber, Interval};

use super::{combine_cases, gh_diff_interval, reason_of, GhCase};

/// Core / symmetry-profile / symmetric-spread form of a fuzzy number.
///
/// `u-(a) = crisp.lo + profile[a] - symmetric[a]` and
/// `u+(a) = crisp.hi + profile[a] + symmetric[a]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CpsTriple {
    pub crisp: Interval,
    pub profile: Vec<f64>,
    pub symmetric: Vec<f64>,
}

impl CpsTriple {
    /// Profile and spread form a valid pair: `profile - symmetric` nondecreasing,
    /// `profile + symmetric` nonincreasing, both zero at the top level.
    pub fn check_pair(&self) -> Result<()> {
        let lo: Vec<f64> = self.profile.iter().zip(&self.symmetric).map(|(p, s)| p - s).collect();
        let hi: Vec<f64> = self.profile.iter().zip(&self.symmetric).map(|(p, s)| p + s).collect();
        let report = validate_endpoints(&lo, &hi);
        if !report.is_valid {
            return Err(Error::InvalidPair(report));
        }
        let tau = tolerance(&lo, &hi);
        let top = self.profile.len() - 1;
        if self.profile[top].abs() > tau || self.symmetric[top].abs() > tau {
            return Err(Error::Parameter(format!(
                "profile and symmetric part must vanish at alpha = 1, got {} and {}",
                self.profile[top], self.symmetric[top]
            )));
        }
        Ok(())
    }
}

pub fn cps_decompose(u: &FuzzyNumber) -> CpsTriple {
    let core = u.core();
    let (profile, symmetric) = u
        .cuts()
        .map(|c| (c.midpoint() - core.midpoint(), c.half_width() - core.half_width()))
        .unzip();
    CpsTriple { crisp: core, profile, symmetric }
}

pub fn cps_compose(t: &CpsTriple, grid: &AlphaGrid) -> Result<FuzzyNumber> {
    if t.profile.len() != grid.len() || t.symmetric.len() != grid.len() {
        return Err(Error::Parameter(format!(
            "expected {} profile and symmetric values, got {} and {}",
            grid.len(),
            t.profile.len(),
            t.symmetric.len()
        )));
    }
    t.check_pair()?;
    let lower = t.profile.iter().zip(&t.symmetric).map(|(p, s)| t.crisp.lo() + p - s).collect();
    let upper = t.profile.iter().zip(&t.symmetric).map(|(p, s)| t.crisp.hi() + p + s).collect();
    FuzzyNumber::from_endpoints(grid.clone(), lower, upper)
}

/// gH-difference computed on the decomposition: cores by the interval rule,
/// profiles subtract, spreads subtract in absolute value.
///
/// Exists when `u.symmetric - v.symmetric` keeps one sign (matching the
/// cores' case) and the resulting pair is valid.
pub fn cps_gh_diff(u: &CpsTriple, v: &CpsTriple) -> Result<(CpsTriple, GhCase)> {
    if u.profile.len() != v.profile.len() {
        return Err(Error::GridMismatch);
    }
    let (crisp, core_case) = gh_diff_interval(u.crisp, v.crisp);
    let profile: Vec<f64> = u.profile.iter().zip(&v.profile).map(|(a, b)| a - b).collect();
    let spread: Vec<f64> = u.symmetric.iter().zip(&v.symmetric).map(|(a, b)| a - b).collect();

    let tau = tolerance(&u.symmetric, &v.symmetric);
    let mut cases: Vec<GhCase> = spread.iter().map(|&d| GhCase::from_sign(d, tau)).collect();
    cases.push(core_case);
    let case = combine_cases(&cases)?;
    let sign = if case == GhCase::CaseII { -1.0 } else { 1.0 };
    let symmetric: Vec<f64> = spread.iter().map(|d| sign * d).collect();

    let lo: Vec<f64> = profile.iter().zip(&symmetric).map(|(p, s)| p - s).collect();
    let hi: Vec<f64> = profile.iter().zip(&symmetric).map(|(p, s)| p + s).collect();
    let report = validate_endpoints(&lo, &hi);
    if !report.is_valid {
        return Err(Error::NotExists(reason_of(&report)));
    }
    let w = CpsTriple { crisp, profile, symmetric };
    w.check_pair().map_err(|_| Error::NotExists(NotExistsReason::Crossing))?;
    Ok((w, case))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_triangle() {
        let g = AlphaGrid::default();
        let t = cps_decompose(&FuzzyNumber::triangular(0.0, 1.0, 2.0, &g).unwrap());
        assert_eq!(t.crisp, Interval::point(1.0));
        assert!(t.profile.iter().all(|&p| p.abs() < 1e-15));
        for (s, a) in t.symmetric.iter().zip(g.levels()) {
            assert!((s - (1.0 - a)).abs() < 1e-15);
        }
    }

    #[test]
    fn compose_inverts_decompose() {
        let g = AlphaGrid::uniform(20);
        let u = FuzzyNumber::trapezoid(-3.0, 0.5, 1.25, 7.0, &g).unwrap();
        let back = cps_compose(&cps_decompose(&u), &g).unwrap();
        assert!(back.distance(&u).unwrap() < 1e-14);
    }

    #[test]
    fn invalid_pair_rejected() {
        let g = AlphaGrid::uniform(2);
        let t = CpsTriple {
            crisp: Interval::point(0.0),
            profile: vec![0.0, 0.0, 0.0],
            symmetric: vec![0.0, 1.0, 0.0],
        };
        assert!(matches!(cps_compose(&t, &g), Err(Error::InvalidPair(_))));
    }

    #[test]
    fn difference_of_symmetric_numbers_case_ii() {
        let g = AlphaGrid::default();
        let triple = |c: f64, s: &dyn Fn(f64) -> f64| CpsTriple {
            crisp: Interval::point(c),
            profile: vec![0.0; g.len()],
            symmetric: g.levels().iter().map(|&a| s(a)).collect(),
        };
        let u = triple(1.0, &|a| 1.0 - a * a);
        let v = triple(0.0, &|a| 2.0 - 2.0 * a);
        let (w, case) = cps_gh_diff(&u, &v).unwrap();
        assert_eq!(case, GhCase::CaseII);
        let z = cps_compose(&w, &g).unwrap();
        for (i, &a) in g.levels().iter().enumerate() {
            let s = (1.0 - a) * (1.0 - a);
            assert!((z.lower()[i] - (1.0 - s)).abs() < 1e-12);
            assert!((z.upper()[i] - (1.0 + s)).abs() < 1e-12);
        }
    }

    #[test]
    fn agrees_with_direct_difference() {
        let g = AlphaGrid::default();
        let u = FuzzyNumber::triangular(12.0, 15.0, 19.0, &g).unwrap();
        let v = FuzzyNumber::triangular(5.0, 7.0, 10.0, &g).unwrap();
        let (w, case) = cps_gh_diff(&cps_decompose(&u), &cps_decompose(&v)).unwrap();
        let (direct, direct_case) = super::super::gh_diff_fuzzy(&u, &v).unwrap();
        assert_eq!(case, direct_case);
        assert!(cps_compose(&w, &g).unwrap().distance(&direct).unwrap() < 1e-12);
    }
}
