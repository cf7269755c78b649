//! Calculus of fuzzy-valued functions of one real variable, carried out on
//! the endpoint curves of every alpha level.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frac::{caputo_derivative, differentiate, rl_integral};
use crate::fuzzy::{validate_endpoints, AlphaGrid, FuzzyNumber};
use crate::sampled::SampledFunction;

/// Fuzzy numbers sampled at `a + k h`, all on one alpha grid.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyFunction {
    a: f64,
    h: f64,
    values: Vec<FuzzyNumber>,
}

impl FuzzyFunction {
    pub fn new(a: f64, h: f64, values: Vec<FuzzyNumber>) -> Result<Self> {
        if !(h > 0.0 && h.is_finite()) {
            return Err(Error::Parameter(format!("step must be positive, got {h}")));
        }
        if values.len() < 2 {
            return Err(Error::DegenerateGrid(values.len()));
        }
        if values.iter().any(|v| v.grid() != values[0].grid()) {
            return Err(Error::GridMismatch);
        }
        Ok(FuzzyFunction { a, h, values })
    }

    pub fn from_fn(a: f64, h: f64, steps: usize, f: impl Fn(f64) -> FuzzyNumber) -> Result<Self> {
        FuzzyFunction::new(a, h, (0..=steps).map(|k| f(a + k as f64 * h)).collect())
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn values(&self) -> &[FuzzyNumber] {
        &self.values
    }

    pub fn grid(&self) -> &AlphaGrid {
        self.values[0].grid()
    }

    pub fn last(&self) -> usize {
        self.values.len() - 1
    }

    pub fn abscissa(&self, k: usize) -> f64 {
        self.a + k as f64 * self.h
    }

    /// Lower endpoint at level `i` as a function of time.
    pub fn lower_curve(&self, i: usize) -> SampledFunction {
        self.curve(|u| u.lower()[i])
    }

    /// Upper endpoint at level `i` as a function of time.
    pub fn upper_curve(&self, i: usize) -> SampledFunction {
        self.curve(|u| u.upper()[i])
    }

    fn curve(&self, f: impl Fn(&FuzzyNumber) -> f64) -> SampledFunction {
        SampledFunction::new(self.a, self.h, self.values.iter().map(f).collect()).expect("checked at construction")
    }

    fn check_index(&self, k: usize) -> Result<()> {
        if k > self.last() {
            return Err(Error::Range { index: k, last: self.last() });
        }
        Ok(())
    }

    /// Assembles per-level endpoint series `lower[i][k]`, `upper[i][k]` into
    /// the fuzzy number at each time.
    fn assemble_levels(&self, lower: &[Vec<f64>], upper: &[Vec<f64>], pick: impl Fn(usize) -> bool) -> Vec<FuzzyNumber> {
        (0..self.values.len())
            .map(|k| {
                let lo: Vec<f64> = lower.iter().map(|c| c[k]).collect();
                let hi: Vec<f64> = upper.iter().map(|c| c[k]).collect();
                let (lo, hi) = if pick(k) { (lo, hi) } else { (hi, lo) };
                FuzzyNumber::from_endpoints_repaired(self.grid().clone(), lo, hi)
            })
            .collect()
    }
}

/// Which endpoint pairing realises the gH-derivative at a sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DerivativeForm {
    /// `[lower', upper']`: the spread grows.
    #[serde(rename = "form_i")]
    FormI,
    /// `[upper', lower']`: the spread shrinks.
    #[serde(rename = "form_ii")]
    FormII,
    /// Neither pairing is a fuzzy number.
    Undefined,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FormReport {
    pub forms: Vec<DerivativeForm>,
    pub switching_points: Vec<f64>,
}

/// gH-derivative of `f` at every sample.
///
/// Endpoint curves are differentiated per level (central differences inside,
/// second-order one-sided at the ends). A sample where both pairings are
/// valid (zero spread rate) takes the form of the preceding sample, or of
/// the first decided sample when it comes first; if no sample is decided
/// the form is (i). Where neither pairing is valid the value returned is the
/// nested hull of the two slopes.
pub fn gh_derivative_series(f: &FuzzyFunction) -> Result<(FuzzyFunction, FormReport)> {
    if f.values.len() < 3 {
        return Err(Error::DegenerateGrid(f.values.len()));
    }
    let levels = f.grid().len();
    let dl: Vec<Vec<f64>> = (0..levels).map(|i| differentiate(f.lower_curve(i).values(), f.h)).collect();
    let du: Vec<Vec<f64>> = (0..levels).map(|i| differentiate(f.upper_curve(i).values(), f.h)).collect();

    let decided: Vec<Option<DerivativeForm>> = (0..f.values.len())
        .map(|k| {
            let lo: Vec<f64> = dl.iter().map(|c| c[k]).collect();
            let hi: Vec<f64> = du.iter().map(|c| c[k]).collect();
            match (validate_endpoints(&lo, &hi).is_valid, validate_endpoints(&hi, &lo).is_valid) {
                (true, true) => None,
                (true, false) => Some(DerivativeForm::FormI),
                (false, true) => Some(DerivativeForm::FormII),
                (false, false) => Some(DerivativeForm::Undefined),
            }
        })
        .collect();

    let first = decided
        .iter()
        .flatten()
        .find(|d| **d != DerivativeForm::Undefined)
        .copied()
        .unwrap_or(DerivativeForm::FormI);
    let mut forms = Vec::with_capacity(decided.len());
    let mut prev = first;
    for d in &decided {
        let form = d.unwrap_or(prev);
        if form != DerivativeForm::Undefined {
            prev = form;
        }
        forms.push(form);
    }

    let mut switching_points = Vec::new();
    let mut last_defined: Option<usize> = None;
    for (k, form) in forms.iter().enumerate() {
        if *form == DerivativeForm::Undefined {
            continue;
        }
        if let Some(j) = last_defined {
            if forms[j] != *form {
                switching_points.push(0.5 * (f.abscissa(j) + f.abscissa(k)));
            }
        }
        last_defined = Some(k);
    }

    let values = f.assemble_levels(&dl, &du, |k| forms[k] != DerivativeForm::FormII);
    let values = values
        .into_iter()
        .zip(&forms)
        .enumerate()
        .map(|(k, (v, form))| {
            if *form != DerivativeForm::Undefined {
                return v;
            }
            let lo = dl.iter().zip(&du).map(|(a, b)| a[k].min(b[k])).collect();
            let hi = dl.iter().zip(&du).map(|(a, b)| a[k].max(b[k])).collect();
            FuzzyNumber::from_endpoints_repaired(f.grid().clone(), lo, hi)
        })
        .collect();
    let derivative = FuzzyFunction { a: f.a, h: f.h, values };
    Ok((derivative, FormReport { forms, switching_points }))
}

/// Levelwise trapezoid integral of `f` between samples `from` and `to`.
pub fn fuzzy_riemann_integral(f: &FuzzyFunction, from: usize, to: usize) -> Result<FuzzyNumber> {
    f.check_index(to)?;
    if from > to {
        return Err(Error::Parameter(format!("integration range {from}..{to} is reversed")));
    }
    let trap = |curve: &SampledFunction| {
        let v = &curve.values()[from..=to];
        if v.len() < 2 {
            return 0.0;
        }
        f.h * (v.iter().sum::<f64>() - 0.5 * (v[0] + v[v.len() - 1]))
    };
    let levels = f.grid().len();
    let lower = (0..levels).map(|i| trap(&f.lower_curve(i))).collect();
    let upper = (0..levels).map(|i| trap(&f.upper_curve(i))).collect();
    FuzzyNumber::from_endpoints(f.grid().clone(), lower, upper)
}

/// Riemann-Liouville integral of order `q >= 0` of each endpoint curve at sample `k`.
pub fn fuzzy_rl_integral(f: &FuzzyFunction, q: f64, k: usize) -> Result<FuzzyNumber> {
    f.check_index(k)?;
    let levels = f.grid().len();
    let lower = (0..levels).map(|i| rl_integral(&f.lower_curve(i), q, k)).collect::<Result<Vec<_>>>()?;
    let upper = (0..levels).map(|i| rl_integral(&f.upper_curve(i), q, k)).collect::<Result<Vec<_>>>()?;
    FuzzyNumber::from_endpoints(f.grid().clone(), lower, upper)
}

/// Fractional gH-derivative of order `q` in `(0, 1)` at sample `k`: the
/// integral of order `1 - q` of the gH-derivative, taken endpoint-wise.
///
/// Requires a single derivative form on `[a, t_k]`; the form is returned.
pub fn fuzzy_frac_derivative(f: &FuzzyFunction, q: f64, k: usize) -> Result<(FuzzyNumber, DerivativeForm)> {
    f.check_index(k)?;
    let (_, report) = gh_derivative_series(f)?;
    let t = f.abscissa(k);
    if let Some(&s) = report.switching_points.iter().find(|&&s| s <= t) {
        return Err(Error::SwitchingPoint(s));
    }
    if let Some(j) = report.forms[..=k].iter().position(|d| *d == DerivativeForm::Undefined) {
        return Err(Error::Domain(format!("gH-derivative does not exist at t = {}", f.abscissa(j))));
    }
    let form = report.forms[k];
    let levels = f.grid().len();
    let lo = (0..levels).map(|i| caputo_derivative(&f.lower_curve(i), q, k)).collect::<Result<Vec<_>>>()?;
    let hi = (0..levels).map(|i| caputo_derivative(&f.upper_curve(i), q, k)).collect::<Result<Vec<_>>>()?;
    let (lo, hi) = if form == DerivativeForm::FormII { (hi, lo) } else { (lo, hi) };
    Ok((FuzzyNumber::from_endpoints_repaired(f.grid().clone(), lo, hi), form))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frac::{gamma, rl_integral};
    use crate::gh::gh_diff_fuzzy;

    fn c() -> FuzzyNumber {
        FuzzyNumber::triangular(0.0, 1.0, 2.0, &AlphaGrid::uniform(20)).unwrap()
    }

    fn scaled(h: f64, steps: usize, phi: impl Fn(f64) -> f64) -> FuzzyFunction {
        let c = c();
        FuzzyFunction::from_fn(0.0, h, steps, |t| c.scale(phi(t))).unwrap()
    }

    #[test]
    fn derivative_of_growing_line() {
        let f = scaled(0.01, 100, |t| t);
        let (d, report) = gh_derivative_series(&f).unwrap();
        assert!(report.forms.iter().all(|x| *x == DerivativeForm::FormI));
        assert!(report.switching_points.is_empty());
        for v in d.values() {
            assert!(v.distance(&c()).unwrap() < 1e-12);
        }
    }

    #[test]
    fn derivative_of_shrinking_line() {
        let f = scaled(0.01, 99, |t| 1.0 - t);
        let (d, report) = gh_derivative_series(&f).unwrap();
        assert!(report.forms.iter().all(|x| *x == DerivativeForm::FormII));
        for v in d.values() {
            assert!(v.distance(&c().neg()).unwrap() < 1e-12);
        }
    }

    #[test]
    fn crisp_function_is_form_i() {
        let g = AlphaGrid::uniform(4);
        let f = FuzzyFunction::from_fn(0.0, 0.1, 10, |t| FuzzyNumber::crisp(t * t, &g)).unwrap();
        let (d, report) = gh_derivative_series(&f).unwrap();
        assert!(report.forms.iter().all(|x| *x == DerivativeForm::FormI));
        assert!((d.values()[5].core().lo() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn switching_point_of_square() {
        let h = 0.01;
        let f = scaled(h, 200, |t| (1.0 - t) * (1.0 - t));
        let (_, report) = gh_derivative_series(&f).unwrap();
        assert_eq!(report.switching_points.len(), 1);
        assert!((report.switching_points[0] - 1.0).abs() <= h);
        assert_eq!(report.forms[10], DerivativeForm::FormII);
        assert_eq!(report.forms[190], DerivativeForm::FormI);
    }

    #[test]
    fn degenerate_grid() {
        let f = scaled(0.5, 1, |t| t);
        assert!(matches!(gh_derivative_series(&f), Err(Error::DegenerateGrid(2))));
    }

    #[test]
    fn newton_leibniz() {
        let steps = 10_000;
        let f = scaled(1e-4, steps, |t| (2.0 * t).exp());
        let (d, _) = gh_derivative_series(&f).unwrap();
        let integral = fuzzy_riemann_integral(&d, 0, steps).unwrap();
        let (diff, _) = gh_diff_fuzzy(&f.values()[steps], &f.values()[0]).unwrap();
        let e = integral.distance(&diff).unwrap();
        assert!(e < 1e-6, "{e}");
    }

    #[test]
    fn crisp_integral() {
        let g = AlphaGrid::uniform(3);
        let f = FuzzyFunction::from_fn(0.0, 0.01, 100, |t| FuzzyNumber::crisp(t, &g)).unwrap();
        let v = fuzzy_riemann_integral(&f, 0, 100).unwrap();
        assert!(v.distance(&FuzzyNumber::crisp(0.5, &g)).unwrap() < 1e-14);
        assert!(fuzzy_riemann_integral(&f, 5, 4).is_err());
        assert!(matches!(fuzzy_riemann_integral(&f, 0, 101), Err(Error::Range { .. })));
    }

    #[test]
    fn rl_integral_of_constant() {
        let q = 0.4;
        let f = scaled(1e-3, 1000, |_| 1.0);
        let v = fuzzy_rl_integral(&f, q, 1000).unwrap();
        let expected = c().scale(1.0 / gamma(q + 1.0).unwrap());
        assert!(v.distance(&expected).unwrap() < 1e-10);
    }

    #[test]
    fn rl_integral_order_one_is_riemann() {
        let f = scaled(1e-2, 100, |t| t.sin() + 1.0);
        let a = fuzzy_rl_integral(&f, 1.0, 100).unwrap();
        let b = fuzzy_riemann_integral(&f, 0, 100).unwrap();
        assert!(a.distance(&b).unwrap() < 1e-12);
    }

    #[test]
    fn crisp_rl_integral_matches_real() {
        let g = AlphaGrid::uniform(3);
        let f = FuzzyFunction::from_fn(0.0, 0.01, 100, |t| FuzzyNumber::crisp(t.cos(), &g)).unwrap();
        let v = fuzzy_rl_integral(&f, 0.6, 77).unwrap();
        let r = rl_integral(&f.lower_curve(0), 0.6, 77).unwrap();
        assert_eq!(v.core().lo(), r);
    }

    #[test]
    fn frac_derivative_of_line() {
        let f = scaled(1e-3, 1000, |t| t);
        let (v, form) = fuzzy_frac_derivative(&f, 0.5, 1000).unwrap();
        assert_eq!(form, DerivativeForm::FormI);
        let expected = c().scale(1.0 / gamma(1.5).unwrap());
        assert!(v.distance(&expected).unwrap() < 1e-12);
    }

    #[test]
    fn frac_derivative_form_ii() {
        let f = scaled(1e-3, 999, |t| 1.0 - t);
        let (v, form) = fuzzy_frac_derivative(&f, 0.5, 999).unwrap();
        assert_eq!(form, DerivativeForm::FormII);
        let t: f64 = 0.999;
        let expected = c().neg().scale(t.sqrt() / gamma(1.5).unwrap());
        assert!(v.distance(&expected).unwrap() < 1e-12);
    }

    #[test]
    fn frac_derivative_refuses_switching() {
        let f = scaled(0.01, 200, |t| (1.0 - t) * (1.0 - t));
        assert!(fuzzy_frac_derivative(&f, 0.5, 50).is_ok());
        assert!(matches!(fuzzy_frac_derivative(&f, 0.5, 150), Err(Error::SwitchingPoint(_))));
    }
}
