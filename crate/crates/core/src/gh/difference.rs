use crate::error::{Error, Result};
use crate::fuzzy::{enforce_nesting, tolerance, FuzzyNumber, Interval, IntervalBox};
use crate::isotonic::isotonic_increasing;

use super::{accept_levelwise, GhCase};

/// gH-difference of intervals: `[min(a- - b-, a+ - b+), max(a- - b-, a+ - b+)]`.
///
/// Case (i) when `len(A) > len(B)`, case (ii) when shorter, `Both` when the
/// lengths agree within tolerance.
pub fn gh_diff_interval(a: Interval, b: Interval) -> (Interval, GhCase) {
    let dl = a.lo() - b.lo();
    let du = a.hi() - b.hi();
    let tol = tolerance(&[a.lo(), b.lo()], &[a.hi(), b.hi()]);
    let case = GhCase::from_sign(a.len() - b.len(), tol);
    (Interval::new_unchecked(dl.min(du), dl.max(du)), case)
}

/// Componentwise gH-difference of boxes. Exists iff every component is
/// compatible with one common case.
pub fn gh_diff_box(a: &IntervalBox, b: &IntervalBox) -> Result<(IntervalBox, GhCase)> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { left: a.dim(), right: b.dim() });
    }
    let (parts, cases): (Vec<Interval>, Vec<GhCase>) = a
        .components()
        .iter()
        .zip(b.components())
        .map(|(x, y)| gh_diff_interval(*x, *y))
        .unzip();
    let case = super::combine_cases(&cases)?;
    Ok((IntervalBox::new(parts)?, case))
}

/// Per-level gH-differences of the cuts, without any existence check.
pub fn levelwise_gh(u: &FuzzyNumber, v: &FuzzyNumber) -> Result<(Vec<f64>, Vec<f64>, Vec<GhCase>)> {
    if u.grid() != v.grid() {
        return Err(Error::GridMismatch);
    }
    let tol = tolerance(u.lower(), u.upper()).max(tolerance(v.lower(), v.upper()));
    let mut lower = Vec::with_capacity(u.grid().len());
    let mut upper = Vec::with_capacity(u.grid().len());
    let mut cases = Vec::with_capacity(u.grid().len());
    for (a, b) in u.cuts().zip(v.cuts()) {
        let (c, _) = gh_diff_interval(a, b);
        lower.push(c.lo());
        upper.push(c.hi());
        cases.push(GhCase::from_sign(a.len() - b.len(), tol));
    }
    Ok((lower, upper, cases))
}

/// gH-difference `u -g v` of fuzzy numbers.
///
/// The levelwise differences must nest (lower nondecreasing, upper
/// nonincreasing) and every level must satisfy the same case.
pub fn gh_diff_fuzzy(u: &FuzzyNumber, v: &FuzzyNumber) -> Result<(FuzzyNumber, GhCase)> {
    let (lower, upper, cases) = levelwise_gh(u, v)?;
    accept_levelwise(u.grid(), lower, upper, &cases)
}

/// Hull of the levelwise differences over all higher levels; always a fuzzy number.
pub fn approx_gh_diff(u: &FuzzyNumber, v: &FuzzyNumber) -> Result<FuzzyNumber> {
    let (mut lower, mut upper, _) = levelwise_gh(u, v)?;
    enforce_nesting(&mut lower, &mut upper);
    FuzzyNumber::from_endpoints(u.grid().clone(), lower, upper)
}

/// Fuzzy number whose cuts are closest, in weighted least squares, to the
/// levelwise gH-differences.
///
/// The constraint `z0- <= .. <= zN- <= zN+ <= .. <= z0+` is a single chain,
/// so the minimiser is the weighted isotonic regression of the stacked
/// sequence. `lower_weights` and `upper_weights` default to all ones.
pub fn lsq_gh_diff(
    u: &FuzzyNumber,
    v: &FuzzyNumber,
    lower_weights: Option<&[f64]>,
    upper_weights: Option<&[f64]>,
) -> Result<FuzzyNumber> {
    let (lower, upper, _) = levelwise_gh(u, v)?;
    let n = lower.len();
    let ones = vec![1.0; n];
    let omega = lower_weights.unwrap_or(&ones);
    let gamma = upper_weights.unwrap_or(&ones);
    if omega.len() != n || gamma.len() != n {
        return Err(Error::Parameter(format!("expected {n} weights per side")));
    }

    let y: Vec<f64> = lower.iter().chain(upper.iter().rev()).copied().collect();
    let w: Vec<f64> = omega.iter().chain(gamma.iter().rev()).copied().collect();
    let z = isotonic_increasing(&y, &w).map_err(|e| match e {
        Error::NonpositiveWeight { index, value } if index >= n => Error::NonpositiveWeight {
            index: 2 * n - 1 - index,
            value,
        },
        e => e,
    })?;

    let lower = z[..n].to_vec();
    let upper = z[n..].iter().rev().copied().collect();
    FuzzyNumber::from_endpoints(u.grid().clone(), lower, upper)
}
