use crate::error::{Error, Result};
use crate::fuzzy::{enforce_nesting, tolerance, FuzzyNumber, Interval};

use super::{accept_levelwise, GhCase};

/// Relative safety margin around zero for divisors.
pub const DIVISION_MARGIN: f64 = 1e-12;

fn check_divisor(b: Interval) -> Result<()> {
    let delta = DIVISION_MARGIN * (1.0 + b.magnitude());
    if b.lo() - delta <= 0.0 && 0.0 <= b.hi() + delta {
        return Err(Error::Domain(format!("divisor {b} contains or touches zero")));
    }
    Ok(())
}

/// Generalized division `A /g B` of intervals.
///
/// The quotient endpoints are picked by the sign pattern of `A` and `B`:
/// when `A` has a strict sign the two candidate ratios are ordered to give
/// the case; when `A` straddles zero only case (i) is possible.
pub fn g_div_interval(a: Interval, b: Interval) -> Result<(Interval, GhCase)> {
    check_divisor(b)?;
    let (al, ah, bl, bh) = (a.lo(), a.hi(), b.lo(), b.hi());
    let positive_b = bl > 0.0;

    if al <= 0.0 && ah >= 0.0 && !(al == 0.0 && ah == 0.0) {
        let c = if positive_b {
            Interval::new_unchecked(al / bh, ah / bh)
        } else {
            Interval::new_unchecked(ah / bl, al / bl)
        };
        return Ok((c, GhCase::CaseI));
    }

    let (x, y) = match (al > 0.0 || (al == 0.0 && ah == 0.0), positive_b) {
        (true, false) => (ah / bl, al / bh),
        (true, true) => (al / bl, ah / bh),
        (false, false) => (ah / bh, al / bl),
        (false, true) => (al / bh, ah / bl),
    };
    let tol = tolerance(&[x], &[y]);
    Ok(match GhCase::from_sign(y - x, tol) {
        GhCase::CaseI => (Interval::new_unchecked(x, y), GhCase::CaseI),
        GhCase::CaseII => (Interval::new_unchecked(y, x), GhCase::CaseII),
        GhCase::Both => {
            let m = 0.5 * (x + y);
            (Interval::new_unchecked(m, m), GhCase::Both)
        }
    })
}

/// Per-level g-quotients of the cuts, without any existence check.
pub fn levelwise_g_div(u: &FuzzyNumber, v: &FuzzyNumber) -> Result<(Vec<f64>, Vec<f64>, Vec<GhCase>)> {
    if u.grid() != v.grid() {
        return Err(Error::GridMismatch);
    }
    let n = u.grid().len();
    let (mut lower, mut upper, mut cases) = (Vec::with_capacity(n), Vec::with_capacity(n), Vec::with_capacity(n));
    for (i, (a, b)) in u.cuts().zip(v.cuts()).enumerate() {
        let (c, case) = g_div_interval(a, b).map_err(|e| match e {
            Error::Domain(msg) => Error::Domain(format!("{msg} at level {}", u.grid().levels()[i])),
            e => e,
        })?;
        lower.push(c.lo());
        upper.push(c.hi());
        cases.push(case);
    }
    Ok((lower, upper, cases))
}

/// Generalized division of fuzzy numbers; exists when the levelwise
/// quotients nest and share one case.
pub fn g_div_fuzzy(u: &FuzzyNumber, v: &FuzzyNumber) -> Result<(FuzzyNumber, GhCase)> {
    let (lower, upper, cases) = levelwise_g_div(u, v)?;
    accept_levelwise(u.grid(), lower, upper, &cases)
}

/// Hull of the levelwise quotients over all higher levels.
pub fn approx_g_div(u: &FuzzyNumber, v: &FuzzyNumber) -> Result<FuzzyNumber> {
    let (mut lower, mut upper, _) = levelwise_g_div(u, v)?;
    enforce_nesting(&mut lower, &mut upper);
    FuzzyNumber::from_endpoints(u.grid().clone(), lower, upper)
}
