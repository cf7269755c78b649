//! Generalized Hukuhara difference and generalized division.
//!
//! Both operations are defined cut by cut. For intervals they always exist
//! (division needs `0` outside the divisor); for fuzzy numbers the levelwise
//! results must also nest, which is checked and reported as
//! [`NotExistsReason`](crate::NotExistsReason) when it fails. The approximate
//! variants replace each cut by the hull of all higher cuts and always
//! succeed.

mod cps;
mod difference;
mod division;

pub use cps::{cps_compose, cps_decompose, cps_gh_diff, CpsTriple};
pub use difference::{approx_gh_diff, gh_diff_box, gh_diff_fuzzy, gh_diff_interval, levelwise_gh, lsq_gh_diff};
pub use division::{approx_g_div, g_div_fuzzy, g_div_interval, levelwise_g_div};

use serde::{Deserialize, Serialize};

use crate::error::{Error, NotExistsReason, Result};
use crate::fuzzy::{AlphaGrid, FuzzyNumber, ValidityReport, ViolationKind};

/// Which defining identity a generalized difference or quotient satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GhCase {
    /// `A = B + C` (difference) or `A = B C` (division).
    #[serde(rename = "case_i")]
    CaseI,
    /// `B = A - C` (difference) or `B = A C^-1` (division).
    #[serde(rename = "case_ii")]
    CaseII,
    /// Both identities hold; the result is a singleton.
    Both,
}

impl GhCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            GhCase::CaseI => "case_i",
            GhCase::CaseII => "case_ii",
            GhCase::Both => "both",
        }
    }

    /// Classifies a signed discriminant: positive selects case (i).
    fn from_sign(d: f64, tol: f64) -> GhCase {
        if d > tol {
            GhCase::CaseI
        } else if d < -tol {
            GhCase::CaseII
        } else {
            GhCase::Both
        }
    }
}

/// Maps a stacking violation onto the corresponding non-existence reason.
fn reason_of(report: &ValidityReport) -> NotExistsReason {
    match report.primary().map(|v| v.kind) {
        Some(ViolationKind::Crossing) | None => NotExistsReason::Crossing,
        Some(ViolationKind::LowerNotMonotone) => NotExistsReason::LowerNotMonotone,
        Some(ViolationKind::UpperNotMonotone) => NotExistsReason::UpperNotMonotone,
    }
}

/// Combines per-level cases into one, or fails when strict (i) and strict
/// (ii) levels are mixed.
fn combine_cases(cases: &[GhCase]) -> Result<GhCase> {
    let any_i = cases.contains(&GhCase::CaseI);
    let any_ii = cases.contains(&GhCase::CaseII);
    match (any_i, any_ii) {
        (true, true) => Err(Error::NotExists(NotExistsReason::MixedCases)),
        (true, false) => Ok(GhCase::CaseI),
        (false, true) => Ok(GhCase::CaseII),
        (false, false) => Ok(GhCase::Both),
    }
}

/// Accepts levelwise endpoints as a fuzzy number when they nest and the
/// per-level cases agree.
fn accept_levelwise(grid: &AlphaGrid, lower: Vec<f64>, upper: Vec<f64>, cases: &[GhCase]) -> Result<(FuzzyNumber, GhCase)> {
    let report = crate::fuzzy::validate_endpoints(&lower, &upper);
    if !report.is_valid {
        return Err(Error::NotExists(reason_of(&report)));
    }
    let case = combine_cases(cases)?;
    let w = FuzzyNumber::from_endpoints(grid.clone(), lower, upper)?;
    Ok((w, case))
}
