use std::fmt;

use serde::{Deserialize, Serialize};

/// Relative scale of the validity tolerance: `tau = 1e-9 * (1 + max|endpoint|)`.
pub const TOLERANCE_SCALE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    Crossing,
    LowerNotMonotone,
    UpperNotMonotone,
}

impl ViolationKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ViolationKind::Crossing => "crossing",
            ViolationKind::LowerNotMonotone => "lower_not_monotone",
            ViolationKind::UpperNotMonotone => "upper_not_monotone",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub index: usize,
    pub kind: ViolationKind,
    pub magnitude: f64,
}

/// Outcome of checking the stacking conditions on raw endpoint sequences.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidityReport {
    pub is_valid: bool,
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    /// First violation in the deterministic order crossing, lower, upper.
    pub fn primary(&self) -> Option<&Violation> {
        [
            ViolationKind::Crossing,
            ViolationKind::LowerNotMonotone,
            ViolationKind::UpperNotMonotone,
        ]
        .iter()
        .find_map(|k| self.violations.iter().find(|v| v.kind == *k))
    }
}

impl fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid {
            return f.write_str("valid");
        }
        let parts: Vec<String> = self
            .violations
            .iter()
            .map(|v| format!("{} at {} ({:e})", v.kind.as_str(), v.index, v.magnitude))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

/// Absolute tolerance used for a pair of endpoint sequences.
pub fn tolerance(lower: &[f64], upper: &[f64]) -> f64 {
    let scale = lower
        .iter()
        .chain(upper)
        .fold(0.0_f64, |m, x| m.max(x.abs()));
    TOLERANCE_SCALE * (1.0 + scale)
}

/// Reports every index where `lower <= upper` or nestedness fails by more than
/// the tolerance. Index `i` of a monotonicity violation refers to the pair `(i-1, i)`.
pub fn validate_endpoints(lower: &[f64], upper: &[f64]) -> ValidityReport {
    assert_eq!(lower.len(), upper.len(), "endpoint sequences differ in length");
    let tau = tolerance(lower, upper);
    let mut violations = Vec::new();
    for i in 0..lower.len() {
        if !(lower[i].is_finite() && upper[i].is_finite()) {
            violations.push(Violation {
                index: i,
                kind: ViolationKind::Crossing,
                magnitude: f64::INFINITY,
            });
            continue;
        }
        let cross = lower[i] - upper[i];
        if cross > tau {
            violations.push(Violation {
                index: i,
                kind: ViolationKind::Crossing,
                magnitude: cross,
            });
        }
        if i > 0 {
            let drop = lower[i - 1] - lower[i];
            if drop > tau {
                violations.push(Violation {
                    index: i,
                    kind: ViolationKind::LowerNotMonotone,
                    magnitude: drop,
                });
            }
            let rise = upper[i] - upper[i - 1];
            if rise > tau {
                violations.push(Violation {
                    index: i,
                    kind: ViolationKind::UpperNotMonotone,
                    magnitude: rise,
                });
            }
        }
    }
    ValidityReport {
        is_valid: violations.is_empty(),
        violations,
    }
}

/// Backward nested-union sweep: the smallest family of nested intervals
/// containing every level. Leaves already-valid sequences untouched.
pub fn enforce_nesting(lower: &mut [f64], upper: &mut [f64]) {
    let n = lower.len();
    if n == 0 {
        return;
    }
    let top = n - 1;
    if lower[top] > upper[top] {
        let mid = 0.5 * (lower[top] + upper[top]);
        lower[top] = mid;
        upper[top] = mid;
    }
    for k in (0..top).rev() {
        lower[k] = lower[k].min(lower[k + 1]);
        upper[k] = upper[k].max(upper[k + 1]);
    }
}
