use crate::error::{Error, Result};
use crate::sampled::SampledFunction;

use super::interval::Interval;
use super::number::FuzzyNumber;
use super::validity::tolerance;

/// Default number of samples per cut for envelope estimation.
pub const DEFAULT_ENVELOPE_SAMPLES: usize = 65;

/// Relative limit on how far nesting repair may move an endpoint.
pub const REPAIR_TOLERANCE_SCALE: f64 = 1e-6;

/// Minimum and maximum of `phi` over `k` equispaced points of `cut`,
/// endpoints included. An extreme found at an interior sample is polished
/// by golden-section search between its neighbours, so smooth interior
/// extrema are resolved to rounding level; monotone `phi` costs `k` calls.
pub fn envelope(phi: impl Fn(f64) -> f64, cut: Interval, k: usize) -> (f64, f64) {
    let k = k.max(2);
    let (lo, hi) = (cut.lo(), cut.hi());
    if cut.is_singleton() {
        let y = phi(lo);
        return (y, y);
    }
    let step = (hi - lo) / (k - 1) as f64;
    let xs: Vec<f64> = (0..k).map(|i| if i == k - 1 { hi } else { lo + i as f64 * step }).collect();
    let ys: Vec<f64> = xs.iter().map(|&x| phi(x)).collect();
    let (mut imin, mut imax) = (0, 0);
    for (i, &y) in ys.iter().enumerate() {
        if y < ys[imin] {
            imin = i;
        }
        if y > ys[imax] {
            imax = i;
        }
    }
    let (mut mn, mut mx) = (ys[imin], ys[imax]);
    if imin > 0 && imin < k - 1 {
        mn = mn.min(golden_min(&phi, xs[imin - 1], xs[imin + 1]));
    }
    if imax > 0 && imax < k - 1 {
        mx = mx.max(-golden_min(|x| -phi(x), xs[imax - 1], xs[imax + 1]));
    }
    (mn, mx)
}

/// Smallest value seen by golden-section search for a minimum on `[a, b]`.
fn golden_min(phi: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    const R: f64 = 0.618_033_988_749_894_9;
    let mut c = b - R * (b - a);
    let mut d = a + R * (b - a);
    let (mut fc, mut fd) = (phi(c), phi(d));
    let mut best = fc.min(fd);
    for _ in 0..80 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - R * (b - a);
            fc = phi(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + R * (b - a);
            fd = phi(d);
        }
        best = best.min(fc).min(fd);
        if (b - a).abs() <= 4.0 * f64::EPSILON * (a.abs() + b.abs()) {
            break;
        }
    }
    best
}

/// Extension of a continuous real map to a fuzzy argument, cut by cut.
///
/// The per-level ranges are sampled, so for a non-monotone `phi` they can
/// fail to nest by a sampling error; they are then repaired by the nested
/// union sweep, which is rejected if it moves any endpoint by more than
/// `1e-6 * (1 + max|endpoint|)`.
pub fn zadeh_extend(phi: impl Fn(f64) -> f64, u: &FuzzyNumber, samples_per_cut: usize) -> Result<FuzzyNumber> {
    let (lower, upper): (Vec<f64>, Vec<f64>) = u.cuts().map(|c| envelope(&phi, c, samples_per_cut)).unzip();
    if lower.iter().chain(&upper).any(|y| !y.is_finite()) {
        return Err(Error::Domain("extended function is not finite on the support".into()));
    }
    let limit = REPAIR_TOLERANCE_SCALE / super::validity::TOLERANCE_SCALE * tolerance(&lower, &upper);
    let repaired = FuzzyNumber::from_endpoints_repaired(u.grid().clone(), lower.clone(), upper.clone());
    let change = repaired
        .lower()
        .iter()
        .zip(&lower)
        .chain(repaired.upper().iter().zip(&upper))
        .fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()));
    if change > limit {
        return Err(Error::InvalidResult { change, limit });
    }
    Ok(repaired)
}

/// Quasi-concavity of sampled membership values: every super-level set of
/// the samples is a contiguous run of indices.
pub fn is_convex(membership: &SampledFunction) -> bool {
    let v = membership.values();
    let scale = v.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    let tol = 1e-12 * (1.0 + scale);
    let n = v.len();
    let mut suffix_max = vec![f64::NEG_INFINITY; n + 1];
    for i in (0..n).rev() {
        suffix_max[i] = suffix_max[i + 1].max(v[i]);
    }
    let mut prefix_max = f64::NEG_INFINITY;
    for i in 0..n {
        if v[i] < prefix_max.min(suffix_max[i + 1]) - tol {
            return false;
        }
        prefix_max = prefix_max.max(v[i]);
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::AlphaGrid;
    use approx::assert_abs_diff_eq;

    fn tri(a: f64, b: f64, c: f64) -> FuzzyNumber {
        FuzzyNumber::triangular(a, b, c, &AlphaGrid::default()).unwrap()
    }

    #[test]
    fn identity_extension() {
        let u = tri(-1.0, 0.5, 3.0);
        let e = zadeh_extend(|x| x, &u, DEFAULT_ENVELOPE_SAMPLES).unwrap();
        assert_eq!(e, u);
    }

    #[test]
    fn square_of_symmetric_triangle() {
        let u = tri(-1.0, 0.0, 1.0);
        let e = zadeh_extend(|x| x * x, &u, DEFAULT_ENVELOPE_SAMPLES).unwrap();
        for (i, &a) in u.grid().levels().iter().enumerate() {
            assert_abs_diff_eq!(e.lower()[i], 0.0, epsilon = 1e-12);
            assert_abs_diff_eq!(e.upper()[i], (1.0 - a) * (1.0 - a), epsilon = 1e-12);
        }
    }

    #[test]
    fn affine_maps_endpoints() {
        let e = zadeh_extend(|x| 2.0 * x + 1.0, &tri(0.0, 1.0, 2.0), DEFAULT_ENVELOPE_SAMPLES).unwrap();
        assert!(e.distance(&tri(1.0, 3.0, 5.0)).unwrap() < 1e-12);
    }

    #[test]
    fn envelope_examples() {
        let i = Interval::new(1.0, 3.0).unwrap();
        assert_eq!(envelope(|x| x, i, 65), (1.0, 3.0));
        let i = Interval::new(-1.0, 2.0).unwrap();
        let (lo, hi) = envelope(|x| x * x, i, 4);
        assert_eq!((lo, hi), (0.0, 4.0));
        let i = Interval::new(0.0, std::f64::consts::PI).unwrap();
        let (lo, hi) = envelope(f64::sin, i, 65);
        assert_abs_diff_eq!(lo, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(hi, 1.0, epsilon = 1e-15);
        // 0 is not a sample point of [-0.75, 2.5] with 65 samples.
        let (lo, _) = envelope(|x| x * x, Interval::new(-0.75, 2.5).unwrap(), 65);
        assert!(lo < 1e-20);
    }

    #[test]
    fn convexity() {
        let tri = SampledFunction::from_fn(0.0, 0.1, 20, |x| (1.0 - (x - 1.0).abs()).max(0.0)).unwrap();
        assert!(is_convex(&tri));
        let bimodal = SampledFunction::new(0.0, 1.0, vec![0.0, 1.0, 0.2, 1.0, 0.0]).unwrap();
        assert!(!is_convex(&bimodal));
        let tail = SampledFunction::from_fn(0.0, 0.01, 2000, |x| {
            if x <= 10.0 {
                0.0
            } else {
                1.0 / (1.0 + (x - 10.0).powi(-2))
            }
        })
        .unwrap();
        assert!(is_convex(&tail));
    }
}
