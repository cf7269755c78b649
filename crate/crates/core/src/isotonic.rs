//! Weighted isotonic regression by pool-adjacent-violators.

use crate::error::{Error, Result};

/// Nondecreasing sequence `z` minimising `sum w_i (z_i - y_i)^2`.
///
/// Weights must be strictly positive and finite.
pub fn isotonic_increasing(y: &[f64], w: &[f64]) -> Result<Vec<f64>> {
    assert_eq!(y.len(), w.len(), "values and weights differ in length");
    if let Some((index, &value)) = w.iter().enumerate().find(|(_, &x)| !(x > 0.0 && x.is_finite())) {
        return Err(Error::NonpositiveWeight { index, value });
    }

    // Blocks as (weighted mean, total weight, count).
    let mut blocks: Vec<(f64, f64, usize)> = Vec::with_capacity(y.len());
    for (&yi, &wi) in y.iter().zip(w) {
        let mut cur = (yi, wi, 1usize);
        while let Some(&(mean, weight, count)) = blocks.last() {
            if mean <= cur.0 {
                break;
            }
            blocks.pop();
            let total = weight + cur.1;
            cur = ((mean * weight + cur.0 * cur.1) / total, total, count + cur.2);
        }
        blocks.push(cur);
    }

    let mut z = Vec::with_capacity(y.len());
    for (mean, _, count) in blocks {
        z.extend(std::iter::repeat_n(mean, count));
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn already_sorted_is_unchanged() {
        let y = [1.0, 2.0, 2.0, 5.0];
        assert_eq!(isotonic_increasing(&y, &[1.0; 4]).unwrap(), y.to_vec());
    }

    #[test]
    fn pools_violators() {
        let z = isotonic_increasing(&[1.0, 3.0, 2.0, 4.0], &[1.0; 4]).unwrap();
        assert_eq!(z, vec![1.0, 2.5, 2.5, 4.0]);
    }

    #[test]
    fn weights_shift_the_pooled_value() {
        let z = isotonic_increasing(&[3.0, 1.0], &[3.0, 1.0]).unwrap();
        assert_eq!(z, vec![2.5, 2.5]);
    }

    #[test]
    fn cascading_merge() {
        let z = isotonic_increasing(&[5.0, 4.0, 3.0, 2.0, 1.0], &[1.0; 5]).unwrap();
        assert!(z.iter().all(|&v| (v - 3.0).abs() < 1e-15));
    }

    #[test]
    fn rejects_zero_weight() {
        let r = isotonic_increasing(&[1.0, 2.0], &[1.0, 0.0]);
        assert!(matches!(r, Err(Error::NonpositiveWeight { index: 1, .. })));
    }
}
