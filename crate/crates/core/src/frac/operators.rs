use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::sampled::SampledFunction;

use super::special::rgamma;

fn check_order(p: f64, what: &str) -> Result<()> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Parameter(format!("{what} order must lie in (0, 1), got {p}")));
    }
    Ok(())
}

/// Product-trapezoid weight of sample `j` for the integral up to sample `n`,
/// without the common factor `h^p / Gamma(p + 2)`.
fn trapezoid_weight(p: f64, n: usize, j: usize) -> f64 {
    let q = p + 1.0;
    let (n, jf) = (n as f64, j as f64);
    if j == 0 {
        (n - 1.0).powf(q) - (n - p - 1.0) * n.powf(p)
    } else if jf == n {
        1.0
    } else {
        let m = n - jf;
        (m + 1.0).powf(q) - 2.0 * m.powf(q) + (m - 1.0).powf(q)
    }
}

/// Riemann-Liouville integral of order `p >= 0` at sample `k`.
///
/// The samples are joined piecewise linearly and the kernel is integrated
/// exactly against each piece, so affine `f` is integrated without error.
pub fn rl_integral(f: &SampledFunction, p: f64, k: usize) -> Result<f64> {
    f.check_index(k)?;
    if !(p >= 0.0) {
        return Err(Error::Parameter(format!("integral order must be nonnegative, got {p}")));
    }
    let v = f.values();
    if p == 0.0 {
        return Ok(v[k]);
    }
    if k == 0 {
        return Ok(0.0);
    }
    let sum: f64 = (0..=k).map(|j| trapezoid_weight(p, k, j) * v[j]).sum();
    Ok(f.h().powf(p) * rgamma(p + 2.0) * sum)
}

/// [`rl_integral`] at every sample.
pub fn rl_integral_series(f: &SampledFunction, p: f64) -> Result<Vec<f64>> {
    (0..=f.last()).into_par_iter().map(|k| rl_integral(f, p, k)).collect()
}

/// Caputo derivative of order `p` in `(0, 1)` at sample `k` (L1 scheme).
pub fn caputo_derivative(f: &SampledFunction, p: f64, k: usize) -> Result<f64> {
    f.check_index(k)?;
    check_order(p, "Caputo")?;
    let v = f.values();
    let e = 1.0 - p;
    let sum: f64 = (0..k)
        .map(|j| {
            let m = (k - j - 1) as f64;
            ((m + 1.0).powf(e) - m.powf(e)) * (v[j + 1] - v[j])
        })
        .sum();
    Ok(f.h().powf(-p) * rgamma(2.0 - p) * sum)
}

/// [`caputo_derivative`] at every sample.
pub fn caputo_series(f: &SampledFunction, p: f64) -> Result<Vec<f64>> {
    (0..=f.last()).into_par_iter().map(|k| caputo_derivative(f, p, k)).collect()
}

/// Riemann-Liouville derivative: the Caputo value plus the contribution of
/// `f(a)`, `f(a) (t - a)^-p / Gamma(1 - p)`.
pub fn rl_derivative(f: &SampledFunction, p: f64, k: usize) -> Result<f64> {
    f.check_index(k)?;
    if k == 0 {
        return Err(Error::SingularAtOrigin);
    }
    let c = caputo_derivative(f, p, k)?;
    let t = f.abscissa(k) - f.a();
    Ok(c + f.values()[0] * rgamma(1.0 - p) * t.powf(-p))
}

/// First `n + 1` Grünwald-Letnikov weights `(-1)^k binom(p, k)`.
pub fn gl_coefficients(p: f64, n: usize) -> Vec<f64> {
    let mut c = Vec::with_capacity(n + 1);
    c.push(1.0);
    for k in 1..=n {
        let prev = c[k - 1];
        c.push(prev * (k as f64 - 1.0 - p) / k as f64);
    }
    c
}

/// Grünwald-Letnikov derivative at sample `k >= 1`, using every sample back to `a`.
pub fn gl_derivative(f: &SampledFunction, p: f64, k: usize) -> Result<f64> {
    f.check_index(k)?;
    check_order(p, "Grünwald-Letnikov")?;
    if k == 0 {
        return Err(Error::SingularAtOrigin);
    }
    let v = f.values();
    let sum: f64 = gl_coefficients(p, k).iter().enumerate().map(|(j, c)| c * v[k - j]).sum();
    Ok(f.h().powf(-p) * sum)
}

/// Order `p` and type `gamma1` of a Hilfer derivative, `0 <= gamma1 <= 1 - p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HilferOrder {
    p: f64,
    gamma1: f64,
}

impl HilferOrder {
    pub fn new(p: f64, gamma1: f64) -> Result<Self> {
        check_order(p, "Hilfer")?;
        let slack = 1e-12;
        if !(gamma1 >= -slack && gamma1 <= 1.0 - p + slack) {
            return Err(Error::Parameter(format!("type parameter must lie in [0, {}], got {gamma1}", 1.0 - p)));
        }
        Ok(HilferOrder { p, gamma1: gamma1.clamp(0.0, 1.0 - p) })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn gamma1(&self) -> f64 {
        self.gamma1
    }
}

/// Derivative of sampled values: central differences inside, second-order
/// one-sided differences at the ends.
pub(crate) fn differentiate(v: &[f64], h: f64) -> Vec<f64> {
    let n = v.len();
    if n == 2 {
        let d = (v[1] - v[0]) / h;
        return vec![d, d];
    }
    (0..n)
        .map(|i| {
            if i == 0 {
                (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h)
            } else if i == n - 1 {
                (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * h)
            } else {
                (v[i + 1] - v[i - 1]) / (2.0 * h)
            }
        })
        .collect()
}

/// Hilfer derivative `I^gamma1 d/dt I^(1 - p - gamma1) f` at sample `k >= 1`.
pub fn hilfer_derivative(f: &SampledFunction, order: HilferOrder, k: usize) -> Result<f64> {
    f.check_index(k)?;
    if k == 0 {
        return Err(Error::SingularAtOrigin);
    }
    // the inner derivative at k needs one sample beyond it when available
    let end = (k + 1).min(f.last());
    let head = SampledFunction::new(f.a(), f.h(), f.values()[..=end].to_vec())?;
    let inner_order = (1.0 - order.p - order.gamma1).max(0.0);
    let inner = rl_integral_series(&head, inner_order)?;
    let slope = head.with_values(differentiate(&inner, f.h()));
    rl_integral(&slope, order.gamma1, k)
}
