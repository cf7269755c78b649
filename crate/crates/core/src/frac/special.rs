use std::f64::consts::PI;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_pole(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Lanczos series for `x >= 0.5`, returned as `(t, s)` with
/// `Gamma(x) = sqrt(2 pi) t^(x - 0.5) e^-t s`.
fn lanczos(x: f64) -> (f64, f64) {
    let z = x - 1.0;
    let s = LANCZOS[1..]
        .iter()
        .enumerate()
        .fold(LANCZOS[0], |acc, (i, c)| acc + c / (z + (i + 1) as f64));
    (z + LANCZOS_G + 0.5, s)
}

/// Gamma function. Errors at the poles `0, -1, -2, ...`.
pub fn gamma(x: f64) -> Result<f64> {
    if is_pole(x) {
        return Err(Error::Pole(x));
    }
    if x < 0.5 {
        return Ok(PI / ((PI * x).sin() * gamma(1.0 - x)?));
    }
    // exact factorials keep integer arguments clean
    if x == x.floor() && x <= 171.0 {
        return Ok((2..x as u64).fold(1.0, |acc, k| acc * k as f64));
    }
    let (t, s) = lanczos(x);
    // split the power to delay overflow
    let half = t.powf(0.5 * (x - 0.5));
    Ok((2.0 * PI).sqrt() * half * (half * (-t).exp()) * s)
}

/// `ln |Gamma(x)|`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if is_pole(x) {
        return Err(Error::Pole(x));
    }
    if x < 0.5 {
        return Ok((PI / (PI * x).sin().abs()).ln() - ln_gamma(1.0 - x)?);
    }
    let (t, s) = lanczos(x);
    Ok(0.5 * (2.0 * PI).ln() + (x - 0.5) * t.ln() - t + s.ln())
}

/// `1 / Gamma(x)`, which is zero at the poles.
pub fn rgamma(x: f64) -> f64 {
    if is_pole(x) {
        0.0
    } else {
        1.0 / gamma(x).expect("pole handled above")
    }
}

/// Beta function `Gamma(p) Gamma(q) / Gamma(p + q)`, evaluated in log space.
pub fn beta(p: f64, q: f64) -> Result<f64> {
    if !(p > 0.0 && q > 0.0) {
        return Err(Error::Domain(format!("beta needs positive arguments, got ({p}, {q})")));
    }
    Ok((ln_gamma(p)? + ln_gamma(q)? - ln_gamma(p + q)?).exp())
}

/// Whether [`power_rule`] gives the fractional integral or derivative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerKind {
    Integral,
    Derivative,
}

/// Closed form of the Riemann-Liouville integral / derivative of order `p`
/// applied to `(s - a)^b` (`b > -1`), evaluated at `t > a`.
pub fn power_rule(b: f64, p: f64, a: f64, t: f64, kind: PowerKind) -> Result<f64> {
    if !(b > -1.0) {
        return Err(Error::Parameter(format!("power exponent must exceed -1, got {b}")));
    }
    if !(t > a) {
        return Err(Error::Domain(format!("need t > a, got t = {t}, a = {a}")));
    }
    let q = match kind {
        PowerKind::Integral => p,
        PowerKind::Derivative => -p,
    };
    Ok(gamma(b + 1.0)? * rgamma(b + q + 1.0) * (t - a).powf(b + q))
}
