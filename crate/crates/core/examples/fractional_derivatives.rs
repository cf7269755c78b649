//! Riemann-Liouville, Caputo, Grunwald-Letnikov and Hilfer operators on a
//! sampled function, against closed forms from the power rule.

use fuzzyfrac::frac::{
    caputo_derivative, gl_derivative, hilfer_derivative, power_rule, rl_derivative, rl_integral, HilferOrder,
    PowerKind,
};
use fuzzyfrac::SampledFunction;

fn main() -> fuzzyfrac::Result<()> {
    let h = 1e-3;
    let steps = 1000;
    let t = 1.0;
    let f = SampledFunction::from_fn(0.0, h, steps, |s| s * s)?;
    let p = 0.5;

    let exact_int = power_rule(2.0, p, 0.0, t, PowerKind::Integral)?;
    let exact_der = power_rule(2.0, p, 0.0, t, PowerKind::Derivative)?;
    println!("I^{p} t^2 at 1: {:.8}  (exact {exact_int:.8})", rl_integral(&f, p, steps)?);
    println!("Caputo       : {:.8}  (exact {exact_der:.8})", caputo_derivative(&f, p, steps)?);
    println!("RL           : {:.8}", rl_derivative(&f, p, steps)?);
    println!("GL           : {:.8}", gl_derivative(&f, p, steps)?);
    for gamma1 in [0.0, 0.25, 0.5] {
        let d = hilfer_derivative(&f, HilferOrder::new(p, gamma1)?, steps)?;
        println!("Hilfer g1={gamma1:<4}: {d:.8}");
    }

    // L1 error of the Caputo scheme as the step halves.
    let mut prev = None;
    for m in [100, 200, 400, 800] {
        let g = SampledFunction::from_fn(0.0, 1.0 / m as f64, m, |s| s * s)?;
        let err = (caputo_derivative(&g, p, m)? - exact_der).abs();
        match prev {
            Some(e) => println!("M={m:<4} error {err:.3e}  order {:.2}", f64::log2(e / err)),
            None => println!("M={m:<4} error {err:.3e}"),
        }
        prev = Some(err);
    }
    Ok(())
}
