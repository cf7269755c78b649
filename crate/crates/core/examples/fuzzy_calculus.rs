//! gH-derivative, integrals and a fractional derivative of a fuzzy-valued
//! function, including a change of derivative form.

use fuzzyfrac::fuzzy_calculus::{
    fuzzy_frac_derivative, fuzzy_riemann_integral, fuzzy_rl_integral, gh_derivative_series, FuzzyFunction,
};
use fuzzyfrac::gh::gh_diff_fuzzy;
use fuzzyfrac::{AlphaGrid, FuzzyNumber};

fn main() -> fuzzyfrac::Result<()> {
    let grid = AlphaGrid::uniform(10);
    let c = FuzzyNumber::triangular(-1.0, 0.0, 2.0, &grid)?;

    // c (1 - t)^2 on [0, 2]: the spread shrinks, vanishes at t = 1, regrows.
    let f = FuzzyFunction::from_fn(0.0, 0.01, 200, |t| c.scale((1.0 - t).powi(2)))?;
    let (_, report) = gh_derivative_series(&f)?;
    println!("switching points: {:?}", report.switching_points);
    println!("form at t=0.5: {:?}, at t=1.5: {:?}", report.forms[50], report.forms[150]);
    match fuzzy_frac_derivative(&f, 0.5, 150) {
        Err(e) => println!("fractional derivative at t=1.5: {e}"),
        Ok(_) => unreachable!(),
    }
    let (d, form) = fuzzy_frac_derivative(&f, 0.5, 50)?;
    println!("fractional derivative at t=0.5 ({form:?}): core {} support {}", d.core(), d.support());

    // Newton-Leibniz on e^t c.
    let g = FuzzyFunction::from_fn(0.0, 1e-3, 1000, |t| c.scale(t.exp()))?;
    let (dg, _) = gh_derivative_series(&g)?;
    let lhs = fuzzy_riemann_integral(&dg, 0, 1000)?;
    let (rhs, _) = gh_diff_fuzzy(&g.values()[1000], &g.values()[0])?;
    println!("|int f' - (f(1) -gH f(0))| = {:.2e}", lhs.distance(&rhs)?);

    let i = fuzzy_rl_integral(&g, 0.5, 1000)?;
    println!("I^0.5 at t=1: support {}", i.support());
    Ok(())
}
