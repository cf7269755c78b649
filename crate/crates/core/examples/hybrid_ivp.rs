//! Level-set Picard solution of d/dt[u / f(t,u)] = g(t,u) with a fuzzy
//! initial value, written out as a CSV band.

use fuzzyfrac::hybrid::{solve, HybridProblem};
use fuzzyfrac::{AlphaGrid, FuzzyNumber};

fn main() -> fuzzyfrac::Result<()> {
    let grid = AlphaGrid::uniform(10);
    let u0 = FuzzyNumber::triangular(-3.0, -2.0, -1.0, &grid)?;

    // f = 2, g = -1: u(t) = 2 (u0 / 2 - t) on every level.
    let p = HybridProblem::new(|_, _| 2.0, |_, _| -1.0, u0.clone(), 1.0)?.with_steps(200)?;
    let sol = solve(&p)?;
    let end = sol.fuzzy_at(200)?;
    println!("u(1): support {} core {}", end.support(), end.core());
    println!("stacking valid: {}, max residual {:.2e}", sol.stacking_valid, sol.max_residual());

    // A state-dependent problem.
    let p = HybridProblem::new(|_, x| 1.0 + 0.01 * x * x, |t, x| -1.0 - 0.1 * t - 0.01 * x * x, u0, 0.5)?
        .with_steps(100)?;
    let sol = solve(&p)?;
    println!("t,alpha,lower,upper,residual");
    for r in sol.rows().filter(|r| r[0] == 0.5).step_by(5) {
        println!("{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}", r[0], r[1], r[2], r[3], r[4]);
    }
    let sweeps: Vec<usize> = sol.levels.iter().map(|l| l.iterations).collect();
    println!("Picard sweeps per level: {:?}", &sweeps[..3]);
    Ok(())
}
