//! Core / profile / symmetric decomposition and the gH-difference on it.

use fuzzyfrac::gh::{cps_compose, cps_decompose, cps_gh_diff, CpsTriple};
use fuzzyfrac::{AlphaGrid, FuzzyNumber, Interval};

fn main() -> fuzzyfrac::Result<()> {
    let grid = AlphaGrid::uniform(5);
    let u = FuzzyNumber::trapezoid(0.0, 2.0, 3.0, 8.0, &grid)?;
    let t = cps_decompose(&u);
    println!("core {}", t.crisp);
    println!("profile   {:?}", t.profile);
    println!("symmetric {:?}", t.symmetric);
    assert!(cps_compose(&t, &grid)?.distance(&u)? < 1e-14);

    // Symmetric numbers with spreads 1 - a^2 and 2 - 2a.
    let sym = |c: f64, s: fn(f64) -> f64| CpsTriple {
        crisp: Interval::point(c),
        profile: vec![0.0; grid.len()],
        symmetric: grid.levels().iter().map(|&a| s(a)).collect(),
    };
    let (w, case) = cps_gh_diff(&sym(1.0, |a| 1.0 - a * a), &sym(0.0, |a| 2.0 - 2.0 * a))?;
    let z = cps_compose(&w, &grid)?;
    println!("difference ({}):", case.as_str());
    for (i, a) in grid.levels().iter().enumerate() {
        println!("  {a:.1}  {}", z.cut_at(i));
    }
    Ok(())
}
