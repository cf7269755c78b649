//! Generalized division of intervals and fuzzy numbers.

use fuzzyfrac::gh::{approx_g_div, g_div_fuzzy, g_div_interval};
use fuzzyfrac::{AlphaGrid, FuzzyNumber, Interval};

fn affine(grid: &AlphaGrid, lo: (f64, f64), hi: (f64, f64)) -> fuzzyfrac::Result<FuzzyNumber> {
    let lower = grid.levels().iter().map(|a| lo.0 + lo.1 * a).collect();
    let upper = grid.levels().iter().map(|a| hi.0 + hi.1 * a).collect();
    FuzzyNumber::from_endpoints(grid.clone(), lower, upper)
}

fn main() -> fuzzyfrac::Result<()> {
    for (a, b) in [((2.0, 6.0), (1.0, 2.0)), ((-2.0, 4.0), (2.0, 4.0)), ((1.0, 7.0), (-3.0, -1.0))] {
        let (a, b) = (Interval::new(a.0, a.1)?, Interval::new(b.0, b.1)?);
        let (q, case) = g_div_interval(a, b)?;
        println!("{a} /g {b} = {q} ({})", case.as_str());
    }
    if let Err(e) = g_div_interval(Interval::new(1.0, 2.0)?, Interval::new(-1.0, 1.0)?) {
        println!("{e}");
    }

    let grid = AlphaGrid::uniform(4);
    let u = affine(&grid, (-7.0, 2.0), (-4.0, -1.0))?;
    let v = affine(&grid, (-12.0, 5.0), (-4.0, -3.0))?;
    let (w, case) = g_div_fuzzy(&u, &v)?;
    println!("quotient ({}):", case.as_str());
    for (i, a) in grid.levels().iter().enumerate() {
        println!("  {a:.2}  {}", w.cut_at(i));
    }

    let u = affine(&grid, (1.0, 0.5), (5.0, -3.5))?;
    let v = affine(&grid, (-4.0, 2.0), (-1.0, -1.0))?;
    println!("exact: {:?}", g_div_fuzzy(&u, &v).err());
    let w = approx_g_div(&u, &v)?;
    println!("approximate upper endpoints: {:?}", w.upper());
    Ok(())
}
