//! gH-difference of intervals, boxes and fuzzy numbers, and what to do when
//! the exact difference does not exist.

use fuzzyfrac::fuzzy::IntervalBox;
use fuzzyfrac::gh::{approx_gh_diff, gh_diff_box, gh_diff_fuzzy, gh_diff_interval, lsq_gh_diff};
use fuzzyfrac::{AlphaGrid, FuzzyNumber, Interval};

fn main() -> fuzzyfrac::Result<()> {
    let (c, case) = gh_diff_interval(Interval::new(2.0, 5.0)?, Interval::new(1.0, 3.0)?);
    println!("[2,5] -gH [1,3] = {c} ({})", case.as_str());
    let (c, case) = gh_diff_interval(Interval::new(1.0, 3.0)?, Interval::new(2.0, 5.0)?);
    println!("[1,3] -gH [2,5] = {c} ({})", case.as_str());

    let a = IntervalBox::new(vec![Interval::new(0.0, 4.0)?, Interval::new(1.0, 2.0)?])?;
    let b = IntervalBox::new(vec![Interval::new(1.0, 2.0)?, Interval::new(0.0, 4.0)?])?;
    match gh_diff_box(&a, &b) {
        Ok((d, case)) => println!("box difference {d:?} ({})", case.as_str()),
        Err(e) => println!("box difference: {e}"),
    }

    let grid = AlphaGrid::default();
    let u = FuzzyNumber::triangular(12.0, 15.0, 19.0, &grid)?;
    let (w, case) = gh_diff_fuzzy(&u, &FuzzyNumber::triangular(5.0, 7.0, 10.0, &grid)?)?;
    println!("support {} core {} ({})", w.support(), w.core(), case.as_str());

    // Spreads of v grow faster than u's on one side only: no exact result.
    let v = FuzzyNumber::triangular(5.0, 9.0, 11.0, &grid)?;
    if let Err(e) = gh_diff_fuzzy(&u, &v) {
        println!("exact: {e}");
    }
    let hull = approx_gh_diff(&u, &v)?;
    let fit = lsq_gh_diff(&u, &v, None, None)?;
    println!("nested hull: support {} core {}", hull.support(), hull.core());
    println!("least squares: support {} core {}", fit.support(), fit.core());
    Ok(())
}
