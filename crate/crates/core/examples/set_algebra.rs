//! Finite fuzzy sets, alpha-cuts, the extension principle and fuzzy-number
//! arithmetic on an alpha grid.

use fuzzyfrac::fuzzy::{zadeh_extend, DiscreteFuzzySet, SetOp, DEFAULT_ENVELOPE_SAMPLES};
use fuzzyfrac::{AlphaGrid, FuzzyNumber};

fn main() -> fuzzyfrac::Result<()> {
    let warm = DiscreteFuzzySet::new([(15, 0.2), (20, 0.7), (25, 1.0), (30, 0.6)])?;
    let humid = DiscreteFuzzySet::new([(20, 0.4), (25, 0.5), (30, 0.9), (35, 1.0)])?;

    for op in [SetOp::Union, SetOp::Intersection, SetOp::AlgebraicProduct] {
        let c = warm.combine(&humid, op);
        let grades: Vec<String> = c.entries().map(|(k, g)| format!("{k}:{g:.2}")).collect();
        println!("{op:?}: {}", grades.join(" "));
    }
    println!("warm >= 0.6: {:?}", warm.alpha_cut(0.6, false));
    println!("|warm| = {}", warm.cardinality());

    let grid = AlphaGrid::uniform(4);
    let u = FuzzyNumber::triangular(1.0, 2.0, 4.0, &grid)?;
    let v = FuzzyNumber::trapezoid(-1.0, 0.0, 1.0, 3.0, &grid)?;
    let sum = u.add(&v)?;
    let prod = u.mul(&v)?;
    for (i, a) in grid.levels().iter().enumerate() {
        println!(
            "alpha {a:.2}: u+v = {}   u*v = {}",
            sum.cut_at(i),
            prod.cut_at(i)
        );
    }
    println!("d(u, v) = {:.4}", u.distance(&v)?);

    // x^2 is not monotone on the support of v; the extension still nests.
    let sq = zadeh_extend(|x| x * x, &v, DEFAULT_ENVELOPE_SAMPLES)?;
    println!("v^2 support {} core {}", sq.support(), sq.core());
    println!("membership of 1.5 in u: {}", u.membership(1.5));
    Ok(())
}
