//! JSON encodings of fuzzy numbers and sampled functions.
//!
//! A fuzzy number is one of
//!
//! ```json
//! {"trapezoid": [a, b, c, d]}
//! {"triangular": [a, b, c]}
//! {"grid": [0, ..., 1], "lower": [...], "upper": [...]}
//! 3.5
//! ```
//!
//! the first two being built on a caller-supplied grid and a bare number
//! standing for a crisp value. Emission always uses the explicit form, whose
//! decimals round-trip bit for bit.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::fuzzy::{AlphaGrid, FuzzyNumber};
use crate::fuzzy_calculus::FuzzyFunction;
use crate::sampled::SampledFunction;

fn parse_text(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))
}

fn numbers(v: &Value, field: &str) -> Result<Vec<f64>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("field `{field}`: expected an array of numbers")))?;
    arr.iter()
        .enumerate()
        .map(|(i, x)| {
            x.as_f64()
                .ok_or_else(|| Error::Parse(format!("field `{field}`[{i}]: expected a number, got {x}")))
        })
        .collect()
}

fn fixed<const N: usize>(v: &Value, field: &str) -> Result<[f64; N]> {
    let xs = numbers(v, field)?;
    xs.try_into()
        .map_err(|xs: Vec<f64>| Error::Parse(format!("field `{field}`: expected {N} numbers, got {}", xs.len())))
}

/// Builds a fuzzy number from an already parsed JSON value.
pub fn fuzzy_from_value(v: &Value, grid: &AlphaGrid) -> Result<FuzzyNumber> {
    if let Some(x) = v.as_f64() {
        return Ok(FuzzyNumber::crisp(x, grid));
    }
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse(format!("expected a fuzzy number object or a number, got {v}")))?;
    // Explicit endpoints win over shape hints emitted alongside them.
    if obj.contains_key("grid") {
        let field = |name: &str| obj.get(name).ok_or_else(|| Error::Parse(format!("missing field `{name}`")));
        let grid = AlphaGrid::new(numbers(field("grid")?, "grid")?)?;
        let lower = numbers(field("lower")?, "lower")?;
        let upper = numbers(field("upper")?, "upper")?;
        return FuzzyNumber::from_endpoints(grid, lower, upper);
    }
    if let Some(t) = obj.get("trapezoid") {
        let [a, b, c, d] = fixed::<4>(t, "trapezoid")?;
        return FuzzyNumber::trapezoid(a, b, c, d, grid);
    }
    if let Some(t) = obj.get("triangular") {
        let [a, b, c] = fixed::<3>(t, "triangular")?;
        return FuzzyNumber::triangular(a, b, c, grid);
    }
    Err(Error::Parse(
        "expected one of the fields `trapezoid`, `triangular` or `grid`/`lower`/`upper`".into(),
    ))
}

/// Parses a fuzzy number; shorthand encodings are placed on `grid`.
pub fn parse_fuzzy(text: &str, grid: &AlphaGrid) -> Result<FuzzyNumber> {
    fuzzy_from_value(&parse_text(text)?, grid)
}

pub fn fuzzy_to_value(u: &FuzzyNumber) -> Value {
    json!({
        "grid": u.grid().levels(),
        "lower": u.lower(),
        "upper": u.upper(),
    })
}

pub fn emit_fuzzy(u: &FuzzyNumber) -> String {
    fuzzy_to_value(u).to_string()
}

/// `[a, b, c, d]` when `u` is trapezoidal up to `tol` at every level.
pub fn as_trapezoid(u: &FuzzyNumber, tol: f64) -> Option<[f64; 4]> {
    let (a, d) = (u.support().lo(), u.support().hi());
    let (b, c) = (u.core().lo(), u.core().hi());
    let t = FuzzyNumber::trapezoid(a, b, c, d, u.grid()).ok()?;
    (t.distance(u).ok()? <= tol).then_some([a, b, c, d])
}

/// `{"a": .., "h": .., "values": [..]}`.
pub fn parse_sampled(text: &str) -> Result<SampledFunction> {
    let v = parse_text(text)?;
    let get = |name: &str| v.get(name).ok_or_else(|| Error::Parse(format!("missing field `{name}`")));
    let a = get("a")?.as_f64().ok_or_else(|| Error::Parse("field `a`: expected a number".into()))?;
    let h = get("h")?.as_f64().ok_or_else(|| Error::Parse("field `h`: expected a number".into()))?;
    SampledFunction::new(a, h, numbers(get("values")?, "values")?)
}

pub fn sampled_to_value(f: &SampledFunction) -> Value {
    json!({ "a": f.a(), "h": f.h(), "values": f.values() })
}

/// `{"a": .., "h": .., "values": [fuzzy, ...]}` with each value in any
/// fuzzy-number encoding.
pub fn parse_fuzzy_function(text: &str, grid: &AlphaGrid) -> Result<FuzzyFunction> {
    let v = parse_text(text)?;
    let get = |name: &str| v.get(name).ok_or_else(|| Error::Parse(format!("missing field `{name}`")));
    let a = get("a")?.as_f64().ok_or_else(|| Error::Parse("field `a`: expected a number".into()))?;
    let h = get("h")?.as_f64().ok_or_else(|| Error::Parse("field `h`: expected a number".into()))?;
    let values = get("values")?
        .as_array()
        .ok_or_else(|| Error::Parse("field `values`: expected an array".into()))?
        .iter()
        .map(|x| fuzzy_from_value(x, grid))
        .collect::<Result<Vec<_>>>()?;
    FuzzyFunction::new(a, h, values)
}

pub fn fuzzy_function_to_value(f: &FuzzyFunction) -> Value {
    let values: Vec<Value> = f.values().iter().map(fuzzy_to_value).collect();
    let mut m = Map::new();
    m.insert("a".into(), json!(f.a()));
    m.insert("h".into(), json!(f.h()));
    m.insert("values".into(), Value::Array(values));
    Value::Object(m)
}
