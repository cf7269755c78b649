//! Batch front end.
//!
//! Operands are fuzzy numbers in any [`json`](crate::json) encoding, given
//! inline (`'{"triangular":[1,2,3]}'`, `2.5`) or as a file path; `-` reads
//! standard input. Results go to standard output as one JSON document.
//!
//! Exit codes: `0` success, `2` when the result does not exist or an input
//! lies outside an operation's domain (a reason object is printed), `1` for
//! usage, parse and validation errors.
//!
//! Functions for `solve`, `frac` and `fuzzyfrac` come from a small catalog,
//! written `name:p1,p2,...`:
//!
//! | name          | value                      |
//! |---------------|----------------------------|
//! | `const:c`     | `c`                        |
//! | `affine:a,b`  | `a + b x`                  |
//! | `linear_in_x:k` | `k x`                    |
//! | `poly_x:c0,c1,..` | `c0 + c1 x + c2 x^2 ..` |
//! | `exp_x:k`     | `exp(k x)`                 |
//! | `sign_x:c`    | `sign(x - c)`, 0 at `x = c` |
//! | `affine_t:a,b` | `a + b t`                 |
//! | `poly_t:c0,c1,..` | `c0 + c1 t + ..`       |
//! | `power_t:b`   | `t^b`                      |
//! | `exp_t:k`     | `exp(k t)`                 |
//! | `sin_t:k`     | `sin(k t)`                 |
//!
//! When a catalog entry is sampled as a function of one variable, `x` and
//! `t` coincide.

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::frac::{self, HilferOrder};
use crate::fuzzy::{AlphaGrid, FuzzyNumber, DEFAULT_ENVELOPE_SAMPLES, DEFAULT_LEVELS};
use crate::fuzzy_calculus::{self as fc, FuzzyFunction};
use crate::gh::{self, GhCase};
use crate::hybrid::{self, CrispFn, HybridProblem, Pairing};
use crate::json;
use crate::sampled::SampledFunction;

#[derive(Debug, Parser)]
#[command(name = "fuzzyfrac", version, about = "Fuzzy-number arithmetic and fractional calculus")]
pub struct Cli {
    /// Number of alpha steps for shorthand operands (levels = N + 1).
    #[arg(long, global = true, default_value_t = DEFAULT_LEVELS)]
    pub grid_n: usize,
    /// Also report the cut of the result at this level.
    #[arg(long, global = true)]
    pub alpha: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Exact,
    Approx,
    Lsq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Scale,
    Neg,
    Distance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FracKind {
    RlIntegral,
    Caputo,
    Rl,
    Gl,
    Hilfer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FuzzyOp {
    /// gH-derivative with its form at every sample.
    Derivative,
    /// Riemann integral from the first sample to `--at`.
    Integral,
    RlIntegral,
    /// Caputo-type derivative, endpoints paired by the gH form.
    Caputo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PairingArg {
    Auto,
    CaseI,
    CaseIi,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a fuzzy number and report its validity.
    Validate { input: String },
    /// Standard (Minkowski) arithmetic and the distance.
    Arith {
        #[arg(value_enum)]
        op: ArithOp,
        u: String,
        v: Option<String>,
        #[arg(long)]
        factor: Option<f64>,
    },
    /// Generalized Hukuhara difference `u -gH v`.
    Ghdiff {
        u: String,
        v: String,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
        /// Level weights for `lsq`: an array used on both sides or
        /// `{"lower": [...], "upper": [...]}`.
        #[arg(long)]
        weights: Option<String>,
    },
    /// Generalized division `u /g v`.
    Gdiv {
        u: String,
        v: String,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
    },
    /// CPS decomposition of `u`, or the gH-difference of `u` and `v` on it.
    Cps { u: String, v: Option<String> },
    /// Fractional operator of a sampled real function.
    Frac {
        #[arg(value_enum)]
        kind: FracKind,
        /// `{"a", "h", "values"}` samples; omit to use `--sample`.
        input: Option<String>,
        #[arg(long)]
        sample: Option<String>,
        #[arg(long)]
        order: f64,
        #[arg(long, default_value_t = 0.0)]
        gamma1: f64,
        #[arg(long, default_value_t = 1.0)]
        horizon: f64,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
        /// Sample index (default: last).
        #[arg(long)]
        at: Option<usize>,
    },
    /// Calculus on a fuzzy-valued function.
    Fuzzyfrac {
        #[arg(value_enum)]
        op: FuzzyOp,
        /// `{"a", "h", "values": [fuzzy, ...]}`; omit to build
        /// `shift(t) + profile(t) * number`.
        input: Option<String>,
        #[arg(long)]
        number: Option<String>,
        #[arg(long, default_value = "const:1")]
        profile: String,
        #[arg(long, default_value = "const:0")]
        shift: String,
        #[arg(long, default_value_t = 0.5)]
        order: f64,
        #[arg(long, default_value_t = 1.0)]
        horizon: f64,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
        #[arg(long)]
        at: Option<usize>,
    },
    /// Level-set solution of `d/dt[u / f(t,u)] = g(t,u)`, `u(0) = u0`.
    Solve {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        u0: String,
        #[arg(long, default_value_t = 1.0)]
        horizon: f64,
        #[arg(long, default_value_t = hybrid::DEFAULT_STEPS)]
        steps: usize,
        #[arg(long, default_value_t = DEFAULT_ENVELOPE_SAMPLES)]
        envelope_samples: usize,
        #[arg(long, value_enum, default_value_t = PairingArg::Auto)]
        pairing: PairingArg,
        /// CSV destination; without it the CSV goes to standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

enum Failure {
    Lib(Error),
    Usage(String),
    /// Already reported on standard output.
    Reported(i32),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

/// Exit code and reason object for a library error.
pub fn classify(e: &Error) -> (i32, Value) {
    let (code, kind, reason) = match e {
        Error::NotExists(r) => (2, "not_exists", r.as_str()),
        Error::Domain(_) => (2, "domain_error", "domain"),
        Error::Pole(_) => (2, "domain_error", "pole"),
        Error::SingularAtOrigin => (2, "domain_error", "singular_at_origin"),
        Error::DomainViolation { .. } => (2, "domain_error", "domain_violation"),
        Error::SwitchingPoint(_) => (2, "domain_error", "switching_point"),
        Error::NonContraction { .. } => (2, "domain_error", "non_contraction"),
        Error::Level { alpha, source } => {
            let (code, mut v) = classify(source);
            v["alpha"] = json!(alpha);
            v["message"] = json!(e.to_string());
            return (code, v);
        }
        Error::Parse(_) => (1, "parse_error", "parse"),
        Error::Validation(_) => (1, "validation_error", "invalid_fuzzy_number"),
        _ => (1, "invalid_input", "parameter"),
    };
    let mut v = json!({ "error": kind, "reason": reason, "message": e.to_string() });
    if let Error::Validation(report) = e {
        v["report"] = serde_json::to_value(report).expect("report serializes");
    }
    (code, v)
}

fn read_operand(arg: &str) -> Outcome<String> {
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') || t.parse::<f64>().is_ok() {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).map_err(|e| Failure::Usage(format!("{arg}: {e}")))
}

fn fuzzy_operand(arg: &str, grid: &AlphaGrid) -> Outcome<FuzzyNumber> {
    Ok(json::parse_fuzzy(&read_operand(arg)?, grid)?)
}

fn params(name: &str, text: &str, n: Option<usize>) -> Outcome<Vec<f64>> {
    let ps = if text.is_empty() {
        Vec::new()
    } else {
        text.split(',')
            .map(|s| s.trim().parse::<f64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Failure::Usage(format!("function `{name}`: bad parameter list `{text}`: {e}")))?
    };
    match n {
        Some(n) if ps.len() != n => Err(Failure::Usage(format!(
            "function `{name}` takes {n} parameter(s), got {}",
            ps.len()
        ))),
        None if ps.is_empty() => Err(Failure::Usage(format!("function `{name}` needs coefficients"))),
        _ => Ok(ps),
    }
}

fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, ci| acc * x + ci)
}

fn sign(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Looks up `name:params` in the function catalog; the result takes `(t, x)`.
pub fn catalog(entry: &str) -> std::result::Result<CrispFn, String> {
    catalog_inner(entry).map_err(|f| match f {
        Failure::Usage(m) => m,
        _ => unreachable!("catalog only fails on usage"),
    })
}

fn catalog_inner(entry: &str) -> Outcome<CrispFn> {
    let (name, rest) = entry.split_once(':').unwrap_or((entry, ""));
    let f: CrispFn = match name {
        "const" => {
            let c = params(name, rest, Some(1))?[0];
            Arc::new(move |_, _| c)
        }
        "affine" => {
            let p = params(name, rest, Some(2))?;
            Arc::new(move |_, x| p[0] + p[1] * x)
        }
        "linear_in_x" => {
            let k = params(name, rest, Some(1))?[0];
            Arc::new(move |_, x| k * x)
        }
        "poly_x" => {
            let c = params(name, rest, None)?;
            Arc::new(move |_, x| horner(&c, x))
        }
        "exp_x" => {
            let k = params(name, rest, Some(1))?[0];
            Arc::new(move |_, x| (k * x).exp())
        }
        "sign_x" => {
            let c = params(name, rest, Some(1))?[0];
            Arc::new(move |_, x| sign(x - c))
        }
        "affine_t" => {
            let p = params(name, rest, Some(2))?;
            Arc::new(move |t, _| p[0] + p[1] * t)
        }
        "poly_t" => {
            let c = params(name, rest, None)?;
            Arc::new(move |t, _| horner(&c, t))
        }
        "power_t" => {
            let b = params(name, rest, Some(1))?[0];
            Arc::new(move |t, _| t.powf(b))
        }
        "exp_t" => {
            let k = params(name, rest, Some(1))?[0];
            Arc::new(move |t, _| (k * t).exp())
        }
        "sin_t" => {
            let k = params(name, rest, Some(1))?[0];
            Arc::new(move |t, _| (k * t).sin())
        }
        _ => return Err(Failure::Usage(format!("unknown function `{name}`"))),
    };
    Ok(f)
}

fn step(horizon: f64, steps: usize) -> Outcome<f64> {
    if !(horizon > 0.0 && horizon.is_finite()) || steps < 2 {
        return Err(Failure::Usage(format!(
            "need a positive horizon and at least 2 steps, got {horizon} and {steps}"
        )));
    }
    Ok(horizon / steps as f64)
}

fn shape(u: &FuzzyNumber) -> Option<(&'static str, Vec<f64>)> {
    let scale = u.support().magnitude();
    let [a, b, c, d] = json::as_trapezoid(u, 1e-9 * (1.0 + scale))?;
    if (c - b).abs() <= 1e-12 * (1.0 + scale) {
        Some(("triangular", vec![a, 0.5 * (b + c), d]))
    } else {
        Some(("trapezoid", vec![a, b, c, d]))
    }
}

struct Ctx {
    grid: AlphaGrid,
    alpha: Option<f64>,
}

impl Ctx {
    fn fuzzy(&self, u: &FuzzyNumber) -> Value {
        let mut v = json::fuzzy_to_value(u);
        if let Some((name, params)) = shape(u) {
            v[name] = json!(params);
        }
        if let Some(a) = self.alpha {
            let c = u.alpha_cut(a);
            v["cut"] = json!({ "alpha": a, "lower": c.lo(), "upper": c.hi() });
        }
        v
    }
}

fn with_case(mut v: Value, case: GhCase) -> Value {
    v["case"] = json!(case.as_str());
    v
}

fn weights(arg: &str) -> Outcome<(Vec<f64>, Vec<f64>)> {
    let text = read_operand(arg)?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Failure::Lib(Error::Parse(format!("weights: {e}"))))?;
    let list = |v: &Value, field: &str| -> Outcome<Vec<f64>> {
        v.as_array()
            .and_then(|a| a.iter().map(Value::as_f64).collect::<Option<Vec<_>>>())
            .ok_or_else(|| Failure::Lib(Error::Parse(format!("weights `{field}`: expected an array of numbers"))))
    };
    if v.is_array() {
        let w = list(&v, "weights")?;
        return Ok((w.clone(), w));
    }
    let lower = list(v.get("lower").unwrap_or(&Value::Null), "lower")?;
    let upper = list(v.get("upper").unwrap_or(&Value::Null), "upper")?;
    Ok((lower, upper))
}

fn csv(bundle: &hybrid::SolutionBundle) -> String {
    let mut s = String::from("t,alpha,lower,upper,residual\n");
    for r in bundle.rows() {
        let _ = writeln!(s, "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}", r[0], r[1], r[2], r[3], r[4]);
    }
    s
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Outcome<()> {
    if cli.grid_n == 0 {
        return Err(Failure::Usage("--grid-n must be at least 1".into()));
    }
    if let Some(a) = cli.alpha {
        if !(0.0..=1.0).contains(&a) {
            return Err(Failure::Usage(format!("--alpha must lie in [0, 1], got {a}")));
        }
    }
    let ctx = Ctx { grid: AlphaGrid::uniform(cli.grid_n), alpha: cli.alpha };
    let grid = &ctx.grid;

    let result: Value = match &cli.command {
        Command::Validate { input } => match fuzzy_operand(input, grid) {
            Ok(u) => json!({ "valid": true, "levels": u.grid().len(), "number": ctx.fuzzy(&u) }),
            Err(Failure::Lib(Error::Validation(report))) => {
                let v = json!({ "valid": false, "report": report });
                writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap()).map_err(io_fail)?;
                return Err(Failure::Reported(1));
            }
            Err(e) => return Err(e),
        },
        Command::Arith { op, u, v, factor } => {
            let u = fuzzy_operand(u, grid)?;
            let second = || -> Outcome<FuzzyNumber> {
                let v = v.as_deref().ok_or_else(|| Failure::Usage(format!("{op:?} needs two operands")))?;
                fuzzy_operand(v, grid)
            };
            match op {
                ArithOp::Add => ctx.fuzzy(&u.add(&second()?)?),
                ArithOp::Sub => ctx.fuzzy(&u.sub(&second()?)?),
                ArithOp::Mul => ctx.fuzzy(&u.mul(&second()?)?),
                ArithOp::Neg => ctx.fuzzy(&u.neg()),
                ArithOp::Scale => {
                    let k = factor.ok_or_else(|| Failure::Usage("scale needs --factor".into()))?;
                    ctx.fuzzy(&u.scale(k))
                }
                ArithOp::Distance => json!({ "distance": u.distance(&second()?)? }),
            }
        }
        Command::Ghdiff { u, v, method, weights: w } => {
            let (u, v) = (fuzzy_operand(u, grid)?, fuzzy_operand(v, grid)?);
            if w.is_some() && *method != Method::Lsq {
                return Err(Failure::Usage("--weights only applies to --method lsq".into()));
            }
            match method {
                Method::Exact => {
                    let (z, case) = gh::gh_diff_fuzzy(&u, &v)?;
                    with_case(ctx.fuzzy(&z), case)
                }
                Method::Approx => ctx.fuzzy(&gh::approx_gh_diff(&u, &v)?),
                Method::Lsq => {
                    let ws = w.as_deref().map(weights).transpose()?;
                    let (lw, uw) = match &ws {
                        Some((l, u)) => (Some(l.as_slice()), Some(u.as_slice())),
                        None => (None, None),
                    };
                    ctx.fuzzy(&gh::lsq_gh_diff(&u, &v, lw, uw)?)
                }
            }
        }
        Command::Gdiv { u, v, method } => {
            let (u, v) = (fuzzy_operand(u, grid)?, fuzzy_operand(v, grid)?);
            match method {
                Method::Exact => {
                    let (z, case) = gh::g_div_fuzzy(&u, &v)?;
                    with_case(ctx.fuzzy(&z), case)
                }
                Method::Approx => ctx.fuzzy(&gh::approx_g_div(&u, &v)?),
                Method::Lsq => return Err(Failure::Usage("gdiv supports --method exact or approx".into())),
            }
        }
        Command::Cps { u, v } => {
            let u = fuzzy_operand(u, grid)?;
            match v {
                None => json!({ "cps": gh::cps_decompose(&u) }),
                Some(v) => {
                    let v = fuzzy_operand(v, grid)?;
                    if u.grid() != v.grid() {
                        return Err(Error::GridMismatch.into());
                    }
                    let (w, case) = gh::cps_gh_diff(&gh::cps_decompose(&u), &gh::cps_decompose(&v))?;
                    let z = gh::cps_compose(&w, u.grid())?;
                    json!({ "cps": w, "case": case.as_str(), "number": ctx.fuzzy(&z) })
                }
            }
        }
        Command::Frac { kind, input, sample, order, gamma1, horizon, steps, at } => {
            let f = match (input, sample) {
                (Some(i), None) => json::parse_sampled(&read_operand(i)?)?,
                (None, Some(s)) => {
                    let g = catalog_inner(s)?;
                    SampledFunction::from_fn(0.0, step(*horizon, *steps)?, *steps, |t| g(t, t))?
                }
                _ => return Err(Failure::Usage("give exactly one of an input file and --sample".into())),
            };
            let k = at.unwrap_or(f.last());
            let value = match kind {
                FracKind::RlIntegral => frac::rl_integral(&f, *order, k)?,
                FracKind::Caputo => frac::caputo_derivative(&f, *order, k)?,
                FracKind::Rl => frac::rl_derivative(&f, *order, k)?,
                FracKind::Gl => frac::gl_derivative(&f, *order, k)?,
                FracKind::Hilfer => frac::hilfer_derivative(&f, HilferOrder::new(*order, *gamma1)?, k)?,
            };
            json!({ "t": f.abscissa(k), "index": k, "order": order, "value": value })
        }
        Command::Fuzzyfrac { op, input, number, profile, shift, order, horizon, steps, at } => {
            let f = match (input, number) {
                (Some(i), None) => json::parse_fuzzy_function(&read_operand(i)?, grid)?,
                (None, Some(n)) => {
                    let u = fuzzy_operand(n, grid)?;
                    let (p, s) = (catalog_inner(profile)?, catalog_inner(shift)?);
                    FuzzyFunction::from_fn(0.0, step(*horizon, *steps)?, *steps, |t| shift_by(&u.scale(p(t, t)), s(t, t)))?
                }
                _ => return Err(Failure::Usage("give exactly one of an input file and --number".into())),
            };
            let k = at.unwrap_or(f.last());
            if k > f.last() {
                return Err(Error::Range { index: k, last: f.last() }.into());
            }
            let t = f.abscissa(k);
            match op {
                FuzzyOp::Derivative => {
                    let (d, report) = fc::gh_derivative_series(&f)?;
                    json!({
                        "t": t,
                        "form": report.forms[k],
                        "switching_points": report.switching_points,
                        "number": ctx.fuzzy(&d.values()[k]),
                    })
                }
                FuzzyOp::Integral => json!({ "t": t, "number": ctx.fuzzy(&fc::fuzzy_riemann_integral(&f, 0, k)?) }),
                FuzzyOp::RlIntegral => {
                    json!({ "t": t, "order": order, "number": ctx.fuzzy(&fc::fuzzy_rl_integral(&f, *order, k)?) })
                }
                FuzzyOp::Caputo => {
                    let (z, form) = fc::fuzzy_frac_derivative(&f, *order, k)?;
                    json!({ "t": t, "order": order, "form": form, "number": ctx.fuzzy(&z) })
                }
            }
        }
        Command::Solve { f, g, u0, horizon, steps, envelope_samples, pairing, output } => {
            let u0 = fuzzy_operand(u0, grid)?;
            let pairing = match pairing {
                PairingArg::Auto => Pairing::Auto,
                PairingArg::CaseI => Pairing::CaseI,
                PairingArg::CaseIi => Pairing::CaseII,
            };
            let problem = HybridProblem::from_arcs(catalog_inner(f)?, catalog_inner(g)?, u0, *horizon)?
                .with_steps(*steps)?
                .with_envelope_samples(*envelope_samples)?
                .with_pairing(pairing);
            let bundle = hybrid::solve(&problem)?;
            let table = csv(&bundle);
            match output {
                None => {
                    out.write_all(table.as_bytes()).map_err(io_fail)?;
                    return Ok(());
                }
                Some(path) => {
                    std::fs::write(path, table).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    let mut summary = Map::new();
                    summary.insert("output".into(), json!(path.display().to_string()));
                    summary.insert("times".into(), json!(bundle.times.len()));
                    summary.insert("levels".into(), json!(bundle.levels.len()));
                    summary.insert("stacking_valid".into(), json!(bundle.stacking_valid));
                    summary.insert("max_residual".into(), json!(bundle.max_residual()));
                    summary.insert("converged".into(), json!(bundle.levels.iter().all(|l| l.converged)));
                    summary.insert("discontinuities".into(), json!(bundle.discontinuities));
                    Value::Object(summary)
                }
            }
        }
    };
    writeln!(out, "{}", serde_json::to_string_pretty(&result).expect("values serialize")).map_err(io_fail)?;
    Ok(())
}

fn shift_by(u: &FuzzyNumber, c: f64) -> FuzzyNumber {
    if c == 0.0 {
        return u.clone();
    }
    u.add(&FuzzyNumber::crisp(c, u.grid())).expect("same grid")
}

fn io_fail(e: io::Error) -> Failure {
    Failure::Usage(format!("write failed: {e}"))
}

/// Runs a parsed command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli, out) {
        Ok(()) => 0,
        Err(Failure::Reported(code)) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Lib(e)) => {
            let (code, reason) = classify(&e);
            let _ = writeln!(err, "error: {e}");
            if code == 2 {
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&reason).expect("values serialize"));
            }
            code
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            code
        }
    }
}
