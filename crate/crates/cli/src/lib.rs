//! Library half of the `stacksort` binary. `run` does all the work and returns
//! the bytes to print plus an exit code, so tests can drive it in-process.

pub mod args;
pub mod explore;
pub mod spec;
pub mod verify;

use std::fs;
use std::path::Path;

use num_traits::ToPrimitive;
use serde::Deserialize;
use serde_json::{json, Value};

use stacksort_core::ehrhart::{count_lattice, ehrhart_result, GorensteinMethod, Region};
use stacksort_core::export::{ehrhart_json, polytope_json};
use stacksort_core::scalar::parse_ratio;
use stacksort_core::{Error, Permutation, Rational, VPolytope};

use args::{Cli, Command, CountArgs, RegionArg, VerifyArgs};
use spec::{translate_by_tau, PolytopeSpec};
use verify::{run_verify, VerifyParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn error(code: i32, msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Self { stdout: String::new(), stderr, code }
    }
}

/// Defaults read from `--config`.
#[derive(Clone, Debug, Default, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub nmax: Option<usize>,
    pub tmax: Option<u32>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidPermutation(_)
        | Error::OutOfRange(_)
        | Error::NegativeDilate(_)
        | Error::DimensionMismatch { .. }
        | Error::Ragged
        | Error::Empty => EXIT_USAGE,
        Error::UnclassifiedInside(_) | Error::NotLattice | Error::NotSimplex => EXIT_UNSUPPORTED,
        _ => EXIT_FAIL,
    }
}

fn core_error(e: Error) -> Outcome {
    Outcome::error(exit_code(&e), format!("error: {e}"))
}

/// Runs one command. `--jobs` gets its own pool so repeated in-process
/// calls do not fight over the global one.
pub fn run(cli: &Cli) -> Outcome {
    let config = match &cli.config {
        Some(path) => match Config::load(path) {
            Ok(c) => c,
            Err(e) => return Outcome::error(EXIT_USAGE, format!("error: config {e}")),
        },
        None => Config::default(),
    };
    match cli.jobs {
        Some(0) => Outcome::error(EXIT_USAGE, "error: --jobs must be at least 1"),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(cli, &config)),
            Err(e) => Outcome::error(EXIT_FAIL, format!("error: thread pool: {e}")),
        },
        None => dispatch(cli, &config),
    }
}

fn dispatch(cli: &Cli, config: &Config) -> Outcome {
    let result = match &cli.command {
        Command::Sort { perm, iterations } => cmd_sort(perm, *iterations, cli.json),
        Command::Polytope { spec } => cmd_polytope(spec),
        Command::Count(a) => cmd_count(a, cli.json),
        Command::Ehrhart { spec, tmax } => return cmd_ehrhart(spec, *tmax),
        Command::Verify(a) => return cmd_verify(a, config, cli.json),
        Command::Explore { n } => return explore::cmd_explore(*n, cli.json),
    };
    result.unwrap_or_else(core_error)
}

fn with_newline(mut s: String) -> String {
    s.push('\n');
    s
}

fn pretty(v: &Value) -> String {
    with_newline(serde_json::to_string_pretty(v).expect("JSON values always serialize"))
}

pub fn cmd_sort(perm: &str, iterations: Option<usize>, as_json: bool) -> Result<Outcome, Error> {
    let perm: Permutation = perm.parse()?;
    let orbit = perm.sort_orbit();
    let steps = orbit.steps();
    let shown = match iterations {
        Some(k) => &steps[..steps.len().min(k + 1)],
        None => steps,
    };
    let out = if as_json {
        let orbit: Vec<String> = shown.iter().map(|p| p.to_string()).collect();
        pretty(&json!({ "perm": perm.to_string(), "orbit": orbit, "index": steps.len() - 1 }))
    } else {
        let mut s: String = shown.iter().map(|p| format!("{p}\n")).collect();
        s.push_str(&format!("index: {}\n", steps.len() - 1));
        s
    };
    Ok(Outcome::ok(out))
}

pub fn cmd_polytope(spec: &str) -> Result<Outcome, Error> {
    let p = spec.parse::<PolytopeSpec>()?.build()?;
    let mut v = polytope_json(&p);
    v["normalized_volume"] = match p.normalized_volume() {
        Ok(vol) if p.is_simplex() => json!(vol.to_u64()),
        _ => Value::Null,
    };
    v["hollow"] = match hollow(&p) {
        Ok(h) => json!(h),
        Err(_) => Value::Null,
    };
    Ok(Outcome::ok(pretty(&v)))
}

/// No lattice point in the relative interior of `P` itself.
pub fn hollow(p: &VPolytope) -> Result<bool, Error> {
    Ok(count_lattice(p, &Rational::from_integer(1.into()), Region::RelativeInterior)? == 0)
}

pub fn cmd_count(a: &CountArgs, as_json: bool) -> Result<Outcome, Error> {
    let mut p = a.spec.parse::<PolytopeSpec>()?.build()?;
    if a.translate.is_some() {
        p = translate_by_tau(&p)?;
    }
    let lam: Rational = parse_ratio(&a.lam).ok_or_else(|| Error::OutOfRange(format!("bad dilate {:?}", a.lam)))?;
    let region = match a.region {
        RegionArg::Closed => Region::Closed,
        RegionArg::Interior => Region::RelativeInterior,
    };
    let n = count_lattice(&p, &lam, region)?;
    let out = if as_json { pretty(&json!({ "count": n })) } else { format!("{n}\n") };
    Ok(Outcome::ok(out))
}

pub fn cmd_ehrhart(spec: &str, tmax: u32) -> Outcome {
    let r = spec
        .parse::<PolytopeSpec>()
        .and_then(|s| s.build())
        .and_then(|p| ehrhart_result(&p, tmax));
    match r {
        Ok(r) => {
            let mut v = ehrhart_json(&r);
            v["poly_text"] = json!(r.poly.to_string());
            let mut out = Outcome::ok(pretty(&v));
            if let GorensteinMethod::FiniteRange { tmax } = r.gorenstein.method {
                v["gorenstein_range"] = json!(tmax);
                out.stdout = pretty(&v);
                out.stderr = format!("gorenstein index not certified symbolically; searched dilates up to {tmax}\n");
                out.code = EXIT_UNSUPPORTED;
            }
            out
        }
        Err(e) => core_error(e),
    }
}

pub fn verify_params(a: &VerifyArgs, config: &Config) -> VerifyParams {
    VerifyParams {
        nmax: a.nmax.or(config.nmax).unwrap_or(5),
        tmax: a.tmax.or(config.tmax).unwrap_or(3),
        seed: a.seed,
        corrupt_certificate: a.corrupt_certificate,
    }
}

pub fn cmd_verify(a: &VerifyArgs, config: &Config, as_json: bool) -> Outcome {
    let params = verify_params(a, config);
    if !(2..=7).contains(&params.nmax) {
        return Outcome::error(EXIT_USAGE, format!("error: nmax must be in 2..=7, got {}", params.nmax));
    }
    let report = run_verify(&params);
    let stdout = if as_json { pretty(&report.to_json(a.timings)) } else { report.to_table(a.timings) };
    let stderr: String = report
        .entries
        .iter()
        .filter(|e| !e.passed)
        .map(|e| format!("failed: {} ({}): {}\n", e.id, e.anchor, e.witness.as_deref().unwrap_or("")))
        .collect();
    let code = if report.passed() { EXIT_OK } else { EXIT_FAIL };
    Outcome { stdout, stderr, code }
}
