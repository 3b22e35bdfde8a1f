//! The `tropdiff` command line.
//!
//! Exit codes: 0 on success (and for `check`, when the supports are a
//! tropical solution), 1 when `check` finds no solution or an `examples`
//! fixture fails, 2 on usage, parse or dimension errors.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::diff_algebra::DiffSystem;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::fixtures;
use crate::lattice::grid;
use crate::supports::SupportSet;
use crate::textio::{self, infer_dimensions, ParseContext};
use crate::trop_poly::{enumerate_solutions, is_solution_system, SearchBox};

/// Environment variable capping the number of candidates `enumerate` visits.
pub const MAX_CANDIDATES_ENV: &str = "TROPDIFF_MAX_CANDIDATES";
pub const DEFAULT_MAX_CANDIDATES: u128 = 1_000_000;

#[derive(Parser, Debug)]
#[command(name = "tropdiff", version, about = "Supports, vertex sets and tropical solutions of PDE systems")]
pub struct Cli {
    /// Number of independent variables t1..tm (inferred from the input if omitted).
    #[arg(long, global = true)]
    pub m: Option<usize>,
    /// Number of differential unknowns x1..xn (inferred if omitted).
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Coefficient field: `rational` or `sqrt:D` for Q(√D).
    #[arg(long, global = true, default_value = "rational", value_parser = parse_field)]
    pub field: Field,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Vertex set of a support, e.g. --set "{(1,4),(2,3)} + cone{(0,5)}".
    Vertices {
        #[arg(long)]
        set: String,
    },
    /// Tropicalization of a differential polynomial.
    Trop {
        #[arg(long)]
        poly: String,
    },
    /// Checks a support tuple against the tropicalized derivatives of a system.
    Check {
        #[command(flatten)]
        input: SystemInput,
        /// `;`-separated supports, one per unknown.
        #[arg(long)]
        supports: String,
        /// Include Θ(I)P for every ||I||_inf up to this bound.
        #[arg(long, default_value_t = 0)]
        derive_bound: u32,
    },
    /// Evaluates a differential polynomial at a tuple of series.
    Eval {
        #[arg(long)]
        poly: String,
        /// `;`-separated series, one per unknown.
        #[arg(long)]
        at: String,
    },
    /// Applies Θ(I) to a differential polynomial.
    Derive {
        #[arg(long)]
        poly: String,
        /// Multi-index I, e.g. "(1,0)".
        #[arg(long)]
        order: String,
    },
    /// Lists finite support tuples in a box that solve the sampled system.
    Enumerate {
        #[command(flatten)]
        input: SystemInput,
        /// Upper corner of the search box, e.g. "(5)".
        #[arg(long = "box")]
        bounds: String,
        /// At most this many points per support (default: the whole box).
        #[arg(long)]
        max_points: Option<usize>,
        #[arg(long, default_value_t = 0)]
        derive_bound: u32,
    },
    /// Replays the built-in worked examples.
    Examples,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct SystemInput {
    /// File with one differential polynomial per line; `#` starts a comment.
    #[arg(long)]
    pub system: Option<PathBuf>,
    /// An inline polynomial (repeatable).
    #[arg(long)]
    pub poly: Vec<String>,
}

fn parse_field(s: &str) -> std::result::Result<Field, String> {
    match s {
        "rational" | "rationals" | "Q" => Ok(Field::Rationals),
        _ => {
            let d = s
                .strip_prefix("sqrt:")
                .ok_or_else(|| format!("expected `rational` or `sqrt:D`, found {s:?}"))?;
            let d: u64 = d.parse().map_err(|_| format!("invalid radicand {d:?}"))?;
            Field::quadratic(d).map_err(|e| e.to_string())
        }
    }
}

/// What a command printed and the exit code it asks for.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String, success: bool) -> Self {
        Outcome { stdout, stderr: String::new(), code: if success { 0 } else { 1 } }
    }

    fn error(stderr: String) -> Self {
        Outcome { stdout: String::new(), stderr, code: 2 }
    }
}

/// Parses `args` (including the program name) and runs the command, reading
/// the candidate cap from the environment.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_cap(args, std::env::var(MAX_CANDIDATES_ENV).ok().as_deref())
}

/// As [`run`], with the candidate cap given explicitly (`None` for the default).
pub fn run_with_cap<I, T>(args: I, cap: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() { Outcome::error(text) } else { Outcome::ok(text, true) };
        }
    };
    let cap = match cap {
        None => DEFAULT_MAX_CANDIDATES,
        Some(v) => match v.trim().parse::<u128>() {
            Ok(c) => c,
            Err(_) => return Outcome::error(format!("error: {MAX_CANDIDATES_ENV}={v:?} is not a count\n")),
        },
    };
    match execute(&cli, cap) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::error(format!("error: {e}\n")),
    }
}

fn context(cli: &Cli, texts: &[&str]) -> Result<ParseContext> {
    let dims = infer_dimensions(texts.iter().copied());
    ParseContext::new(cli.m.or(dims.m).unwrap_or(1), cli.n.or(dims.n).unwrap_or(1), cli.field)
}

fn render(format: Format, text: String, value: Value) -> String {
    match format {
        Format::Text => text + "\n",
        Format::Json => serde_json::to_string_pretty(&value).expect("serializable") + "\n",
    }
}

fn read_system(input: &SystemInput) -> Result<String> {
    match &input.system {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display()))),
        None => Ok(input.poly.join("\n")),
    }
}

fn show_tuple(tuple: &[SupportSet]) -> String {
    tuple.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ; ")
}

fn execute(cli: &Cli, cap: u128) -> Result<Outcome> {
    let fmt = cli.format;
    match &cli.command {
        Command::Vertices { set } => {
            let ctx = context(cli, &[set])?;
            let v = textio::parse_support(set, &ctx)?.vertices();
            Ok(Outcome::ok(render(fmt, v.to_string(), textio::vertex_set_json(&v)), true))
        }
        Command::Trop { poly } => {
            let ctx = context(cli, &[poly])?;
            let t = textio::parse_diff_poly(poly, &ctx)?.tropicalize()?;
            Ok(Outcome::ok(render(fmt, t.to_string(), textio::trop_poly_json(&t)), true))
        }
        Command::Eval { poly, at } => {
            let ctx = context(cli, &[poly, at])?;
            let p = textio::parse_diff_poly(poly, &ctx)?;
            let v = p.evaluate(&textio::parse_series_tuple(at, &ctx)?)?;
            Ok(Outcome::ok(render(fmt, v.to_string(), textio::series_json(&v)), true))
        }
        Command::Derive { poly, order } => {
            let ctx = context(cli, &[poly, order])?;
            let p = textio::parse_diff_poly(poly, &ctx)?;
            let d = p.theta_poly(&textio::parse_point(order, &ctx)?)?;
            Ok(Outcome::ok(render(fmt, d.to_string(), textio::diff_poly_json(&d)), true))
        }
        Command::Check { input, supports, derive_bound } => {
            let source = read_system(input)?;
            let ctx = context(cli, &[&source, supports])?;
            let system = textio::parse_system(&source, &ctx)?;
            let supports = textio::parse_support_tuple(supports, &ctx)?;
            check(fmt, &system, &supports, *derive_bound)
        }
        Command::Enumerate { input, bounds, max_points, derive_bound } => {
            let source = read_system(input)?;
            let ctx = context(cli, &[&source, bounds])?;
            let system = textio::parse_system(&source, &ctx)?;
            let bounds = textio::parse_point(bounds, &ctx)?;
            let family = fixtures::tropical_sample(&system, *derive_bound)?;
            let search = SearchBox {
                max_points: max_points.unwrap_or_else(|| grid(&bounds).len()),
                bounds,
                nvars: ctx.n,
                max_candidates: cap,
            };
            let sols = enumerate_solutions(&family, &search)?;
            let text = sols.iter().map(|t| show_tuple(t)).collect::<Vec<_>>().join("\n");
            let value = json!({
                "candidates": search.candidate_count().to_string(),
                "solutions": sols
                    .iter()
                    .map(|t| t.iter().map(textio::support_json).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            });
            Ok(Outcome::ok(render(fmt, text, value), true))
        }
        Command::Examples => {
            let runs = fixtures::replay();
            let passed = runs.iter().all(|r| r.passed);
            let text = runs
                .iter()
                .map(|r| format!("{} {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.name, r.detail))
                .collect::<Vec<_>>()
                .join("\n");
            let value = Value::Array(
                runs.iter()
                    .map(|r| json!({ "name": r.name, "passed": r.passed, "detail": r.detail }))
                    .collect(),
            );
            Ok(Outcome::ok(render(fmt, text, value), passed))
        }
    }
}

fn check(fmt: Format, system: &DiffSystem, supports: &[SupportSet], bound: u32) -> Result<Outcome> {
    let sample = system.derivative_sample(bound)?;
    let family = sample.iter().map(|s| s.poly.tropicalize()).collect::<Result<Vec<_>>>()?;
    let report = is_solution_system(&family, supports)?;

    let mut text = String::new();
    let mut reports = Vec::new();
    for ((s, trop), r) in sample.iter().zip(&family).zip(&report.reports) {
        let label = format!("P{} I={}", s.generator + 1, s.order);
        let _ = writeln!(text, "{label}: {trop}");
        let _ = writeln!(text, "  evaluation {}  solution: {}", r.evaluation, r.solution);
        for (v, w) in &r.witnesses {
            let _ = writeln!(text, "  vertex {v}: terms {w:?}");
        }
        let mut value = textio::report_json(r);
        value["generator"] = json!(s.generator + 1);
        value["order"] = textio::point_json(&s.order);
        value["polynomial"] = json!(trop.to_string());
        reports.push(value);
    }
    let _ = write!(text, "solution: {}", report.solution);
    let value = json!({ "reports": reports, "solution": report.solution });
    Ok(Outcome::ok(render(fmt, text, value), report.solution))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run_with_cap(std::iter::once("tropdiff").chain(args.iter().copied()), None)
    }

    #[test]
    fn vertices_command() {
        let out = run_args(&["vertices", "--set", "{(1,4),(2,3),(3,3),(4,1)}"]);
        assert_eq!((out.stdout.as_str(), out.code), ("{(1,4),(4,1)}\n", 0));
        assert_eq!(run_args(&["vertices", "--set", "{}"]).stdout, "{}\n");
        assert_eq!(run_args(&["vertices", "--set", "cone{(1,1),(2,0)}"]).stdout, "{(1,1),(2,0)}\n");
    }

    #[test]
    fn usage_and_parse_errors_exit_two() {
        assert_eq!(run_args(&["vertices", "--set", "{(1,"]).code, 2);
        assert_eq!(run_args(&["bogus"]).code, 2);
        assert_eq!(run_args(&["trop", "--poly", "x", "--field", "sqrt:4"]).code, 2);
        assert_eq!(run_args(&["--help"]).code, 0);
    }

    #[test]
    fn check_exit_codes() {
        let ok = run_args(&["check", "--poly", "2*t*x[1] - x[0]", "--supports", "{}"]);
        assert_eq!(ok.code, 0, "{}", ok.stdout);
        let bad = run_args(&["check", "--poly", "2*t*x[1] - x[0]", "--supports", "{(0)}"]);
        assert_eq!(bad.code, 1);
        assert!(bad.stdout.contains("vertex (0): terms [0]"), "{}", bad.stdout);
    }

    #[test]
    fn candidate_cap_is_enforced() {
        let args = ["tropdiff", "enumerate", "--poly", "x[0]", "--box", "(5)"];
        assert_eq!(run_with_cap(args, Some("10")).code, 2);
        assert_eq!(run_with_cap(args, Some("64")).code, 0);
    }
}
