//! Command-line front end.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::csf::{chromatic_poly_dc, csf_of_spec};
use crate::error::{Error, Result};
use crate::graphs::GraphSpec;
use crate::guards::Guards;
use crate::identities::{
    run_grid, verify_distinguishability, verify_dumbbell_chromatic_distinguishability, Identity, Verifier,
};
use crate::partitions::partitions_of;
use crate::positivity::{e_positivity_of_spec, s_positivity_of_spec, wolfgang_scan, PositivityReport};
use crate::symfunc::{to_basis, Basis, TransitionCache};

#[derive(Parser, Debug, PartialEq, Eq)]
#[command(name = "chromsym", version, about = "Exact chromatic symmetric functions of graph families")]
pub struct Command {
    #[command(subcommand)]
    pub action: Action,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Args, Debug, PartialEq, Eq)]
pub struct Options {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Exit with status 1 on a negative verdict.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Edge limit for the edge-subset expansion.
    #[arg(long, global = true, value_name = "N")]
    pub max_edges: Option<usize>,
    /// Vertex limit for connected-partition scans and identity grids.
    #[arg(long, global = true, value_name = "N")]
    pub max_vertices: Option<usize>,
    /// Degree limit for basis changes.
    #[arg(long, global = true, value_name = "N")]
    pub max_degree: Option<usize>,
    /// Worker threads for grid verification.
    #[arg(long, global = true, value_name = "N", default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Subcommand, Debug, PartialEq, Eq)]
pub enum Action {
    /// Chromatic symmetric function of a graph.
    Csf {
        #[arg(value_parser = parse_spec)]
        spec: GraphSpec,
        #[arg(long, value_enum, default_value_t = BasisArg::E)]
        basis: BasisArg,
    },
    /// Chromatic polynomial of a graph.
    Chrompoly {
        #[arg(value_parser = parse_spec)]
        spec: GraphSpec,
        /// Evaluate at this integer instead of printing the polynomial.
        #[arg(long, allow_negative_numbers = true)]
        at: Option<i64>,
    },
    /// e- or Schur-positivity verdict.
    Positivity {
        #[arg(value_parser = parse_spec)]
        spec: GraphSpec,
        #[arg(long, value_enum, default_value_t = PositivityBasis::E)]
        basis: PositivityBasis,
    },
    /// Types of connected partitions the graph lacks.
    Scan {
        #[arg(value_parser = parse_spec)]
        spec: GraphSpec,
    },
    /// Partitions of n, largest first.
    Partitions { n: usize },
    /// Check an identity on one instance or on a grid. NAME is an identity
    /// name or `distinguishability` (PARAMS is then `dumbbell` or `cdumbbell`).
    Verify {
        name: String,
        #[arg(allow_hyphen_values = true)]
        params: Option<String>,
        /// Run every instance with at most CAP vertices.
        #[arg(long, value_name = "CAP")]
        grid: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    P,
    E,
    S,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PositivityBasis {
    E,
    S,
}

fn parse_spec(s: &str) -> std::result::Result<GraphSpec, String> {
    GraphSpec::parse(s).map_err(|e| e.to_string())
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::P => Basis::PowerSum,
            BasisArg::E => Basis::Elementary,
            BasisArg::S => Basis::Schur,
        }
    }
}

/// Exit status and the text for standard output and standard error.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn parse_args<I, T>(argv: I) -> std::result::Result<Command, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Command::try_parse_from(argv)
}

/// Parses and executes; `argv` includes the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match parse_args(argv) {
        Ok(cmd) => execute(&cmd),
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { status, stdout: String::new(), stderr: text }
            } else {
                Outcome { status, stdout: text, stderr: String::new() }
            }
        }
    }
}

pub fn execute(cmd: &Command) -> Outcome {
    let o = &cmd.options;
    match dispatch(cmd) {
        Ok((negative, out)) => {
            Outcome { status: if negative && o.strict { 1 } else { 0 }, stdout: out, stderr: String::new() }
        }
        Err(e) => {
            let stderr =
                if o.json { format!("{}\n", json!({"error": e.to_string()})) } else { format!("error: {e}\n") };
            Outcome { status: 2, stdout: String::new(), stderr }
        }
    }
}

fn guards(o: &Options) -> Guards {
    let mut g = Guards::default();
    if let Some(e) = o.max_edges {
        g.max_edges = e;
        g.oracle_edges = g.oracle_edges.min(e);
    }
    if let Some(v) = o.max_vertices {
        g.max_vertices = v;
    }
    if let Some(d) = o.max_degree {
        g.max_degree = d;
    }
    g
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    format!("{}\n", serde_json::to_string(v).expect("serializable"))
}

/// Runs the command; the flag is true for a negative verdict.
fn dispatch(cmd: &Command) -> Result<(bool, String)> {
    let o = &cmd.options;
    let guards = guards(o);
    TransitionCache::global().set_max_degree(guards.max_degree);
    match &cmd.action {
        Action::Csf { spec, basis } => {
            let (x, engine) = csf_of_spec(spec, &guards)?;
            let f = to_basis(&x, (*basis).into())?;
            let out = if o.json {
                to_json(&json!({"spec": spec.to_string(), "engine": engine, "function": f}))
            } else {
                format!("{f}\n")
            };
            Ok((false, out))
        }
        Action::Chrompoly { spec, at } => {
            let poly = chromatic_poly_dc(&spec.build()?, &guards)?;
            let out = match (at, o.json) {
                (Some(x), true) => {
                    to_json(&json!({"spec": spec.to_string(), "at": x, "value": poly.evaluate(*x).to_string()}))
                }
                (Some(x), false) => format!("{}\n", poly.evaluate(*x)),
                (None, true) => to_json(&json!({"spec": spec.to_string(), "coefficients": poly})),
                (None, false) => format!("{poly}\n"),
            };
            Ok((false, out))
        }
        Action::Positivity { spec, basis } => {
            let report = match basis {
                PositivityBasis::E => e_positivity_of_spec(spec, &guards)?,
                PositivityBasis::S => s_positivity_of_spec(spec, &guards)?,
            };
            let out = if o.json { to_json(&report) } else { positivity_text(&report) };
            Ok((!report.positive, out))
        }
        Action::Scan { spec } => {
            let missing = wolfgang_scan(&spec.build()?, &guards)?;
            let out = if o.json {
                to_json(&json!({"spec": spec.to_string(), "missing": missing}))
            } else if missing.is_empty() {
                "no missing types\n".to_string()
            } else {
                missing.iter().map(|p| format!("{p}\n")).collect()
            };
            Ok((!missing.is_empty(), out))
        }
        Action::Partitions { n } => {
            let all = partitions_of(*n)?;
            let out = if o.json { to_json(&all) } else { all.iter().map(|p| format!("{p}\n")).collect() };
            Ok((false, out))
        }
        Action::Verify { name, params, grid } => verify(o, guards, name, params.as_deref(), *grid),
    }
}

fn positivity_text(r: &PositivityReport) -> String {
    let basis = r.basis.letter();
    match &r.witness {
        None => format!("{basis}-positive (engine {})\n", r.engine),
        Some((lambda, c)) => format!(
            "not {basis}-positive: coefficient of {basis}{lambda} is {} (engine {})\n",
            crate::symfunc::format_rational(c),
            r.engine
        ),
    }
}

fn verify(
    o: &Options,
    guards: Guards,
    name: &str,
    params: Option<&str>,
    grid: Option<usize>,
) -> Result<(bool, String)> {
    if name == "distinguishability" {
        let family = params.ok_or_else(|| Error::Domain("distinguishability needs a family name".into()))?;
        let cap = grid.unwrap_or(11);
        let report = if family == "dumbbell-chromatic" {
            verify_dumbbell_chromatic_distinguishability(cap)?
        } else {
            verify_distinguishability(family, cap)?
        };
        let out = if o.json {
            to_json(&report)
        } else {
            let mut s = format!("{} {} instances up to {} vertices: ", report.family, report.instances, report.cap);
            if report.distinct() {
                s.push_str("pairwise distinct\n");
            } else {
                for (a, b) in &report.collisions {
                    let _ = write!(s, "\n  {a} = {b}");
                }
                s.push('\n');
            }
            s
        };
        return Ok((!report.distinct(), out));
    }
    let identity: Identity = name.parse()?;
    let v = Verifier::new(guards);
    match (params, grid) {
        (Some(p), None) => {
            let r = identity.verify(&v, p)?;
            let out = if o.json {
                to_json(&r)
            } else if r.equal {
                format!("{} {}: equal\n", r.name, r.params)
            } else {
                format!("{} {}: differ by {}\n", r.name, r.params, r.difference.as_ref().expect("difference"))
            };
            Ok((!r.equal, out))
        }
        (None, Some(cap)) => {
            let s = run_grid(identity, &v, cap, o.jobs)?;
            let out = if o.json {
                to_json(&json!({"identity": identity.name(), "cap": cap, "summary": s}))
            } else {
                let mut t = format!(
                    "{identity}: {} checked, {} failed, {} beyond guards\n",
                    s.checked,
                    s.failures.len(),
                    s.skipped.len()
                );
                for f in &s.failures {
                    let _ = writeln!(t, "  {}: differ by {}", f.params, f.difference.as_ref().expect("difference"));
                }
                t
            };
            Ok((!s.passed(), out))
        }
        _ => Err(Error::Domain("verify needs either PARAMS or --grid CAP".into())),
    }
}
