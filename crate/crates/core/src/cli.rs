//! Command-line front end.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 infeasible
//! parameters, 4 verification failure, 5 malformed collection input.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arcs::ArcCollection;
use crate::asymptotic::{curve_csv, sample_curve, voting_e_max};
use crate::error::{Error, Result};
use crate::extremal::{
    all_edges_check, c_max, construct_a_max, construct_d_max, d_max, d_of_a_max, di_lower_bound, e_max, e_min,
    e_min_given_p, BoundReport, ExtremalParams,
};
use crate::graph::{build_summary, check_edge_formula, export_graph, GraphFormat};
use crate::io::{from_json, to_json_value};
use crate::oracle::{certify, random_collection, ExhaustiveTable, DEFAULT_CEILING};

pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;
pub const EXIT_MALFORMED: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "circarc", version, about = "Edge and double-intersection bounds for circular arc graphs")]
pub struct Cli {
    /// Write output to this file instead of standard output.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the edge-maximizing collection for (M, m, n).
    Amax(Triple),
    /// Build a collection with the most double intersections for (M, m, n).
    DmaxConstruct(Triple),
    /// Evaluate every closed-form bound for (M, m, n).
    Bounds {
        #[command(flatten)]
        triple: Triple,
        /// Double-intersection proportion d / C(n, 2).
        #[arg(long)]
        p: Option<f64>,
        /// Number of candidate positions for the voting bound.
        #[arg(long = "N")]
        candidates: Option<f64>,
    },
    /// Recheck a collection file: profile, Edge Formula, double-intersection bound.
    Verify {
        file: PathBuf,
        /// Also write the intersection graph (`edge-list` or `dot`) to this path.
        #[arg(long)]
        graph_out: Option<PathBuf>,
        #[arg(long, default_value = "edge-list")]
        graph_format: String,
    },
    /// Certify the closed forms against exhaustive enumeration for n = 1..=K.
    Sweep {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        ceiling: usize,
    },
    /// Sample the asymptotic edge-proportion curve as CSV.
    Curve {
        #[arg(long)]
        gamma: f64,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 101)]
        steps: usize,
    },
    /// Emit a seeded uniformly random collection.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Decide whether a collection's edge count forces agreement T.
    Analyze {
        file: PathBuf,
        #[arg(long = "target-M")]
        target: usize,
    },
}

#[derive(clap::Args, Debug, Clone, Copy)]
pub struct Triple {
    #[arg(long)]
    pub n: usize,
    #[arg(long = "M")]
    pub max: usize,
    #[arg(long = "m")]
    pub min: usize,
}

impl Triple {
    fn params(self) -> Result<ExtremalParams> {
        let p = ExtremalParams::new(self.max, self.min, self.n)?;
        if p.max == p.min {
            return Err(Error::Infeasible(format!("M = m = {} is not realizable; need M > m", p.max)));
        }
        Ok(p)
    }
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(std::io::Error),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Lib(e) if e.is_infeasible() => EXIT_INFEASIBLE,
            Failure::Lib(Error::UnknownFormat(_)) => EXIT_USAGE,
            Failure::Lib(_) => EXIT_MALFORMED,
            Failure::Io(_) => EXIT_IO,
            Failure::Verify(_) => EXIT_VERIFY,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Io(e) => format!("i/o error: {e}"),
            Failure::Verify(m) => format!("verification failed: {m}"),
        }
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` (unless `--output` is given) and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    let mut text = String::new();
    let result = execute(&cli.command, &mut text);
    let written = match &cli.output {
        Some(path) => fs::write(path, &text),
        None => out.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: i/o error: {e}");
        return EXIT_IO;
    }
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn push_json(text: &mut String, value: &impl Serialize) {
    text.push_str(&serde_json::to_string_pretty(value).expect("plain data serializes"));
    text.push('\n');
}

fn read_collection(path: &PathBuf) -> std::result::Result<ArcCollection, Failure> {
    let raw = fs::read_to_string(path)?;
    Ok(from_json(&raw)?)
}

fn annotated(c: &ArcCollection) -> Value {
    let summary = build_summary(c);
    let mut doc = to_json_value(c);
    doc["summary"] = json!({ "e": summary.e(), "d": summary.d(), "C": c.running_count_sum() });
    doc
}

fn report_value(r: Result<BoundReport>) -> std::result::Result<Value, Failure> {
    match r {
        Ok(report) => Ok(serde_json::to_value(report).expect("plain data serializes")),
        Err(e) if e.is_infeasible() => Ok(json!({ "value": null, "valid": false, "reason": e.to_string() })),
        Err(e) => Err(e.into()),
    }
}

fn execute(command: &Command, text: &mut String) -> std::result::Result<(), Failure> {
    match command {
        Command::Amax(t) => push_json(text, &annotated(&construct_a_max(t.params()?)?)),
        Command::DmaxConstruct(t) => push_json(text, &annotated(&construct_d_max(t.params()?)?)),
        Command::Bounds { triple, p, candidates } => {
            let params = triple.params()?;
            let closed = |value: i64| json!({ "value": value, "branch": "closed-form", "valid": true });
            let mut doc = json!({
                "n": params.n,
                "M": params.max,
                "m": params.min,
                "c_max": closed(c_max(params)?),
                "e_max": report_value(e_max(params))?,
                "e_min": report_value(e_min(params))?,
                "d_max": closed(d_max(params)),
                "d_of_a_max": report_value(d_of_a_max(params))?,
                "all_edges": all_edges_check(params),
            });
            if let Some(p) = p {
                doc["e_min_given_p"] = report_value(e_min_given_p(params, *p))?;
            }
            if let Some(candidates) = candidates {
                let value = voting_e_max(params.n as u64, params.max as u64, *candidates)?;
                doc["voting_e_max"] = json!({ "value": value, "branch": "voting", "valid": true });
            }
            push_json(text, &doc);
        }
        Command::Verify { file, graph_out, graph_format } => {
            let c = read_collection(file)?;
            let format: GraphFormat = graph_format.parse()?;
            let report = check_edge_formula(&c);
            let bound = di_lower_bound(&c);
            let start = c.canonical_start();
            let doc = json!({
                "n": c.n(),
                "profile": c.agreement_profile(),
                "lr_sequence": c.lr_sequence(start)?.to_string(),
                "running_counts": c.running_counts(start)?.counts,
                "edge_formula": report,
                "di_lower_bound": { "value": bound, "d": report.d, "holds": bound <= report.d as i64 },
                "classes": c.classify_arcs(),
            });
            push_json(text, &doc);
            if let Some(path) = graph_out {
                fs::write(path, export_graph(&build_summary(&c), format))?;
            }
            if !report.holds {
                return Err(Failure::Verify(format!("d + e = {} but (C - n) / 2 = {}", report.lhs, report.rhs)));
            }
        }
        Command::Sweep { max_n, ceiling } => {
            let mut disagreements = 0;
            for n in 1..=*max_n {
                let table = ExhaustiveTable::build(n, *ceiling)?;
                for row in certify(&table)? {
                    disagreements += usize::from(!row.agree);
                    text.push_str(&serde_json::to_string(&row).expect("plain data serializes"));
                    text.push('\n');
                }
            }
            if disagreements > 0 {
                return Err(Failure::Verify(format!("{disagreements} rows disagree")));
            }
        }
        Command::Curve { gamma, p, steps } => text.push_str(&curve_csv(&sample_curve(*gamma, *p, *steps)?)),
        Command::Random { n: 0, .. } => return Err(Error::Infeasible("n must be at least 1".into()).into()),
        Command::Random { n, seed } => push_json(text, &to_json_value(&random_collection(*n, *seed)?)),
        Command::Analyze { file, target } => {
            let c = read_collection(file)?;
            let actual = ExtremalParams::of(&c);
            let threshold = e_min(ExtremalParams::new(*target, actual.min, actual.n)?)?;
            let e = build_summary(&c).e();
            let forced = e as i64 >= threshold.value;
            let statement = if forced {
                format!("e = {e} >= e_min = {}: agreement {target} is guaranteed", threshold.value)
            } else {
                format!("e = {e} < e_min = {}: agreement {target} is not guaranteed by the edge count", threshold.value)
            };
            push_json(
                text,
                &json!({
                    "n": actual.n,
                    "m": actual.min,
                    "M": actual.max,
                    "e": e,
                    "target_M": target,
                    "e_min": threshold,
                    "guaranteed": forced,
                    "statement": statement,
                }),
            );
        }
    }
    Ok(())
}
