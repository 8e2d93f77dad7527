//! The `sombor` command line.
//!
//! Exit codes: 0 success, 1 a bound was violated, 2 usage or input error.

use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{BoundFamily, BoundId, Reading};
use crate::graph::Graph;
use crate::graph_io::enumerate::{enumerate_orders, EnumerationError};
use crate::graph_io::generators::Family;
use crate::graph_io::{generate_family, parse_corpus, parse_graph6, random_graph, to_graph6};
use crate::report::{
    family_record, index_records, standard_family_table, write_csv, write_json, CheckRecord, FamilyRecord, IndexRecord,
    Record, ReportError, SummaryRecord,
};
use crate::verify::{for_each_check, try_verify_corpus, AlphaGrid, EnumerationReport, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Worker-count override for `verify`.
pub const THREADS_ENV: &str = "SOMBOR_THREADS";

#[derive(Debug, Parser)]
#[command(name = "sombor", version, about = "General Sombor index: indices, bound checks, enumeration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Every index of every input graph.
    Compute(ComputeArgs),
    /// Sweep bound checkers over a corpus.
    Verify(VerifyArgs),
    /// Print graphs as graph6, one per line.
    Enumerate(EnumerateArgs),
    /// Closed forms against direct evaluation on standard families.
    Families(FamiliesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// `n=5`, `n=2..6`, `5` or `2..6`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Orders(RangeInclusive<usize>);

impl FromStr for Orders {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.strip_prefix("n=").unwrap_or(s);
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad order {t:?} in {s:?}"));
        match body.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                let (a, b) = (num(a)?, num(b)?);
                if a > b {
                    return Err(format!("empty order range {s:?}"));
                }
                Ok(Orders(a..=b))
            }
            None => num(body).map(|n| Orders(n..=n)),
        }
    }
}

/// `N,P` or `N,P,COUNT`: COUNT samples of `G(N, P)` with seeds `seed, seed+1, ...`.
#[derive(Debug, Clone, Copy, PartialEq)]
struct RandomSpec {
    n: usize,
    p: f64,
    count: u64,
}

impl FromStr for RandomSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let bad = || format!("expected N,P[,COUNT], got {s:?}");
        let (n, p, count) = match parts.as_slice() {
            [n, p] => (n, p, "1"),
            [n, p, c] => (n, p, *c),
            _ => return Err(bad()),
        };
        Ok(RandomSpec {
            n: n.parse().map_err(|_| bad())?,
            p: p.parse().map_err(|_| bad())?,
            count: count.parse().map_err(|_| bad())?,
        })
    }
}

#[derive(Debug, Clone, Args)]
struct SourceArgs {
    /// graph6 files (one graph per line) or a single edge list.
    #[arg(long = "input", num_args = 1..)]
    inputs: Vec<PathBuf>,
    /// Enumerate all graphs of order `n=K` or `n=A..B`.
    #[arg(long)]
    enumerate: Option<Orders>,
    /// Keep only connected enumerated graphs.
    #[arg(long)]
    connected: bool,
    /// One enumerated graph per isomorphism class.
    #[arg(long)]
    dedup: bool,
    #[arg(long)]
    family: Option<Family>,
    /// Family parameters, e.g. `5` or `2,3`.
    #[arg(long, value_delimiter = ',')]
    params: Vec<usize>,
    /// Random graphs `N,P[,COUNT]`.
    #[arg(long)]
    random: Option<RandomSpec>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Clone, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write to a file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ComputeArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Exponents for the parametric indices, or `default`.
    #[arg(long, default_value = "default")]
    alphas: AlphaGrid,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, default_value = "default")]
    alphas: AlphaGrid,
    /// `all`, or a comma list of families (B1, B4) and ids (B4.2b, B5.L).
    #[arg(long, default_value = "all")]
    bounds: String,
    /// Also list every check where a bound is tight.
    #[arg(long)]
    witnesses: bool,
    /// List every check, not only violations.
    #[arg(long)]
    all_records: bool,
    /// Evaluate the quoted directions even where they are known to be false.
    #[arg(long)]
    printed: bool,
    /// Also write the per-bound summary as CSV to this path.
    #[arg(long)]
    summary: Option<PathBuf>,
    /// Swap lhs and rhs in every check (harness self-test).
    #[arg(long, hide = true)]
    negative_control: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    /// `n=K` or `n=A..B`.
    orders: Orders,
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    dedup: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct FamiliesArgs {
    /// One family; without it, complete, empty, cycle and path for n = 1..=12.
    #[arg(long)]
    family: Option<Family>,
    /// Orders for one-parameter families, or `a,b` for complete_bipartite.
    #[arg(long, value_delimiter = ',')]
    params: Vec<usize>,
    #[arg(long, default_value = "default")]
    alphas: AlphaGrid,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Input { path: String, message: String },
    #[error(transparent)]
    Report(#[from] ReportError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn usage(message: impl Into<String>) -> CliError {
    CliError::Usage(message.into())
}

type GraphStream = Box<dyn Iterator<Item = Graph>>;

impl SourceArgs {
    /// The corpus, in order: input files, the family member, random samples,
    /// then enumerated graphs. At least one graph is required.
    fn graphs(&self) -> Result<GraphStream, CliError> {
        let mut head: Vec<Graph> = Vec::new();
        for path in &self.inputs {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Input { path: path.display().to_string(), message: e.to_string() })?;
            let graphs = parse_corpus(&text)
                .map_err(|e| CliError::Input { path: path.display().to_string(), message: e.to_string() })?;
            head.extend(graphs);
        }
        match (self.family, self.params.is_empty()) {
            (Some(family), _) => head.push(generate_family(family, &self.params).map_err(|e| usage(e.to_string()))?),
            (None, false) => return Err(usage("--params needs --family")),
            (None, true) => {}
        }
        if let Some(spec) = self.random {
            for i in 0..spec.count {
                let g = random_graph(spec.n, spec.p, self.seed.wrapping_add(i)).map_err(|e| usage(e.to_string()))?;
                head.push(g);
            }
        }
        let tail: GraphStream = match &self.enumerate {
            Some(Orders(range)) => {
                Box::new(enumerate_orders(range.clone(), self.connected, self.dedup).map_err(enumeration_error)?)
            }
            None if self.connected || self.dedup => return Err(usage("--connected/--dedup need --enumerate")),
            None => Box::new(std::iter::empty()),
        };
        let mut stream = head.into_iter().chain(tail).peekable();
        if stream.peek().is_none() {
            return Err(usage("no input graphs"));
        }
        Ok(Box::new(stream))
    }
}

fn enumeration_error(e: EnumerationError) -> CliError {
    usage(e.to_string())
}

fn parse_bounds(spec: &str) -> Result<Vec<BoundId>, CliError> {
    if spec.trim() == "all" {
        return Ok(BoundId::ALL.to_vec());
    }
    let mut ids = Vec::new();
    for token in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if let Ok(family) = token.parse::<BoundFamily>() {
            ids.extend(family.ids());
        } else {
            ids.push(token.parse::<BoundId>().map_err(|e| usage(e.to_string()))?);
        }
    }
    if ids.is_empty() {
        return Err(usage("--bounds selects nothing"));
    }
    ids.sort();
    ids.dedup();
    Ok(ids)
}

fn threads_from_env() -> Result<Option<usize>, CliError> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t > 0 => Ok(Some(t)),
            _ => Err(usage(format!("{THREADS_ENV} must be a positive integer, got {v:?}"))),
        },
        Err(_) => Ok(None),
    }
}

/// Writes to `--output` when given, otherwise to `out`.
fn with_sink(
    path: &Option<PathBuf>,
    out: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> Result<(), CliError>,
) -> Result<(), CliError> {
    match path {
        Some(p) => {
            let mut file = io::BufWriter::new(fs::File::create(p)?);
            body(&mut file)?;
            file.flush()?;
            Ok(())
        }
        None => body(out),
    }
}

fn emit<T: Record>(records: &[T], args: &OutputArgs, out: &mut dyn Write) -> Result<(), CliError> {
    with_sink(&args.output, out, |w| {
        match args.format {
            Format::Csv => write_csv(records, w)?,
            Format::Json => write_json(records, w)?,
        }
        Ok(())
    })
}

fn cmd_compute(args: ComputeArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let rows: Vec<IndexRecord> =
        args.source.graphs()?.enumerate().flat_map(|(i, g)| index_records(i, &g, args.alphas.values())).collect();
    emit(&rows, &args.output, out)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    summary: &'a [SummaryRecord],
    records: &'a [CheckRecord],
}

fn violation_records(reports: &[EnumerationReport]) -> Vec<CheckRecord> {
    reports
        .iter()
        .flat_map(|r| &r.violations)
        .map(|v| {
            let g = parse_graph6(&v.graph6).expect("serialized by the sweep");
            CheckRecord::new(&g, &v.check)
        })
        .collect()
}

fn cmd_verify(args: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let ids = parse_bounds(&args.bounds)?;
    let opts = VerifyOptions {
        alphas: args.alphas.clone(),
        reading: if args.printed { Reading::AsPrinted } else { Reading::Verified },
        threads: threads_from_env()?,
        negative_control: args.negative_control,
        ..VerifyOptions::default()
    }
    .bounds(ids);

    let reports = try_verify_corpus(args.source.graphs()?.map(Ok::<_, CliError>), &opts)?;
    let summary: Vec<SummaryRecord> = reports.iter().map(SummaryRecord::from).collect();

    let records = if args.all_records || args.witnesses {
        // Second, sequential pass; sorted into report order like the violations.
        let order = |r: &CheckRecord| reports.iter().position(|p| (p.bound, p.alpha) == (r.bound_id, r.alpha));
        let mut keyed = Vec::new();
        for_each_check(args.source.graphs()?, &opts, |i, g, c| {
            if args.all_records || c.equality_observed || !c.holds {
                let rec = CheckRecord::new(g, c);
                keyed.push((order(&rec), i, rec));
            }
        });
        keyed.sort_by_key(|(o, i, _)| (*o, *i));
        keyed.into_iter().map(|(_, _, r)| r).collect()
    } else {
        violation_records(&reports)
    };

    with_sink(&args.output.output, out, |w| {
        match args.output.format {
            Format::Csv => write_csv(&records, w)?,
            Format::Json => write_json(&VerifyJson { summary: &summary, records: &records }, w)?,
        }
        Ok(())
    })?;
    if let Some(path) = &args.summary {
        write_csv(&summary, io::BufWriter::new(fs::File::create(path)?))?;
    }

    let violations: usize = summary.iter().map(|s| s.violations).sum();
    for (s, r) in summary.iter().zip(&reports) {
        let alpha = s.alpha.map_or_else(String::new, |a| a.to_string());
        writeln!(
            err,
            "{:<6} alpha={:<5} {:<10} checked={:<8} violations={:<6} witnesses={:<6} mismatches={:<6} {:.3}s",
            s.bound_id.as_str(),
            alpha,
            format!("{:?}", s.form).to_lowercase(),
            s.graphs_checked,
            s.violations,
            s.equality_witnesses,
            s.equality_mismatches,
            r.runtime.as_secs_f64()
        )?;
    }
    writeln!(err, "total violations: {violations}")?;
    Ok(if violations == 0 { EXIT_OK } else { EXIT_VIOLATION })
}

fn cmd_enumerate(args: EnumerateArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let graphs = enumerate_orders(args.orders.0.clone(), args.connected, args.dedup).map_err(enumeration_error)?;
    with_sink(&args.output, out, |w| {
        for g in graphs {
            writeln!(w, "{}", to_graph6(&g).expect("enumerated orders are small"))?;
        }
        Ok(())
    })?;
    Ok(EXIT_OK)
}

fn cmd_families(args: FamiliesArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let alphas = args.alphas.values();
    let rows: Vec<FamilyRecord> = match args.family {
        None if !args.params.is_empty() => return Err(usage("--params needs --family")),
        None => standard_family_table(12, alphas),
        Some(family) => {
            let members: Vec<Vec<usize>> = match family {
                _ if args.params.is_empty() => return Err(usage("--family needs --params")),
                Family::CompleteBipartite => vec![args.params.clone()],
                _ => args.params.iter().map(|&n| vec![n]).collect(),
            };
            let mut rows = Vec::new();
            for params in &members {
                for &alpha in alphas {
                    rows.push(family_record(family, params, alpha).map_err(|e| usage(e.to_string()))?);
                }
            }
            rows
        }
    };
    emit(&rows, &args.output, out)?;
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Compute(a) => cmd_compute(a, out),
        Command::Verify(a) => cmd_verify(a, out, err),
        Command::Enumerate(a) => cmd_enumerate(a, out),
        Command::Families(a) => cmd_families(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["sombor"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn order_syntax() {
        assert_eq!("n=5".parse::<Orders>(), Ok(Orders(5..=5)));
        assert_eq!("n=2..6".parse::<Orders>(), Ok(Orders(2..=6)));
        assert_eq!("2..=4".parse::<Orders>(), Ok(Orders(2..=4)));
        assert!("n=6..2".parse::<Orders>().is_err());
        assert!("n=x".parse::<Orders>().is_err());
    }

    #[test]
    fn bounds_selection() {
        assert_eq!(parse_bounds("all").unwrap().len(), 16);
        assert_eq!(parse_bounds("B4").unwrap().len(), 5);
        assert_eq!(parse_bounds("B5.L,B1").unwrap(), vec![BoundId::B1, BoundId::B5L]);
        assert!(parse_bounds("B9").is_err());
    }

    #[test]
    fn enumerate_counts_and_caps() {
        let (code, out, _) = run_capture(&["enumerate", "n=4", "--dedup"]);
        assert_eq!((code, out.lines().count()), (0, 11));
        let (code, out, _) = run_capture(&["enumerate", "n=3"]);
        assert_eq!((code, out.lines().count()), (0, 8));
        assert_eq!(run_capture(&["enumerate", "n=9", "--dedup"]).0, 2);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_capture(&["compute"]).0, 2);
        assert_eq!(run_capture(&["bogus"]).0, 2);
        assert_eq!(run_capture(&["compute", "--family", "cycle", "--params", "2"]).0, 2);
        assert_eq!(run_capture(&["families", "--format", "csv", "--format", "json"]).0, 2);
        assert_eq!(run_capture(&["verify", "--family", "path", "--params", "4", "--alphas", "1,nan"]).0, 2);
        assert_eq!(run_capture(&["--help"]).0, 0);
    }
}
