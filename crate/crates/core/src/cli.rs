//! Command-line front end. Data goes to `--out` or standard output,
//! diagnostics to standard error.
//!
//! Exit codes: 0 success or found, 1 clean negative, 2 usage or I/O error,
//! 3 failed internal or theorem check.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::certificates::{certify_graph, CertificateReport};
use crate::detector::{find_equal_degree_path, find_equal_degree_path3, Witness};
use crate::enumerator::Enumeration;
use crate::error::Error;
use crate::graph::{complete_bipartite, half_graph, read_graph6_lines, Graph};
use crate::lambda::{lambda_bruteforce, lambda_closed, lambda_grid, LambdaInstance, LAMBDA_CSV_HEADER};
use crate::search::{
    build_table, certificate_sweep, compute_extremal, scan, sharpness, verify_theorem, SearchOptions, SharpnessReport,
    TheoremReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "eqdeg", version, about = "Equal-degree paths: detection, extremal search and certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Output {
    /// Output file; standard output when absent.
    #[arg(long = "out")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Copy)]
struct Jobs {
    /// Worker threads.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    G6,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Find an equal-degree path in each graph of a graph6 file.
    Detect {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        length: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Compute the largest edge count without the configuration.
    Search {
        #[arg(long)]
        vertices: usize,
        #[arg(long, default_value_t = 3)]
        length: usize,
        /// Only classify graphs with at least this many edges.
        #[arg(long)]
        min_edges: Option<usize>,
        /// Only classify graphs with at most this many edges.
        #[arg(long)]
        max_edges: Option<usize>,
        /// Classify every edge count.
        #[arg(long)]
        full_histogram: bool,
        /// Allow path lengths above 3 on more than 9 vertices.
        #[arg(long)]
        uncapped: bool,
        /// Record wall-clock time (makes output run-dependent).
        #[arg(long)]
        timing: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Also write the extremal graphs here, one graph6 per line.
        #[arg(long)]
        g6_out: Option<PathBuf>,
        #[command(flatten)]
        jobs: Jobs,
        #[command(flatten)]
        output: Output,
    },
    /// Check the extremal theorem for length 3 at one order.
    Verify {
        #[arg(long)]
        vertices: usize,
        #[command(flatten)]
        jobs: Jobs,
        #[command(flatten)]
        output: Output,
    },
    /// Run every certificate check over all property-free graphs of an
    /// order, or over the graphs of a graph6 file.
    Certify {
        #[arg(long, required_unless_present = "input", conflicts_with = "input")]
        vertices: Option<usize>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[command(flatten)]
        jobs: Jobs,
        #[command(flatten)]
        output: Output,
    },
    /// Compare the closed form of the degree-sum maximisation with its
    /// exhaustive oracle.
    Lambda {
        /// Grid of half orders, e.g. `n=6..8`.
        #[arg(long, required_unless_present = "instance", conflicts_with = "instance")]
        grid: Option<String>,
        /// One instance as `n,delta,beta,b_size`.
        #[arg(long)]
        instance: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Write a named graph in graph6.
    Construct {
        #[arg(value_enum)]
        family: Family,
        /// Sizes: two for complete-bipartite, one otherwise.
        #[arg(required = true)]
        sizes: Vec<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Tabulate extremal values over path lengths and orders.
    Table {
        /// Comma-separated path lengths.
        #[arg(long, value_delimiter = ',', required = true)]
        lengths: Vec<usize>,
        /// Comma-separated orders.
        #[arg(long, value_delimiter = ',', required = true)]
        vertices: Vec<usize>,
        #[arg(long)]
        timing: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[command(flatten)]
        jobs: Jobs,
        #[command(flatten)]
        output: Output,
    },
    /// Write one graph6 line per isomorphism class.
    Enumerate {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        min_edges: Option<usize>,
        #[arg(long)]
        max_edges: Option<usize>,
        #[command(flatten)]
        jobs: Jobs,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Family {
    CompleteBipartite,
    HalfGraph,
    Complete,
    Empty,
    Path,
    Cycle,
    Star,
}

/// Failure of a subcommand, mapped to an exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TheoremFalsified(_) | Error::Internal(_) => Failure::Internal(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("I/O error: {e}"))
    }
}

type Outcome = Result<i32, Failure>;

fn emit(out: &Output, data: &str) -> Result<(), Failure> {
    match &out.out {
        Some(path) => {
            fs::write(path, data).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(data.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn read_graphs(path: &PathBuf) -> Result<Vec<Graph>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(read_graph6_lines(&text)?)
}

fn options(jobs: Jobs) -> SearchOptions {
    SearchOptions::with_jobs(jobs.jobs as usize)
}

#[derive(Serialize)]
struct Detection {
    graph6: String,
    witness: Option<Witness>,
}

fn detect(input: &PathBuf, length: usize, format: Format, out: &Output) -> Outcome {
    let graphs = read_graphs(input)?;
    let mut found = Vec::with_capacity(graphs.len());
    for g in &graphs {
        let witness = if length == 3 { find_equal_degree_path3(g) } else { find_equal_degree_path(g, length)? };
        found.push(Detection { graph6: g.to_graph6(), witness });
    }
    let text = match format {
        Format::Json => to_json(&found),
        Format::Csv => {
            let mut s = String::from("graph6,witness\n");
            for d in &found {
                let w = d
                    .witness
                    .as_ref()
                    .map(|w| w.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
                s.push_str(&format!("{},{}\n", d.graph6, w.unwrap_or_default()));
            }
            s
        }
        Format::G6 => found.iter().filter(|d| d.witness.is_some()).map(|d| format!("{}\n", d.graph6)).collect(),
    };
    emit(out, &text)?;
    Ok(if found.iter().any(|d| d.witness.is_some()) { EXIT_OK } else { EXIT_NEGATIVE })
}

#[allow(clippy::too_many_arguments)]
fn search(
    vertices: usize,
    length: usize,
    min_edges: Option<usize>,
    max_edges: Option<usize>,
    flags: SearchOptions,
    format: Format,
    g6_out: Option<&PathBuf>,
    out: &Output,
) -> Outcome {
    let result = if min_edges.is_some() || max_edges.is_some() {
        let max = vertices * vertices.saturating_sub(1) / 2;
        scan(vertices, length, min_edges.unwrap_or(0), max_edges.unwrap_or(max), &flags)?.1
    } else {
        compute_extremal(vertices, length, &flags)?
    };
    let g6: String = result.extremal.iter().map(|s| format!("{s}\n")).collect();
    if let Some(path) = g6_out {
        emit(&Output { out: Some(path.clone()) }, &g6)?;
    }
    match format {
        Format::Json => emit(out, &to_json(&result))?,
        Format::G6 => emit(out, &g6)?,
        Format::Csv => {
            let mut s = String::from("edges,property_free\n");
            for (e, k) in &result.histogram {
                s.push_str(&format!("{e},{k}\n"));
            }
            emit(out, &s)?
        }
    }
    Ok(if result.extremal.is_empty() { EXIT_NEGATIVE } else { EXIT_OK })
}

#[derive(Serialize)]
struct VerifyOutput {
    theorem: TheoremReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    sharpness: Option<SharpnessReport>,
}

fn verify(vertices: usize, opts: SearchOptions, out: &Output) -> Outcome {
    let theorem = verify_theorem(vertices, &opts)?;
    let sharp = if vertices % 2 == 1 {
        let s = sharpness(vertices, theorem.threshold + 1, &opts)?;
        if !s.exceptions.is_empty() {
            return Err(Failure::Internal(format!("property-free graphs above the threshold: {:?}", s.exceptions)));
        }
        Some(s)
    } else {
        None
    };
    emit(out, &to_json(&VerifyOutput { theorem, sharpness: sharp }))?;
    Ok(EXIT_OK)
}

fn certify(vertices: Option<usize>, input: Option<&PathBuf>, opts: SearchOptions, out: &Output) -> Outcome {
    let report = match (vertices, input) {
        (Some(v), _) => certificate_sweep(v, &opts)?,
        (None, Some(path)) => {
            let mut report = CertificateReport::new();
            for g in read_graphs(path)? {
                report.merge(certify_graph(&g)?);
            }
            report
        }
        (None, None) => return Err(Failure::Usage("certify needs --vertices or --in".into())),
    };
    emit(out, &to_json(&report))?;
    if report.is_clean() {
        Ok(EXIT_OK)
    } else {
        eprintln!("{} certificate violations", report.total_violations());
        Ok(EXIT_INTERNAL)
    }
}

fn parse_grid(spec: &str) -> Result<RangeInclusive<usize>, Failure> {
    let bad = || Failure::Usage(format!("expected a grid like n=6..8, got {spec:?}"));
    let body = spec.strip_prefix("n=").ok_or_else(bad)?;
    let (lo, hi) = match body.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (body, body),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn lambda(grid: Option<&str>, instance: Option<&str>, out: &Output) -> Outcome {
    let rows = if let Some(spec) = grid {
        lambda_grid(parse_grid(spec)?)?
    } else {
        let spec = instance.unwrap_or_default();
        let parts: Vec<usize> = spec
            .split(',')
            .map(|s| s.trim().parse())
            .collect::<Result<_, _>>()
            .map_err(|_| Failure::Usage(format!("expected n,delta,beta,b_size, got {spec:?}")))?;
        let [n, delta, beta, b_size] = parts[..] else {
            return Err(Failure::Usage(format!("expected four values, got {}", parts.len())));
        };
        let inst = LambdaInstance::new(n, delta, beta, b_size)?;
        let closed = lambda_closed(&inst);
        let oracle = lambda_bruteforce(&inst)?;
        vec![crate::lambda::LambdaRow {
            n,
            delta,
            beta,
            b_size,
            case: inst.case().number(),
            closed,
            oracle,
            equal: closed == oracle,
        }]
    };
    let mut csv = String::from(LAMBDA_CSV_HEADER);
    csv.push('\n');
    for r in &rows {
        csv.push_str(&r.to_csv());
        csv.push('\n');
    }
    emit(out, &csv)?;
    if rows.iter().all(|r| r.equal) {
        Ok(EXIT_OK)
    } else {
        eprintln!("closed form and oracle disagree");
        Ok(EXIT_INTERNAL)
    }
}

fn construct(family: Family, sizes: &[usize], out: &Output) -> Outcome {
    let want = if matches!(family, Family::CompleteBipartite) { 2 } else { 1 };
    if sizes.len() != want {
        return Err(Failure::Usage(format!("{family:?} takes {want} size(s), got {}", sizes.len())));
    }
    let g = match family {
        Family::CompleteBipartite => complete_bipartite(sizes[0], sizes[1])?,
        Family::HalfGraph => half_graph(sizes[0])?,
        Family::Complete => Graph::complete(sizes[0])?,
        Family::Empty => Graph::empty(sizes[0])?,
        Family::Path => Graph::path(sizes[0])?,
        Family::Cycle => Graph::cycle(sizes[0])?,
        Family::Star => Graph::star(sizes[0])?,
    };
    emit(out, &format!("{}\n", g.to_graph6()))?;
    Ok(EXIT_OK)
}

fn table(lengths: &[usize], vertices: &[usize], opts: SearchOptions, format: Format, out: &Output) -> Outcome {
    let t = build_table(lengths, vertices, &opts)?;
    let text = match format {
        Format::Json => to_json(&t),
        Format::Csv => t.to_csv(),
        Format::G6 => return Err(Failure::Usage("table output is csv or json".into())),
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

fn enumerate(vertices: usize, min_edges: Option<usize>, max_edges: Option<usize>, jobs: Jobs, out: &Output) -> Outcome {
    let max = vertices * vertices.saturating_sub(1) / 2;
    let en =
        Enumeration::new(vertices)?.edges(min_edges.unwrap_or(0), max_edges.unwrap_or(max))?.jobs(jobs.jobs as usize);
    let parts = en.fold_subtrees(String::new, |buf, g| {
        buf.push_str(&g.to_graph6());
        buf.push('\n');
    })?;
    emit(out, &parts.concat())?;
    Ok(EXIT_OK)
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Detect { input, length, format, output } => detect(&input, length, format, &output),
        Command::Search {
            vertices,
            length,
            min_edges,
            max_edges,
            full_histogram,
            uncapped,
            timing,
            format,
            g6_out,
            jobs,
            output,
        } => {
            let flags = SearchOptions { timing, full_histogram, uncapped, ..options(jobs) };
            search(vertices, length, min_edges, max_edges, flags, format, g6_out.as_ref(), &output)
        }
        Command::Verify { vertices, jobs, output } => verify(vertices, options(jobs), &output),
        Command::Certify { vertices, input, jobs, output } => certify(vertices, input.as_ref(), options(jobs), &output),
        Command::Lambda { grid, instance, output } => lambda(grid.as_deref(), instance.as_deref(), &output),
        Command::Construct { family, sizes, output } => construct(family, &sizes, &output),
        Command::Table { lengths, vertices, timing, format, jobs, output } => {
            let opts = SearchOptions { timing, ..options(jobs) };
            table(&lengths, &vertices, opts, format, &output)
        }
        Command::Enumerate { vertices, min_edges, max_edges, jobs, output } => {
            enumerate(vertices, min_edges, max_edges, jobs, &output)
        }
    }
}

/// Runs the command line `argv` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal check failed: {msg}");
            EXIT_INTERNAL
        }
    }
}
