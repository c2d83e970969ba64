use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use xkostka::appendix::pair_tuple;
use xkostka::crystal::{enumerate_b, to_dot, Crystal, RowTuple};
use xkostka::kostka::{
    fermionic, fermionic_double_route, oned_sum, oned_sum_double, verify, DoubleRoute, KostkaRequest, Method, Target,
};
use xkostka::rigged::psi_rc_traced;
use xkostka::tableau::{DoublePartition, Partition};
use xkostka::LaurentPoly;

#[derive(Parser)]
#[command(name = "xkostka", version, about = "Kostka polynomials, crystals and rigged configurations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Route {
    Rigged,
    Configurations,
    Multiplicities,
    Literal,
}

impl From<Route> for DoubleRoute {
    fn from(r: Route) -> Self {
        match r {
            Route::Rigged => DoubleRoute::Rigged,
            Route::Configurations => DoubleRoute::Configurations,
            Route::Multiplicities => DoubleRoute::Multiplicities,
            Route::Literal => DoubleRoute::Literal,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SingleMethod {
    Charge,
    Onedsum,
    Fermionic,
}

#[derive(Clone, Copy, ValueEnum)]
enum DoubleMethod {
    Charge,
    Lr,
    Onedsum,
    Fermionic,
}

#[derive(clap::Args)]
struct Shape {
    /// Ordinary target λ
    #[arg(long, conflicts_with_all = ["lp", "lpp"])]
    lambda: Option<String>,
    /// λ′ of a double partition
    #[arg(long, requires = "lpp")]
    lp: Option<String>,
    /// λ″ of a double partition
    #[arg(long, requires = "lp")]
    lpp: Option<String>,
}

#[derive(clap::Args)]
struct TraceArgs {
    /// JSON file with lp, lpp, plus, minus
    #[arg(long, conflicts_with_all = ["lp", "rows"])]
    tableau_json: Option<PathBuf>,
    #[arg(long, requires_all = ["lpp", "plus", "minus"], conflicts_with = "rows")]
    lp: Option<String>,
    #[arg(long)]
    lpp: Option<String>,
    /// Rows of T₊ top to bottom, e.g. 1223/35
    #[arg(long)]
    plus: Option<String>,
    /// Rows of T₋ top to bottom
    #[arg(long)]
    minus: Option<String>,
    /// Row tuple w_n, …, w_1, e.g. (-,4,1,113,223)
    #[arg(long)]
    rows: Option<String>,
    #[arg(long)]
    mu: Option<String>,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// K_{λ,μ}(t)
    Kostka {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value = "charge")]
        method: SingleMethod,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// K_{Λ,(−,μ)}(t)
    Double {
        #[arg(long)]
        lp: String,
        #[arg(long)]
        lpp: String,
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value = "charge")]
        method: DoubleMethod,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// M(μ,λ;t) or M(μ,Λ;t)
    Fermionic {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        n: Option<usize>,
        /// Route for a double partition
        #[arg(long, value_enum, default_value = "configurations")]
        route: Route,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// X(μ,λ;t) or X(μ,Λ;t)
    Onedsum {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Every step of ψ on a tableau pair or a row tuple
    RcTrace {
        #[command(flatten)]
        input: TraceArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Crystal graph of B(μ)
    CrystalGraph {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
    },
    /// Run a verification sweep
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Identity(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn partition(s: &str) -> Result<Partition, Failure> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| Failure::Usage(format!("bad partition {s:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Partition::new(parts)?)
}

/// A row as written in a row tuple: `-` for empty, dotted letters when some
/// exceed 9, single digits otherwise.
fn row(token: &str) -> Result<Vec<usize>, Failure> {
    let token = token.trim();
    if token.is_empty() || token == "-" {
        return Ok(Vec::new());
    }
    let bad = || Failure::Usage(format!("bad row {token:?}"));
    if token.contains('.') {
        token.split('.').map(|x| x.parse().map_err(|_| bad())).collect()
    } else {
        token.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect()
    }
}

fn tableau_rows(s: &str) -> Result<Vec<Vec<usize>>, Failure> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split('/').map(row).collect()
}

fn poly_out(p: &LaurentPoly, format: Format) -> String {
    match format {
        Format::Text => format!("{p}\n"),
        Format::Json => format!("{}\n", serde_json::to_string(p).unwrap()),
    }
}

fn double_rank(lam: &DoublePartition, mu: &Partition, n: Option<usize>) -> usize {
    n.unwrap_or_else(|| mu.size().max(lam.s() + lam.t()).max(2))
}

fn cmd_kostka(lambda: &str, mu: &str, method: SingleMethod, n: Option<usize>, format: Format) -> Outcome {
    let (lam, mu) = (partition(lambda)?, partition(mu)?);
    let n = n.unwrap_or(mu.size().max(lam.length()).max(2));
    let method = match method {
        SingleMethod::Charge => Method::Charge,
        SingleMethod::Onedsum => Method::Onedsum,
        SingleMethod::Fermionic => Method::Fermionic,
    };
    let p = KostkaRequest { mu, target: Target::Single(lam), n, method }.compute()?;
    Ok(poly_out(&p, format))
}

fn cmd_double(lp: &str, lpp: &str, mu: &str, method: DoubleMethod, n: Option<usize>, format: Format) -> Outcome {
    let lam = DoublePartition::new(partition(lp)?, partition(lpp)?);
    let mu = partition(mu)?;
    let n = double_rank(&lam, &mu, n);
    let method = match method {
        DoubleMethod::Charge => Method::Charge,
        DoubleMethod::Lr => Method::Lr,
        DoubleMethod::Onedsum => Method::Onedsum,
        DoubleMethod::Fermionic => Method::Fermionic,
    };
    let p = KostkaRequest { mu, target: Target::Double(lam), n, method }.compute()?;
    Ok(poly_out(&p, format))
}

enum Parsed {
    Single(Partition),
    Double(DoublePartition),
}

fn parse_shape(shape: &Shape) -> Result<Parsed, Failure> {
    match (&shape.lambda, &shape.lp, &shape.lpp) {
        (Some(l), None, None) => Ok(Parsed::Single(partition(l)?)),
        (None, Some(a), Some(b)) => Ok(Parsed::Double(DoublePartition::new(partition(a)?, partition(b)?))),
        _ => Err(Failure::Usage("give either --lambda or both --lp and --lpp".into())),
    }
}

fn cmd_fermionic(shape: &Shape, mu: &str, n: Option<usize>, route: Route, format: Format) -> Outcome {
    let mu = partition(mu)?;
    let p = match parse_shape(shape)? {
        Parsed::Single(lam) => {
            let n = n.unwrap_or(mu.size().max(lam.length()).max(2));
            if lam.size() != mu.size() {
                return Err(Failure::Usage(format!("|λ| = {} but |μ| = {}", lam.size(), mu.size())));
            }
            fermionic(&mu, &lam, n)?
        }
        Parsed::Double(lam) => fermionic_double_route(&mu, &lam, double_rank(&lam, &mu, n), route.into())?,
    };
    Ok(poly_out(&p, format))
}

fn cmd_onedsum(shape: &Shape, mu: &str, n: Option<usize>, format: Format) -> Outcome {
    let mu = partition(mu)?;
    let p = match parse_shape(shape)? {
        Parsed::Single(lam) => oned_sum(&mu, &lam, n.unwrap_or(mu.size().max(lam.length()).max(2)))?,
        Parsed::Double(lam) => {
            let n = double_rank(&lam, &mu, n);
            if lam.s() + lam.t() > n {
                return Err(Failure::Usage(format!("rank n = {n} too small for {lam}")));
            }
            oned_sum_double(&mu, &lam, n)?
        }
    };
    Ok(poly_out(&p, format))
}

#[derive(serde::Deserialize)]
struct PairInput {
    lp: Vec<usize>,
    lpp: Vec<usize>,
    plus: Vec<Vec<usize>>,
    minus: Vec<Vec<usize>>,
}

/// The row tuple to trace, and `s` when it comes from a tableau pair.
fn trace_input(args: &TraceArgs) -> Result<(RowTuple, Option<usize>), Failure> {
    let TraceArgs { tableau_json, lp, lpp, plus, minus, rows, mu, n } = args;
    let n = *n;
    let mu = mu.as_deref().map(partition).transpose()?;
    let pair = if let Some(path) = tableau_json {
        let p: PairInput = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        Some((DoublePartition::new(Partition::new(p.lp)?, Partition::new(p.lpp)?), p.plus, p.minus))
    } else if let (Some(lp), Some(lpp), Some(plus), Some(minus)) = (lp, lpp, plus, minus) {
        Some((DoublePartition::new(partition(lp)?, partition(lpp)?), tableau_rows(plus)?, tableau_rows(minus)?))
    } else {
        None
    };
    if let Some((lam, plus, minus)) = pair {
        let mu = mu.ok_or_else(|| Failure::Usage("--mu is required with a tableau pair".into()))?;
        let n = n.unwrap_or((lam.s() + lam.t()).max(2));
        let w = pair_tuple(&plus, &minus, &lam, &mu, n).map_err(Failure::Usage)?;
        return Ok((w, Some(lam.s())));
    }
    let Some(rows) = rows else {
        return Err(Failure::Usage("give --tableau-json, --lp/--lpp/--plus/--minus or --rows".into()));
    };
    let inner = rows.trim().trim_start_matches('(').trim_end_matches(')');
    let mut tuple: Vec<Vec<usize>> = inner.split(',').map(row).collect::<Result<_, _>>()?;
    tuple.reverse();
    let rank = n.unwrap_or(tuple.len().max(2));
    let w = RowTuple::new(tuple, rank)?;
    if let Some(mu) = mu {
        if w.mu()? != mu {
            return Err(Failure::Usage(format!("{w} does not have content {mu}")));
        }
    }
    Ok((w, None))
}

fn cmd_rc_trace(w: &RowTuple, s: Option<usize>, format: Format) -> Outcome {
    let trace = psi_rc_traced(w)?;
    let last = trace.last().map(|step| step.rc.clone());
    match format {
        Format::Text => {
            let mut out = String::new();
            for step in &trace {
                writeln!(out, "{:>3}  {}  {}", step.i, step.w, step.rc).unwrap();
            }
            if let Some(rc) = &last {
                writeln!(out, "final  {rc}").unwrap();
                writeln!(out, "cocharge  {}", rc.cocharge()).unwrap();
                if let Some(s) = s.filter(|&s| s > 0) {
                    writeln!(out, "J+  {}", rc.j_plus(s)).unwrap();
                }
            }
            Ok(out)
        }
        Format::Json => {
            let steps: Vec<_> = trace
                .iter()
                .map(|step| json!({"i": step.i, "w": step.w.to_string(), "levels": step.levels()}))
                .collect();
            let j_plus = match (&last, s) {
                (Some(rc), Some(s)) if s > 0 => Some(rc.j_plus(s)),
                _ => None,
            };
            let doc = json!({
                "input": w.to_string(),
                "steps": steps,
                "final": last,
                "cocharge": last.as_ref().map(|rc| rc.cocharge()),
                "j_plus": j_plus,
            });
            Ok(format!("{}\n", serde_json::to_string_pretty(&doc)?))
        }
    }
}

fn cmd_crystal_graph(mu: &str, n: usize, format: GraphFormat) -> Outcome {
    if n < 2 {
        return Err(Failure::Usage(format!("rank n = {n}, need n >= 2")));
    }
    let mut elements = enumerate_b(&partition(mu)?, n)?;
    elements.sort();
    match format {
        GraphFormat::Dot => Ok(to_dot(&elements)),
        GraphFormat::Json => {
            let mut edges = Vec::new();
            for x in &elements {
                for i in 1..n {
                    if let Some(y) = x.f(i) {
                        edges.push(json!([x.to_string(), y.to_string(), i]));
                    }
                }
            }
            let nodes: Vec<String> = elements.iter().map(|x| x.to_string()).collect();
            Ok(format!("{}\n", serde_json::to_string(&json!({"nodes": nodes, "edges": edges}))?))
        }
    }
}

fn cmd_verify(suite: &str, max_n: Option<usize>, format: Format) -> Outcome {
    let report = verify(suite, max_n)?;
    let out = match format {
        Format::Json => format!("{}\n", serde_json::to_string(&report)?),
        Format::Text => {
            let mut out = format!(
                "{}: {} ({} cases)\n",
                report.suite,
                if report.passed() { "pass" } else { "FAIL" },
                report.cases
            );
            for f in &report.failures {
                writeln!(out, "  {f}").unwrap();
            }
            out
        }
    };
    if report.passed() {
        Ok(out)
    } else {
        Err(Failure::Identity(out))
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Kostka { lambda, mu, method, n, format } => cmd_kostka(&lambda, &mu, method, n, format),
        Command::Double { lp, lpp, mu, method, n, format } => cmd_double(&lp, &lpp, &mu, method, n, format),
        Command::Fermionic { shape, mu, n, route, format } => cmd_fermionic(&shape, &mu, n, route, format),
        Command::Onedsum { shape, mu, n, format } => cmd_onedsum(&shape, &mu, n, format),
        Command::RcTrace { input, format } => {
            let (w, s) = trace_input(&input)?;
            cmd_rc_trace(&w, s, format)
        }
        Command::CrystalGraph { mu, n, format } => cmd_crystal_graph(&mu, n, format),
        Command::Verify { suite, max_n, format } => cmd_verify(&suite, max_n, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = std::env::var("XKOSTKA_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().ok();
    }
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Identity(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
