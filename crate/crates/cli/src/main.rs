use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use otsym::graph::{self, format_poly, Graph};
use otsym::recursion::{ch_ot_truncated, natural_cap, now_unix, MnCache, RecursionOptions};
use otsym::rep;
use otsym::store::{CacheDoc, Store, StoreError};
use otsym::verifier::{run_suite, Check};
use otsym::{Error, SymFunc};

mod emit;

use emit::Format;

#[derive(Parser)]
#[command(name = "otsym", version, about = "Graded symmetric-group characters of Orlik-Terao algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one graded Frobenius characteristic.
    Compute(ComputeArgs),
    /// Run the identity checks and print one JSON report per line.
    Verify(VerifyArgs),
    /// f- and h-polynomials of graphical arrangements.
    Graph(GraphArgs),
    /// Inspect or clear the on-disk cache.
    Cache(CacheArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Quantity {
    #[value(name = "M")]
    M,
    #[value(name = "OT")]
    Ot,
    #[value(name = "C")]
    C,
    #[value(name = "D")]
    D,
    #[value(name = "R")]
    R,
    #[value(name = "W")]
    W,
    Lyndon,
    Cyclic,
}

impl Quantity {
    fn key(self) -> &'static str {
        match self {
            Quantity::M => "M",
            Quantity::Ot => "OT",
            Quantity::C => "C",
            Quantity::D => "D",
            Quantity::R => "R",
            Quantity::W => "W",
            Quantity::Lyndon => "lyndon",
            Quantity::Cyclic => "cyclic",
        }
    }

    fn default_cap(self, n: usize) -> usize {
        match self {
            Quantity::M | Quantity::Ot => natural_cap(n),
            _ => n.saturating_sub(1),
        }
    }
}

#[derive(Args)]
struct CacheDirArgs {
    /// Cache directory [default: the platform data directory]
    #[arg(long, env = "OTSYM_CACHE")]
    cache_dir: Option<PathBuf>,
    /// Neither read nor write the cache.
    #[arg(long)]
    no_cache: bool,
}

impl CacheDirArgs {
    fn store(&self) -> Result<Option<Store>, Failure> {
        if self.no_cache {
            return Ok(None);
        }
        Store::open(cache_dir(&self.cache_dir)?).map(Some).map_err(Failure::from)
    }
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long, value_enum)]
    what: Quantity,
    #[arg(long)]
    n: usize,
    /// Truncation degree in q [default: n-2 for M and OT, n-1 otherwise]
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[command(flatten)]
    cache: CacheDirArgs,
    /// Worker threads [default: all cores]
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    /// Comma-separated check names, or `all`.
    #[arg(long, default_value = "all")]
    checks: String,
    #[arg(long)]
    jobs: Option<usize>,
    #[command(flatten)]
    cache: CacheDirArgs,
}

#[derive(Args)]
struct GraphArgs {
    #[arg(value_enum)]
    action: GraphAction,
    /// Inline edge list such as `1-2,2-3`.
    #[arg(long, conflicts_with_all = ["file", "all_connected"])]
    edges: Option<String>,
    /// Edge-list file, one `i j` pair per line.
    #[arg(long, conflicts_with = "all_connected")]
    file: Option<PathBuf>,
    /// Every connected graph on 1..=N vertices.
    #[arg(long, value_name = "N")]
    all_connected: Option<usize>,
    /// Vertex count, for isolated trailing vertices.
    #[arg(long)]
    vertices: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GraphAction {
    Fpoly,
    Hpoly,
    ConeCheck,
}

#[derive(Args)]
struct CacheArgs {
    #[arg(value_enum)]
    action: CacheAction,
    #[arg(long, env = "OTSYM_CACHE")]
    cache_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CacheAction {
    List,
    Clear,
}

const MAX_ENUMERATED_VERTICES: usize = 7;

enum Failure {
    Usage(String),
    Checks(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Checks(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Internal(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidDegree { .. } | Error::CapTooLarge { .. } | Error::Graph(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Internal(e.to_string()),
        }
    }
}

impl From<StoreError> for Failure {
    fn from(e: StoreError) -> Self {
        Failure::Internal(e.to_string())
    }
}

fn cache_dir(flag: &Option<PathBuf>) -> Result<PathBuf, Failure> {
    match flag {
        Some(p) => Ok(p.clone()),
        None => dirs::data_dir()
            .map(|d| d.join("otsym"))
            .ok_or_else(|| Failure::Usage("no platform data directory; pass --cache-dir".into())),
    }
}

fn set_jobs(jobs: Option<usize>) -> Result<(), Failure> {
    match jobs {
        Some(0) => Err(Failure::Usage("--jobs must be at least 1".into())),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| Failure::Internal(e.to_string())),
        None => Ok(()),
    }
}

fn write_out(text: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    writeln!(out, "{text}")
        .and_then(|_| out.flush())
        .map_err(|e| Failure::Internal(format!("writing output: {e}")))
}

/// `ch M_1 .. ch M_up_to`, reading and refreshing the store when present.
fn m_cache(store: Option<&Store>, up_to: usize) -> Result<MnCache, Failure> {
    let mut cache = match store {
        Some(s) => s.load_mn_cache(up_to)?,
        None => MnCache::new(),
    };
    cache.extend_to(up_to, RecursionOptions::default())?;
    if let Some(s) = store {
        s.save_mn_cache(&cache)?;
    }
    Ok(cache)
}

fn compute_value(what: Quantity, n: usize, cap: usize, store: Option<&Store>) -> Result<SymFunc, Failure> {
    let value = match what {
        Quantity::M => {
            if cap > natural_cap(n) {
                return Err(Error::CapTooLarge {
                    n,
                    cap,
                    max: natural_cap(n),
                }
                .into());
            }
            let cache = m_cache(store, n)?;
            cache.get(n).expect("cache filled").truncate(cap)
        }
        Quantity::Ot => {
            if cap > natural_cap(n) {
                return Err(Error::CapTooLarge {
                    n,
                    cap,
                    max: natural_cap(n),
                }
                .into());
            }
            let cache = m_cache(store, n - 1)?;
            ch_ot_truncated(&cache, n, cap, RecursionOptions::default())?
        }
        Quantity::C => rep::ch_c(n, cap)?,
        Quantity::D => rep::ch_d(n, cap)?,
        Quantity::R => rep::ch_r(n, cap)?,
        Quantity::W => rep::ch_w(n, cap)?,
        Quantity::Lyndon => rep::lyndon(n, cap)?,
        Quantity::Cyclic => rep::ch_cyclic_triv(n)?.extend(cap),
    };
    Ok(value)
}

fn cmd_compute(args: ComputeArgs) -> Result<(), Failure> {
    if args.n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    set_jobs(args.jobs)?;
    let (what, n) = (args.what, args.n);
    let cap = args.cap.unwrap_or_else(|| what.default_cap(n));
    let store = args.cache.store()?;
    let key = what.key();
    let cached = match (&store, what) {
        (Some(s), q) if q != Quantity::M => s.load_value(key, n, cap)?,
        _ => None,
    };
    let value = match cached {
        Some(v) => v,
        None => {
            let v = compute_value(what, n, cap, store.as_ref())?;
            if let (Some(s), false) = (&store, what == Quantity::M) {
                let doc = CacheDoc::from_value(key, &v, now_unix(), false)
                    .map_err(Failure::Internal)?;
                s.save(&doc)?;
            }
            v
        }
    };
    let text = emit::render(&value, args.format).map_err(Failure::Internal)?;
    write_out(&text)
}

fn parse_checks(list: &str) -> Result<Vec<Check>, Failure> {
    if list.trim() == "all" {
        return Ok(Check::ALL.to_vec());
    }
    let mut out = Vec::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match Check::from_name(name) {
            Some(c) if !out.contains(&c) => out.push(c),
            Some(_) => {}
            None => {
                return Err(Failure::Usage(format!(
                    "unknown check `{name}`; valid checks: all, {}",
                    Check::names().join(", ")
                )))
            }
        }
    }
    if out.is_empty() {
        return Err(Failure::Usage("no checks selected".into()));
    }
    Ok(out)
}

/// Marks the stored `ch M_k` as trusted once the full suite has passed
/// through `n = 8`.
const TRUST_THRESHOLD: usize = 8;

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let checks = parse_checks(&args.checks)?;
    if args.max_n < 2 {
        return Err(Failure::Usage("--max-n must be at least 2".into()));
    }
    set_jobs(args.jobs)?;
    let store = args.cache.store()?;
    let mut cache = MnCache::new();
    let reports = run_suite(&mut cache, &checks, args.max_n, RecursionOptions::default())?;
    let mut out = String::new();
    for r in &reports {
        out.push_str(&r.to_json());
        out.push('\n');
    }
    io::stdout()
        .lock()
        .write_all(out.as_bytes())
        .map_err(|e| Failure::Internal(format!("writing output: {e}")))?;
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
    let all_checks = checks.len() == Check::ALL.len();
    if failed.is_empty() && all_checks && args.max_n >= TRUST_THRESHOLD {
        cache.mark_trusted();
    }
    if let Some(s) = &store {
        s.save_mn_cache(&cache)?;
    }
    eprintln!(
        "verify: {} reports for n = 2..={}, {} passed, {} failed",
        reports.len(),
        args.max_n,
        reports.len() - failed.len(),
        failed.len()
    );
    for r in &failed {
        eprintln!("  FAIL {} n={} ({} witnesses)", r.check, r.n, r.witnesses.len());
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Checks(format!("{} checks failed", failed.len())))
    }
}

fn read_graph(args: &GraphArgs) -> Result<Vec<Graph>, Failure> {
    if let Some(n) = args.all_connected {
        if n == 0 || n > MAX_ENUMERATED_VERTICES {
            return Err(Failure::Usage(format!(
                "--all-connected must be between 1 and {MAX_ENUMERATED_VERTICES}"
            )));
        }
        return Ok((1..=n).flat_map(graph::connected_graphs).collect());
    }
    let text = match (&args.edges, &args.file) {
        (Some(e), _) => e.clone(),
        (None, Some(path)) => fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => {
            return Err(Failure::Usage(
                "give a graph with --edges, --file or --all-connected".into(),
            ))
        }
    };
    Ok(vec![Graph::parse_edge_list(&text, args.vertices)?])
}

fn cmd_graph(args: GraphArgs) -> Result<(), Failure> {
    let graphs = read_graph(&args)?;
    let many = args.all_connected.is_some();
    let mut lines = Vec::new();
    let mut failures = 0usize;
    for g in &graphs {
        let line = match args.action {
            GraphAction::Fpoly => format_poly(&graph::f_polynomial(g)?),
            GraphAction::Hpoly => format_poly(&graph::h_polynomial(g)?),
            GraphAction::ConeCheck => {
                let f = graph::f_polynomial(g)?;
                let h = graph::h_polynomial(&g.cone()?)?;
                if f == h {
                    format!("pass: h(cone) = f = {}", format_poly(&f))
                } else {
                    failures += 1;
                    format!("fail: h(cone) = {}, f = {}", format_poly(&h), format_poly(&f))
                }
            }
        };
        if many && (args.action != GraphAction::ConeCheck || line.starts_with("fail")) {
            lines.push(format!("{g}: {line}"));
        } else if !many {
            lines.push(line);
        }
    }
    if many && args.action == GraphAction::ConeCheck {
        lines.push(format!(
            "cone-check: {} connected graphs, {} passed, {} failed",
            graphs.len(),
            graphs.len() - failures,
            failures
        ));
    }
    write_out(&lines.join("\n"))?;
    if failures > 0 {
        Err(Failure::Checks(format!("{failures} graphs failed the cone identity")))
    } else {
        Ok(())
    }
}

fn cmd_cache(args: CacheArgs) -> Result<(), Failure> {
    let store = Store::open(cache_dir(&args.cache_dir)?)?;
    match args.action {
        CacheAction::List => {
            let mut lines = Vec::new();
            for l in store.entries()? {
                let name = l.path.file_name().unwrap_or_default().to_string_lossy().into_owned();
                lines.push(match l.doc {
                    Ok(d) => format!(
                        "{name}\t{} n={} cap={} engine={} trusted={}",
                        d.quantity, d.n, d.cap, d.engine_version, d.trusted
                    ),
                    Err(e) => format!("{name}\tcorrupt: {e}"),
                });
            }
            if lines.is_empty() {
                lines.push(format!("cache at {} is empty", store.dir().display()));
            }
            write_out(&lines.join("\n"))
        }
        CacheAction::Clear => {
            let removed = store.clear()?;
            write_out(&format!("removed {removed} entries from {}", store.dir().display()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(a) => cmd_compute(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Graph(a) => cmd_graph(a),
        Command::Cache(a) => cmd_cache(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) => eprintln!("error: {m}"),
                Failure::Internal(m) => eprintln!("internal error: {m}"),
                Failure::Checks(m) => eprintln!("{m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
