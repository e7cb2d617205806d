use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use nonsep_core::error::Error;
use nonsep_core::generate::{gen_blob_graph, gen_clique_ring_digraph, gen_random_digraph, gen_random_graph};
use nonsep_core::graph::AnyGraph;
use nonsep_core::harness::{self, default_k, summarize, Family, Outcome, SweepConfig};
use nonsep_core::oracle::{exists_in_family, verify_nonseparating};
use nonsep_core::shapes::{Embedding, ShapeSpec};

/// Nonseparating stars, double-stars and path-trees.
///
/// Exit codes: 0 found and verified, 1 precondition failure, 2 not found,
/// 3 parse or config error, 4 internal contradiction.
#[derive(Parser)]
#[command(name = "nonsep", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the constructive finder on a host.
    Find(Query),
    /// Check a given vertex map against the host.
    Verify {
        #[command(flatten)]
        query: Query,
        /// Host vertices of the shape vertices, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        map: Vec<usize>,
    },
    /// Decide existence by brute force over the shape's family.
    Oracle(Query),
    /// Print a generated host as an edge list.
    Gen {
        #[arg(long, value_enum, default_value_t = GenKind::Graph)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        /// Minimum (semi-)degree; for blob and ring hosts, the clique size less one.
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a sweep and write one JSON report per line.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct Query {
    /// Edge-list file, `-` for stdin.
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    shape: ShapeSpec,
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Graph,
    Digraph,
    Blob,
    Ring,
}

#[derive(Args)]
struct SweepArgs {
    /// JSON config; flags given on the command line override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    #[arg(long)]
    instances: Option<usize>,
    /// Host order, `N` or `LO..HI`.
    #[arg(long)]
    n: Option<String>,
    /// Repeatable.
    #[arg(long)]
    shape: Vec<String>,
    /// Repeatable; for the named family.
    #[arg(long)]
    host: Vec<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    probe: bool,
    /// Report file; stdout when absent.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, default_value = "witnesses")]
    witness_dir: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Random,
    Blocks,
    Enumerated,
    Named,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Random => Family::Random,
            FamilyArg::Blocks => Family::Blocks,
            FamilyArg::Enumerated => Family::Enumerated,
            FamilyArg::Named => Family::Named,
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Precondition(_)) | Some(Error::NoSeparatingSet) => 1,
        Some(Error::NotFound(_)) => 2,
        Some(Error::Contradiction(_)) => 4,
        _ => 3,
    }
}

fn read_host(path: &Path) -> anyhow::Result<AnyGraph> {
    let text = if path == Path::new("-") {
        io::read_to_string(io::stdin()).context("reading stdin")?
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Ok(AnyGraph::parse_edge_list(&text)?)
}

fn print_tree(tree: &Embedding, verified: bool) {
    println!("shape: {}", tree.shape);
    println!(
        "map: {}",
        tree.map.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    );
    println!("verified: {verified}");
}

fn find(q: &Query) -> anyhow::Result<u8> {
    let host = read_host(&q.input)?;
    let k = q.k.unwrap_or_else(|| default_k(&q.shape));
    let sol = match harness::solve(&host, &q.shape, Some(k)) {
        Ok(sol) => sol,
        Err(e) => {
            if let Some(w) = e.witness() {
                eprintln!("{}", w.to_text());
            }
            return Err(e.into());
        }
    };
    let verified = verify_nonseparating(&host, &sol.tree, k)?;
    print_tree(&sol.tree, verified);
    if !sol.trace.is_empty() {
        println!("trace: {}", sol.trace.join(" "));
    }
    Ok(if verified { 0 } else { 4 })
}

fn verify(q: &Query, map: &[usize]) -> anyhow::Result<u8> {
    let host = read_host(&q.input)?;
    let k = q.k.unwrap_or_else(|| default_k(&q.shape));
    let tree = Embedding::new(q.shape, map.to_vec());
    let ok = verify_nonseparating(&host, &tree, k)?;
    println!("nonseparating: {ok}");
    Ok(if ok { 0 } else { 2 })
}

fn oracle(q: &Query) -> anyhow::Result<u8> {
    let host = read_host(&q.input)?;
    let k = q.k.unwrap_or_else(|| default_k(&q.shape));
    match exists_in_family(&host, &q.shape, k)? {
        Some(tree) => {
            print_tree(&tree, true);
            Ok(0)
        }
        None => {
            println!("none");
            Ok(2)
        }
    }
}

fn gen(kind: GenKind, n: usize, delta: usize, k: usize, seed: u64) -> anyhow::Result<u8> {
    let host: AnyGraph = match kind {
        GenKind::Graph => gen_random_graph(n, delta, k, seed)?.into(),
        GenKind::Digraph => gen_random_digraph(n, delta, seed)?.into(),
        GenKind::Blob => {
            let blob = delta.saturating_sub(1).max(1);
            gen_blob_graph(delta + 1, blob, n.saturating_sub(delta + 1) / blob, seed)?.into()
        }
        GenKind::Ring => gen_clique_ring_digraph((n / (delta + 1)).max(2), delta + 1, 1, seed)?.into(),
    };
    print!("{}", host.to_edge_list());
    Ok(0)
}

fn parse_range(text: &str) -> anyhow::Result<(usize, usize)> {
    let parse = |s: &str| s.trim().parse::<usize>().with_context(|| format!("bad order `{s}`"));
    match text.split_once("..") {
        Some((lo, hi)) => Ok((parse(lo)?, parse(hi)?)),
        None => {
            let n = parse(text)?;
            Ok((n, n))
        }
    }
}

fn sweep(a: &SweepArgs) -> anyhow::Result<u8> {
    let mut config = match &a.config {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            SweepConfig::from_json(&text)?
        }
        None => SweepConfig::default(),
    };
    if let Some(f) = a.family {
        config.family = f.into();
    }
    if let Some(i) = a.instances {
        config.instances = i;
    }
    if let Some(n) = &a.n {
        (config.n_min, config.n_max) = parse_range(n)?;
    }
    if !a.shape.is_empty() {
        config.shapes = a.shape.clone();
    }
    if !a.host.is_empty() {
        config.hosts = a.host.clone();
    }
    config.seed = a.seed.unwrap_or(config.seed);
    config.delta = a.delta.or(config.delta);
    config.k = a.k.or(config.k);
    config.jobs = a.jobs.unwrap_or(config.jobs);
    config.probe |= a.probe;
    if config.witness_dir.is_none() {
        config.witness_dir = Some(a.witness_dir.clone());
    }
    if a.config.is_none() && a.instances.is_none() {
        bail!(Error::Input("give --config or --instances".into()));
    }

    let reports = harness::sweep(&config)?;
    let mut out: Box<dyn Write> = match &a.output {
        Some(path) => Box::new(fs::File::create(path).with_context(|| format!("creating {}", path.display()))?),
        None => Box::new(io::stdout().lock()),
    };
    for r in &reports {
        writeln!(out, "{}", r.to_json_line())?;
    }
    out.flush()?;
    let summary = summarize(&reports);
    eprintln!("{}", serde_json::to_string(&summary)?);
    let failed = |o: Outcome| reports.iter().any(|r| r.preconditions && r.outcome == o);
    Ok(if summary.contradiction > 0 {
        4
    } else if !config.probe && failed(Outcome::NotFound) {
        2
    } else {
        0
    })
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match &cli.command {
        Command::Find(q) => find(q),
        Command::Verify { query, map } => verify(query, map),
        Command::Oracle(q) => oracle(q),
        &Command::Gen {
            kind,
            n,
            delta,
            k,
            seed,
        } => gen(kind, n, delta, k, seed),
        Command::Sweep(a) => sweep(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
