//! Dispatch, instance families and parallel sweeps with JSON-lines reports.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::connectivity::{is_k_connected, is_strongly_connected};
use crate::digraph_finder::{find_nonsep_oriented_double_star_traced, find_nonsep_oriented_star_traced, Run};
use crate::error::{Error, Result, Witness};
use crate::generate::{gen_blob_graph, gen_clique_ring_digraph, gen_random_digraph, gen_random_graph};
use crate::graph::{AnyGraph, Digraph, DigraphBuilder, Graph};
use crate::graph_finder::{find_nonsep_double_star_k2, find_nonsep_path, find_nonsep_star_k2, find_path_shape_traced};
use crate::oracle::{exists_in_family, verify_nonseparating};
use crate::shapes::{Embedding, ShapeKind, ShapeSpec};

/// Connectivity a finder keeps by default: 1 (strong) for digraphs, 2 otherwise.
pub fn default_k(spec: &ShapeSpec) -> usize {
    if spec.is_directed() {
        1
    } else {
        2
    }
}

/// Minimum (semi-)degree under which the finder for `spec` is guaranteed to
/// succeed.
pub fn guaranteed_degree(spec: &ShapeSpec, k: usize) -> usize {
    match spec.kind {
        _ if spec.is_directed() => spec.m + 1,
        ShapeKind::Path => 3 * k / 2 + spec.m - 1,
        _ => spec.m + 2,
    }
}

fn supported_k(spec: &ShapeSpec, k: usize) -> Result<()> {
    let ok = match spec.kind {
        _ if spec.is_directed() => k == 1,
        ShapeKind::Path => k >= 1,
        _ => k == 2,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Input(format!("no finder for {spec} with k = {k}")))
    }
}

/// Checks the finder's preconditions for `spec` on `host`.
pub fn check_preconditions(host: &AnyGraph, spec: &ShapeSpec, k: usize) -> Result<()> {
    spec.validate()?;
    supported_k(spec, k)?;
    let need = guaranteed_degree(spec, k);
    match host {
        AnyGraph::Directed(d) => {
            if !spec.is_directed() {
                return Err(Error::Input(format!("{spec} needs an undirected host")));
            }
            if !is_strongly_connected(d) {
                return Err(Error::Precondition("digraph is not strongly connected".into()));
            }
            let delta = d.semi_degree()?;
            if delta < need {
                return Err(Error::Precondition(format!(
                    "minimum semi-degree {delta} is below {need}"
                )));
            }
            if d.order() < spec.m + 2 {
                return Err(Error::Precondition(format!("need at least {} vertices", spec.m + 2)));
            }
        }
        AnyGraph::Undirected(g) => {
            if spec.is_directed() {
                return Err(Error::Input(format!("{spec} needs a directed host")));
            }
            if !is_k_connected(g, k) {
                return Err(Error::Precondition(format!("graph is not {k}-connected")));
            }
            let delta = g.min_degree()?;
            if delta < need {
                return Err(Error::Precondition(format!("minimum degree {delta} is below {need}")));
            }
        }
    }
    Ok(())
}

/// A finder result with a printable trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub tree: Embedding,
    /// Improvement steps (digraphs) or construction branches (path shapes).
    pub iterations: usize,
    pub trace: Vec<String>,
}

fn from_run(run: Run) -> Solution {
    Solution {
        iterations: run.iterations(),
        trace: run.trace.iter().map(|e| format!("{}:{}", e.case, e.b_size)).collect(),
        tree: run.tree,
    }
}

fn searched(tree: Embedding) -> Solution {
    Solution {
        tree,
        iterations: 0,
        trace: Vec::new(),
    }
}

/// Runs the finder for `spec` on `host`. `k` defaults to [`default_k`].
pub fn solve(host: &AnyGraph, spec: &ShapeSpec, k: Option<usize>) -> Result<Solution> {
    let k = k.unwrap_or_else(|| default_k(spec));
    check_preconditions(host, spec, k)?;
    let m = spec.m;
    match host {
        AnyGraph::Directed(d) => match spec.kind {
            ShapeKind::OutStar | ShapeKind::InStar => Ok(from_run(find_nonsep_oriented_star_traced(d, m)?)),
            _ => Ok(from_run(find_nonsep_oriented_double_star_traced(d, m, spec.r, spec.s)?)),
        },
        AnyGraph::Undirected(g) => match spec.kind {
            ShapeKind::Star => Ok(searched(find_nonsep_star_k2(g, m)?)),
            ShapeKind::DoubleStar => Ok(searched(find_nonsep_double_star_k2(g, m, spec.r)?)),
            ShapeKind::Path => Ok(searched(find_nonsep_path(g, m, k)?)),
            _ => {
                let run = find_path_shape_traced(g, spec)?;
                Ok(Solution {
                    iterations: run.trace.len(),
                    trace: run.trace.iter().map(|s| format!("{}@{}", s.case, s.depth)).collect(),
                    tree: run.tree,
                })
            }
        },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Found,
    PreconditionFailed,
    NotFound,
    Contradiction,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Found => "found",
            Outcome::PreconditionFailed => "precondition-failed",
            Outcome::NotFound => "not-found",
            Outcome::Contradiction => "contradiction",
        })
    }
}

/// Instance generators a sweep can draw from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `gen_random_graph` / `gen_random_digraph`, matching the shape.
    Random,
    /// Cliques hung on a core clique (undirected) or a ring of cliques
    /// (directed): many minimum separators.
    Blocks,
    /// Circulants listed in order of n, then jump set; only jump sets whose
    /// (semi-)degree is `delta` or, undirected, `delta + 1` are kept.
    Enumerated,
    /// Hosts listed by name in `hosts`.
    Named,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepConfig {
    pub family: Family,
    pub instances: usize,
    pub n_min: usize,
    pub n_max: usize,
    /// Shape specs; instance `i` uses `shapes[i % len]`.
    pub shapes: Vec<String>,
    /// Host names for the named family, e.g. `complete:8`, `circulant:13:1,2,3,4`.
    pub hosts: Vec<String>,
    pub seed: u64,
    /// Minimum (semi-)degree; defaults to the guaranteed bound of each shape.
    pub delta: Option<usize>,
    pub k: Option<usize>,
    /// Generate one degree below the guaranteed bound and decide existence
    /// with the brute-force oracle.
    pub probe: bool,
    pub jobs: usize,
    /// Where not-found and contradiction instances are written.
    pub witness_dir: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            family: Family::Random,
            instances: 0,
            n_min: 8,
            n_max: 20,
            shapes: Vec::new(),
            hosts: Vec::new(),
            seed: 0,
            delta: None,
            k: None,
            probe: false,
            jobs: 1,
            witness_dir: None,
        }
    }
}

/// Largest host the oracle is asked about in probe mode.
pub const PROBE_MAX_N: usize = 14;

impl SweepConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })
    }

    fn parsed_shapes(&self) -> Result<Vec<ShapeSpec>> {
        self.shapes.iter().map(|s| s.parse()).collect()
    }

    pub fn validate(&self) -> Result<()> {
        let shapes = self.parsed_shapes()?;
        if self.instances > 0 && shapes.is_empty() {
            return Err(Error::Input("sweep needs at least one shape".into()));
        }
        if self.n_min > self.n_max {
            return Err(Error::Input(format!(
                "n_min {} exceeds n_max {}",
                self.n_min, self.n_max
            )));
        }
        if self.jobs == 0 {
            return Err(Error::Input("jobs must be at least 1".into()));
        }
        if self.family == Family::Named {
            if self.instances > 0 && self.hosts.is_empty() {
                return Err(Error::Input("named family needs hosts".into()));
            }
            for h in &self.hosts {
                named_host(h)?;
            }
        }
        if self.probe && self.n_max > PROBE_MAX_N {
            return Err(Error::Input(format!("probe mode needs n_max ≤ {PROBE_MAX_N}")));
        }
        for spec in &shapes {
            supported_k(spec, self.k.unwrap_or_else(|| default_k(spec)))?;
        }
        Ok(())
    }
}

fn parse_usize(field: &str, name: &str) -> Result<usize> {
    field
        .parse()
        .map_err(|_| Error::Input(format!("host `{name}`: bad number `{field}`")))
}

fn directed_circulant(n: usize, jumps: &[usize]) -> Digraph {
    let mut b = DigraphBuilder::new(n);
    for v in 0..n {
        for &j in jumps {
            if j % n != 0 {
                b.add_arc_if_absent(v, (v + j) % n);
            }
        }
    }
    b.build()
}

/// Host by name: `complete:n`, `cycle:n`, `path:n`, `wheel:rim`,
/// `bipartite:a:b`, `circulant:n:j1,j2,…`, `petersen`, and the digraphs
/// `dcomplete:n`, `dcycle:n`, `dcirculant:n:j1,j2,…`.
pub fn named_host(name: &str) -> Result<AnyGraph> {
    let parts: Vec<&str> = name.split(':').collect();
    let num = |i: usize| {
        parts
            .get(i)
            .ok_or_else(|| Error::Input(format!("host `{name}` is missing a field")))
            .and_then(|f| parse_usize(f, name))
    };
    let jumps = || -> Result<Vec<usize>> {
        parts
            .get(2)
            .ok_or_else(|| Error::Input(format!("host `{name}` needs jumps")))?
            .split(',')
            .map(|f| parse_usize(f, name))
            .collect()
    };
    let host: AnyGraph = match parts[0] {
        "complete" => Graph::complete(num(1)?).into(),
        "cycle" => Graph::cycle(num(1)?).into(),
        "path" => Graph::path(num(1)?).into(),
        "wheel" => Graph::wheel(num(1)?).into(),
        "bipartite" => Graph::complete_bipartite(num(1)?, num(2)?).into(),
        "circulant" => Graph::circulant(num(1)?, &jumps()?).into(),
        "petersen" => Graph::petersen().into(),
        "dcomplete" => Digraph::complete(num(1)?).into(),
        "dcycle" => Digraph::cycle(num(1)?).into(),
        "dcirculant" => directed_circulant(num(1)?, &jumps()?).into(),
        other => return Err(Error::Input(format!("unknown host family `{other}`"))),
    };
    Ok(host)
}

/// One line of a sweep report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceReport {
    pub id: usize,
    pub seed: u64,
    pub host: String,
    pub n: usize,
    pub shape: String,
    pub k: usize,
    /// The finder's preconditions hold on this host.
    pub preconditions: bool,
    pub outcome: Outcome,
    pub tree: Option<Embedding>,
    pub iterations: usize,
    pub trace: Vec<String>,
    /// Oracle verdict on the returned tree.
    pub verified: Option<bool>,
    pub message: Option<String>,
    pub wall_ms: f64,
}

impl InstanceReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

struct Bounds {
    k: usize,
    delta: usize,
    lo: usize,
    hi: usize,
}

fn bounds(config: &SweepConfig, spec: &ShapeSpec) -> Bounds {
    let k = config.k.unwrap_or_else(|| default_k(spec));
    let bound = guaranteed_degree(spec, k);
    let delta = match (config.delta, config.probe) {
        (Some(d), _) => d,
        (None, true) => bound - 1,
        (None, false) => bound,
    };
    // probe mode relaxes the degree only, not the order the bound implies
    let lo = config.n_min.max(delta.max(bound) + 1).max(spec.m + 2);
    Bounds {
        k,
        delta,
        lo,
        hi: config.n_max.max(lo),
    }
}

/// The first `limit` circulants of the enumerated family for `spec`.
pub fn enumerated_circulants(config: &SweepConfig, spec: &ShapeSpec, limit: usize) -> Vec<(usize, Vec<usize>)> {
    let Bounds { delta, lo, hi, .. } = bounds(config, spec);
    let directed = spec.is_directed();
    let mut out = Vec::new();
    for n in lo..=hi {
        let top = if directed { n - 1 } else { n / 2 };
        let degree =
            |jumps: &[usize]| -> usize { jumps.iter().map(|&j| if directed || 2 * j == n { 1 } else { 2 }).sum() };
        for size in 1..=top.min(delta + 1) {
            for jumps in (1..=top).combinations(size) {
                let d = degree(&jumps);
                if d == delta || (!directed && d == delta + 1) {
                    if out.len() == limit {
                        return out;
                    }
                    out.push((n, jumps));
                }
            }
        }
    }
    out
}

/// Host for instance `id`, a short description of it, and its seed.
pub fn build_instance(config: &SweepConfig, spec: &ShapeSpec, id: usize) -> Result<(AnyGraph, String, u64)> {
    let seed = config.seed.wrapping_add(id as u64);
    let Bounds { k, delta, lo, hi } = bounds(config, spec);
    let n = ChaCha8Rng::seed_from_u64(seed).gen_range(lo..=hi);
    let directed = spec.is_directed();
    let host: (AnyGraph, String) = match config.family {
        Family::Random if directed => (
            gen_random_digraph(n, delta, seed)?.into(),
            format!("random-digraph:{n}:{delta}"),
        ),
        Family::Random => (
            gen_random_graph(n, delta, k, seed)?.into(),
            format!("random-graph:{n}:{delta}:{k}"),
        ),
        Family::Blocks if directed => {
            let size = delta + 1;
            let blocks = (n / size).max(2);
            let links = 1 + seed as usize % size;
            (
                gen_clique_ring_digraph(blocks, size, links, seed)?.into(),
                format!("clique-ring:{blocks}:{size}:{links}"),
            )
        }
        Family::Blocks => {
            let core = delta + 1;
            let blob = delta.saturating_sub(1).max(1);
            let blobs = (n.saturating_sub(core) / blob).max(1);
            (
                gen_blob_graph(core, blob, blobs, seed)?.into(),
                format!("blobs:{core}:{blob}:{blobs}"),
            )
        }
        Family::Enumerated => {
            let index = id / config.shapes.len().max(1);
            let (n, jumps) = enumerated_circulants(config, spec, index + 1)
                .into_iter()
                .nth(index)
                .ok_or_else(|| Error::Input(format!("enumerated family has fewer than {} hosts", index + 1)))?;
            let text = jumps.iter().map(|j| j.to_string()).join(",");
            if directed {
                (directed_circulant(n, &jumps).into(), format!("dcirculant:{n}:{text}"))
            } else {
                (Graph::circulant(n, &jumps).into(), format!("circulant:{n}:{text}"))
            }
        }
        Family::Named => {
            let name = &config.hosts[id % config.hosts.len()];
            (named_host(name)?, name.clone())
        }
    };
    Ok((host.0, host.1, seed))
}

fn outcome_of(e: &Error) -> Outcome {
    match e {
        Error::Precondition(_) | Error::Input(_) | Error::NoSeparatingSet | Error::Parse { .. } => {
            Outcome::PreconditionFailed
        }
        Error::NotFound(_) => Outcome::NotFound,
        Error::Contradiction(_) => Outcome::Contradiction,
    }
}

/// Runs one instance: finder (finder mode) or oracle (probe mode), with
/// the result re-verified by the oracle.
pub fn run_instance(config: &SweepConfig, spec: &ShapeSpec, id: usize) -> (InstanceReport, Option<AnyGraph>) {
    let start = Instant::now();
    let k = config.k.unwrap_or_else(|| default_k(spec));
    let mut report = InstanceReport {
        id,
        seed: config.seed.wrapping_add(id as u64),
        host: String::new(),
        n: 0,
        shape: spec.to_string(),
        k,
        preconditions: false,
        outcome: Outcome::PreconditionFailed,
        tree: None,
        iterations: 0,
        trace: Vec::new(),
        verified: None,
        message: None,
        wall_ms: 0.0,
    };
    let host = match build_instance(config, spec, id) {
        Ok((host, name, _)) => {
            report.host = name;
            report.n = host_order(&host);
            host
        }
        Err(e) => {
            report.message = Some(e.to_string());
            report.wall_ms = start.elapsed().as_secs_f64() * 1e3;
            return (report, None);
        }
    };
    report.preconditions = check_preconditions(&host, spec, k).is_ok();
    let result = if config.probe && !report.preconditions {
        match exists_in_family(&host, spec, k) {
            Ok(Some(tree)) => Ok(searched(tree)),
            Ok(None) => Err(Error::NotFound(Box::new(Witness::new(
                format!("no nonseparating member of {spec}'s family"),
                host.to_edge_list(),
                format!("k = {k}, below the guaranteed degree"),
            )))),
            Err(e) => Err(e),
        }
    } else {
        solve(&host, spec, Some(k))
    };
    match result {
        Ok(sol) => {
            let verdict = verify_nonseparating(&host, &sol.tree, k).unwrap_or(false);
            report.verified = Some(verdict);
            report.outcome = if verdict {
                Outcome::Found
            } else {
                Outcome::Contradiction
            };
            if !verdict {
                report.message = Some(format!("oracle rejects {}", sol.tree));
            }
            report.iterations = sol.iterations;
            report.trace = sol.trace;
            report.tree = Some(sol.tree);
        }
        Err(e) => {
            report.outcome = outcome_of(&e);
            report.message = Some(e.to_string());
        }
    }
    report.wall_ms = start.elapsed().as_secs_f64() * 1e3;
    (report, Some(host))
}

fn host_order(host: &AnyGraph) -> usize {
    match host {
        AnyGraph::Undirected(g) => g.order(),
        AnyGraph::Directed(d) => d.order(),
    }
}

/// Writes a replayable witness file for a not-found or contradiction report.
pub fn write_witness(dir: &Path, report: &InstanceReport, host: &AnyGraph) -> Result<PathBuf> {
    fs::create_dir_all(dir).map_err(|e| Error::Input(format!("{}: {e}", dir.display())))?;
    let path = dir.join(format!("{:05}-{}.txt", report.id, report.outcome));
    let w = Witness::new(
        report.message.clone().unwrap_or_default(),
        host.to_edge_list(),
        format!(
            "shape {} k {} host {} seed {}",
            report.shape, report.k, report.host, report.seed
        ),
    );
    fs::write(&path, w.to_text()).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    Ok(path)
}

/// One report per instance, in instance order regardless of `jobs`. The
/// enumerated family stops early when it runs out of hosts.
pub fn sweep(config: &SweepConfig) -> Result<Vec<InstanceReport>> {
    config.validate()?;
    let shapes = config.parsed_shapes()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::Input(format!("worker pool: {e}")))?;
    let ids: Vec<usize> = match config.family {
        Family::Enumerated => {
            let per_shape = config.instances.div_ceil(shapes.len());
            let available: Vec<usize> = shapes
                .iter()
                .map(|spec| enumerated_circulants(config, spec, per_shape).len())
                .collect();
            (0..config.instances)
                .filter(|id| id / shapes.len() < available[id % shapes.len()])
                .collect()
        }
        _ => (0..config.instances).collect(),
    };
    let results: Vec<_> = pool.install(|| {
        ids.into_par_iter()
            .map(|id| run_instance(config, &shapes[id % shapes.len()], id))
            .collect()
    });
    let mut reports = Vec::with_capacity(results.len());
    for (report, host) in results {
        if let (Some(dir), Some(host)) = (&config.witness_dir, &host) {
            if matches!(report.outcome, Outcome::NotFound | Outcome::Contradiction) {
                write_witness(dir, &report, host)?;
            }
        }
        reports.push(report);
    }
    Ok(reports)
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub instances: usize,
    pub found: usize,
    pub precondition_failed: usize,
    pub not_found: usize,
    pub contradiction: usize,
    /// Instances whose host met the finder's preconditions.
    pub eligible: usize,
    /// Found among eligible instances.
    pub eligible_found: usize,
    pub max_wall_ms: f64,
}

impl Summary {
    /// Share of eligible instances solved; 1 when none are eligible.
    pub fn success_rate(&self) -> f64 {
        if self.eligible == 0 {
            1.0
        } else {
            self.eligible_found as f64 / self.eligible as f64
        }
    }
}

pub fn summarize(reports: &[InstanceReport]) -> Summary {
    let mut s = Summary {
        instances: reports.len(),
        ..Summary::default()
    };
    for r in reports {
        match r.outcome {
            Outcome::Found => s.found += 1,
            Outcome::PreconditionFailed => s.precondition_failed += 1,
            Outcome::NotFound => s.not_found += 1,
            Outcome::Contradiction => s.contradiction += 1,
        }
        if r.preconditions {
            s.eligible += 1;
            if r.outcome == Outcome::Found {
                s.eligible_found += 1;
            }
        }
        s.max_wall_ms = s.max_wall_ms.max(r.wall_ms);
    }
    s
}
