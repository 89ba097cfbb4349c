//! Runs algorithm x instance x seed grids under per-run wall-clock limits.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Duration, Instant};

use mps_core::budget::{Budget, Interrupted};
use mps_core::exact::{exact_skewness, ExactStatus};
use mps_core::generate::{Family, GeneratorSpec};
use mps_core::heuristics::{self, Algorithm, DEFAULT_RESTARTS};
use mps_core::io::read_graph;
use mps_core::planarize::Planarization;
use mps_core::rng::rng_from_seed;
use mps_core::{EdgeId, EdgeSet, Graph};
use rayon::prelude::*;
use thiserror::Error;

use crate::record::{BenchmarkRecord, Status};

/// Worker count variable read by [`workers_from_env`].
pub const WORKERS_VAR: &str = "MPS_WORKERS";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("time limit must be positive")]
    ZeroTimeLimit,
    #[error("restarts must be positive")]
    ZeroRestarts,
    #[error("bad seed list `{0}` (use e.g. 0..20 or 1,4,9)")]
    Seeds(String),
    #[error("bad instance grid `{0}` (use family:n:density:seeds, e.g. regular:100:3:0..20)")]
    Grid(String),
    #[error("unknown method `{0}`")]
    Method(String),
    #[error("{WORKERS_VAR} must be a positive integer, got `{0}`")]
    Workers(String),
}

/// What a benchmark cell runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Heuristic(Algorithm),
    /// Branch-and-bound seeded with the C+ subgraph of the same seed.
    Exact,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::Heuristic(a) => a.label(),
            Method::Exact => "exact",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Method {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("exact") {
            return Ok(Method::Exact);
        }
        s.parse()
            .map(Method::Heuristic)
            .map_err(|_| ConfigError::Method(s.to_string()))
    }
}

/// Comma-separated method list; empty input gives an empty list.
pub fn parse_methods(s: &str) -> Result<Vec<Method>, ConfigError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

/// Seeds as a comma-separated mix of values and half-open ranges `a..b`.
pub fn parse_seeds(s: &str) -> Result<Vec<u64>, ConfigError> {
    let bad = || ConfigError::Seeds(s.to_string());
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match part.split_once("..") {
            Some((a, b)) => {
                let a: u64 = a.trim().parse().map_err(|_| bad())?;
                let b: u64 = b.trim().parse().map_err(|_| bad())?;
                out.extend(a..b);
            }
            None => out.push(part.parse().map_err(|_| bad())?),
        }
    }
    Ok(out)
}

/// Generator grid `family:n:density:seeds`, one spec per seed.
pub fn parse_grid(s: &str) -> Result<Vec<GeneratorSpec>, ConfigError> {
    let bad = || ConfigError::Grid(s.to_string());
    let parts: Vec<&str> = s.split(':').collect();
    let [family, n, density, seeds] = parts[..] else {
        return Err(bad());
    };
    let family: Family = family.parse().map_err(|_| bad())?;
    let n = n.parse().map_err(|_| bad())?;
    let density = density.parse().map_err(|_| bad())?;
    let seeds = parse_seeds(seeds).map_err(|_| bad())?;
    Ok(seeds
        .into_iter()
        .map(|seed| GeneratorSpec { family, n, density, seed })
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub enum InstanceSource {
    /// Graph file; the set label defaults to the parent directory name.
    File { path: PathBuf, set: Option<String> },
    Generated(GeneratorSpec),
    /// A graph already in memory.
    Inline { name: String, set: String, graph: Graph },
}

impl InstanceSource {
    pub fn name(&self) -> String {
        match self {
            InstanceSource::File { path, .. } => path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string()),
            InstanceSource::Generated(spec) => spec.name(),
            InstanceSource::Inline { name, .. } => name.clone(),
        }
    }

    pub fn set(&self) -> String {
        match self {
            InstanceSource::File { set: Some(s), .. } => s.clone(),
            InstanceSource::File { path, set: None } => path
                .parent()
                .and_then(|p| p.file_name())
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "files".to_string()),
            InstanceSource::Generated(spec) => spec.family.to_string(),
            InstanceSource::Inline { set, .. } => set.clone(),
        }
    }

    pub fn load(&self) -> Result<Graph, String> {
        match self {
            InstanceSource::File { path, .. } => read_graph(path, None).map_err(|e| e.to_string()),
            InstanceSource::Generated(spec) => spec.generate().map_err(|e| e.to_string()),
            InstanceSource::Inline { graph, .. } => Ok(graph.clone()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub instances: Vec<InstanceSource>,
    pub methods: Vec<Method>,
    pub seeds: Vec<u64>,
    pub time_limit: Duration,
    pub restarts: usize,
    /// Also insert the remaining edges into the computed subgraph and
    /// record the crossing count.
    pub planarize: bool,
    pub workers: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            instances: Vec::new(),
            methods: Vec::new(),
            seeds: vec![0],
            time_limit: Duration::from_secs(60),
            restarts: DEFAULT_RESTARTS,
            planarize: false,
            workers: 1,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.time_limit.is_zero() {
            return Err(ConfigError::ZeroTimeLimit);
        }
        if self.restarts == 0 {
            return Err(ConfigError::ZeroRestarts);
        }
        Ok(())
    }
}

/// Worker count from `MPS_WORKERS`, defaulting to one so runtimes are not
/// distorted by contention.
pub fn workers_from_env() -> Result<usize, ConfigError> {
    match std::env::var(WORKERS_VAR) {
        Err(_) => Ok(1),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(k) if k > 0 => Ok(k),
            _ => Err(ConfigError::Workers(v)),
        },
    }
}

struct Outcome {
    kept: Option<usize>,
    status: Status,
    crossings: Option<usize>,
}

fn timeout(kept: Option<usize>) -> Outcome {
    Outcome {
        kept,
        status: Status::Timeout,
        crossings: None,
    }
}

fn subgraph_for(method: Method, g: &Graph, seed: u64, cfg: &SuiteConfig, budget: &Budget, start: Instant) -> Result<(EdgeSet, bool), Option<usize>> {
    match method {
        Method::Heuristic(a) => heuristics::run(a, g, seed, cfg.restarts, budget)
            .map(|r| (r.kept, true))
            .map_err(|Interrupted| None),
        Method::Exact => {
            let start_set = heuristics::run(Algorithm::CactusPlus, g, seed, 1, budget)
                .map_err(|Interrupted| None)?
                .kept;
            let left = cfg.time_limit.saturating_sub(start.elapsed()).as_millis() as u64;
            if left == 0 {
                return Err(Some(start_set.len()));
            }
            let r = exact_skewness(g, left, Some(&start_set)).expect("limit positive and incumbent planar");
            Ok((r.optimal_kept, r.status == ExactStatus::Optimal))
        }
    }
}

/// Crossings of the fixed-embedding insertion of all other edges, or
/// `Err` when the budget ran out.
pub fn crossings_within(g: &Graph, kept: &EdgeSet, seed: u64, budget: &Budget) -> Result<usize, Interrupted> {
    use rand::seq::SliceRandom;
    let mut p = Planarization::new(g, kept).expect("subgraph algorithms return planar sets");
    let mut rest: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| !kept.contains(e)).collect();
    rest.shuffle(&mut rng_from_seed(seed));
    for e in rest {
        budget.check()?;
        let (u, v) = g.endpoints(e);
        p.insert(e, u, v);
    }
    Ok(p.dummy_count())
}

fn run_cell(g: &Graph, method: Method, seed: u64, cfg: &SuiteConfig) -> (Outcome, f64) {
    let start = Instant::now();
    let budget = Budget::with_limit(cfg.time_limit);
    let mut outcome = match subgraph_for(method, g, seed, cfg, &budget, start) {
        Err(kept) => timeout(kept),
        Ok((kept, false)) => timeout(Some(kept.len())),
        Ok((kept, true)) => {
            if cfg.planarize {
                match crossings_within(g, &kept, seed, &budget) {
                    Ok(c) => Outcome {
                        kept: Some(kept.len()),
                        status: Status::Ok,
                        crossings: Some(c),
                    },
                    Err(Interrupted) => timeout(Some(kept.len())),
                }
            } else {
                Outcome {
                    kept: Some(kept.len()),
                    status: Status::Ok,
                    crossings: None,
                }
            }
        }
    };
    let elapsed = start.elapsed();
    if elapsed > cfg.time_limit {
        outcome.status = Status::Timeout;
    }
    (outcome, elapsed.as_secs_f64() * 1000.0)
}

/// One record per (instance, method, seed), sorted by set, instance,
/// method label and seed.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<BenchmarkRecord>, ConfigError> {
    cfg.validate()?;
    if cfg.methods.is_empty() || cfg.seeds.is_empty() {
        return Ok(Vec::new());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers.max(1))
        .build()
        .expect("thread pool");
    let loaded: Vec<(String, String, Result<Graph, String>)> = pool.install(|| {
        cfg.instances
            .par_iter()
            .map(|src| (src.name(), src.set(), src.load()))
            .collect()
    });
    for (name, _, graph) in &loaded {
        if let Err(msg) = graph {
            eprintln!("skipping {name}: {msg}");
        }
    }
    let cells: Vec<(usize, Method, u64)> = (0..loaded.len())
        .flat_map(|i| cfg.methods.iter().flat_map(move |&m| cfg.seeds.iter().map(move |&s| (i, m, s))))
        .collect();
    let mut records: Vec<BenchmarkRecord> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(i, method, seed)| {
                let (instance, set, graph) = &loaded[i];
                let mut rec = BenchmarkRecord {
                    instance: instance.clone(),
                    set: set.clone(),
                    n: None,
                    m: None,
                    algorithm: method.label().to_string(),
                    seed,
                    edges_kept: None,
                    runtime_ms: 0.0,
                    status: Status::Error,
                    crossings: None,
                };
                if let Ok(g) = graph {
                    let (out, ms) = run_cell(g, method, seed, cfg);
                    rec.n = Some(g.vertex_count());
                    rec.m = Some(g.edge_count());
                    rec.edges_kept = out.kept;
                    rec.status = out.status;
                    rec.crossings = out.crossings;
                    rec.runtime_ms = ms;
                }
                rec
            })
            .collect()
    });
    records.sort_by(|a, b| a.key().cmp(&b.key()));
    Ok(records)
}

/// Whether every record finished.
pub fn all_ok(records: &[BenchmarkRecord]) -> bool {
    records.iter().all(|r| r.status == Status::Ok)
}
