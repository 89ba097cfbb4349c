//! Planar subgraph heuristics: randomized naive insertion with restarts,
//! the edge-addition subgraph mode, the triangular cactus algorithm, and
//! the "plus" variants that grow a start subgraph to a maximal one.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use thiserror::Error;

use crate::budget::{Budget, Interrupted};
use crate::graph::{DisjointSets, EdgeId, EdgeSet, Graph, VertexId};
use crate::planarity::{edge_addition_subgraph, is_planar_edges};
use crate::rng::{derive_seed, rng_from_seed};

pub const DEFAULT_RESTARTS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeuristicError {
    #[error("start subgraph is not planar")]
    NonPlanarStart,
    #[error(transparent)]
    Interrupted(#[from] Interrupted),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Naive,
    Multistart,
    Bm,
    BmPlus,
    Cactus,
    CactusPlus,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Naive,
        Algorithm::Multistart,
        Algorithm::Bm,
        Algorithm::BmPlus,
        Algorithm::Cactus,
        Algorithm::CactusPlus,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Algorithm::Naive => "naive",
            Algorithm::Multistart => "multistart",
            Algorithm::Bm => "bm",
            Algorithm::BmPlus => "bm+",
            Algorithm::Cactus => "c",
            Algorithm::CactusPlus => "c+",
        }
    }

    /// Whether results are maximal by construction.
    pub fn is_maximal(self) -> bool {
        !matches!(self, Algorithm::Bm | Algorithm::Cactus)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown algorithm `{0}`")]
pub struct UnknownAlgorithm(pub String);

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        Ok(match lower.as_str() {
            "naive" | "n" => Algorithm::Naive,
            "multistart" | "ni" | "nm" => Algorithm::Multistart,
            "bm" => Algorithm::Bm,
            "bm+" | "bmplus" => Algorithm::BmPlus,
            "c" | "cactus" => Algorithm::Cactus,
            "c+" | "cplus" | "cactus+" => Algorithm::CactusPlus,
            _ => return Err(UnknownAlgorithm(s.to_string())),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubgraphResult {
    pub kept: EdgeSet,
    pub algorithm: Algorithm,
    pub seed: u64,
    pub runtime_ms: f64,
    /// No edge of the host can be added without losing planarity.
    pub maximal: bool,
}

impl SubgraphResult {
    pub fn edges_kept(&self) -> usize {
        self.kept.len()
    }

    /// Kept edges per vertex.
    pub fn density(&self, g: &Graph) -> f64 {
        if g.vertex_count() == 0 {
            0.0
        } else {
            self.kept.len() as f64 / g.vertex_count() as f64
        }
    }
}

/// Grows `start` by trying every other edge once, in an order fixed by
/// `seed`, keeping an edge whenever the result stays planar. The outcome is
/// inclusion-wise maximal: an edge rejected once stays rejected since its
/// rejection witness only gains edges.
pub fn grow_maximal(g: &Graph, start: &EdgeSet, seed: u64) -> Result<EdgeSet, HeuristicError> {
    grow_maximal_within(g, start, seed, &Budget::unlimited())
}

pub fn grow_maximal_within(
    g: &Graph,
    start: &EdgeSet,
    seed: u64,
    budget: &Budget,
) -> Result<EdgeSet, HeuristicError> {
    let n = g.vertex_count();
    let mut edges: Vec<(VertexId, VertexId)> = start.iter().map(|e| g.endpoints(e)).collect();
    if !is_planar_edges(n, &edges) {
        return Err(HeuristicError::NonPlanarStart);
    }
    let mut components = DisjointSets::new(n);
    for &(u, v) in &edges {
        components.union(u, v);
    }
    let mut order: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| !start.contains(e)).collect();
    order.shuffle(&mut rng_from_seed(seed));

    let mut kept = start.clone();
    for e in order {
        budget.check()?;
        let (u, v) = g.endpoints(e);
        // joining two components never breaks planarity
        if components.union(u, v) {
            kept.insert(e);
            edges.push((u, v));
            continue;
        }
        edges.push((u, v));
        if is_planar_edges(n, &edges) {
            kept.insert(e);
        } else {
            edges.pop();
        }
    }
    Ok(kept)
}

fn timed<F>(algorithm: Algorithm, seed: u64, f: F) -> Result<SubgraphResult, Interrupted>
where
    F: FnOnce() -> Result<EdgeSet, Interrupted>,
{
    let clock = Instant::now();
    let kept = f()?;
    Ok(SubgraphResult {
        kept,
        algorithm,
        seed,
        runtime_ms: clock.elapsed().as_secs_f64() * 1e3,
        maximal: algorithm.is_maximal(),
    })
}

fn grow(g: &Graph, start: &EdgeSet, seed: u64, budget: &Budget) -> Result<EdgeSet, Interrupted> {
    grow_maximal_within(g, start, seed, budget).map_err(|e| match e {
        HeuristicError::Interrupted(i) => i,
        HeuristicError::NonPlanarStart => unreachable!("heuristic start subgraphs are planar"),
    })
}

/// Runs `algorithm` on `g` under a wall-clock budget. `restarts` only
/// matters for the multi-start variant.
pub fn run(
    algorithm: Algorithm,
    g: &Graph,
    seed: u64,
    restarts: usize,
    budget: &Budget,
) -> Result<SubgraphResult, Interrupted> {
    timed(algorithm, seed, || match algorithm {
        Algorithm::Naive => grow(g, &EdgeSet::new(g.edge_count()), seed, budget),
        Algorithm::Multistart => multistart_kept(g, restarts, seed, budget),
        Algorithm::Bm => Ok(edge_addition_subgraph(g, seed)),
        Algorithm::BmPlus => grow(g, &edge_addition_subgraph(g, seed), seed, budget),
        Algorithm::Cactus => Ok(cactus_forest(g, seed).kept()),
        Algorithm::CactusPlus => grow(g, &cactus_forest(g, seed).kept(), seed, budget),
    })
}

fn unlimited(algorithm: Algorithm, g: &Graph, seed: u64, restarts: usize) -> SubgraphResult {
    run(algorithm, g, seed, restarts, &Budget::unlimited()).expect("no budget to exhaust")
}

/// Maximal planar subgraph by inserting edges in random order.
pub fn naive(g: &Graph, seed: u64) -> SubgraphResult {
    unlimited(Algorithm::Naive, g, seed, 1)
}

/// Best of `restarts` naive runs; run `i` uses `derive_seed(seed, i)` and
/// the first run reaching the maximum wins.
pub fn multistart_naive(g: &Graph, restarts: usize, seed: u64) -> SubgraphResult {
    unlimited(Algorithm::Multistart, g, seed, restarts)
}

fn multistart_kept(g: &Graph, restarts: usize, seed: u64, budget: &Budget) -> Result<EdgeSet, Interrupted> {
    assert!(restarts >= 1, "multistart needs at least one run");
    let empty = EdgeSet::new(g.edge_count());
    let mut best: Option<EdgeSet> = None;
    for i in 0..restarts {
        let kept = grow(g, &empty, derive_seed(seed, i as u64), budget)?;
        if best.as_ref().is_none_or(|b| kept.len() > b.len()) {
            best = Some(kept);
        }
    }
    Ok(best.expect("at least one run"))
}

/// Edge-addition planarity test with unembeddable back edges skipped.
pub fn bm_subgraph(g: &Graph, seed: u64) -> SubgraphResult {
    unlimited(Algorithm::Bm, g, seed, 1)
}

pub fn bm_plus(g: &Graph, seed: u64) -> SubgraphResult {
    unlimited(Algorithm::BmPlus, g, seed, 1)
}

pub fn cactus_subgraph(g: &Graph, seed: u64) -> SubgraphResult {
    unlimited(Algorithm::Cactus, g, seed, 1)
}

pub fn cactus_plus(g: &Graph, seed: u64) -> SubgraphResult {
    unlimited(Algorithm::CactusPlus, g, seed, 1)
}

/// Edge-disjoint triangles forming a forest of triangular cacti, plus the
/// edges that join the cacti into one tree per component of the host.
#[derive(Debug, Clone)]
pub struct CactusForest {
    pub triangles: Vec<[VertexId; 3]>,
    pub triangle_edges: EdgeSet,
    pub connectors: EdgeSet,
    pub components: DisjointSets,
}

impl CactusForest {
    pub fn kept(&self) -> EdgeSet {
        let mut all = self.triangle_edges.clone();
        all.union_with(&self.connectors);
        all
    }
}

/// Greedy triangle packing: edges are scanned in seed order and each common
/// neighbor closes a candidate triangle, accepted when its three corners lie
/// in three different cacti. Passes repeat until one adds nothing. Leftover
/// components are then joined by the first edges between them in id order.
pub fn cactus_forest(g: &Graph, seed: u64) -> CactusForest {
    let n = g.vertex_count();
    let m = g.edge_count();
    let adj = g.adjacency();
    let mut order: Vec<EdgeId> = (0..m).collect();
    order.shuffle(&mut rng_from_seed(seed));

    let mut dsu = DisjointSets::new(n);
    let mut triangles = Vec::new();
    let mut triangle_edges = EdgeSet::new(m);
    // mark[x] = edge (u, x) for the u currently scanned
    let mut mark: Vec<usize> = vec![usize::MAX; n];
    loop {
        let before = triangles.len();
        for &e in &order {
            let (u, v) = g.endpoints(e);
            if dsu.same(u, v) {
                continue;
            }
            for &(x, f) in adj.neighbors(u) {
                mark[x] = f;
            }
            for &(w, h) in adj.neighbors(v) {
                if w == u || mark[w] == usize::MAX {
                    continue;
                }
                if dsu.same(u, w) || dsu.same(v, w) {
                    continue;
                }
                dsu.union(u, v);
                dsu.union(u, w);
                triangles.push([u, v, w]);
                triangle_edges.insert(e);
                triangle_edges.insert(mark[w]);
                triangle_edges.insert(h);
                break;
            }
            for &(x, _) in adj.neighbors(u) {
                mark[x] = usize::MAX;
            }
        }
        if triangles.len() == before {
            break;
        }
    }

    let mut connectors = EdgeSet::new(m);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if dsu.union(u, v) {
            connectors.insert(e);
        }
    }
    CactusForest {
        triangles,
        triangle_edges,
        connectors,
        components: dsu,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.label().parse::<Algorithm>(), Ok(a));
        }
        assert!("hsu".parse::<Algorithm>().is_err());
    }

    #[test]
    fn cactus_on_k5_packs_two_triangles() {
        let g = Graph::complete(5);
        for seed in 0..10 {
            let forest = cactus_forest(&g, seed);
            assert_eq!(forest.triangles.len(), 2);
            assert!(forest.connectors.is_empty());
            assert_eq!(forest.kept().len(), 6);
        }
    }
}
