//! Random instance generators: regular graphs and preferential attachment.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng as _;
use thiserror::Error;

use crate::graph::Graph;
use crate::rng::{rng_from_seed, Rng};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("no {degree}-regular graph on {n} vertices")]
    InfeasibleRegular { n: usize, degree: usize },
    #[error("preferential attachment needs 1 <= edges per step < n (got {edges_per_step}, n = {n})")]
    InfeasibleScaleFree { n: usize, edges_per_step: usize },
}

/// Uniform-ish random `degree`-regular simple graph.
///
/// Points (vertex copies) are paired one pair at a time, drawing only pairs
/// that create neither a loop nor a parallel edge; a dead end restarts the
/// whole pairing. Edges are returned sorted.
pub fn gen_regular(n: usize, degree: usize, seed: u64) -> Result<Graph, GenError> {
    if (n * degree) % 2 == 1 || (degree > 0 && degree >= n) {
        return Err(GenError::InfeasibleRegular { n, degree });
    }
    let mut rng = rng_from_seed(seed);
    loop {
        if let Some(mut edges) = try_pairing(n, degree, &mut rng) {
            edges.sort_unstable();
            return Ok(Graph::new(n, edges).expect("pairing avoids loops and repeats"));
        }
    }
}

fn try_pairing(n: usize, degree: usize, rng: &mut Rng) -> Option<Vec<(usize, usize)>> {
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, degree)).collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::with_capacity(degree); n];
    let mut edges = Vec::with_capacity(n * degree / 2);
    let ok = |adj: &[Vec<usize>], u: usize, v: usize| u != v && !adj[u].contains(&v);
    while !points.is_empty() {
        let len = points.len();
        let mut pick = None;
        for _ in 0..64 {
            let i = rng.gen_range(0..len);
            let j = rng.gen_range(0..len);
            if i != j && ok(&adj, points[i], points[j]) {
                pick = Some((i, j));
                break;
            }
        }
        if pick.is_none() {
            // few points left or many conflicts: choose among all valid pairs
            let valid: Vec<(usize, usize)> = (0..len)
                .flat_map(|i| (i + 1..len).map(move |j| (i, j)))
                .filter(|&(i, j)| ok(&adj, points[i], points[j]))
                .collect();
            pick = Some(*valid.choose(rng)?);
        }
        let (i, j) = pick.expect("set above");
        let (u, v) = (points[i], points[j]);
        adj[u].push(v);
        adj[v].push(u);
        edges.push((u.min(v), u.max(v)));
        let (hi, lo) = if i > j { (i, j) } else { (j, i) };
        points.swap_remove(hi);
        points.swap_remove(lo);
    }
    Some(edges)
}

/// Preferential attachment: start from a clique on `edges_per_step + 1`
/// vertices, then every new vertex links to `edges_per_step` distinct
/// existing vertices chosen with probability proportional to degree.
pub fn gen_scale_free(n: usize, edges_per_step: usize, seed: u64) -> Result<Graph, GenError> {
    let k = edges_per_step;
    if k == 0 || n <= k {
        return Err(GenError::InfeasibleScaleFree { n, edges_per_step });
    }
    let mut rng = rng_from_seed(seed);
    let mut edges = Vec::with_capacity(k * n);
    // every endpoint once per incident edge
    let mut ends: Vec<usize> = Vec::with_capacity(2 * k * n);
    for u in 0..=k {
        for v in u + 1..=k {
            edges.push((u, v));
            ends.extend([u, v]);
        }
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    for v in k + 1..n {
        chosen.clear();
        while chosen.len() < k {
            let t = ends[rng.gen_range(0..ends.len())];
            if !chosen.contains(&t) {
                chosen.push(t);
            }
        }
        for &t in &chosen {
            edges.push((t, v));
            ends.extend([t, v]);
        }
    }
    Ok(Graph::new(n, edges).expect("targets are distinct and older"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Regular,
    ScaleFree,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::Regular => "regular",
            Family::ScaleFree => "scale-free",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "regular" => Ok(Family::Regular),
            "scale-free" | "scale_free" | "scalefree" | "baal" | "ba" => Ok(Family::ScaleFree),
            other => Err(format!("unknown family `{other}` (regular or scale-free)")),
        }
    }
}

/// An instance of the artificial benchmark sets. `density` is the target
/// number of edges per vertex: regular graphs get degree `2 * density`,
/// scale-free graphs `density` edges per new vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    pub density: usize,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Graph, GenError> {
        match self.family {
            Family::Regular => gen_regular(self.n, 2 * self.density, self.seed),
            Family::ScaleFree => gen_scale_free(self.n, self.density, self.seed),
        }
    }

    /// Instance name, e.g. `regular-n100-d3-s7`.
    pub fn name(&self) -> String {
        format!("{}-n{}-d{}-s{}", self.family, self.n, self.density, self.seed)
    }
}
