//! Kuratowski witnesses by edge deletion: an edge is dropped whenever the
//! remaining graph stays non-planar, which leaves an edge-minimal
//! non-planar subgraph, i.e. a subdivision of K5 or K3,3.

use std::fmt;

use crate::budget::{Budget, Interrupted};
use crate::graph::{EdgeId, EdgeSet, Graph, VertexId};

use super::is_planar_edges;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KuratowskiKind {
    K5,
    K33,
}

impl fmt::Display for KuratowskiKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KuratowskiKind::K5 => f.write_str("K5"),
            KuratowskiKind::K33 => f.write_str("K3,3"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuratowskiSubdivision {
    pub kind: KuratowskiKind,
    /// Sorted.
    pub branch_vertices: Vec<VertexId>,
    pub edges: EdgeSet,
}

impl KuratowskiSubdivision {
    /// Classifies an edge set by its degree signature: five vertices of
    /// degree 4 or six of degree 3, every other touched vertex of degree 2.
    pub fn classify(g: &Graph, edges: &EdgeSet) -> Option<Self> {
        let mut deg = vec![0usize; g.vertex_count()];
        for e in edges.iter() {
            let (u, v) = g.endpoints(e);
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut branch = Vec::new();
        for (v, &d) in deg.iter().enumerate() {
            match d {
                0 | 2 => {}
                3 | 4 => branch.push(v),
                _ => return None,
            }
        }
        let kind = match branch.len() {
            5 if branch.iter().all(|&v| deg[v] == 4) => KuratowskiKind::K5,
            6 if branch.iter().all(|&v| deg[v] == 3) => KuratowskiKind::K33,
            _ => return None,
        };
        Some(Self {
            kind,
            branch_vertices: branch,
            edges: edges.clone(),
        })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Edge-minimal non-planar subset of `candidates`, which must itself span a
/// non-planar subgraph of `g`. Edges early in `candidates` are tried for
/// removal first, so later edges are more likely to end up in the witness.
///
/// Removal is attempted in adaptively sized blocks. An edge found necessary
/// stays necessary for every smaller edge set, so the result is minimal.
pub(crate) fn minimal_nonplanar(
    g: &Graph,
    candidates: &[EdgeId],
    budget: &Budget,
) -> Result<Vec<EdgeId>, Interrupted> {
    let n = g.vertex_count();
    let mut necessary: Vec<EdgeId> = Vec::new();
    let mut rest: &[EdgeId] = candidates;
    let mut block = (candidates.len() / 8).max(1);
    let mut buf: Vec<(VertexId, VertexId)> = Vec::with_capacity(candidates.len());
    while !rest.is_empty() {
        budget.check()?;
        let take = block.min(rest.len());
        buf.clear();
        buf.extend(necessary.iter().map(|&e| g.endpoints(e)));
        buf.extend(rest[take..].iter().map(|&e| g.endpoints(e)));
        if !is_planar_edges(n, &buf) {
            rest = &rest[take..];
            block = (block * 2).min(rest.len().max(1));
        } else if take > 1 {
            block = take / 2;
        } else {
            necessary.push(rest[0]);
            rest = &rest[1..];
        }
    }
    necessary.sort_unstable();
    Ok(necessary)
}

/// The plain one-edge-at-a-time deletion sweep over `candidates`.
pub(crate) fn minimal_nonplanar_by_single_deletion(g: &Graph, candidates: &[EdgeId]) -> Vec<EdgeId> {
    let n = g.vertex_count();
    let mut alive = vec![true; candidates.len()];
    for i in 0..candidates.len() {
        alive[i] = false;
        let buf: Vec<_> = candidates
            .iter()
            .zip(&alive)
            .filter(|(_, &a)| a)
            .map(|(&e, _)| g.endpoints(e))
            .collect();
        if is_planar_edges(n, &buf) {
            alive[i] = true;
        }
    }
    let mut kept: Vec<EdgeId> = candidates
        .iter()
        .zip(&alive)
        .filter(|(_, &a)| a)
        .map(|(&e, _)| e)
        .collect();
    kept.sort_unstable();
    kept
}
