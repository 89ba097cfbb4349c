//! Planarity testing, combinatorial embeddings, Kuratowski witnesses and
//! the large-planar-subgraph mode of the edge-addition test.

mod edge_addition;
mod embedding;
mod kuratowski;

use thiserror::Error;

use crate::budget::{Budget, Interrupted};
use crate::graph::{EdgeId, EdgeSet, Graph, VertexId};
use crate::rng::rng_from_seed;

use edge_addition::FailurePolicy;
pub use embedding::{Dart, Embedding, EmbeddingError};
pub use kuratowski::{KuratowskiKind, KuratowskiSubdivision};

pub(crate) use kuratowski::minimal_nonplanar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarityError {
    #[error("graph is planar, no Kuratowski subdivision exists")]
    Planar,
    #[error(transparent)]
    Interrupted(#[from] Interrupted),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlanarityOutcome {
    Planar(Embedding),
    NonPlanar(KuratowskiSubdivision),
}

impl PlanarityOutcome {
    pub fn is_planar(&self) -> bool {
        matches!(self, PlanarityOutcome::Planar(_))
    }

    pub fn embedding(&self) -> Option<&Embedding> {
        match self {
            PlanarityOutcome::Planar(e) => Some(e),
            PlanarityOutcome::NonPlanar(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&KuratowskiSubdivision> {
        match self {
            PlanarityOutcome::Planar(_) => None,
            PlanarityOutcome::NonPlanar(k) => Some(k),
        }
    }
}

pub(crate) fn is_planar_edges(n: usize, edges: &[(VertexId, VertexId)]) -> bool {
    if n >= 3 && edges.len() > 3 * n - 6 {
        return false;
    }
    edge_addition::run(n, edges, None, FailurePolicy::Stop, false).all_embedded()
}

pub fn is_planar(g: &Graph) -> bool {
    is_planar_edges(g.vertex_count(), g.edges())
}

/// Planarity of the subgraph spanned by `keep`.
pub fn is_planar_subset(g: &Graph, keep: &EdgeSet) -> bool {
    let edges: Vec<_> = keep.iter().map(|e| g.endpoints(e)).collect();
    is_planar_edges(g.vertex_count(), &edges)
}

/// An embedding if `g` is planar, otherwise a Kuratowski witness.
pub fn embed(g: &Graph) -> PlanarityOutcome {
    let n = g.vertex_count();
    if !(n >= 3 && g.edge_count() > 3 * n - 6) {
        let out = edge_addition::run(n, g.edges(), None, FailurePolicy::Stop, true);
        if let Some(rotation) = out.rotation.filter(|_| out.skipped.is_empty()) {
            let emb = Embedding::new(g, rotation).expect("engine emits one rotation per vertex");
            return PlanarityOutcome::Planar(emb);
        }
    }
    PlanarityOutcome::NonPlanar(
        extract_kuratowski(g).expect("a graph rejected by the planarity test has a witness"),
    )
}

/// Large planar subgraph: the edge-addition test run to completion, leaving
/// out every back edge the walkdown cannot embed. The seed fixes DFS root
/// and neighbor order. Always contains a spanning forest of `g`.
pub fn edge_addition_subgraph(g: &Graph, seed: u64) -> EdgeSet {
    let mut rng = rng_from_seed(seed);
    let out = edge_addition::run(
        g.vertex_count(),
        g.edges(),
        Some(&mut rng),
        FailurePolicy::Skip,
        false,
    );
    let mut kept = g.edge_set();
    for e in out.skipped {
        kept.remove(e);
    }
    kept
}

/// Embedding of the subgraph spanned by `keep`; rotations list host edge ids.
pub fn embed_subset(g: &Graph, keep: &EdgeSet) -> Option<Vec<Vec<EdgeId>>> {
    let ids: Vec<EdgeId> = keep.iter().collect();
    let edges: Vec<_> = ids.iter().map(|&e| g.endpoints(e)).collect();
    let out = edge_addition::run(g.vertex_count(), &edges, None, FailurePolicy::Stop, true);
    if !out.skipped.is_empty() {
        return None;
    }
    let rotation = out.rotation?;
    Some(
        rotation
            .into_iter()
            .map(|rot| rot.into_iter().map(|local| ids[local]).collect())
            .collect(),
    )
}

/// Edge-minimal Kuratowski subdivision of a non-planar graph.
///
/// Dense inputs are first shrunk to a planar subgraph plus the first edge
/// that breaks planarity, so the deletion sweep runs on at most `3n - 5`
/// edges.
pub fn extract_kuratowski(g: &Graph) -> Result<KuratowskiSubdivision, PlanarityError> {
    extract_kuratowski_within(g, &Budget::unlimited())
}

pub fn extract_kuratowski_within(
    g: &Graph,
    budget: &Budget,
) -> Result<KuratowskiSubdivision, PlanarityError> {
    if is_planar(g) {
        return Err(PlanarityError::Planar);
    }
    let n = g.vertex_count();
    let candidates: Vec<EdgeId> = if g.edge_count() > 3 * n {
        shrink_to_critical(g, budget)?
    } else {
        (0..g.edge_count()).collect()
    };
    let witness = minimal_nonplanar(g, &candidates, budget)?;
    Ok(classify_minimal(g, &witness))
}

/// Deletion-sweep witness restricted to `present`, trying `order` first for
/// removal. Returns `None` when `present` spans a planar subgraph.
pub fn extract_kuratowski_ordered(
    g: &Graph,
    order: &[EdgeId],
    budget: &Budget,
) -> Result<Option<KuratowskiSubdivision>, Interrupted> {
    let edges: Vec<_> = order.iter().map(|&e| g.endpoints(e)).collect();
    if is_planar_edges(g.vertex_count(), &edges) {
        return Ok(None);
    }
    let witness = minimal_nonplanar(g, order, budget)?;
    Ok(Some(classify_minimal(g, &witness)))
}

/// The plain one-edge-at-a-time deletion sweep. Quadratic; kept as a
/// reference implementation for differential testing.
pub fn extract_kuratowski_by_deletion(g: &Graph) -> Result<KuratowskiSubdivision, PlanarityError> {
    if is_planar(g) {
        return Err(PlanarityError::Planar);
    }
    let all: Vec<EdgeId> = (0..g.edge_count()).collect();
    let witness = kuratowski::minimal_nonplanar_by_single_deletion(g, &all);
    Ok(classify_minimal(g, &witness))
}

fn classify_minimal(g: &Graph, witness: &[EdgeId]) -> KuratowskiSubdivision {
    let set = EdgeSet::from_ids(g.edge_count(), witness.iter().copied());
    KuratowskiSubdivision::classify(g, &set)
        .expect("edge-minimal non-planar graphs are Kuratowski subdivisions")
}

/// Planar subgraph from the edge-addition test plus the first skipped edge
/// that destroys planarity, with that edge last in the returned order.
fn shrink_to_critical(g: &Graph, budget: &Budget) -> Result<Vec<EdgeId>, Interrupted> {
    let n = g.vertex_count();
    let out = edge_addition::run(n, g.edges(), None, FailurePolicy::Skip, false);
    let mut skipped = vec![false; g.edge_count()];
    for &e in &out.skipped {
        skipped[e] = true;
    }
    let mut kept: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| !skipped[e]).collect();
    let mut edges: Vec<_> = kept.iter().map(|&e| g.endpoints(e)).collect();
    for &e in &out.skipped {
        budget.check()?;
        edges.push(g.endpoints(e));
        if !is_planar_edges(n, &edges) {
            kept.push(e);
            return Ok(kept);
        }
        kept.push(e);
    }
    unreachable!("the whole graph is non-planar")
}

#[cfg(test)]
mod tests;
