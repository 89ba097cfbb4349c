//! Simple undirected graphs with stable edge ids, edge sets over a host
//! graph, and the small traversal utilities every algorithm builds on.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {index}: self-loop at vertex {vertex}")]
    SelfLoop { index: EdgeId, vertex: VertexId },
    #[error("edge {index}: ({u}, {v}) duplicates edge {first}")]
    ParallelEdge {
        index: EdgeId,
        first: EdgeId,
        u: VertexId,
        v: VertexId,
    },
    #[error("edge {index}: endpoint {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange {
        index: EdgeId,
        vertex: VertexId,
        vertex_count: usize,
    },
}

/// A simple undirected graph. Edge ids are positions in the edge list.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, parallel edges and dangling endpoints.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut seen: HashMap<(VertexId, VertexId), EdgeId> = HashMap::new();
        let mut list = Vec::new();
        for (index, (u, v)) in edges.into_iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        index,
                        vertex,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { index, vertex: u });
            }
            if let Some(&first) = seen.get(&(u.min(v), u.max(v))) {
                return Err(GraphError::ParallelEdge { index, first, u, v });
            }
            seen.insert((u.min(v), u.max(v)), index);
            list.push((u, v));
        }
        Ok(Self {
            vertex_count,
            edges: list,
        })
    }

    /// For edge lists that are already known to be simple (subsets of a
    /// validated graph, generator output).
    pub(crate) fn from_simple_edges(vertex_count: usize, edges: Vec<(VertexId, VertexId)>) -> Self {
        debug_assert!(Self::new(vertex_count, edges.iter().copied()).is_ok());
        Self {
            vertex_count,
            edges,
        }
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            edges: Vec::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_simple_edges(n, edges)
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a)
            .flat_map(|u| (a..a + b).map(move |v| (u, v)))
            .collect();
        Self::from_simple_edges(a + b, edges)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least three vertices");
        let edges = (0..n).map(|u| (u, (u + 1) % n)).collect();
        Self::from_simple_edges(n, edges)
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|u| (u - 1, u)).collect();
        Self::from_simple_edges(n, edges)
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
        }
        for i in 0..5 {
            edges.push((i, i + 5));
        }
        for i in 0..5 {
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_simple_edges(10, edges)
    }

    /// Places `other` after `self`, shifting its vertex and edge ids.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let shift = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Self::from_simple_edges(self.vertex_count + other.vertex_count, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn adjacency(&self) -> Adjacency {
        Adjacency::build(self.vertex_count, &self.edges)
    }

    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet::full(self.edge_count())
    }

    /// Edge id of `{u, v}`, if present. Linear scan.
    pub fn find_edge(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.edges
            .iter()
            .position(|&(a, b)| (a == u && b == v) || (a == v && b == u))
    }
}

/// Compressed adjacency: for each vertex the `(neighbor, edge id)` pairs in
/// edge-id order.
#[derive(Debug, Clone)]
pub struct Adjacency {
    offsets: Vec<usize>,
    targets: Vec<(VertexId, EdgeId)>,
}

impl Adjacency {
    pub(crate) fn build(n: usize, edges: &[(VertexId, VertexId)]) -> Self {
        let mut offsets = vec![0usize; n + 1];
        for &(u, v) in edges {
            offsets[u + 1] += 1;
            offsets[v + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![(0, 0); offsets[n]];
        for (e, &(u, v)) in edges.iter().enumerate() {
            targets[fill[u]] = (v, e);
            fill[u] += 1;
            targets[fill[v]] = (u, e);
            fill[v] += 1;
        }
        Self { offsets, targets }
    }

    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }
}

/// Membership over the edge ids of a fixed host graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    universe: usize,
    words: Vec<u64>,
}

impl EdgeSet {
    pub fn new(universe: usize) -> Self {
        Self {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for e in 0..universe {
            s.insert(e);
        }
        s
    }

    /// Panics if an id is outside the universe.
    pub fn from_ids<I: IntoIterator<Item = EdgeId>>(universe: usize, ids: I) -> Self {
        let mut s = Self::new(universe);
        for e in ids {
            s.insert(e);
        }
        s
    }

    /// Number of edges of the host graph this set ranges over.
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, e: EdgeId) -> bool {
        assert!(e < self.universe, "edge id {e} outside universe {}", self.universe);
        let (w, b) = (e / 64, e % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, e: EdgeId) -> bool {
        if e >= self.universe {
            return false;
        }
        let (w, b) = (e / 64, e % 64);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        e < self.universe && self.words[e / 64] & (1 << (e % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Member ids in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + b)
            })
        })
    }

    pub fn union_with(&mut self, other: &EdgeSet) {
        assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_superset(&self, other: &EdgeSet) -> bool {
        self.universe == other.universe
            && self.words.iter().zip(&other.words).all(|(a, b)| a & b == *b)
    }

    pub fn complement(&self) -> EdgeSet {
        let mut out = EdgeSet::full(self.universe);
        for (a, b) in out.words.iter_mut().zip(&self.words) {
            *a &= !b;
        }
        out
    }

    pub fn to_vec(&self) -> Vec<EdgeId> {
        self.iter().collect()
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Union-find over vertex ids with path compression and union by rank.
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
    classes: usize,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: vec![0; n],
            classes: n,
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Returns `false` if `a` and `b` were already in the same class.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        self.classes -= 1;
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn class_count(&self) -> usize {
        self.classes
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }
}

/// A subgraph together with the id of each of its edges in the host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    pub origin: Vec<EdgeId>,
}

pub fn subgraph(g: &Graph, keep: &EdgeSet) -> Subgraph {
    assert_eq!(keep.universe(), g.edge_count(), "edge set belongs to another graph");
    let origin: Vec<EdgeId> = keep.iter().collect();
    let edges = origin.iter().map(|&e| g.edges[e]).collect();
    Subgraph {
        graph: Graph::from_simple_edges(g.vertex_count, edges),
        origin,
    }
}

/// Vertex partition into components, each sorted, ordered by smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<VertexId>> {
    let mut dsu = DisjointSets::new(g.vertex_count());
    for &(u, v) in g.edges() {
        dsu.union(u, v);
    }
    let mut index_of_root = HashMap::new();
    let mut parts: Vec<Vec<VertexId>> = Vec::new();
    for v in 0..g.vertex_count() {
        let r = dsu.find(v);
        let idx = *index_of_root.entry(r).or_insert_with(|| {
            parts.push(Vec::new());
            parts.len() - 1
        });
        parts[idx].push(v);
    }
    parts
}

/// Kruskal-style forest scanning edges in id order.
pub fn spanning_forest(g: &Graph) -> EdgeSet {
    let mut dsu = DisjointSets::new(g.vertex_count());
    let mut forest = EdgeSet::new(g.edge_count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if dsu.union(u, v) {
            forest.insert(e);
        }
    }
    forest
}

/// Number of connected components of the subgraph spanned by `keep`.
pub fn component_count(g: &Graph, keep: &EdgeSet) -> usize {
    let mut dsu = DisjointSets::new(g.vertex_count());
    for e in keep.iter() {
        let (u, v) = g.edges[e];
        dsu.union(u, v);
    }
    dsu.class_count()
}
