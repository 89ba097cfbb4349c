//! Planarization by edge insertion into a fixed embedding.
//!
//! A planar subgraph is embedded once. Every remaining edge is then routed
//! along a shortest path in the dual of the current embedding; each crossed
//! segment is split by a dummy vertex of degree 4.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use thiserror::Error;

use crate::graph::{DisjointSets, EdgeId, EdgeSet, Graph, VertexId};
use crate::planarity::{embed_subset, Embedding};
use crate::rng::rng_from_seed;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarizeError {
    #[error("subgraph to extend is not planar")]
    NonPlanarSubgraph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InsertionOrder {
    /// Shuffled by the seed.
    #[default]
    Shuffled,
    ById,
}

#[derive(Debug, Clone)]
pub struct PlanarizedGraph {
    /// Original vertices keep their ids; dummies follow.
    pub host: Graph,
    pub original_vertices: usize,
    pub dummy_count: usize,
    pub embedding: Embedding,
    /// Original edge of every host edge.
    pub origin: Vec<EdgeId>,
}

impl PlanarizedGraph {
    pub fn crossings(&self) -> usize {
        self.dummy_count
    }

    pub fn is_dummy(&self, v: VertexId) -> bool {
        v >= self.original_vertices
    }
}

pub fn crossings(p: &PlanarizedGraph) -> usize {
    p.crossings()
}

/// An embedded planar graph that grows by edge insertion.
#[derive(Debug, Clone)]
pub struct Planarization {
    original_vertices: usize,
    segments: Vec<(VertexId, VertexId)>,
    origin: Vec<EdgeId>,
    rotation: Vec<Vec<usize>>,
    components: DisjointSets,
}

/// Index of the dart of `seg` leaving `tail`.
fn dart(segments: &[(VertexId, VertexId)], seg: usize, tail: VertexId) -> usize {
    2 * seg + usize::from(segments[seg].0 != tail)
}

impl Planarization {
    /// Embeds the planar subgraph `kept` of `g`.
    pub fn new(g: &Graph, kept: &EdgeSet) -> Result<Self, PlanarizeError> {
        let rotations = embed_subset(g, kept).ok_or(PlanarizeError::NonPlanarSubgraph)?;
        let ids: Vec<EdgeId> = kept.iter().collect();
        let mut seg_of = vec![usize::MAX; g.edge_count()];
        for (s, &e) in ids.iter().enumerate() {
            seg_of[e] = s;
        }
        let mut components = DisjointSets::new(g.vertex_count());
        for &e in &ids {
            let (u, v) = g.endpoints(e);
            components.union(u, v);
        }
        Ok(Self {
            original_vertices: g.vertex_count(),
            segments: ids.iter().map(|&e| g.endpoints(e)).collect(),
            origin: ids,
            rotation: rotations
                .into_iter()
                .map(|rot| rot.into_iter().map(|e| seg_of[e]).collect())
                .collect(),
            components,
        })
    }

    pub fn dummy_count(&self) -> usize {
        self.rotation.len() - self.original_vertices
    }

    /// Face id of every dart. Darts `2s` and `2s + 1` run along segment `s`
    /// from its first and second endpoint respectively.
    fn faces(&self) -> (Vec<usize>, usize) {
        let segs = &self.segments;
        let mut pos = vec![0usize; 2 * segs.len()];
        for (v, rot) in self.rotation.iter().enumerate() {
            for (i, &s) in rot.iter().enumerate() {
                pos[dart(segs, s, v)] = i;
            }
        }
        let mut face = vec![usize::MAX; 2 * segs.len()];
        let mut count = 0;
        for start in 0..face.len() {
            if face[start] != usize::MAX {
                continue;
            }
            let mut d = start;
            while face[d] == usize::MAX {
                face[d] = count;
                let (a, b) = segs[d / 2];
                let head = if d % 2 == 0 { b } else { a };
                let rot = &self.rotation[head];
                // position of the segment at its head is stored on the reverse dart
                let here = pos[d ^ 1];
                let next = rot[(here + 1) % rot.len()];
                d = dart(segs, next, head);
            }
            count += 1;
        }
        (face, count)
    }

    fn insert_after(&mut self, v: VertexId, after: Option<usize>, seg: usize) {
        let rot = &mut self.rotation[v];
        match after {
            Some(s) => {
                let i = rot.iter().position(|&x| x == s).expect("segment at vertex");
                rot.insert(i + 1, seg);
            }
            None => rot.push(seg),
        }
    }

    fn add_segment(&mut self, u: VertexId, v: VertexId, origin: EdgeId) -> usize {
        self.segments.push((u, v));
        self.origin.push(origin);
        self.segments.len() - 1
    }

    /// Routes original edge `e = (u, v)` through as few segments as possible
    /// and returns the number of crossings it introduced.
    pub fn insert(&mut self, e: EdgeId, u: VertexId, v: VertexId) -> usize {
        if !self.components.same(u, v) {
            // different components: any corner pair keeps the embedding planar
            self.components.union(u, v);
            let s = self.add_segment(u, v, e);
            let at_u = self.rotation[u].last().copied();
            let at_v = self.rotation[v].last().copied();
            self.insert_after(u, at_u, s);
            self.insert_after(v, at_v, s);
            return 0;
        }

        let (face, face_count) = self.faces();
        let segs = &self.segments;
        // a corner is named by the dart entering its vertex
        let mut entry_u = vec![usize::MAX; face_count];
        let mut entry_v = vec![usize::MAX; face_count];
        for &s in &self.rotation[u] {
            let d = dart(segs, s, u) ^ 1;
            if entry_u[face[d]] == usize::MAX {
                entry_u[face[d]] = d;
            }
        }
        for &s in &self.rotation[v] {
            let d = dart(segs, s, v) ^ 1;
            if entry_v[face[d]] == usize::MAX {
                entry_v[face[d]] = d;
            }
        }

        // breadth-first search over faces; crossing a segment costs one
        let mut dual: Vec<Vec<(usize, usize)>> = vec![Vec::new(); face_count];
        for s in 0..segs.len() {
            let (f, g) = (face[2 * s], face[2 * s + 1]);
            if f != g {
                dual[f].push((g, 2 * s + 1));
                dual[g].push((f, 2 * s));
            }
        }
        // via[f] = dart whose face is f, crossed to reach f
        let mut via = vec![usize::MAX; face_count];
        let mut seen = vec![false; face_count];
        let mut queue = VecDeque::new();
        for f in 0..face_count {
            if entry_u[f] != usize::MAX {
                seen[f] = true;
                queue.push_back(f);
            }
        }
        let mut target = usize::MAX;
        while let Some(f) = queue.pop_front() {
            if entry_v[f] != usize::MAX {
                target = f;
                break;
            }
            for &(g, d) in &dual[f] {
                if !seen[g] {
                    seen[g] = true;
                    via[g] = d;
                    queue.push_back(g);
                }
            }
        }
        assert!(target != usize::MAX, "u and v share a component, so some face path exists");

        // crossed darts from u's side to v's side; each lies in the later face
        let mut crossed = Vec::new();
        let mut f = target;
        while via[f] != usize::MAX {
            let d = via[f];
            crossed.push(d);
            f = face[d ^ 1];
        }
        crossed.reverse();
        let start_entry = entry_u[f];
        let end_entry = entry_v[target];

        let mut tail = u;
        let mut tail_after = Some(start_entry / 2);
        for &d in &crossed {
            // d lies in the face after the crossing, d ^ 1 in the one before
            let s = d / 2;
            let (x, y) = self.segments[s];
            let dummy = self.rotation.len();
            // split s into (x, dummy) and (dummy, y)
            self.segments[s] = (x, dummy);
            let rest = self.add_segment(dummy, y, self.origin[s]);
            let at_y = self.rotation[y].iter().position(|&t| t == s).expect("segment at y");
            self.rotation[y][at_y] = rest;
            // dart x -> y is d when d is even
            let (before, after) = if d % 2 == 1 { (s, rest) } else { (rest, s) };
            self.rotation.push(vec![s, rest]);
            let link = self.add_segment(tail, dummy, e);
            self.insert_after(tail, tail_after, link);
            self.insert_after(dummy, Some(before), link);
            tail = dummy;
            tail_after = Some(after);
        }
        let last = self.add_segment(tail, v, e);
        self.insert_after(tail, tail_after, last);
        self.insert_after(v, Some(end_entry / 2), last);
        crossed.len()
    }

    pub fn embedding(&self) -> Embedding {
        Embedding::new(&self.host(), self.rotation.clone()).expect("rotations list incident segments")
    }

    /// Current planarized graph.
    pub fn host(&self) -> Graph {
        Graph::new(self.rotation.len(), self.segments.iter().copied())
            .expect("segments form a simple graph")
    }

    pub fn finish(self) -> PlanarizedGraph {
        let host = self.host();
        PlanarizedGraph {
            embedding: Embedding::new(&host, self.rotation.clone()).expect("rotations list incident segments"),
            dummy_count: self.rotation.len() - self.original_vertices,
            original_vertices: self.original_vertices,
            origin: self.origin,
            host,
        }
    }
}

/// Inserts every edge of `g` outside `kept` into a fixed embedding of the
/// planar subgraph `kept`.
pub fn insert_edges_fixed(
    g: &Graph,
    kept: &EdgeSet,
    seed: u64,
    order: InsertionOrder,
) -> Result<PlanarizedGraph, PlanarizeError> {
    let mut p = Planarization::new(g, kept)?;
    let mut rest: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| !kept.contains(e)).collect();
    if order == InsertionOrder::Shuffled {
        rest.shuffle(&mut rng_from_seed(seed));
    }
    for e in rest {
        let (u, v) = g.endpoints(e);
        p.insert(e, u, v);
    }
    Ok(p.finish())
}
