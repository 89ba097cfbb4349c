use thiserror::Error;

use crate::graph::{DisjointSets, EdgeId, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("expected {expected} rotations, got {got}")]
    VertexCount { expected: usize, got: usize },
    #[error("rotation of vertex {vertex} does not list exactly its incident edges")]
    BadRotation { vertex: VertexId },
}

/// An edge traversed from `tail` to the other endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub edge: EdgeId,
    pub tail: VertexId,
}

/// Rotation system: for each vertex the cyclic order of its incident edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    rotations: Vec<Vec<EdgeId>>,
}

impl Embedding {
    pub fn new(g: &Graph, rotations: Vec<Vec<EdgeId>>) -> Result<Self, EmbeddingError> {
        if rotations.len() != g.vertex_count() {
            return Err(EmbeddingError::VertexCount {
                expected: g.vertex_count(),
                got: rotations.len(),
            });
        }
        let adj = g.adjacency();
        for (v, rot) in rotations.iter().enumerate() {
            let mut listed: Vec<EdgeId> = rot.clone();
            listed.sort_unstable();
            let mut incident: Vec<EdgeId> = adj.neighbors(v).iter().map(|&(_, e)| e).collect();
            incident.sort_unstable();
            if listed != incident {
                return Err(EmbeddingError::BadRotation { vertex: v });
            }
        }
        Ok(Self { rotations })
    }

    pub fn rotation(&self, v: VertexId) -> &[EdgeId] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<EdgeId>] {
        &self.rotations
    }

    /// Face boundaries as dart cycles. The successor of dart `u -> v` is the
    /// dart leaving `v` along the edge after `{u, v}` in the rotation at `v`.
    pub fn faces(&self, g: &Graph) -> Vec<Vec<Dart>> {
        let m = g.edge_count();
        // position of edge e in the rotation at its first / second endpoint
        let mut pos = vec![[usize::MAX; 2]; m];
        for (v, rot) in self.rotations.iter().enumerate() {
            for (i, &e) in rot.iter().enumerate() {
                let side = usize::from(g.endpoints(e).0 != v);
                pos[e][side] = i;
            }
        }
        let dart_index = |d: Dart| 2 * d.edge + usize::from(g.endpoints(d.edge).0 != d.tail);
        let mut seen = vec![false; 2 * m];
        let mut faces = Vec::new();
        for start in 0..2 * m {
            if seen[start] {
                continue;
            }
            let (a, b) = g.endpoints(start / 2);
            let mut d = Dart {
                edge: start / 2,
                tail: if start % 2 == 0 { a } else { b },
            };
            let mut face = Vec::new();
            while !seen[dart_index(d)] {
                seen[dart_index(d)] = true;
                face.push(d);
                let (x, y) = g.endpoints(d.edge);
                let head = if d.tail == x { y } else { x };
                let rot = &self.rotations[head];
                let here = pos[d.edge][usize::from(x != head)];
                let next = rot[(here + 1) % rot.len()];
                d = Dart {
                    edge: next,
                    tail: head,
                };
            }
            faces.push(face);
        }
        faces
    }

    /// Faces including one for every isolated vertex.
    pub fn face_count(&self, g: &Graph) -> usize {
        let isolated = self.rotations.iter().filter(|r| r.is_empty()).count();
        self.faces(g).len() + isolated
    }

    /// `V - E + F = 2` on every connected component.
    pub fn satisfies_euler(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        let mut dsu = DisjointSets::new(n);
        for &(u, v) in g.edges() {
            dsu.union(u, v);
        }
        let mut balance = vec![0i64; n];
        for v in 0..n {
            let r = dsu.find(v);
            balance[r] += 1;
            if self.rotations[v].is_empty() {
                balance[r] += 1;
            }
        }
        for &(u, _) in g.edges() {
            let r = dsu.find(u);
            balance[r] -= 1;
        }
        for face in self.faces(g) {
            let r = dsu.find(face[0].tail);
            balance[r] += 1;
        }
        (0..n).all(|v| dsu.find(v) != v || balance[v] == 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_has_two_faces() {
        let g = Graph::cycle(3);
        let emb = Embedding::new(&g, vec![vec![0, 2], vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(emb.faces(&g).len(), 2);
        assert!(emb.satisfies_euler(&g));
    }

    #[test]
    fn isolated_vertices_count_as_components() {
        let g = Graph::empty(3);
        let emb = Embedding::new(&g, vec![vec![]; 3]).unwrap();
        assert_eq!(emb.face_count(&g), 3);
        assert!(emb.satisfies_euler(&g));
    }

    #[test]
    fn wrong_rotation_is_rejected() {
        let g = Graph::path(3);
        assert_eq!(
            Embedding::new(&g, vec![vec![0], vec![0], vec![1]]),
            Err(EmbeddingError::BadRotation { vertex: 1 })
        );
    }

    #[test]
    fn non_planar_rotation_fails_euler() {
        // K4 with rotations that make a torus embedding
        let g = Graph::complete(4);
        // edges: 0:(0,1) 1:(0,2) 2:(0,3) 3:(1,2) 4:(1,3) 5:(2,3)
        let planar = Embedding::new(
            &g,
            vec![vec![0, 1, 2], vec![0, 4, 3], vec![1, 3, 5], vec![2, 5, 4]],
        )
        .unwrap();
        assert!(planar.satisfies_euler(&g));
        let twisted = Embedding::new(
            &g,
            vec![vec![0, 1, 2], vec![0, 3, 4], vec![1, 3, 5], vec![2, 5, 4]],
        )
        .unwrap();
        assert!(!twisted.satisfies_euler(&g));
    }
}
