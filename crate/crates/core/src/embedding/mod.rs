//! Rotation systems and the surface machinery built on them.
//!
//! A rotation system lists, for every vertex, its neighbors in
//! counterclockwise order. Faces are traced with a single rule: after the
//! dart `u -> v`, the walk continues along the successor of `v -> u` in the
//! rotation at `v`.

mod homology;
mod planarity;
mod surgery;

pub use homology::{
    edge_signatures, is_contractible, shortest_noncontractible_cycle, CycleCert, EdgeSignatures, HomologySignature,
};
pub use planarity::is_planar;
pub use surgery::{contract_path, cut_and_contract, CutResult};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A directed half of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub tail: usize,
    pub head: usize,
}

impl Dart {
    pub fn reversed(self) -> Dart {
        Dart { tail: self.head, head: self.tail }
    }
}

/// Counts reported by `embed-info`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingSummary {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub genus: usize,
    /// `(face degree, count)`, ascending.
    pub face_degrees: Vec<(usize, usize)>,
}

/// A closed boundary walk, as the sequence of darts traversed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.darts.len()
    }

    /// Vertices in walk order (tails of the darts).
    pub fn vertices(&self) -> Vec<usize> {
        self.darts.iter().map(|d| d.tail).collect()
    }
}

/// An orientable embedding given by per-vertex cyclic neighbor orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    /// `position[v][i]` is the index of `rotation[v][i]`'s reverse dart in
    /// the rotation of `rotation[v][i]`.
    reverse_pos: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Validates that each vertex lists every neighbor exactly once.
    pub fn new(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<Self> {
        let n = graph.n();
        if rotation.len() != n {
            return Err(Error::MalformedRotation(format!("{} rotations for {n} vertices", rotation.len())));
        }
        for (v, rot) in rotation.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != graph.neighbors(v) {
                return Err(Error::MalformedRotation(format!(
                    "rotation at vertex {v} lists {rot:?}, neighbors are {:?}",
                    graph.neighbors(v)
                )));
            }
        }
        let index: Vec<HashMap<usize, usize>> =
            rotation.iter().map(|rot| rot.iter().enumerate().map(|(i, &w)| (w, i)).collect()).collect();
        let reverse_pos = rotation
            .iter()
            .enumerate()
            .map(|(v, rot)| rot.iter().map(|&w| index[w][&v]).collect())
            .collect();
        Ok(RotationSystem { graph, rotation, reverse_pos })
    }

    /// Builds the graph from the rotation lists themselves.
    pub fn from_rotation(rotation: Vec<Vec<usize>>) -> Result<Self> {
        let n = rotation.len();
        let edges: Vec<_> =
            rotation.iter().enumerate().flat_map(|(v, rot)| rot.iter().map(move |&w| (v, w))).collect();
        let graph = Graph::from_edges(n, edges)?;
        for (v, rot) in rotation.iter().enumerate() {
            if rot.len() != graph.degree(v) {
                return Err(Error::MalformedRotation(format!("vertex {v} lists a neighbor twice")));
            }
        }
        RotationSystem::new(graph, rotation)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// The dart following `d` on its face.
    pub fn next_in_face(&self, d: Dart) -> Dart {
        let v = d.head;
        let pos = self.position(v, d.tail);
        let rot = &self.rotation[v];
        Dart { tail: v, head: rot[(pos + 1) % rot.len()] }
    }

    fn position(&self, v: usize, w: usize) -> usize {
        self.rotation[v].iter().position(|&x| x == w).expect("dart exists")
    }

    fn dart_index(&self) -> (Vec<usize>, usize) {
        let mut offset = Vec::with_capacity(self.graph.n());
        let mut total = 0;
        for rot in &self.rotation {
            offset.push(total);
            total += rot.len();
        }
        (offset, total)
    }

    /// Traces all faces. Every dart belongs to exactly one returned face.
    /// Faces are ordered by their first dart in (vertex, rotation position)
    /// order.
    pub fn trace_faces(&self) -> Vec<Face> {
        let (offset, total) = self.dart_index();
        let mut used = vec![false; total];
        let mut faces = Vec::new();
        for v in 0..self.graph.n() {
            for i in 0..self.rotation[v].len() {
                if used[offset[v] + i] {
                    continue;
                }
                let mut darts = Vec::new();
                let (mut x, mut j) = (v, i);
                while !used[offset[x] + j] {
                    used[offset[x] + j] = true;
                    let y = self.rotation[x][j];
                    darts.push(Dart { tail: x, head: y });
                    let back = self.reverse_pos[x][j];
                    let next = (back + 1) % self.rotation[y].len();
                    x = y;
                    j = next;
                }
                faces.push(Face { darts });
            }
        }
        faces
    }

    /// Euler genus `2c - (|V| - |E| + |F|)`, summed over the `c` connected
    /// components. Isolated vertices count as sphere components.
    pub fn euler_genus(&self) -> usize {
        let faces = self.trace_faces().len();
        let isolated = (0..self.graph.n()).filter(|&v| self.graph.degree(v) == 0).count();
        let c = self.graph.components().len() as i64;
        let chi = self.graph.n() as i64 - self.graph.edge_count() as i64 + (faces + isolated) as i64;
        let eg = 2 * c - chi;
        debug_assert!(eg >= 0 && eg % 2 == 0);
        eg as usize
    }

    /// For each dart, the index of the face containing it.
    pub fn dart_faces(&self, faces: &[Face]) -> HashMap<Dart, usize> {
        faces.iter().enumerate().flat_map(|(i, f)| f.darts.iter().map(move |&d| (d, i))).collect()
    }

    /// Histogram `face degree -> count`, ascending by degree.
    pub fn face_degree_histogram(&self) -> Vec<(usize, usize)> {
        let mut hist = std::collections::BTreeMap::new();
        for f in self.trace_faces() {
            *hist.entry(f.degree()).or_insert(0) += 1;
        }
        hist.into_iter().collect()
    }

    pub fn summary(&self) -> EmbeddingSummary {
        EmbeddingSummary {
            vertices: self.graph.n(),
            edges: self.graph.edge_count(),
            faces: self.trace_faces().len(),
            genus: self.euler_genus(),
            face_degrees: self.face_degree_histogram(),
        }
    }

    /// Applies a vertex relabelling `v -> perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> RotationSystem {
        let mut rotation = vec![Vec::new(); self.graph.n()];
        for v in 0..self.graph.n() {
            rotation[perm[v]] = self.rotation[v].iter().map(|&w| perm[w]).collect();
        }
        RotationSystem::new(self.graph.permuted(perm), rotation).expect("relabelling preserves validity")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_on_sphere() {
        for rot in [vec![vec![1, 2], vec![2, 0], vec![0, 1]], vec![vec![2, 1], vec![0, 2], vec![1, 0]]] {
            let r = RotationSystem::from_rotation(rot).unwrap();
            let faces = r.trace_faces();
            assert_eq!(faces.len(), 2);
            assert!(faces.iter().all(|f| f.degree() == 3));
            assert_eq!(r.euler_genus(), 0);
        }
    }

    #[test]
    fn tree_is_planar() {
        let rot = vec![vec![1, 2, 3], vec![0], vec![0, 4], vec![0], vec![2]];
        let r = RotationSystem::from_rotation(rot).unwrap();
        assert_eq!(r.trace_faces().len(), 1);
        assert_eq!(r.euler_genus(), 0);
    }

    #[test]
    fn k4_planar_and_toroidal_rotations() {
        // planar: vertex 3 in the middle of triangle 0,1,2 (ccw)
        let planar = vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]];
        let r = RotationSystem::from_rotation(planar).unwrap();
        assert_eq!(r.euler_genus(), 0);
        assert_eq!(r.trace_faces().len(), 4);
        // flip one rotation: genus rises
        let twisted = vec![vec![1, 2, 3], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]];
        let r = RotationSystem::from_rotation(twisted).unwrap();
        assert_eq!(r.euler_genus(), 2);
        let total: usize = r.trace_faces().iter().map(Face::degree).sum();
        assert_eq!(total, 12);
    }

    #[test]
    fn malformed_rotation_rejected() {
        let g = Graph::cycle(3);
        assert!(RotationSystem::new(g.clone(), vec![vec![1, 2], vec![0, 2], vec![0]]).is_err());
        assert!(RotationSystem::new(g, vec![vec![1, 1], vec![0, 2], vec![0, 1]]).is_err());
        assert!(RotationSystem::from_rotation(vec![vec![1, 1], vec![0, 0]]).is_err());
    }
}
