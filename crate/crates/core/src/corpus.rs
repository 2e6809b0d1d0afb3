//! Test corpora of embedded toroidal graphs and of small random graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embedding::RotationSystem;
use crate::error::Result;
use crate::generators::{gen_grid, gen_named, GridSpec, NamedGraph};
use crate::graph::Graph;

pub const DEFAULT_SEED: u64 = 2024;

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub rot: RotationSystem,
}

impl CorpusEntry {
    pub fn graph(&self) -> &Graph {
        self.rot.graph()
    }
}

/// Every simple grid `G[m×n,k]` with `m·n <= max_order`.
pub fn grid_specs(max_order: usize) -> Vec<GridSpec> {
    let mut out = Vec::new();
    for m in 1..=max_order {
        for n in 1..=max_order / m {
            for k in 1..=m {
                let spec = GridSpec::new(m, n, k);
                if spec.is_simple() {
                    out.push(spec);
                }
            }
        }
    }
    out
}

/// The grids of order at most 49 with their canonical triangulations, then
/// `K7` and `T11`.
pub fn toroidal_corpus() -> Vec<CorpusEntry> {
    let mut out: Vec<CorpusEntry> = grid_specs(49)
        .into_iter()
        .map(|s| CorpusEntry { name: NamedGraph::Grid(s).token(), rot: gen_grid(&s).expect("simple grids generate") })
        .collect();
    for name in [NamedGraph::K7, NamedGraph::T11] {
        let rot = gen_named(&name).expect("named graphs generate").1.expect("K7 and T11 are embedded");
        out.push(CorpusEntry { name: name.token(), rot });
    }
    out
}

/// Removes `u v` from an embedding, keeping the other rotations intact.
fn delete_edge(rot: &RotationSystem, u: usize, v: usize) -> Result<RotationSystem> {
    let n = rot.graph().n();
    let rotation = (0..n)
        .map(|x| rot.rotation(x).iter().copied().filter(|&w| !((x == u && w == v) || (x == v && w == u))).collect())
        .collect();
    let g = Graph::from_edges(n, rot.graph().edges().filter(|&e| e != (u.min(v), u.max(v))))?;
    RotationSystem::new(g, rotation)
}

/// Sparser toroidal graphs: each picks a corpus grid and deletes up to a
/// third of its edges. An edge is only deleted when it separates two
/// different faces and its removal keeps the graph connected, so the
/// embedding stays cellular on the torus.
pub fn random_subgraph_corpus(seed: u64, count: usize) -> Result<Vec<CorpusEntry>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = grid_specs(49);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let spec = *base.choose(&mut rng).expect("corpus is non-empty");
        let mut rot = gen_grid(&spec)?;
        let target = rng.gen_range(1..=rot.graph().edge_count() / 3);
        let mut edges: Vec<(usize, usize)> = rot.graph().edges().collect();
        edges.shuffle(&mut rng);
        let mut removed = 0;
        for (u, v) in edges {
            if removed == target {
                break;
            }
            let faces = rot.trace_faces();
            let of = rot.dart_faces(&faces);
            let fwd = of[&crate::embedding::Dart { tail: u, head: v }];
            let bwd = of[&crate::embedding::Dart { tail: v, head: u }];
            if fwd == bwd {
                continue;
            }
            let next = delete_edge(&rot, u, v)?;
            if next.graph().is_connected() {
                rot = next;
                removed += 1;
            }
        }
        out.push(CorpusEntry { name: format!("sub{i}:{}-{removed}", NamedGraph::Grid(spec).token()), rot });
    }
    Ok(out)
}

/// A connected random graph on `n` vertices with edge probability `p`,
/// resampled until connected.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    loop {
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
        let g = Graph::from_edges(n, edges).expect("edges are in range");
        if g.is_connected() {
            return g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_large_and_toroidal() {
        let c = toroidal_corpus();
        assert!(c.len() >= 50, "{}", c.len());
        for e in &c {
            assert_eq!(e.rot.euler_genus(), 2, "{}", e.name);
        }
    }

    #[test]
    fn random_subgraphs_stay_on_the_torus() {
        let a = random_subgraph_corpus(3, 6).unwrap();
        let b = random_subgraph_corpus(3, 6).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.rot.euler_genus(), 2);
            assert!(x.graph().is_connected());
        }
    }
}
