//! Cutting a torus along a non-contractible cycle, and path contraction.

use std::collections::HashSet;

use super::homology::{check_cycle, edge_signatures, CycleCert};
use super::planarity::is_planar;
use super::RotationSystem;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// The planar graph obtained by cutting along a cycle and contracting both
/// copies of it.
#[derive(Debug, Clone)]
pub struct CutResult {
    pub graph: Graph,
    /// Contracted copy on the side of the smallest non-cycle neighbour.
    pub u: usize,
    /// The other contracted copy.
    pub v: usize,
    /// Original vertex -> index in `graph`; cycle vertices map to `None`.
    pub map: Vec<Option<usize>>,
    /// Index in `graph` -> original vertex, for every vertex except `u`, `v`.
    pub back: Vec<usize>,
}

/// Cuts the torus along `cycle` and contracts each of the two resulting
/// copies to a single vertex.
///
/// At each cycle vertex the neighbours strictly between the outgoing and
/// incoming cycle darts (counterclockwise) lie on one side, the rest on the
/// other. Parallel edges created by the contraction are merged. The result
/// is checked to be planar.
pub fn cut_and_contract(rot: &RotationSystem, cycle: &CycleCert) -> Result<CutResult> {
    let eg = rot.euler_genus();
    if eg != 2 {
        return Err(Error::NotToroidal(eg));
    }
    let g = rot.graph();
    let c = &cycle.vertices;
    check_cycle(g, c)?;
    let sigs = edge_signatures(rot)?;
    if sigs.closed_walk(c).is_zero() {
        return Err(Error::ContractibleCycle);
    }

    let len = c.len();
    let on: HashSet<usize> = c.iter().copied().collect();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for i in 0..len {
        let x = c[i];
        let next = c[(i + 1) % len];
        let prev = c[(i + len - 1) % len];
        let r = rot.rotation(x);
        let d = r.len();
        let pn = r.iter().position(|&w| w == next).expect("cycle edge");
        let pp = r.iter().position(|&w| w == prev).expect("cycle edge");
        let mut pos = (pn + 1) % d;
        let mut side_left = true;
        for _ in 0..d - 1 {
            if pos == pp {
                side_left = false;
            } else {
                let w = r[pos];
                if on.contains(&w) {
                    return Err(Error::InvalidCycle(format!("chord {x}-{w}")));
                }
                if side_left {
                    left.push((w, x));
                } else {
                    right.push((w, x));
                }
            }
            pos = (pos + 1) % d;
        }
    }

    let smallest_left = left.iter().map(|&(w, _)| w).min();
    let smallest_right = right.iter().map(|&(w, _)| w).min();
    let swap = match (smallest_left, smallest_right) {
        (Some(a), Some(b)) => b < a,
        (None, Some(_)) => true,
        _ => false,
    };
    if swap {
        std::mem::swap(&mut left, &mut right);
    }

    let n = g.n();
    let mut map = vec![None; n];
    let mut back = Vec::new();
    for (x, slot) in map.iter_mut().enumerate() {
        if !on.contains(&x) {
            *slot = Some(back.len());
            back.push(x);
        }
    }
    let u = back.len();
    let v = u + 1;
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .filter_map(|(a, b)| Some((map[a]?, map[b]?)))
        .collect();
    edges.extend(left.iter().map(|&(w, _)| (map[w].expect("non-cycle"), u)));
    edges.extend(right.iter().map(|&(w, _)| (map[w].expect("non-cycle"), v)));
    if back.is_empty() {
        edges.push((u, v));
    }
    let graph = Graph::from_edges(v + 1, edges)?;
    if !is_planar(&graph) {
        return Err(Error::Precondition("cut-and-contract produced a non-planar graph".into()));
    }
    Ok(CutResult { graph, u, v, map, back })
}

/// Merges the vertices of `path` into one vertex `vstar`, dropping loops and
/// parallel edges. Other vertices keep their relative order; `vstar` is
/// the last vertex. Returns the new graph, `vstar`, and the vertex map.
pub fn contract_path(g: &Graph, path: &[usize]) -> Result<(Graph, usize, Vec<usize>)> {
    if path.is_empty() {
        return Err(Error::InvalidPath("empty path".into()));
    }
    let n = g.n();
    let mut on = vec![false; n];
    for &x in path {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
        if on[x] {
            return Err(Error::InvalidPath(format!("vertex {x} repeats")));
        }
        on[x] = true;
    }
    if let Some(w) = path.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
        return Err(Error::InvalidPath(format!("{} and {} are not adjacent", w[0], w[1])));
    }
    let mut map = vec![0; n];
    let mut next = 0;
    for x in 0..n {
        if !on[x] {
            map[x] = next;
            next += 1;
        }
    }
    let vstar = next;
    for &x in path {
        map[x] = vstar;
    }
    let edges: Vec<_> = g.edges().map(|(a, b)| (map[a], map[b])).filter(|(a, b)| a != b).collect();
    Ok((Graph::from_edges(vstar + 1, edges)?, vstar, map))
}
