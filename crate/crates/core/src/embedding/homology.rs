//! Z₂ homology signatures from a tree–cotree decomposition, and shortest
//! non-contractible cycles.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use rayon::prelude::*;

use super::RotationSystem;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vector over Z₂ of length equal to the Euler genus, packed into a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct HomologySignature {
    bits: u64,
    len: u8,
}

impl HomologySignature {
    pub fn zero(len: usize) -> Self {
        HomologySignature { bits: 0, len: len as u8 }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        HomologySignature { bits: 1 << i, len: len as u8 }
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }
}

impl std::ops::Add for HomologySignature {
    type Output = Self;

    // addition over Z2
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Self) -> Self {
        HomologySignature { bits: self.bits ^ rhs.bits, len: self.len.max(rhs.len) }
    }
}

impl std::ops::AddAssign for HomologySignature {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl fmt::Display for HomologySignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Edge signatures: a basis of Z₂ cocycles that vanish on a spanning tree
/// and sum to zero around every face.
#[derive(Debug, Clone)]
pub struct EdgeSignatures {
    genus: usize,
    sig: HashMap<(usize, usize), HomologySignature>,
    tree: HashSet<(usize, usize)>,
    cotree: HashSet<(usize, usize)>,
    leftover: Vec<(usize, usize)>,
}

impl EdgeSignatures {
    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn edge(&self, u: usize, v: usize) -> HomologySignature {
        self.sig[&key(u, v)]
    }

    /// Sum over the edges of a closed walk `w[0] w[1] ... w[last] w[0]`.
    pub fn closed_walk(&self, walk: &[usize]) -> HomologySignature {
        let mut s = HomologySignature::zero(self.genus);
        for i in 0..walk.len() {
            s += self.edge(walk[i], walk[(i + 1) % walk.len()]);
        }
        s
    }

    pub fn tree_edges(&self) -> &HashSet<(usize, usize)> {
        &self.tree
    }

    pub fn cotree_edges(&self) -> &HashSet<(usize, usize)> {
        &self.cotree
    }

    /// Edges outside both trees; one per homology generator.
    pub fn leftover_edges(&self) -> &[(usize, usize)] {
        &self.leftover
    }
}

/// Tree–cotree decomposition. The spanning tree is the breadth-first tree
/// from vertex 0 and the dual tree is grown breadth-first from face 0.
pub fn edge_signatures(rot: &RotationSystem) -> Result<EdgeSignatures> {
    let g = rot.graph();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let genus = rot.euler_genus();
    if genus > 64 {
        return Err(Error::Precondition(format!("Euler genus {genus} exceeds 64")));
    }
    let n = g.n();
    let mut tree = HashSet::new();
    if n > 0 {
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    tree.insert(key(x, y));
                    queue.push_back(y);
                }
            }
        }
    }

    let faces = rot.trace_faces();
    let dart_face = rot.dart_faces(&faces);
    let mut cotree = HashSet::new();
    // (face, edge to its parent in the dual tree), in discovery order
    let mut order: Vec<(usize, Option<(usize, usize)>)> = Vec::new();
    if !faces.is_empty() {
        let mut seen = vec![false; faces.len()];
        seen[0] = true;
        order.push((0, None));
        let mut head = 0;
        while head < order.len() {
            let f = order[head].0;
            head += 1;
            for d in &faces[f].darts {
                let e = key(d.tail, d.head);
                if tree.contains(&e) || cotree.contains(&e) {
                    continue;
                }
                let other = dart_face[&d.reversed()];
                if !seen[other] {
                    seen[other] = true;
                    cotree.insert(e);
                    order.push((other, Some(e)));
                }
            }
        }
    }

    let mut leftover: Vec<(usize, usize)> =
        g.edges().filter(|e| !tree.contains(e) && !cotree.contains(e)).collect();
    leftover.sort_unstable();
    if leftover.len() != genus {
        return Err(Error::MalformedRotation(format!(
            "tree-cotree left {} edges for Euler genus {genus}",
            leftover.len()
        )));
    }

    let mut sig: HashMap<(usize, usize), HomologySignature> = HashMap::new();
    for &e in &tree {
        sig.insert(e, HomologySignature::zero(genus));
    }
    for (i, &e) in leftover.iter().enumerate() {
        sig.insert(e, HomologySignature::unit(genus, i));
    }
    // leaves of the dual tree first: the parent edge is the only unknown
    for &(f, parent) in order.iter().rev() {
        let Some(pe) = parent else { continue };
        let mut s = HomologySignature::zero(genus);
        for d in &faces[f].darts {
            let e = key(d.tail, d.head);
            if e != pe {
                s += sig[&e];
            }
        }
        sig.insert(pe, s);
    }

    for f in &faces {
        let mut s = HomologySignature::zero(genus);
        for d in &f.darts {
            s += sig[&key(d.tail, d.head)];
        }
        if !s.is_zero() {
            return Err(Error::MalformedRotation("facial walk with nonzero signature".into()));
        }
    }

    Ok(EdgeSignatures { genus, sig, tree, cotree, leftover })
}

/// A simple cycle given by its vertex sequence, with its homology signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCert {
    pub vertices: Vec<usize>,
    pub signature: HomologySignature,
}

impl CycleCert {
    /// Validates that `vertices` is a simple cycle of the embedded graph and
    /// records its signature.
    pub fn new(rot: &RotationSystem, sigs: &EdgeSignatures, vertices: Vec<usize>) -> Result<Self> {
        check_cycle(rot.graph(), &vertices)?;
        let signature = sigs.closed_walk(&vertices);
        Ok(CycleCert { vertices, signature })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// No chords, and no vertex of `g` sees more than three cycle vertices.
    pub fn satisfies_shortest_cycle_properties(&self, g: &Graph) -> bool {
        is_induced_cycle(g, &self.vertices) && max_neighbors_on(g, &self.vertices) <= 3
    }
}

pub(crate) fn check_cycle(g: &Graph, vertices: &[usize]) -> Result<()> {
    if vertices.len() < 3 {
        return Err(Error::InvalidCycle(format!("length {} is below 3", vertices.len())));
    }
    let mut seen = HashSet::new();
    for &v in vertices {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if !seen.insert(v) {
            return Err(Error::InvalidCycle(format!("vertex {v} repeats")));
        }
    }
    for i in 0..vertices.len() {
        let (a, b) = (vertices[i], vertices[(i + 1) % vertices.len()]);
        if !g.has_edge(a, b) {
            return Err(Error::InvalidCycle(format!("{a} and {b} are not adjacent")));
        }
    }
    Ok(())
}

pub(crate) fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let on: HashSet<usize> = cycle.iter().copied().collect();
    let inner_edges = g.edges().filter(|(u, v)| on.contains(u) && on.contains(v)).count();
    inner_edges == cycle.len()
}

pub(crate) fn max_neighbors_on(g: &Graph, cycle: &[usize]) -> usize {
    let on: HashSet<usize> = cycle.iter().copied().collect();
    (0..g.n()).map(|w| g.neighbors(w).iter().filter(|x| on.contains(x)).count()).max().unwrap_or(0)
}

fn require_torus(rot: &RotationSystem) -> Result<()> {
    match rot.euler_genus() {
        2 => Ok(()),
        eg => Err(Error::NotToroidal(eg)),
    }
}

/// On the torus a cycle is contractible iff its Z₂ signature vanishes.
/// Other surfaces are refused.
pub fn is_contractible(rot: &RotationSystem, cycle: &CycleCert) -> Result<bool> {
    require_torus(rot)?;
    check_cycle(rot.graph(), &cycle.vertices)?;
    let sigs = edge_signatures(rot)?;
    Ok(sigs.closed_walk(&cycle.vertices).is_zero())
}

/// Rotates a cycle so the smallest vertex comes first and the smaller of
/// its two cycle neighbours second.
pub(crate) fn canonical_cycle(mut c: Vec<usize>) -> Vec<usize> {
    let start = (0..c.len()).min_by_key(|&i| c[i]).unwrap_or(0);
    c.rotate_left(start);
    if c.len() > 2 && c[c.len() - 1] < c[1] {
        c[1..].reverse();
    }
    c
}

/// Shortest cycle with nonzero signature. Candidates are the fundamental
/// cycles of every vertex's breadth-first tree; ties are broken by the
/// lexicographically smallest canonical vertex sequence. The result is
/// identical whatever the number of worker threads.
pub fn shortest_noncontractible_cycle(rot: &RotationSystem) -> Result<CycleCert> {
    require_torus(rot)?;
    let sigs = edge_signatures(rot)?;
    let g = rot.graph();
    let best = (0..g.n())
        .into_par_iter()
        .filter_map(|root| best_from_root(g, &sigs, root))
        .min()
        .ok_or_else(|| Error::Precondition("no non-contractible cycle found".into()))?;
    let cert = CycleCert::new(rot, &sigs, best.1)?;
    if cert.signature.is_zero() {
        return Err(Error::InvalidCycle("selected cycle is null-homologous".into()));
    }
    if !cert.satisfies_shortest_cycle_properties(g) {
        return Err(Error::InvalidCycle(format!(
            "shortest non-contractible cycle {:?} has a chord or a vertex with 4+ neighbors on it",
            cert.vertices
        )));
    }
    Ok(cert)
}

fn best_from_root(g: &Graph, sigs: &EdgeSignatures, root: usize) -> Option<(usize, Vec<usize>)> {
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut prefix = vec![HomologySignature::zero(sigs.genus()); n];
    let mut order = Vec::with_capacity(n);
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &y in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                prefix[y] = prefix[x] + sigs.edge(x, y);
                queue.push_back(y);
            }
        }
    }

    let to_root = |mut v: usize| {
        let mut p = vec![v];
        while v != root {
            v = parent[v];
            p.push(v);
        }
        p
    };

    let mut best: Option<(usize, Vec<usize>)> = None;
    for (a, b) in g.edges() {
        if parent[a] == b || parent[b] == a {
            continue;
        }
        if (prefix[a] + prefix[b] + sigs.edge(a, b)).is_zero() {
            continue;
        }
        // root ... a, b ... root, with any shared stem cut off
        let mut pa = to_root(a);
        let mut pb = to_root(b);
        while pa.len() > 1 && pb.len() > 1 && pa[pa.len() - 2] == pb[pb.len() - 2] {
            pa.pop();
            pb.pop();
        }
        pb.pop();
        pa.reverse();
        pa.extend(pb);
        let cycle = canonical_cycle(pa);
        let cand = (cycle.len(), cycle);
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_grid, GridSpec};

    fn grid(m: usize, n: usize, k: usize) -> RotationSystem {
        gen_grid(&GridSpec::new(m, n, k)).unwrap()
    }

    #[test]
    fn faces_have_zero_signature_and_leftovers_match_genus() {
        let rot = grid(4, 5, 2);
        let sigs = edge_signatures(&rot).unwrap();
        assert_eq!(sigs.genus(), 2);
        assert_eq!(sigs.leftover_edges().len(), 2);
        for f in rot.trace_faces() {
            assert!(sigs.closed_walk(&f.vertices()).is_zero());
        }
    }

    #[test]
    fn planar_rotation_has_empty_signatures() {
        let planar = vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]];
        let rot = RotationSystem::from_rotation(planar).unwrap();
        let sigs = edge_signatures(&rot).unwrap();
        assert_eq!(sigs.genus(), 0);
        assert!(rot.graph().edges().all(|(u, v)| sigs.edge(u, v).is_zero()));
    }

    #[test]
    fn row_and_column_cycles_independent() {
        // G[3x3,1]: vertex (i,j) has index 3(i-1)+(j-1)
        let rot = grid(3, 3, 1);
        let sigs = edge_signatures(&rot).unwrap();
        let row = CycleCert::new(&rot, &sigs, vec![0, 1, 2]).unwrap();
        let col = CycleCert::new(&rot, &sigs, vec![0, 3, 6]).unwrap();
        assert!(!row.signature.is_zero());
        assert!(!col.signature.is_zero());
        assert_ne!(row.signature, col.signature);
    }

    #[test]
    fn contractibility_on_4x4() {
        let rot = grid(4, 4, 1);
        let sigs = edge_signatures(&rot).unwrap();
        let face = rot.trace_faces()[0].vertices();
        let tri = CycleCert::new(&rot, &sigs, face).unwrap();
        assert!(is_contractible(&rot, &tri).unwrap());
        let column = CycleCert::new(&rot, &sigs, vec![0, 4, 8, 12]).unwrap();
        assert!(!is_contractible(&rot, &column).unwrap());
        // triangles (0,1,4) and (1,5,4) share the diagonal 1-4
        let quad = CycleCert::new(&rot, &sigs, vec![0, 1, 5, 4]).unwrap();
        assert!(is_contractible(&rot, &quad).unwrap());
    }

    #[test]
    fn contractibility_refuses_other_genus() {
        let planar = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
        let rot = RotationSystem::from_rotation(planar).unwrap();
        let sigs = edge_signatures(&rot).unwrap();
        let c = CycleCert::new(&rot, &sigs, vec![0, 1, 2]).unwrap();
        assert_eq!(is_contractible(&rot, &c), Err(Error::NotToroidal(0)));
        assert_eq!(shortest_noncontractible_cycle(&rot), Err(Error::NotToroidal(0)));
    }

    #[test]
    fn canonical_rotation_of_cycles() {
        assert_eq!(canonical_cycle(vec![5, 2, 9, 1]), vec![1, 5, 2, 9]);
        assert_eq!(canonical_cycle(vec![3, 1, 2]), vec![1, 2, 3]);
    }
}
