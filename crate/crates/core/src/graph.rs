//! Simple undirected graphs on dense vertex indices `0..n`.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A simple undirected graph. Vertices are `0..n`; adjacency lists are kept
/// sorted and free of loops and duplicates, so two graphs compare equal iff
/// they have the same labelled edge set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph edges are valid")
    }

    /// Cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.components().len() == 1
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Breadth-first distances from `s` (`usize::MAX` for unreachable).
    pub fn bfs_distances(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[x] >= b {
                        break;
                    }
                }
                for &y in &self.adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        let len = dist[x] + dist[y] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Minimum-degree peeling. Returns the degeneracy and the 6-core (the
    /// maximal induced subgraph of minimum degree at least 6), which is
    /// empty unless the degeneracy is at least 6.
    pub fn degeneracy(&self) -> (usize, Vec<usize>) {
        let n = self.n();
        let mut deg: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut removed = vec![false; n];
        let mut d = 0;
        for _ in 0..n {
            // smallest index among minimum-degree vertices
            let v = (0..n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (deg[v], v))
                .expect("vertex remains");
            d = d.max(deg[v]);
            removed[v] = true;
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                }
            }
        }
        (d, self.k_core(6))
    }

    /// Vertices of the `k`-core, sorted.
    pub fn k_core(&self, k: usize) -> Vec<usize> {
        let n = self.n();
        let mut deg: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut alive = vec![true; n];
        let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] < k).collect();
        while let Some(v) = stack.pop() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for &w in &self.adj[v] {
                if alive[w] {
                    deg[w] -= 1;
                    if deg[w] < k {
                        stack.push(w);
                    }
                }
            }
        }
        (0..n).filter(|&v| alive[v]).collect()
    }

    /// Join: vertices of `other` are shifted by `self.n()` and every cross
    /// pair becomes an edge.
    pub fn join(&self, other: &Graph) -> Graph {
        let n1 = self.n();
        let n = n1 + other.n();
        let own = self.edges();
        let theirs = other.edges().map(|(u, v)| (u + n1, v + n1));
        let cross = (0..n1).flat_map(|u| (n1..n).map(move |v| (u, v)));
        Graph::from_edges(n, own.chain(theirs).chain(cross).collect::<Vec<_>>())
            .expect("join edges are valid")
    }

    /// Subgraph induced on `vertices`. Returns the subgraph and, for each of
    /// its vertices, the original index. The order of `vertices` is kept.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let n = self.n();
        let mut local = vec![usize::MAX; n];
        let mut map = Vec::with_capacity(vertices.len());
        for &v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if local[v] == usize::MAX {
                local[v] = map.len();
                map.push(v);
            }
        }
        let edges: Vec<_> = map
            .iter()
            .enumerate()
            .flat_map(|(i, &v)| {
                let local = &local;
                self.adj[v]
                    .iter()
                    .filter(move |&&w| local[w] != usize::MAX && i < local[w])
                    .map(move |&w| (i, local[w]))
            })
            .collect();
        Ok((Graph::from_edges(map.len(), edges)?, map))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        Graph::from_edges(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])).collect::<Vec<_>>())
            .expect("permutation keeps the graph simple")
    }

    /// Checks the representation invariants: no loops, symmetric, sorted
    /// without duplicates.
    pub fn check_invariants(&self) -> bool {
        self.adj.iter().enumerate().all(|(v, list)| {
            list.windows(2).all(|w| w[0] < w[1])
                && list.iter().all(|&w| w != v && w < self.n() && self.adj[w].binary_search(&v).is_ok())
        })
    }
}

/// Breadth-first shortest path from `u` to `v`; neighbors are explored in
/// increasing index order, which fixes the tie-break.
pub fn shortest_path(g: &Graph, u: usize, v: usize) -> Result<Vec<usize>> {
    let n = g.n();
    for w in [u, v] {
        if w >= n {
            return Err(Error::VertexOutOfRange { vertex: w, n });
        }
    }
    if u == v {
        return Err(Error::Precondition("shortest_path needs distinct endpoints".into()));
    }
    let mut parent = vec![usize::MAX; n];
    parent[u] = u;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for &y in g.neighbors(x) {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    if parent[v] == usize::MAX {
        return Err(Error::Unreachable { from: u, to: v });
    }
    let mut path = vec![v];
    let mut x = v;
    while x != u {
        x = parent[x];
        path.push(x);
    }
    path.reverse();
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::from_edges(3, [(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn build_collapses_duplicates() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.check_invariants());
        let k7 = Graph::complete(7);
        assert_eq!(k7.edge_count(), 21);
        assert!((0..7).all(|v| k7.degree(v) == 6));
    }

    #[test]
    fn girth_cases() {
        assert_eq!(Graph::cycle(5).girth(), Some(5));
        assert_eq!(Graph::complete(7).girth(), Some(3));
        assert_eq!(Graph::path(4).girth(), None);
        assert_eq!(Graph::cycle(8).girth(), Some(8));
        // two disjoint cycles of different length
        let g = Graph::from_edges(9, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 8), (8, 4)]).unwrap();
        assert_eq!(g.girth(), Some(4));
    }

    #[test]
    fn degeneracy_cases() {
        let tree = Graph::from_edges(6, [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        assert_eq!(tree.degeneracy(), (1, vec![]));
        let (d, core) = Graph::complete(7).degeneracy();
        assert_eq!(d, 6);
        assert_eq!(core, (0..7).collect::<Vec<_>>());
        let (d, core) = Graph::complete(6).degeneracy();
        assert_eq!((d, core.len()), (5, 0));
    }

    #[test]
    fn join_counts() {
        let g = Graph::cycle(3).join(&Graph::cycle(5));
        assert_eq!((g.n(), g.edge_count()), (8, 23));
        let k2 = Graph::empty(1).join(&Graph::empty(1));
        assert_eq!(k2, Graph::complete(2));
    }

    #[test]
    fn induced_subgraphs() {
        let (k4, map) = Graph::complete(7).induced_subgraph(&[6, 2, 4, 0]).unwrap();
        assert_eq!(k4, Graph::complete(4));
        assert_eq!(map, vec![6, 2, 4, 0]);
        let (p3, _) = Graph::cycle(5).induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(p3, Graph::path(3));
        let (e, _) = Graph::cycle(5).induced_subgraph(&[]).unwrap();
        assert_eq!(e.n(), 0);
        assert!(Graph::cycle(5).induced_subgraph(&[5]).is_err());
    }

    #[test]
    fn shortest_paths() {
        assert_eq!(shortest_path(&Graph::path(5), 0, 4).unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(shortest_path(&Graph::complete(7), 2, 5).unwrap(), vec![2, 5]);
        assert_eq!(shortest_path(&Graph::cycle(8), 0, 4).unwrap(), vec![0, 1, 2, 3, 4]);
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(shortest_path(&two, 0, 3), Err(Error::Unreachable { from: 0, to: 3 }));
    }
}
