//! Isomorphism testing by colour refinement with individualisation.
//!
//! Both graphs are refined together as one disjoint union so that cell
//! labels are directly comparable. Intended for graphs of a few dozen
//! vertices; the search is exponential in the worst case.

use std::collections::HashMap;

use crate::graph::Graph;

/// Returns a bijection `f` with `uv ∈ E(g1) ⟺ f(u)f(v) ∈ E(g2)`, or `None`.
/// Every returned witness has been re-checked edge by edge.
pub fn find_isomorphism(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let n = g1.n();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut d1: Vec<usize> = (0..n).map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..n).map(|v| g2.degree(v)).collect();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return None;
    }

    let union = Union { g1, g2 };
    let colors = refine(&union, vec![0; 2 * n])?;
    let witness = search(&union, colors)?;
    debug_assert!(is_isomorphism(g1, g2, &witness));
    Some(witness)
}

pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    find_isomorphism(g1, g2).is_some()
}

/// Checks that `map` is a bijection carrying the edges of `g1` exactly onto
/// the edges of `g2`.
pub fn is_isomorphism(g1: &Graph, g2: &Graph, map: &[usize]) -> bool {
    let n = g1.n();
    if g2.n() != n || map.len() != n || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let mut hit = vec![false; n];
    for &w in map {
        if w >= n || hit[w] {
            return false;
        }
        hit[w] = true;
    }
    g1.edges().all(|(u, v)| g2.has_edge(map[u], map[v]))
}

struct Union<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
}

impl Union<'_> {
    fn size(&self) -> usize {
        self.g1.n() * 2
    }

    fn neighbors(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.g1.n();
        let (g, off) = if x < n { (self.g1, 0) } else { (self.g2, n) };
        g.neighbors(x - off).iter().map(move |&y| y + off)
    }
}

/// Refines to the coarsest equitable colouring. Returns `None` as soon as
/// the two halves disagree on some cell size.
fn refine(u: &Union<'_>, mut colors: Vec<usize>) -> Option<Vec<usize>> {
    let total = u.size();
    let n = total / 2;
    let mut cells = count_cells(&colors);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..total)
            .map(|x| {
                let mut nb: Vec<usize> = u.neighbors(x).map(|y| colors[y]).collect();
                nb.sort_unstable();
                (colors[x], nb)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = signatures.iter().collect();
        distinct.sort();
        distinct.dedup();
        let index: HashMap<&(usize, Vec<usize>), usize> = distinct.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        colors = signatures.iter().map(|s| index[s]).collect();

        let mut left = vec![0usize; distinct.len()];
        let mut right = vec![0usize; distinct.len()];
        for x in 0..n {
            left[colors[x]] += 1;
            right[colors[x + n]] += 1;
        }
        if left != right {
            return None;
        }
        if distinct.len() == cells {
            return Some(colors);
        }
        cells = distinct.len();
    }
}

fn count_cells(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn search(u: &Union<'_>, colors: Vec<usize>) -> Option<Vec<usize>> {
    let n = u.g1.n();
    // first non-singleton cell, by smallest left vertex
    let mut size = HashMap::new();
    for &c in &colors[..n] {
        *size.entry(c).or_insert(0usize) += 1;
    }
    let Some(v) = (0..n).find(|&x| size[&colors[x]] > 1) else {
        let mut right = HashMap::new();
        for (y, &c) in colors[n..2 * n].iter().enumerate() {
            right.insert(c, y);
        }
        let map: Vec<usize> = (0..n).map(|x| right[&colors[x]]).collect();
        return is_isomorphism(u.g1, u.g2, &map).then_some(map);
    };
    let fresh = colors.iter().max().copied().unwrap_or(0) + 1;
    for w in (n..2 * n).filter(|&y| colors[y] == colors[v]) {
        let mut next = colors.clone();
        next[v] = fresh;
        next[w] = fresh;
        if let Some(refined) = refine(u, next) {
            if let Some(map) = search(u, refined) {
                return Some(map);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_vs_p5() {
        assert!(!are_isomorphic(&Graph::cycle(5), &Graph::path(5)));
    }

    #[test]
    fn petersen_relabelled() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        let p = Graph::from_edges(10, outer.chain(spokes).chain(inner).collect::<Vec<_>>()).unwrap();
        let perm = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4];
        let q = p.permuted(&perm);
        let w = find_isomorphism(&p, &q).unwrap();
        assert!(is_isomorphism(&p, &q, &w));
    }

    #[test]
    fn regular_non_isomorphic() {
        // C6 vs two triangles: same degree sequence, refinement alone cannot split
        let two = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&Graph::cycle(6), &two));
    }

    #[test]
    fn witness_check_rejects_non_bijection() {
        let g = Graph::cycle(4);
        assert!(!is_isomorphism(&g, &g, &[0, 0, 2, 3]));
        assert!(is_isomorphism(&g, &g, &[1, 2, 3, 0]));
    }
}
