//! Planarity testing by incremental face embedding (Demoucron, Malgrange and
//! Pertuiset), run separately on every biconnected block.

use std::collections::{HashSet, VecDeque};

use crate::graph::Graph;

/// True iff `g` has a plane embedding.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.n();
    let m = g.edge_count();
    if n >= 3 && m > 3 * n - 6 {
        return false;
    }
    blocks(g).into_iter().all(|edges| {
        if edges.len() < 3 {
            return true;
        }
        let mut verts: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let local = |x: usize| verts.binary_search(&x).expect("block vertex");
        let block = Graph::from_edges(verts.len(), edges.iter().map(|&(u, v)| (local(u), local(v))).collect::<Vec<_>>())
            .expect("block edges are valid");
        let (bn, bm) = (block.n(), block.edge_count());
        if bn >= 3 && bm > 3 * bn - 6 {
            return false;
        }
        embed_biconnected(&block)
    })
}

/// Edge sets of the biconnected components (Hopcroft–Tarjan, iterative).
fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut out = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbor index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut comp = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            comp.push(e);
                            if e == (p, v) {
                                break;
                            }
                        }
                        out.push(comp);
                    }
                }
            }
        }
    }
    out
}

fn find_cycle(g: &Graph) -> Vec<usize> {
    // DFS until a back edge closes a cycle
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    depth[0] = 0;
    let mut stack = vec![(0usize, 0usize)];
    while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
        if *idx < g.degree(v) {
            let w = g.neighbors(v)[*idx];
            *idx += 1;
            if w == parent[v] {
                continue;
            }
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                stack.push((w, 0));
            } else if depth[w] < depth[v] {
                let mut cycle = vec![v];
                let mut x = v;
                while x != w {
                    x = parent[x];
                    cycle.push(x);
                }
                return cycle;
            }
        } else {
            stack.pop();
        }
    }
    unreachable!("biconnected block with 3+ edges has a cycle")
}

struct Fragment {
    attachments: Vec<usize>,
    /// A path through the fragment joining two distinct attachments.
    path: Vec<usize>,
}

fn embed_biconnected(g: &Graph) -> bool {
    let n = g.n();
    let cycle = find_cycle(g);
    let mut embedded_v = vec![false; n];
    let mut embedded_e: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        embedded_v[a] = true;
        embedded_e.insert((a.min(b), a.max(b)));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.into_iter().rev().collect()];

    loop {
        let fragments = fragments(g, &embedded_v, &embedded_e);
        if fragments.is_empty() {
            return true;
        }
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments.iter().all(|a| faces[f].contains(a)))
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face) = choice.expect("fragments exist");
        let path = &fragments[fi].path;
        for w in path.windows(2) {
            embedded_e.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        for &v in path {
            embedded_v[v] = true;
        }
        let old = faces.swap_remove(face);
        let (f1, f2) = split_face(&old, path);
        faces.push(f1);
        faces.push(f2);
    }
}

/// Splits the cyclic face `face` along `path`, whose ends lie on the face
/// and whose interior is new.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().expect("non-empty path");
    let ia = face.iter().position(|&x| x == a).expect("path start on face");
    let mut rotated = face.to_vec();
    rotated.rotate_left(ia);
    let ib = rotated.iter().position(|&x| x == b).expect("path end on face");
    let inner = &path[1..path.len() - 1];
    // a .. b along the face, then back along the path
    let mut f1: Vec<usize> = rotated[..=ib].to_vec();
    f1.extend(inner.iter().rev());
    // b .. a along the face, then forward along the path
    let mut f2: Vec<usize> = rotated[ib..].to_vec();
    f2.push(a);
    f2.extend(inner.iter());
    (f1, f2)
}

fn fragments(g: &Graph, embedded_v: &[bool], embedded_e: &HashSet<(usize, usize)>) -> Vec<Fragment> {
    let n = g.n();
    let mut out = Vec::new();
    // single edges between embedded vertices
    for (u, v) in g.edges() {
        if embedded_v[u] && embedded_v[v] && !embedded_e.contains(&(u, v)) {
            out.push(Fragment { attachments: vec![u, v], path: vec![u, v] });
        }
    }
    // components of the unembedded part with their attachments
    let mut comp_id = vec![usize::MAX; n];
    for s in 0..n {
        if embedded_v[s] || comp_id[s] != usize::MAX {
            continue;
        }
        let id = s;
        comp_id[s] = id;
        let mut members = vec![s];
        let mut queue = VecDeque::from([s]);
        let mut attachments = Vec::new();
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if embedded_v[y] {
                    attachments.push(y);
                } else if comp_id[y] == usize::MAX {
                    comp_id[y] = id;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        let path = fragment_path(g, embedded_v, &comp_id, id, &members, &attachments);
        out.push(Fragment { attachments, path });
    }
    out
}

fn fragment_path(
    g: &Graph,
    embedded_v: &[bool],
    comp_id: &[usize],
    id: usize,
    members: &[usize],
    attachments: &[usize],
) -> Vec<usize> {
    let a = attachments[0];
    let start = *members.iter().find(|&&x| g.has_edge(x, a)).expect("component touches its first attachment");
    let mut parent = std::collections::HashMap::from([(start, start)]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        if let Some(&b) = g.neighbors(x).iter().find(|&&y| embedded_v[y] && y != a) {
            let mut path = vec![b, x];
            let mut y = x;
            while y != start {
                y = parent[&y];
                path.push(y);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &y in g.neighbors(x) {
            if !embedded_v[y] && comp_id[y] == id && !parent.contains_key(&y) {
                parent.insert(y, x);
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragments of a biconnected graph have two attachments")
}
