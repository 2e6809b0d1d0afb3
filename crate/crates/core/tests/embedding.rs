use std::collections::{HashMap, HashSet};

use torcol::corpus::{grid_specs, random_subgraph_corpus, toroidal_corpus};
use torcol::embedding::{
    contract_path, cut_and_contract, edge_signatures, is_contractible, is_planar, shortest_noncontractible_cycle,
    CycleCert, Dart, RotationSystem,
};
use torcol::generators::{gen_grid, gen_named, GridSpec, NamedGraph};
use torcol::{shortest_path, Graph};

/// Whether removing the cycle's edges disconnects the faces. On the torus a
/// simple cycle separates exactly when it is contractible; this uses no
/// homology at all.
fn separates(rot: &RotationSystem, cycle: &[usize]) -> bool {
    let faces = rot.trace_faces();
    let of = rot.dart_faces(&faces);
    let len = cycle.len();
    let on_cycle: HashSet<(usize, usize)> =
        (0..len).map(|i| (cycle[i].min(cycle[(i + 1) % len]), cycle[i].max(cycle[(i + 1) % len]))).collect();
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
    for (u, v) in rot.graph().edges() {
        if on_cycle.contains(&(u, v)) {
            continue;
        }
        let a = of[&Dart { tail: u, head: v }];
        let b = of[&Dart { tail: v, head: u }];
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let mut seen = vec![false; faces.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(f) = stack.pop() {
        for &h in adj.get(&f).into_iter().flatten() {
            if !seen[h] {
                seen[h] = true;
                stack.push(h);
            }
        }
    }
    seen.iter().any(|&s| !s)
}

/// Every simple cycle of length at most `max_len`, each listed once,
/// starting at its smallest vertex.
fn cycles_up_to(g: &Graph, max_len: usize) -> Vec<Vec<usize>> {
    fn extend(g: &Graph, path: &mut Vec<usize>, on: &mut [bool], max_len: usize, out: &mut Vec<Vec<usize>>) {
        let start = path[0];
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == start && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            }
            if w > start && !on[w] && path.len() < max_len {
                on[w] = true;
                path.push(w);
                extend(g, path, on, max_len, out);
                path.pop();
                on[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut on = vec![false; g.n()];
    for s in 0..g.n() {
        on[s] = true;
        extend(g, &mut vec![s], &mut on, max_len, &mut out);
        on[s] = false;
    }
    out
}

fn check_minimal(name: &str, rot: &RotationSystem) -> usize {
    let c = shortest_noncontractible_cycle(rot).unwrap();
    assert!(!separates(rot, &c.vertices), "{name}: returned cycle separates");
    for shorter in cycles_up_to(rot.graph(), c.len() - 1) {
        assert!(separates(rot, &shorter), "{name}: {shorter:?} is shorter and non-contractible");
    }
    c.len()
}

#[test]
fn shortest_cycle_lengths() {
    assert_eq!(check_minimal("G[3x7,1]", &gen_grid(&GridSpec::new(3, 7, 1)).unwrap()), 3);
    assert_eq!(check_minimal("K7", &gen_named(&NamedGraph::K7).unwrap().1.unwrap()), 3);
    assert_eq!(check_minimal("G[8x8,1]", &gen_grid(&GridSpec::new(8, 8, 1)).unwrap()), 8);
}

#[test]
fn shortest_cycle_is_minimal_on_small_grids() {
    for spec in grid_specs(40) {
        check_minimal(&spec.to_string(), &gen_grid(&spec).unwrap());
    }
}

#[test]
fn homology_agrees_with_separation() {
    for spec in [GridSpec::new(4, 4, 1), GridSpec::new(5, 3, 2), GridSpec::new(6, 4, 3)] {
        let rot = gen_grid(&spec).unwrap();
        let sigs = edge_signatures(&rot).unwrap();
        for c in cycles_up_to(rot.graph(), 5) {
            let cert = CycleCert::new(&rot, &sigs, c.clone()).unwrap();
            assert_eq!(is_contractible(&rot, &cert).unwrap(), separates(&rot, &c), "{spec} {c:?}");
        }
    }
}

#[test]
fn grids_are_triangulations_of_the_torus() {
    for m in 1..=8 {
        for n in 1..=8 {
            for k in 1..=m {
                let spec = GridSpec::new(m, n, k);
                let Ok(rot) = gen_grid(&spec) else {
                    assert!(!spec.is_simple());
                    continue;
                };
                let faces = rot.trace_faces();
                assert!(faces.iter().all(|f| f.degree() == 3), "{spec}");
                assert_eq!(rot.euler_genus(), 2, "{spec}");
            }
        }
    }
}

#[test]
fn darts_and_faces_on_corpus() {
    let mut corpus = toroidal_corpus();
    corpus.extend(random_subgraph_corpus(11, 25).unwrap());
    for e in &corpus {
        let faces = e.rot.trace_faces();
        let total: usize = faces.iter().map(|f| f.degree()).sum();
        assert_eq!(total, 2 * e.graph().edge_count(), "{}", e.name);
        let sigs = edge_signatures(&e.rot).unwrap();
        for f in &faces {
            let walk: Vec<usize> = f.darts.iter().map(|d| d.tail).collect();
            assert!(sigs.closed_walk(&walk).is_zero(), "{}", e.name);
        }
    }
}

#[test]
fn surgery_on_sparse_toroidal_graphs() {
    for e in random_subgraph_corpus(5, 40).unwrap() {
        let c = shortest_noncontractible_cycle(&e.rot).unwrap();
        assert!(c.satisfies_shortest_cycle_properties(e.graph()), "{}", e.name);
        let cut = cut_and_contract(&e.rot, &c).unwrap();
        assert!(is_planar(&cut.graph), "{}", e.name);
        assert!(cut.graph.check_invariants());
        let p = shortest_path(&cut.graph, cut.u, cut.v).unwrap();
        let (h, _, _) = contract_path(&cut.graph, &p).unwrap();
        assert!(is_planar(&h), "{}", e.name);
    }
}

#[test]
fn t11_cut_is_planar() {
    let rot = gen_named(&NamedGraph::T11).unwrap().1.unwrap();
    let c = shortest_noncontractible_cycle(&rot).unwrap();
    let cut = cut_and_contract(&rot, &c).unwrap();
    assert_eq!(cut.graph.n(), 11 - c.len() + 2);
    assert!(is_planar(&cut.graph));
}

#[test]
fn face_counts_of_named_embeddings() {
    let t11 = gen_named(&NamedGraph::T11).unwrap().1.unwrap().summary();
    assert_eq!((t11.faces, t11.genus, t11.face_degrees.clone()), (22, 2, vec![(3, 22)]));
    let k7 = gen_named(&NamedGraph::K7).unwrap().1.unwrap().summary();
    assert_eq!((k7.faces, k7.genus), (14, 2));
    let k6 = gen_named(&NamedGraph::K6).unwrap().1.unwrap().summary();
    assert_eq!((k6.vertices, k6.edges, k6.faces, k6.genus), (6, 15, 9, 2));
}
