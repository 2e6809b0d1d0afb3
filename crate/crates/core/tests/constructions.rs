use torcol::constructions::{
    color_0003_high_min_degree, color_0004, color_00002, color_0122, color_600001, color_6regular, pattern_circ123,
    pattern_exception, Provenance, DIRECT_PATTERNS,
};
use torcol::corpus::{grid_specs, random_subgraph_corpus, toroidal_corpus};
use torcol::generators::{
    classify_6regular, gen_circulant, gen_grid, gen_named, CirculantSpec, ExceptionCase, GridSpec, NamedGraph,
    SixRegularSpec, SMALL_EXCEPTION_GRIDS,
};
use torcol::solver::{solve, solve_with_precoloring, Precoloring};
use torcol::{verify_coloring, DefectVector, Graph};

#[test]
fn pipelines_on_sparse_graphs() {
    for e in random_subgraph_corpus(17, 30).unwrap() {
        let g = e.graph();
        for cert in [color_600001(&e.rot), color_00002(&e.rot), color_0004(&e.rot)] {
            let cert = cert.unwrap_or_else(|err| panic!("{}: {err}", e.name));
            assert!(cert.verify(g).unwrap().valid);
        }
        if g.n() <= 30 {
            assert!(color_0122(g).unwrap().verify(g).unwrap().valid);
        }
    }
}

#[test]
fn defect_bound_four_is_attained() {
    let worst = toroidal_corpus()
        .iter()
        .filter(|e| e.graph().n() <= 30)
        .map(|e| color_0004(&e.rot).unwrap().class_degree(e.graph(), 4))
        .max()
        .unwrap();
    assert_eq!(worst, 4);
}

#[test]
fn cycle_56_colours_only_touch_the_cycle() {
    for e in toroidal_corpus().iter().take(60) {
        let cert = color_600001(&e.rot).unwrap();
        assert!(cert.monochromatic.len() <= 1);
        for &(u, _) in &cert.monochromatic {
            assert_eq!(cert.coloring.class_of(u), 6);
        }
        assert_eq!(cert.provenance, Provenance::Cycle56);
    }
}

#[test]
fn every_small_six_regular_graph_is_coloured() {
    for spec in grid_specs(36) {
        let s = SixRegularSpec::Grid(spec);
        let cert = color_6regular(&s).unwrap_or_else(|e| panic!("{spec}: {e}"));
        let g = gen_grid(&spec).unwrap().graph().clone();
        assert!(cert.verify(&g).unwrap().valid);
        let last = cert.defects.entries()[3].defect;
        let expected = if g.n() == 7 { 3 } else if g.n() == 11 && classify_6regular(&s).unwrap().exception.is_some() { 2 } else { 1 };
        assert!(last <= expected, "{spec}: {}", cert.defects);
    }
}

#[test]
fn classification_of_families() {
    for spec in SMALL_EXCEPTION_GRIDS {
        let c = classify_6regular(&SixRegularSpec::Grid(spec)).unwrap();
        assert_eq!(c.exception, Some(ExceptionCase::SmallGrid), "{spec}");
    }
    for n in 7..=30 {
        let c = classify_6regular(&SixRegularSpec::Circulant(CirculantSpec::new(n, &[1, 2, 3]).unwrap())).unwrap();
        assert_eq!(c.is_four_colorable(), n % 4 == 0, "G{n}[1,2,3]");
    }
    for r in 3..=9 {
        for n in [2 * r + 3, 3 * r + 1, 3 * r + 2] {
            let Ok(spec) = CirculantSpec::new(n, &[1, r, r + 1]) else { continue };
            let c = classify_6regular(&SixRegularSpec::Circulant(spec)).unwrap();
            assert_eq!(c.is_four_colorable(), n % 4 == 0, "G{n}[1,{r},{}]", r + 1);
        }
    }
}

#[test]
fn patterns_over_wide_ranges() {
    let d = DefectVector::plain(&[0, 0, 0, 1]);
    for n in (8..=100).filter(|&n| n != 11) {
        let g = gen_circulant(&CirculantSpec::new(n, &[1, 2, 3]).unwrap());
        let rep = verify_coloring(&g, &pattern_circ123(n).unwrap().coloring(), &d).unwrap();
        assert!(rep.valid && rep.monochromatic_count() <= 3, "n={n}");
    }
    for (r, n) in DIRECT_PATTERNS {
        assert_eq!(pattern_exception(r, n).unwrap().n(), n);
    }
}

#[test]
fn small_exception_colourings_regenerated() {
    // the six small grids have (0,0,0,1) colourings but no proper ones
    for spec in SMALL_EXCEPTION_GRIDS {
        let g = gen_grid(&spec).unwrap().graph().clone();
        let r = solve(&g, &DefectVector::plain(&[0, 0, 0, 1]));
        let c = r.status.coloring().unwrap();
        assert!(!c.monochromatic_edges(&g).is_empty(), "{spec}");
    }
}

#[test]
fn join_colourings_follow_the_described_shape() {
    let d: DefectVector = "0,0,0,0,1*".parse().unwrap();
    // C3 in three colours, C5 in the remaining two
    let g = gen_named(&NamedGraph::C3JoinC5).unwrap().0;
    let pre: Precoloring = [(0, 1), (1, 2), (2, 3)].into_iter().collect();
    let c = solve_with_precoloring(&g, &pre, &d).unwrap().into_coloring().unwrap();
    assert!((3..8).all(|v| c.class_of(v) >= 4));
    assert_eq!(c.monochromatic_edges(&g).len(), 1);
    // the K2 edge is the monochromatic one, in colour 5
    let g = gen_named(&NamedGraph::K2JoinH7).unwrap().0;
    let pre: Precoloring = [(0, 5), (1, 5)].into_iter().collect();
    let c = solve_with_precoloring(&g, &pre, &d).unwrap().into_coloring().unwrap();
    assert_eq!(c.monochromatic_edges(&g), vec![(0, 1)]);
}

#[test]
fn core_extension_with_several_inner_vertices() {
    let rot = gen_grid(&GridSpec::new(4, 4, 2)).unwrap();
    let faces = rot.trace_faces();
    let mut edges: Vec<(usize, usize)> = rot.graph().edges().collect();
    let mut next = 16;
    for f in faces.iter().take(3) {
        let t = f.vertices();
        // a vertex in the face, and a second one inside a sub-triangle
        edges.extend(t.iter().map(|&x| (x, next)));
        edges.extend([(t[0], next + 1), (t[1], next + 1), (next, next + 1)]);
        next += 2;
    }
    let g = Graph::from_edges(next, edges).unwrap();
    let cert = color_0003_high_min_degree(&g).unwrap();
    assert!(cert.verify(&g).unwrap().valid);
    assert_eq!(cert.provenance, Provenance::CoreExtension);
}
