//! Colourings of 6-regular toroidal graphs and of graphs with a 6-core.

use super::patterns::{pattern_circ123, pattern_exception};
use super::{Certificate, Provenance};
use crate::coloring::{Coloring, DefectVector};
use crate::error::{Error, Result};
use crate::generators::{classify_6regular, gen_grid, ExceptionCase, GridSpec, SixRegularSpec};
use crate::graph::Graph;
use crate::iso::find_isomorphism;
use crate::solver::{solve, solve_with_precoloring, Precoloring};

fn by_search(g: &Graph, d: DefectVector) -> Result<Certificate> {
    let c = solve(g, &d).into_coloring()?;
    Certificate::issue(g, c, d, Provenance::SixRegularSearch)
}

/// Colours a 6-regular toroidal graph with the best vector available for
/// its class: `(0,0,0,0)` when 4-colourable, `(0,0,0,3)` for `K7`,
/// `(0,0,0,2)` for `T11`, and `(0,0,0,1)` otherwise.
pub fn color_6regular(spec: &SixRegularSpec) -> Result<Certificate> {
    let class = classify_6regular(spec)?;
    let g = spec.graph()?;
    let n = g.n();
    let d0001 = DefectVector::plain(&[0, 0, 0, 1]);
    match class.exception {
        None => by_search(&g, DefectVector::proper(4)),
        Some(ExceptionCase::SmallGrid) => by_search(&g, d0001),
        Some(ExceptionCase::Circ123) | Some(ExceptionCase::UnitReduced { .. }) if n == 7 => {
            by_search(&g, DefectVector::plain(&[0, 0, 0, 3]))
        }
        Some(ExceptionCase::Circ123) | Some(ExceptionCase::UnitReduced { .. }) if n == 11 => {
            by_search(&g, DefectVector::plain(&[0, 0, 0, 2]))
        }
        Some(ExceptionCase::Circ123) | Some(ExceptionCase::UnitReduced { .. }) => {
            let form = class.normal_form(2).ok_or_else(|| Error::Precondition(format!("{spec} has no [1,2,3] form")))?;
            let p = pattern_circ123(n)?.pulled_back(&form.map);
            Certificate::issue(&g, p.coloring(), d0001, Provenance::Circ123Pattern)
        }
        Some(ExceptionCase::Sporadic { r }) => {
            let form = class.normal_form(r).expect("sporadic case comes from a normal form");
            let p = pattern_exception(r, n)?.pulled_back(&form.map);
            Certificate::issue(&g, p.coloring(), d0001, Provenance::SporadicPattern)
        }
    }
}

/// Finds a grid isomorphic to `h`, if `h` is a 6-regular toroidal
/// triangulation, with the vertex map `h -> grid`.
pub fn recognize_6regular(h: &Graph) -> Option<(GridSpec, Vec<usize>)> {
    let n = h.n();
    if n < 7 || h.min_degree() != 6 || h.max_degree() != 6 {
        return None;
    }
    for m in 1..=n {
        if !n.is_multiple_of(m) {
            continue;
        }
        for k in 1..=m {
            let spec = GridSpec::new(m, n / m, k);
            if !spec.is_simple() {
                continue;
            }
            let Ok(rot) = gen_grid(&spec) else { continue };
            if let Some(map) = find_isomorphism(h, rot.graph()) {
                return Some((spec, map));
            }
        }
    }
    None
}

/// [`color_6regular`] for an unlabelled graph: recognises the grid and
/// carries the colouring back along the isomorphism.
pub fn color_6regular_graph(h: &Graph) -> Result<Certificate> {
    let (spec, map) = recognize_6regular(h)
        .ok_or_else(|| Error::Precondition("graph is not a 6-regular toroidal triangulation".into()))?;
    let cert = color_6regular(&SixRegularSpec::Grid(spec))?;
    let classes = map.iter().map(|&y| cert.coloring.class_of(y)).collect();
    Certificate::issue(h, Coloring::new(classes)?, cert.defects, cert.provenance)
}

/// Colours a graph whose 6-core is a 6-regular toroidal triangulation: the
/// core gets [`color_6regular`], and every other vertex is fitted around it
/// with four colours and no monochromatic edge. The claimed vector is the
/// core's.
pub fn color_0003_high_min_degree(g: &Graph) -> Result<Certificate> {
    let (d, core) = g.degeneracy();
    if d < 6 {
        return Err(Error::Precondition(format!("graph is {d}-degenerate; a 6-core is required")));
    }
    let (h, back) = g.induced_subgraph(&core)?;
    let (spec, map) = recognize_6regular(&h)
        .ok_or_else(|| Error::Precondition("the 6-core is not a 6-regular toroidal triangulation".into()))?;
    let core_cert = color_6regular(&SixRegularSpec::Grid(spec))?;

    let mut classes = vec![0usize; g.n()];
    for (y, &x) in back.iter().enumerate() {
        classes[x] = core_cert.coloring.class_of(map[y]);
    }
    let in_core: Vec<bool> = (0..g.n()).map(|x| classes[x] != 0).collect();
    let rest: Vec<usize> = (0..g.n()).filter(|&x| !in_core[x]).collect();
    let (outside, out_back) = g.induced_subgraph(&rest)?;
    for comp in outside.components() {
        let mut verts: Vec<usize> = comp.iter().map(|&y| out_back[y]).collect();
        let mut attach: Vec<usize> =
            verts.iter().flat_map(|&x| g.neighbors(x).iter().copied()).filter(|&w| in_core[w]).collect();
        attach.sort_unstable();
        attach.dedup();
        verts.extend(&attach);
        let (sub, sub_back) = g.induced_subgraph(&verts)?;
        let edges = sub.edges().filter(|&(a, b)| !(in_core[sub_back[a]] && in_core[sub_back[b]]));
        let sub = Graph::from_edges(sub.n(), edges)?;
        let pre: Precoloring =
            (0..sub.n()).filter(|&y| in_core[sub_back[y]]).map(|y| (y, classes[sub_back[y]])).collect();
        let ext = solve_with_precoloring(&sub, &pre, &DefectVector::proper(4))?.into_coloring()?;
        for (y, &x) in sub_back.iter().enumerate() {
            classes[x] = ext.class_of(y);
        }
    }
    Certificate::issue(g, Coloring::new(classes)?, core_cert.defects.clone(), Provenance::CoreExtension)
}
