//! Colourings of arbitrary toroidal graphs through a shortest
//! non-contractible cycle.

use super::cycles::{color_01_paths_cycles, color_cycle_56};
use super::{paint, Certificate, Provenance};
use crate::coloring::{Coloring, DefectVector};
use crate::embedding::{
    contract_path, cut_and_contract, is_planar, shortest_noncontractible_cycle, CutResult, RotationSystem,
};
use crate::error::{Error, Result};
use crate::graph::{shortest_path, Graph};
use crate::solver::solve;

struct Surgery {
    cycle: Vec<usize>,
    cut: CutResult,
}

fn cut_along_shortest(rot: &RotationSystem) -> Result<Surgery> {
    if !rot.graph().is_connected() {
        return Err(Error::Disconnected);
    }
    let eg = rot.euler_genus();
    if eg != 2 {
        return Err(Error::NotToroidal(eg));
    }
    let c = shortest_noncontractible_cycle(rot)?;
    let cut = cut_and_contract(rot, &c)?;
    Ok(Surgery { cycle: c.vertices, cut })
}

/// Proper 4-colouring of the planar graph left after the cut, read back on
/// the non-cycle vertices. Cycle vertices are left as 0.
fn four_color_outside(g: &Graph, s: &Surgery) -> Result<Vec<usize>> {
    let h = solve(&s.cut.graph, &DefectVector::proper(4)).into_coloring()?;
    Ok((0..g.n()).map(|x| s.cut.map[x].map_or(0, |y| h.class_of(y))).collect())
}

/// `(0,0,0,0,0,1*)`: the cycle takes colours 5 and 6, everything else is
/// properly 4-coloured.
pub fn color_600001(rot: &RotationSystem) -> Result<Certificate> {
    let g = rot.graph();
    let s = cut_along_shortest(rot)?;
    let mut classes = four_color_outside(g, &s)?;
    paint(&mut classes, &s.cycle, &color_cycle_56(s.cycle.len())?);
    let d: DefectVector = "0,0,0,0,0,1*".parse()?;
    Certificate::issue(g, Coloring::new(classes)?, d, Provenance::Cycle56)
}

/// `(0,0,0,0,2)`: the cycle is class 5, everything else is properly
/// 4-coloured.
pub fn color_00002(rot: &RotationSystem) -> Result<Certificate> {
    let g = rot.graph();
    let s = cut_along_shortest(rot)?;
    let mut classes = four_color_outside(g, &s)?;
    paint(&mut classes, &s.cycle, &vec![5; s.cycle.len()]);
    Certificate::issue(g, Coloring::new(classes)?, DefectVector::plain(&[0, 0, 0, 0, 2]), Provenance::CycleClass)
}

/// `(0,0,0,4)`: contracts a shortest `u`-`v` path of the cut graph, so the
/// cycle and the path's inner vertices share one colour, which is made
/// class 4.
pub fn color_0004(rot: &RotationSystem) -> Result<Certificate> {
    let s = cut_along_shortest(rot)?;
    color_0004_from_cut(rot.graph(), &s.cycle, &s.cut)
}

/// The part of [`color_0004`] after the cut. `cycle` must be the vertex set
/// removed by `cut`.
pub fn color_0004_from_cut(g: &Graph, cycle: &[usize], cut: &CutResult) -> Result<Certificate> {
    let path = shortest_path(&cut.graph, cut.u, cut.v)?;
    let (contracted, vstar, map) = contract_path(&cut.graph, &path)?;
    if !is_planar(&contracted) {
        return Err(Error::Precondition("path contraction produced a non-planar graph".into()));
    }
    let four = solve(&contracted, &DefectVector::proper(4)).into_coloring()?;
    let star = four.class_of(vstar);
    let relabel = |c: usize| match c {
        _ if c == star => 4,
        4 => star,
        _ => c,
    };
    let mut classes = vec![4; g.n()];
    for (y, &x) in cut.back.iter().enumerate() {
        classes[x] = relabel(four.class_of(map[y]));
    }
    for &x in cycle {
        classes[x] = 4;
    }
    let cert = Certificate::issue(g, Coloring::new(classes)?, DefectVector::plain(&[0, 0, 0, 4]), Provenance::PathContraction)?;
    debug_assert!(cert.class_degree(g, 4) <= 4);
    Ok(cert)
}

/// `(0,1,2,2)`: a `(2,2,2)` colouring whose first class is split into an
/// independent set and a matching.
pub fn color_0122(g: &Graph) -> Result<Certificate> {
    let base = solve(g, &DefectVector::plain(&[2, 2, 2])).into_coloring()?;
    let first = base.members(1);
    let (h, back) = g.induced_subgraph(&first)?;
    let split = color_01_paths_cycles(&h)?;
    let mut classes: Vec<usize> = base.classes().iter().map(|&c| c + 1).collect();
    for (y, &x) in back.iter().enumerate() {
        classes[x] = split.class_of(y);
    }
    Certificate::issue(g, Coloring::new(classes)?, DefectVector::plain(&[0, 1, 2, 2]), Provenance::SplitClass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_grid, gen_named, GridSpec, NamedGraph};

    fn rot(name: NamedGraph) -> RotationSystem {
        gen_named(&name).unwrap().1.unwrap()
    }

    #[test]
    fn k7_pipelines() {
        let k7 = rot(NamedGraph::K7);
        let c = color_600001(&k7).unwrap();
        assert_eq!(c.monochromatic.len(), 1);
        let c = color_00002(&k7).unwrap();
        assert_eq!(c.coloring.members(5).len(), 3);
        color_0004(&k7).unwrap();
        color_0122(k7.graph()).unwrap();
    }

    #[test]
    fn even_cycle_has_no_monochromatic_edge() {
        let g44 = gen_grid(&GridSpec::new(4, 4, 1)).unwrap();
        assert!(color_600001(&g44).unwrap().monochromatic.is_empty());
    }

    #[test]
    fn class_five_is_the_cycle() {
        let rot = gen_grid(&GridSpec::new(5, 5, 2)).unwrap();
        let c = color_00002(&rot).unwrap();
        let g = rot.graph();
        let five = c.coloring.members(5);
        assert!(five.iter().all(|&x| g.neighbors(x).iter().filter(|&&w| c.coloring.class_of(w) == 5).count() == 2));
    }

    #[test]
    fn defect_class_bound() {
        let rot = gen_grid(&GridSpec::new(6, 6, 1)).unwrap();
        let c = color_0004(&rot).unwrap();
        assert!(c.class_degree(rot.graph(), 4) <= 4);
    }

    #[test]
    fn adjacent_copies_give_cycle_only_class() {
        // the whole triangle is the cycle; the cut graph is a single u-v edge
        let g = Graph::complete(3);
        let cut = CutResult { graph: Graph::complete(2), u: 0, v: 1, map: vec![None; 3], back: vec![] };
        let c = color_0004_from_cut(&g, &[0, 1, 2], &cut).unwrap();
        assert_eq!(c.coloring.members(4), vec![0, 1, 2]);
        assert_eq!(c.class_degree(&g, 4), 2);
    }

    #[test]
    fn split_class_on_small_graphs() {
        color_0122(&Graph::cycle(5)).unwrap();
        color_0122(&gen_named(&NamedGraph::T11).unwrap().0).unwrap();
    }

    #[test]
    fn refuses_plane_embeddings() {
        let tri = RotationSystem::from_rotation(vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        assert!(matches!(color_600001(&tri), Err(Error::NotToroidal(0))));
    }
}
