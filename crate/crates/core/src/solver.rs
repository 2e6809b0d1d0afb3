//! Exact search for defective colourings.
//!
//! The search colours one vertex at a time, always picking the vertex with
//! the fewest admissible classes. Classes that share the same bound are
//! interchangeable while empty, so only the first empty class of each such
//! group is ever tried.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use crate::coloring::{verify_coloring, Coloring, DefectVector, Violation};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default limit on `k^n` for [`enumerate_oracle`].
pub const ORACLE_BOUND: f64 = 1e8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveStatus {
    Sat(Coloring),
    Unsat,
    /// The node budget ran out before the search finished.
    Indeterminate,
}

impl SolveStatus {
    pub fn is_sat(&self) -> bool {
        matches!(self, SolveStatus::Sat(_))
    }

    pub fn is_unsat(&self) -> bool {
        matches!(self, SolveStatus::Unsat)
    }

    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            SolveStatus::Sat(c) => Some(c),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            SolveStatus::Sat(_) => "SAT",
            SolveStatus::Unsat => "UNSAT",
            SolveStatus::Indeterminate => "INDETERMINATE",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Number of tentative class assignments made.
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub status: SolveStatus,
    pub stats: SolveStats,
    /// For a precoloring that already breaks the bounds, the violation it
    /// contains (in original vertex numbering).
    pub witness: Option<Violation>,
}

impl SolveResult {
    pub fn into_coloring(self) -> Result<Coloring> {
        match self.status {
            SolveStatus::Sat(c) => Ok(c),
            SolveStatus::Unsat => Err(Error::Unsatisfiable("no colouring exists".into())),
            SolveStatus::Indeterminate => Err(Error::Indeterminate(self.stats.nodes)),
        }
    }
}

/// A partial assignment of vertices to classes (1-based).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Precoloring {
    fixed: BTreeMap<usize, usize>,
}

impl Precoloring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, vertex: usize, class: usize) -> &mut Self {
        self.fixed.insert(vertex, class);
        self
    }

    pub fn get(&self, vertex: usize) -> Option<usize> {
        self.fixed.get(&vertex).copied()
    }

    pub fn len(&self) -> usize {
        self.fixed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fixed.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.fixed.iter().map(|(&v, &c)| (v, c))
    }
}

impl FromIterator<(usize, usize)> for Precoloring {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        Precoloring { fixed: iter.into_iter().collect() }
    }
}

/// Search settings. `budget` caps the number of assignments; `None` means
/// unlimited.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolverConfig {
    pub budget: Option<u64>,
}

pub fn solve(g: &Graph, d: &DefectVector) -> SolveResult {
    solve_with(g, d, &Precoloring::new(), SolverConfig::default()).expect("empty precoloring is always consistent")
}

pub fn solve_with_precoloring(g: &Graph, pre: &Precoloring, d: &DefectVector) -> Result<SolveResult> {
    solve_with(g, d, pre, SolverConfig::default())
}

/// Full entry point. Errors only on precolorings that name a missing vertex
/// or a class outside `1..=k`.
pub fn solve_with(g: &Graph, d: &DefectVector, pre: &Precoloring, config: SolverConfig) -> Result<SolveResult> {
    let start = Instant::now();
    let n = g.n();
    let k = d.k();
    for (v, c) in pre.iter() {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if c == 0 || c > k {
            return Err(Error::ClassOutOfRange { vertex: v, class: c, k });
        }
    }

    if !pre.is_empty() {
        let verts: Vec<usize> = pre.iter().map(|(v, _)| v).collect();
        let (sub, back) = g.induced_subgraph(&verts)?;
        let classes = Coloring::new(verts.iter().map(|&v| pre.get(v).unwrap_or(1)).collect())?;
        let report = verify_coloring(&sub, &classes, d)?;
        if let Some(viol) = report.first_violation {
            let witness = match viol {
                Violation::Degree { class, vertex, degree, bound } => {
                    Violation::Degree { class, vertex: back[vertex], degree, bound }
                }
                Violation::StarEdges { class, edge: (a, b), count } => {
                    Violation::StarEdges { class, edge: (back[a], back[b]), count }
                }
            };
            return Ok(SolveResult {
                status: SolveStatus::Unsat,
                stats: SolveStats { nodes: 0, elapsed: start.elapsed() },
                witness: Some(witness),
            });
        }
    }

    let mut search = Search::new(g, d, config.budget);
    for (v, c) in pre.iter() {
        search.assign(v, c - 1);
    }
    let outcome = search.run();
    let status = match outcome {
        Outcome::Found => {
            let coloring = Coloring::new(search.color.iter().map(|&c| c + 1).collect())?;
            let report = verify_coloring(g, &coloring, d)?;
            assert!(report.valid, "solver produced a colouring that fails verification");
            SolveStatus::Sat(coloring)
        }
        Outcome::Exhausted => SolveStatus::Unsat,
        Outcome::Aborted => SolveStatus::Indeterminate,
    };
    Ok(SolveResult { status, stats: SolveStats { nodes: search.nodes, elapsed: start.elapsed() }, witness: None })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Found,
    Exhausted,
    Aborted,
}

const NONE: usize = usize::MAX;

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    defect: Vec<usize>,
    edge_cap: Vec<usize>,
    group: Vec<usize>,
    color: Vec<usize>,
    /// `nbr[v * k + c]` = neighbours of `v` currently in class `c`.
    nbr: Vec<u32>,
    size: Vec<usize>,
    mono: Vec<usize>,
    uncolored: usize,
    nodes: u64,
    budget: Option<u64>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, d: &DefectVector, budget: Option<u64>) -> Self {
        let k = d.k();
        let entries = d.entries();
        let group = (0..k)
            .map(|c| (0..=c).find(|&c2| entries[c2] == entries[c]).expect("c itself matches"))
            .collect();
        Search {
            g,
            k,
            defect: entries.iter().map(|b| b.defect).collect(),
            edge_cap: entries.iter().map(|b| b.edge_cap().unwrap_or(usize::MAX)).collect(),
            group,
            color: vec![NONE; g.n()],
            nbr: vec![0; g.n() * k],
            size: vec![0; k],
            mono: vec![0; k],
            uncolored: g.n(),
            nodes: 0,
            budget,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for &w in self.g.neighbors(v) {
            self.nbr[w * self.k + c] += 1;
        }
        self.mono[c] += self.nbr[v * self.k + c] as usize;
        self.size[c] += 1;
        self.uncolored -= 1;
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = NONE;
        for &w in self.g.neighbors(v) {
            self.nbr[w * self.k + c] -= 1;
        }
        self.mono[c] -= self.nbr[v * self.k + c] as usize;
        self.size[c] -= 1;
        self.uncolored += 1;
    }

    fn feasible(&self, v: usize, c: usize) -> bool {
        let here = self.nbr[v * self.k + c] as usize;
        if here > self.defect[c] || self.mono[c] + here > self.edge_cap[c] {
            return false;
        }
        here == 0
            || self
                .g
                .neighbors(v)
                .iter()
                .all(|&w| self.color[w] != c || (self.nbr[w * self.k + c] as usize) < self.defect[c])
    }

    /// Classes that may be opened: non-empty ones, plus the first empty
    /// class of each group of interchangeable classes.
    fn open_classes(&self) -> Vec<usize> {
        let mut seen_empty = vec![false; self.k];
        let mut out = Vec::with_capacity(self.k);
        for c in 0..self.k {
            if self.size[c] > 0 {
                out.push(c);
            } else if !seen_empty[self.group[c]] {
                seen_empty[self.group[c]] = true;
                out.push(c);
            }
        }
        out
    }

    fn run(&mut self) -> Outcome {
        if self.uncolored == 0 {
            return Outcome::Found;
        }
        let open = self.open_classes();
        let mut best: Option<(usize, usize, usize)> = None;
        let mut best_choices = Vec::new();
        let mut choices = Vec::with_capacity(self.k);
        for v in 0..self.g.n() {
            if self.color[v] != NONE {
                continue;
            }
            choices.clear();
            choices.extend(open.iter().copied().filter(|&c| self.feasible(v, c)));
            if choices.is_empty() {
                return Outcome::Exhausted;
            }
            let key = (choices.len(), usize::MAX - self.g.degree(v), v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
                best_choices.clone_from(&choices);
            }
        }
        let v = best.expect("an uncoloured vertex exists").2;
        for c in best_choices {
            self.nodes += 1;
            if self.budget.is_some_and(|b| self.nodes > b) {
                return Outcome::Aborted;
            }
            self.assign(v, c);
            let r = self.run();
            if r == Outcome::Found {
                return r;
            }
            self.unassign(v);
            if r == Outcome::Aborted {
                return r;
            }
        }
        Outcome::Exhausted
    }
}

/// Tries every one of the `k^n` assignments. Ground truth for testing
/// [`solve`]; refuses inputs where `k^n` exceeds `bound`.
pub fn enumerate_oracle(g: &Graph, d: &DefectVector) -> Result<SolveResult> {
    enumerate_oracle_with_bound(g, d, ORACLE_BOUND)
}

pub fn enumerate_oracle_with_bound(g: &Graph, d: &DefectVector, bound: f64) -> Result<SolveResult> {
    let start = Instant::now();
    let n = g.n();
    let k = d.k();
    let needed = (k as f64).powi(n as i32);
    if needed > bound {
        return Err(Error::EnumerationBound { needed, bound });
    }
    let mut classes = vec![1usize; n];
    let mut nodes = 0u64;
    loop {
        nodes += 1;
        let coloring = Coloring::new(classes.clone())?;
        if verify_coloring(g, &coloring, d)?.valid {
            return Ok(SolveResult {
                status: SolveStatus::Sat(coloring),
                stats: SolveStats { nodes, elapsed: start.elapsed() },
                witness: None,
            });
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(SolveResult {
                    status: SolveStatus::Unsat,
                    stats: SolveStats { nodes, elapsed: start.elapsed() },
                    witness: None,
                });
            }
            if classes[i] < k {
                classes[i] += 1;
                break;
            }
            classes[i] = 1;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_named, NamedGraph};

    fn dv(s: &str) -> DefectVector {
        s.parse().unwrap()
    }

    fn named(g: NamedGraph) -> Graph {
        gen_named(&g).unwrap().0
    }

    #[test]
    fn k7_facts() {
        let k7 = Graph::complete(7);
        assert!(solve(&k7, &dv("0,0,0,2")).status.is_unsat());
        assert!(solve(&k7, &dv("0,0,0,0,1")).status.is_unsat());
        assert!(solve(&k7, &DefectVector::proper(6)).status.is_unsat());
        assert!(solve(&k7, &dv("0,0,0,3")).status.is_sat());
        assert!(solve(&k7, &dv("0,0,0,1*,1*")).status.is_sat());
    }

    #[test]
    fn obstruction_facts() {
        assert!(solve(&named(NamedGraph::T11), &dv("0,0,0,2")).status.is_sat());
        assert!(solve(&named(NamedGraph::C3JoinC5), &DefectVector::proper(5)).status.is_unsat());
        assert!(solve(&named(NamedGraph::K2JoinH7), &DefectVector::proper(5)).status.is_unsat());
        assert!(solve(&named(NamedGraph::T11), &DefectVector::proper(5)).status.is_unsat());
        assert!(solve(&named(NamedGraph::C3JoinC5), &dv("0,0,0,0,1*")).status.is_sat());
    }

    #[test]
    fn star_budget_is_global() {
        // two disjoint edges need two monochromatic edges with one class
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(solve(&g, &dv("1*")).status.is_unsat());
        assert!(solve(&g, &dv("1")).status.is_sat());
    }

    #[test]
    fn wheel_with_rainbow_rim_blocks_hub() {
        let mut edges: Vec<(usize, usize)> = (1..=5).map(|i| (0, i)).collect();
        edges.extend((1..=5).map(|i| (i, i % 5 + 1)));
        let w5 = Graph::from_edges(6, edges).unwrap();
        let pre: Precoloring = (1..=5).map(|i| (i, i)).collect();
        let r = solve_with_precoloring(&w5, &pre, &DefectVector::proper(5)).unwrap();
        assert!(r.status.is_unsat());
        assert!(r.witness.is_none());
    }

    #[test]
    fn precoloring_is_kept() {
        let g = Graph::cycle(6);
        let pre: Precoloring = [(0, 2), (3, 2)].into_iter().collect();
        let r = solve_with_precoloring(&g, &pre, &DefectVector::proper(3)).unwrap();
        let c = r.status.coloring().unwrap();
        assert_eq!((c.class_of(0), c.class_of(3)), (2, 2));
    }

    #[test]
    fn inconsistent_precoloring_has_witness() {
        let g = Graph::path(3);
        let pre: Precoloring = [(1, 1), (2, 1)].into_iter().collect();
        let r = solve_with_precoloring(&g, &pre, &DefectVector::proper(2)).unwrap();
        assert!(r.status.is_unsat());
        assert!(matches!(r.witness, Some(Violation::Degree { class: 1, vertex: 1, .. })));
        assert!(solve_with_precoloring(&g, &[(5, 1)].into_iter().collect(), &DefectVector::proper(2)).is_err());
        assert!(solve_with_precoloring(&g, &[(0, 3)].into_iter().collect(), &DefectVector::proper(2)).is_err());
    }

    #[test]
    fn budget_gives_indeterminate() {
        let g = named(NamedGraph::K2JoinH7);
        let r = solve_with(&g, &DefectVector::proper(5), &Precoloring::new(), SolverConfig { budget: Some(3) }).unwrap();
        assert_eq!(r.status, SolveStatus::Indeterminate);
    }

    #[test]
    fn oracle_examples() {
        assert!(enumerate_oracle(&Graph::cycle(5), &dv("0,1*")).unwrap().status.is_sat());
        assert!(enumerate_oracle(&Graph::cycle(5), &dv("0,0")).unwrap().status.is_unsat());
        assert!(enumerate_oracle(&Graph::complete(4), &dv("1,1")).unwrap().status.is_sat());
        assert!(enumerate_oracle(&Graph::complete(30), &dv("0,0,0")).is_err());
    }

    #[test]
    fn empty_graph() {
        let r = solve(&Graph::empty(0), &DefectVector::proper(1));
        assert!(r.status.is_sat());
    }
}
