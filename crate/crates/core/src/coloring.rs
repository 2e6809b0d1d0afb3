//! Defect vectors, colorings, and the verifier that checks one against the other.
//!
//! [`verify_coloring`] is the single judge of every coloring claim made by
//! this crate: solvers and constructions run their output through it before
//! handing anything back.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Bound on one color class: the maximum degree of the subgraph it induces,
/// and for starred classes, a cap of one induced edge in total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassBound {
    pub defect: usize,
    pub star: bool,
}

impl ClassBound {
    pub const fn plain(defect: usize) -> Self {
        ClassBound { defect, star: false }
    }

    pub const fn starred() -> Self {
        ClassBound { defect: 1, star: true }
    }

    /// Largest number of monochromatic edges the class may carry, if capped.
    pub fn edge_cap(&self) -> Option<usize> {
        if self.star {
            Some(1)
        } else if self.defect == 0 {
            Some(0)
        } else {
            None
        }
    }

    /// `self` permits every class that `other` permits.
    pub fn relaxes(&self, other: &ClassBound) -> bool {
        if self.star {
            other.star || other.defect == 0
        } else {
            self.defect >= other.defect
        }
    }
}

impl fmt::Display for ClassBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.star {
            write!(f, "1*")
        } else {
            write!(f, "{}", self.defect)
        }
    }
}

/// An ordered list of class bounds `(d_1, ..., d_k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DefectVector {
    entries: Vec<ClassBound>,
}

impl DefectVector {
    pub fn new(entries: Vec<ClassBound>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidDefects("at least one class is required".into()));
        }
        if let Some(e) = entries.iter().find(|e| e.star && e.defect != 1) {
            return Err(Error::InvalidDefects(format!("starred class with defect {}", e.defect)));
        }
        Ok(DefectVector { entries })
    }

    /// Unstarred vector from plain defects.
    pub fn plain(defects: &[usize]) -> Self {
        DefectVector::new(defects.iter().map(|&d| ClassBound::plain(d)).collect())
            .expect("non-empty plain defect list")
    }

    /// `k` classes of defect 0.
    pub fn proper(k: usize) -> Self {
        DefectVector::plain(&vec![0; k])
    }

    pub fn k(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[ClassBound] {
        &self.entries
    }

    /// Bound on class `class` (1-based).
    pub fn bound(&self, class: usize) -> ClassBound {
        self.entries[class - 1]
    }

    /// Componentwise relaxation, same number of classes.
    pub fn relaxes(&self, other: &DefectVector) -> bool {
        self.k() == other.k() && self.entries.iter().zip(&other.entries).all(|(a, b)| a.relaxes(b))
    }
}

impl fmt::Display for DefectVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for DefectVector {
    type Err = Error;

    /// Parses `0,0,0,1*`; surrounding parentheses and whitespace are allowed.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|tok| {
                if let Some(num) = tok.strip_suffix('*') {
                    match num {
                        "1" => Ok(ClassBound::starred()),
                        _ => Err(Error::InvalidDefects(format!("only 1 may be starred, got {tok:?}"))),
                    }
                } else {
                    tok.parse::<usize>()
                        .map(ClassBound::plain)
                        .map_err(|_| Error::InvalidDefects(format!("bad entry {tok:?}")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        DefectVector::new(entries)
    }
}

/// Total assignment of classes `1..=k` to vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    classes: Vec<usize>,
}

impl Coloring {
    /// Wraps a class list; classes are 1-based and must be nonzero.
    pub fn new(classes: Vec<usize>) -> Result<Self> {
        if let Some(v) = classes.iter().position(|&c| c == 0) {
            return Err(Error::ClassOutOfRange { vertex: v, class: 0, k: classes.iter().copied().max().unwrap_or(0) });
        }
        Ok(Coloring { classes })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.classes[v]
    }

    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn max_class(&self) -> usize {
        self.classes.iter().copied().max().unwrap_or(0)
    }

    /// Vertices of class `class`, ascending.
    pub fn members(&self, class: usize) -> Vec<usize> {
        (0..self.classes.len()).filter(|&v| self.classes[v] == class).collect()
    }

    /// Edges of `g` whose endpoints share a class.
    pub fn monochromatic_edges(&self, g: &Graph) -> Vec<(usize, usize)> {
        g.edges().filter(|&(u, v)| self.classes[u] == self.classes[v]).collect()
    }
}

/// Per-class statistics of a coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub class: usize,
    pub bound: ClassBound,
    pub size: usize,
    pub max_induced_degree: usize,
    pub monochromatic_edges: Vec<(usize, usize)>,
}

/// The first rule a coloring breaks, ordered by class and then by vertex or
/// edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `vertex` has `degree` neighbors in its own class, above the bound.
    Degree { class: usize, vertex: usize, degree: usize, bound: usize },
    /// A starred class carries a second monochromatic edge.
    StarEdges { class: usize, edge: (usize, usize), count: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Degree { class, vertex, degree, bound } => write!(
                f,
                "class {class}: vertex {} has {degree} same-class neighbors (bound {bound})",
                vertex + 1
            ),
            Violation::StarEdges { class, edge, count } => write!(
                f,
                "class {class}: starred class has {count} monochromatic edges, second is {}-{}",
                edge.0 + 1,
                edge.1 + 1
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub valid: bool,
    pub classes: Vec<ClassReport>,
    pub first_violation: Option<Violation>,
}

impl VerificationReport {
    pub fn monochromatic_edges(&self) -> Vec<(usize, usize)> {
        let mut all: Vec<_> = self.classes.iter().flat_map(|c| c.monochromatic_edges.iter().copied()).collect();
        all.sort_unstable();
        all
    }

    pub fn monochromatic_count(&self) -> usize {
        self.classes.iter().map(|c| c.monochromatic_edges.len()).sum()
    }
}

/// Checks `coloring` against `defects` on `g`.
///
/// Fails only when the coloring is not a total assignment into `1..=k`; an
/// over-defective coloring is reported through
/// [`VerificationReport::valid`].
pub fn verify_coloring(g: &Graph, coloring: &Coloring, defects: &DefectVector) -> Result<VerificationReport> {
    let n = g.n();
    let k = defects.k();
    if coloring.len() != n {
        return Err(Error::ColoringSize { expected: n, got: coloring.len() });
    }
    if let Some(v) = (0..n).find(|&v| coloring.class_of(v) > k) {
        return Err(Error::ClassOutOfRange { vertex: v, class: coloring.class_of(v), k });
    }

    let mut same = vec![0usize; n];
    let mut mono: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for (u, v) in g.edges() {
        let c = coloring.class_of(u);
        if c == coloring.class_of(v) {
            same[u] += 1;
            same[v] += 1;
            mono[c - 1].push((u, v));
        }
    }

    let mut classes = Vec::with_capacity(k);
    let mut first_violation = None;
    for (i, edges) in mono.into_iter().enumerate() {
        let class = i + 1;
        let bound = defects.bound(class);
        let members = coloring.members(class);
        let max_induced_degree = members.iter().map(|&v| same[v]).max().unwrap_or(0);
        if first_violation.is_none() {
            if let Some(&v) = members.iter().find(|&&v| same[v] > bound.defect) {
                first_violation = Some(Violation::Degree { class, vertex: v, degree: same[v], bound: bound.defect });
            } else if bound.star && edges.len() > 1 {
                first_violation = Some(Violation::StarEdges { class, edge: edges[1], count: edges.len() });
            }
        }
        classes.push(ClassReport { class, bound, size: members.len(), max_induced_degree, monochromatic_edges: edges });
    }

    Ok(VerificationReport { valid: first_violation.is_none(), classes, first_violation })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(s: &str) -> DefectVector {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let d = dv("0,0,0,1*");
        assert_eq!(d.k(), 4);
        assert_eq!(d.bound(4), ClassBound::starred());
        assert_eq!(d.to_string(), "(0,0,0,1*)");
        assert_eq!(dv("(0, 1*, 2)").to_string(), "(0,1*,2)");
        assert!("0,2*".parse::<DefectVector>().is_err());
        assert!("".parse::<DefectVector>().is_err());
        assert!("0,x".parse::<DefectVector>().is_err());
    }

    #[test]
    fn k7_with_k4_class() {
        let g = Graph::complete(7);
        let c = Coloring::new(vec![1, 2, 3, 4, 4, 4, 4]).unwrap();
        let r = verify_coloring(&g, &c, &dv("0,0,0,3")).unwrap();
        assert!(r.valid);
        assert_eq!(r.classes[3].max_induced_degree, 3);
        assert_eq!(r.monochromatic_count(), 6);

        let r = verify_coloring(&g, &c, &dv("0,0,0,2")).unwrap();
        assert!(!r.valid);
        assert_eq!(r.first_violation, Some(Violation::Degree { class: 4, vertex: 3, degree: 3, bound: 2 }));
    }

    #[test]
    fn c5_star() {
        let g = Graph::cycle(5);
        let c = Coloring::new(vec![1, 2, 1, 2, 2]).unwrap();
        let r = verify_coloring(&g, &c, &dv("0,1*")).unwrap();
        assert!(r.valid);
        assert_eq!(r.monochromatic_edges(), vec![(3, 4)]);
    }

    #[test]
    fn star_caps_edge_count() {
        // two disjoint monochromatic edges: defect 1 holds, star does not
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let c = Coloring::new(vec![1, 1, 1, 1]).unwrap();
        assert!(verify_coloring(&g, &c, &dv("1")).unwrap().valid);
        let r = verify_coloring(&g, &c, &dv("1*")).unwrap();
        assert_eq!(r.first_violation, Some(Violation::StarEdges { class: 1, edge: (2, 3), count: 2 }));
    }

    #[test]
    fn rejects_partial_or_out_of_range() {
        let g = Graph::cycle(5);
        let short = Coloring::new(vec![1, 2, 1, 2]).unwrap();
        assert!(matches!(verify_coloring(&g, &short, &dv("0,1*")), Err(Error::ColoringSize { .. })));
        let wide = Coloring::new(vec![1, 2, 1, 2, 3]).unwrap();
        assert!(matches!(verify_coloring(&g, &wide, &dv("0,1*")), Err(Error::ClassOutOfRange { vertex: 4, .. })));
        assert!(Coloring::new(vec![1, 0]).is_err());
    }

    #[test]
    fn relaxation_order() {
        assert!(dv("0,1,2").relaxes(&dv("0,1*,2")));
        assert!(dv("1*,1").relaxes(&dv("0,1*")));
        assert!(!dv("1*").relaxes(&dv("1")));
        assert!(!dv("0,0").relaxes(&dv("0,0,0")));
    }
}
