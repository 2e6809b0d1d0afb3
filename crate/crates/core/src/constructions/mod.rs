//! Colouring constructions for toroidal graphs. Every function here returns
//! a [`Certificate`], which can only be built from a colouring that passes
//! [`verify_coloring`].

mod cycles;
mod patterns;
mod pipelines;
mod sixreg;

use std::fmt;
use std::str::FromStr;

pub use cycles::{color_01_paths_cycles, color_cycle_56};
pub use patterns::{exception_pattern_source, pattern_circ123, pattern_exception, Pattern, DIRECT_PATTERNS};
pub use pipelines::{color_0004, color_0004_from_cut, color_00002, color_0122, color_600001};
pub use sixreg::{color_0003_high_min_degree, color_6regular, color_6regular_graph, recognize_6regular};

use crate::coloring::{verify_coloring, Coloring, DefectVector, VerificationReport};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which construction produced a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Shortest non-contractible cycle coloured 5/6, rest 4-coloured.
    Cycle56,
    /// Shortest non-contractible cycle as a fifth class.
    CycleClass,
    /// Cycle plus a contracted path as the defect class.
    PathContraction,
    /// A (2,2,2) colouring with one class split into (0,1).
    SplitClass,
    /// Exact search on a 6-regular graph.
    SixRegularSearch,
    /// The periodic pattern family on `G_n[1,2,3]`.
    Circ123Pattern,
    /// One of the sporadic patterns on `G_n[1,r,r+1]`.
    SporadicPattern,
    /// 6-core coloured, then extended into the faces.
    CoreExtension,
    /// Plain exact search.
    Solver,
}

impl Provenance {
    pub const ALL: [Provenance; 9] = [
        Provenance::Cycle56,
        Provenance::CycleClass,
        Provenance::PathContraction,
        Provenance::SplitClass,
        Provenance::SixRegularSearch,
        Provenance::Circ123Pattern,
        Provenance::SporadicPattern,
        Provenance::CoreExtension,
        Provenance::Solver,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Provenance::Cycle56 => "600001",
            Provenance::CycleClass => "00002",
            Provenance::PathContraction => "0004",
            Provenance::SplitClass => "0122",
            Provenance::SixRegularSearch => "6reg-search",
            Provenance::Circ123Pattern => "6reg-circ123",
            Provenance::SporadicPattern => "6reg-sporadic",
            Provenance::CoreExtension => "0003core",
            Provenance::Solver => "solve",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Provenance::ALL
            .iter()
            .copied()
            .find(|p| p.tag() == s)
            .ok_or_else(|| Error::Parse { line: 0, msg: format!("unknown provenance '{s}'") })
    }
}

/// A colouring together with the defect vector it satisfies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub coloring: Coloring,
    pub defects: DefectVector,
    pub provenance: Provenance,
    /// Monochromatic edges, `u < v`, sorted.
    pub monochromatic: Vec<(usize, usize)>,
}

impl Certificate {
    /// Verifies `coloring` on `g` and wraps it; fails if verification does.
    pub fn issue(g: &Graph, coloring: Coloring, defects: DefectVector, provenance: Provenance) -> Result<Self> {
        let report = verify_coloring(g, &coloring, &defects)?;
        if let Some(v) = report.first_violation {
            return Err(Error::CertificateRejected(format!("{provenance}: {v}")));
        }
        let mut monochromatic = report.monochromatic_edges();
        monochromatic.sort_unstable();
        Ok(Certificate { coloring, defects, provenance, monochromatic })
    }

    pub fn verify(&self, g: &Graph) -> Result<VerificationReport> {
        verify_coloring(g, &self.coloring, &self.defects)
    }

    /// Largest induced degree within `class` (1-based).
    pub fn class_degree(&self, g: &Graph, class: usize) -> usize {
        let mut deg = vec![0usize; g.n()];
        for &(u, v) in &self.monochromatic {
            if self.coloring.class_of(u) == class {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        deg.into_iter().max().unwrap_or(0)
    }
}

/// Colours a cycle in place: `classes[c[i]] = pattern[i]`.
fn paint(classes: &mut [usize], vertices: &[usize], colors: &[usize]) {
    for (&x, &c) in vertices.iter().zip(colors) {
        classes[x] = c;
    }
}
