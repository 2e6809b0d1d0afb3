//! Classification of 6-regular toroidal graphs by 4-colourability.
//!
//! A grid `G[m×n,k]` is the Cayley graph of `Z² / ⟨(m,0), (1-k, n)⟩` with
//! steps south, east and north-east. When that group is cyclic the grid is
//! a circulant, and multiplying the generating set by a unit gives an
//! isomorphic circulant. Every exceptional family is recognised through
//! these two reductions.

use std::fmt;

use super::{gen_circulant, gen_grid, triangle_generators, CirculantSpec, GridSpec};
use crate::coloring::DefectVector;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{solve, SolveStatus};

/// The six small grids that need five colours.
pub const SMALL_EXCEPTION_GRIDS: [GridSpec; 6] = [
    GridSpec::new(3, 3, 2),
    GridSpec::new(3, 3, 3),
    GridSpec::new(5, 3, 2),
    GridSpec::new(5, 3, 3),
    GridSpec::new(5, 5, 3),
    GridSpec::new(5, 5, 4),
];

/// The sixteen sporadic `(r, n)` with `G_n[1,r,r+1]` not 4-colourable.
pub const SPORADIC_EXCEPTIONS: [(usize, usize); 16] = [
    (3, 13),
    (3, 17),
    (3, 18),
    (3, 25),
    (4, 17),
    (6, 17),
    (6, 25),
    (6, 33),
    (7, 19),
    (7, 25),
    (7, 26),
    (9, 25),
    (10, 25),
    (10, 26),
    (10, 37),
    (14, 33),
];

/// A 6-regular toroidal graph given arithmetically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SixRegularSpec {
    Grid(GridSpec),
    Circulant(CirculantSpec),
}

impl SixRegularSpec {
    pub fn order(&self) -> usize {
        match self {
            SixRegularSpec::Grid(g) => g.order(),
            SixRegularSpec::Circulant(c) => c.n(),
        }
    }

    /// The graph with its canonical triangulation of the torus.
    pub fn embedding(&self) -> Result<crate::embedding::RotationSystem> {
        match self {
            SixRegularSpec::Grid(g) => gen_grid(g),
            SixRegularSpec::Circulant(c) => super::circulant_embedding(c).ok_or_else(|| {
                Error::InvalidCirculant(format!("{c} is not a 6-regular triangulation of the torus"))
            }),
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        self.embedding().map(|r| r.graph().clone())
    }
}

impl fmt::Display for SixRegularSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SixRegularSpec::Grid(g) => g.fmt(f),
            SixRegularSpec::Circulant(c) => c.fmt(f),
        }
    }
}

/// One entry of the list of 6-regular toroidal graphs that are not
/// 4-colourable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExceptionFamily {
    /// Item 1: a specific small grid.
    SmallGrid(GridSpec),
    /// Item 2: `G[m×2,1]` with `m` odd (not simple).
    OddTwoColumn,
    /// Item 3: `G_n[1,r,r+1]` with `n ∈ {2r+2, 2r+3, 3r+1, 3r+2}` and
    /// `4 ∤ n`.
    UnitReducible,
    /// Item 4: `G_n[1,2,3]` with `4 ∤ n`.
    Circ123,
    /// Item 5: `G_n[1,r,r+1]` for one sporadic pair.
    Sporadic { r: usize, n: usize },
}

impl ExceptionFamily {
    pub fn item(&self) -> u8 {
        match self {
            ExceptionFamily::SmallGrid(_) => 1,
            ExceptionFamily::OddTwoColumn => 2,
            ExceptionFamily::UnitReducible => 3,
            ExceptionFamily::Circ123 => 4,
            ExceptionFamily::Sporadic { .. } => 5,
        }
    }
}

pub fn yehzhu_exceptions() -> Vec<ExceptionFamily> {
    let mut out: Vec<ExceptionFamily> = SMALL_EXCEPTION_GRIDS.iter().map(|&g| ExceptionFamily::SmallGrid(g)).collect();
    out.push(ExceptionFamily::OddTwoColumn);
    out.push(ExceptionFamily::UnitReducible);
    out.push(ExceptionFamily::Circ123);
    out.extend(SPORADIC_EXCEPTIONS.iter().map(|&(r, n)| ExceptionFamily::Sporadic { r, n }));
    out
}

/// Which exception a spec falls under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExceptionCase {
    /// Item 1.
    SmallGrid,
    /// Item 3, reduced to item 4 by the unit `r + 1` or `r`.
    UnitReduced { r: usize },
    /// Item 4. Includes `K7` (`n = 7`) and `T11` (`n = 11`).
    Circ123,
    /// Item 5.
    Sporadic { r: usize },
}

impl ExceptionCase {
    pub fn item(&self) -> u8 {
        match self {
            ExceptionCase::SmallGrid => 1,
            ExceptionCase::UnitReduced { .. } => 3,
            ExceptionCase::Circ123 => 4,
            ExceptionCase::Sporadic { .. } => 5,
        }
    }
}

impl fmt::Display for ExceptionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExceptionCase::SmallGrid => write!(f, "case 1"),
            ExceptionCase::UnitReduced { r } => write!(f, "case 3->4 (r={r})"),
            ExceptionCase::Circ123 => write!(f, "case 4"),
            ExceptionCase::Sporadic { r } => write!(f, "case 5 (r={r})"),
        }
    }
}

/// A vertex bijection onto `G_n[1, r, r+1]` (`r = 2` gives `G_n[1,2,3]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub n: usize,
    pub r: usize,
    /// Vertex of the classified graph -> vertex of `G_n[1,r,r+1]`.
    pub map: Vec<usize>,
}

impl NormalForm {
    pub fn target(&self) -> CirculantSpec {
        CirculantSpec::new(self.n, &[1, self.r, self.r + 1]).expect("normal form offsets are in range")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// `None` when the graph is 4-colourable.
    pub exception: Option<ExceptionCase>,
    /// The circulant `G_n[S]` this graph is isomorphic to, when its group is
    /// cyclic, as `(n, S)` with the vertex map.
    pub circulant: Option<(CirculantSpec, Vec<usize>)>,
    /// Normal forms `G_n[1,r,r+1]` reachable by units, one per `r`.
    pub normal_forms: Vec<NormalForm>,
}

impl Classification {
    pub fn is_four_colorable(&self) -> bool {
        self.exception.is_none()
    }

    pub fn normal_form(&self, r: usize) -> Option<&NormalForm> {
        self.normal_forms.iter().find(|f| f.r == r)
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exception {
            Some(e) => write!(f, "exception, {e}"),
            None => write!(f, "four-colorable"),
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn norm(x: usize, n: usize) -> usize {
    let x = x % n;
    x.min(n - x)
}

/// Isomorphism `G[m×n,k] -> G_N[S]` with `N = mn`, if the grid's group is
/// cyclic. Vertex `(i, j)` goes to `(i-1)·α + (j-1)·β`.
pub fn grid_as_circulant(spec: &GridSpec) -> Option<(CirculantSpec, Vec<usize>)> {
    let (m, n, k) = (spec.m, spec.n, spec.k);
    let big = m * n;
    if gcd(gcd(m, n), k - 1) != 1 {
        return None;
    }
    for t in 0..m {
        let alpha = t * n;
        for beta in 0..big {
            if (n * beta) % big != ((k - 1) * alpha) % big || gcd(gcd(alpha, beta), big) != 1 {
                continue;
            }
            let map: Vec<usize> = (0..big)
                .map(|v| {
                    let (i, j) = spec.coords(v);
                    ((i - 1) * alpha + (j - 1) * beta) % big
                })
                .collect();
            let s = [norm(alpha, big), norm(beta, big), norm(beta + big - alpha, big)];
            let circ = CirculantSpec::new(big, &s).ok()?;
            return Some((circ, map));
        }
    }
    None
}

/// All `G_n[1,r,r+1]` reachable from `G_n[S]` by multiplying with a unit,
/// composed with `base_map`.
pub fn circulant_normal_form(spec: &CirculantSpec, base_map: &[usize]) -> Vec<NormalForm> {
    let n = spec.n();
    let mut out: Vec<NormalForm> = Vec::new();
    for p in 1..n {
        if gcd(p, n) != 1 {
            continue;
        }
        let mut t: Vec<usize> = spec.offsets().iter().map(|&x| norm(p * x, n)).collect();
        t.sort_unstable();
        if t.len() == 3 && t[0] == 1 && t[2] == t[1] + 1 {
            let r = t[1];
            if out.iter().all(|f| f.r != r) {
                let map = base_map.iter().map(|&v| (p * v) % n).collect();
                out.push(NormalForm { n, r, map });
            }
        }
    }
    out.sort_by_key(|f| f.r);
    out
}

/// Decides whether a 6-regular toroidal graph is 4-colourable and, if not,
/// which exception it is. Grids and circulants are first reduced
/// arithmetically; graphs of order at most 30 are then re-checked with an
/// exact 4-colouring search.
pub fn classify_6regular(spec: &SixRegularSpec) -> Result<Classification> {
    let (exception, circulant) = match spec {
        SixRegularSpec::Grid(g) => {
            if let Some(reason) = g.defect() {
                return Err(Error::InvalidGrid { m: g.m, n: g.n, k: g.k, reason });
            }
            let circ = grid_as_circulant(g);
            let small = SMALL_EXCEPTION_GRIDS.contains(g).then_some(ExceptionCase::SmallGrid);
            (small, circ)
        }
        SixRegularSpec::Circulant(c) => {
            if triangle_generators(c).is_none() || gcd(c.offsets().iter().fold(c.n(), |a, &b| gcd(a, b)), c.n()) != 1 {
                return Err(Error::InvalidCirculant(format!("{c} is not a connected 6-regular toroidal circulant")));
            }
            (None, Some((c.clone(), (0..c.n()).collect())))
        }
    };

    let normal_forms = match &circulant {
        Some((c, map)) => circulant_normal_form(c, map),
        None => Vec::new(),
    };
    let exception = exception.or_else(|| {
        let (c, _) = circulant.as_ref()?;
        let n = c.n();
        let s = c.offsets();
        if n % 4 != 0 {
            if s[0] == 1 && s[2] == s[1] + 1 && s[1] != 2 {
                let r = s[1];
                if [2 * r + 3, 3 * r + 1, 3 * r + 2].contains(&n) {
                    return Some(ExceptionCase::UnitReduced { r });
                }
            }
            if normal_forms.iter().any(|f| f.r == 2) {
                return Some(ExceptionCase::Circ123);
            }
        }
        normal_forms
            .iter()
            .find(|f| SPORADIC_EXCEPTIONS.contains(&(f.r, n)))
            .map(|f| ExceptionCase::Sporadic { r: f.r })
    });

    let out = Classification { exception, circulant, normal_forms };
    if spec.order() <= 30 {
        let g = match spec {
            SixRegularSpec::Grid(g) => gen_grid(g)?.graph().clone(),
            SixRegularSpec::Circulant(c) => gen_circulant(c),
        };
        let four = match solve(&g, &DefectVector::proper(4)).status {
            SolveStatus::Sat(_) => true,
            SolveStatus::Unsat => false,
            SolveStatus::Indeterminate => return Err(Error::Indeterminate(0)),
        };
        if four != out.is_four_colorable() {
            return Err(Error::Precondition(format!(
                "{spec}: arithmetic verdict '{out}' disagrees with exhaustive 4-colouring"
            )));
        }
    }
    Ok(out)
}
