//! Graph families: circulants, shifted triangular grids on the torus, and a
//! handful of named graphs.

mod sixreg;

pub use sixreg::{
    classify_6regular, circulant_normal_form, grid_as_circulant, yehzhu_exceptions, Classification, ExceptionCase, ExceptionFamily,
    NormalForm, SixRegularSpec, SMALL_EXCEPTION_GRIDS, SPORADIC_EXCEPTIONS,
};

use std::fmt;
use std::str::FromStr;

use crate::embedding::RotationSystem;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `G_n[S]`: vertices `0..n`, `i ~ j` iff `i - j ≡ ±x (mod n)` for some
/// offset `x` in `S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CirculantSpec {
    n: usize,
    offsets: Vec<usize>,
}

impl CirculantSpec {
    /// Offsets must be distinct and lie in `1..=n/2`.
    pub fn new(n: usize, offsets: &[usize]) -> Result<Self> {
        let mut s = offsets.to_vec();
        s.sort_unstable();
        if s.is_empty() {
            return Err(Error::InvalidCirculant("empty generating set".into()));
        }
        if s.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCirculant(format!("repeated offset in {offsets:?}")));
        }
        if let Some(&x) = s.iter().find(|&&x| x == 0 || x > n / 2) {
            return Err(Error::InvalidCirculant(format!("offset {x} outside 1..={}", n / 2)));
        }
        Ok(CirculantSpec { n, offsets: s })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// True when `n/2` is an offset, which contributes one edge per vertex
    /// instead of two.
    pub fn has_half_offset(&self) -> bool {
        self.n.is_multiple_of(2) && self.offsets.contains(&(self.n / 2))
    }

    pub fn degree(&self) -> usize {
        2 * self.offsets.len() - usize::from(self.has_half_offset())
    }
}

impl fmt::Display for CirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.offsets.iter().map(ToString::to_string).collect();
        write!(f, "G_{}[{}]", self.n, s.join(","))
    }
}

pub fn gen_circulant(spec: &CirculantSpec) -> Graph {
    let n = spec.n;
    let edges: Vec<_> = (0..n).flat_map(|i| spec.offsets.iter().map(move |&x| (i, (i + x) % n))).collect();
    Graph::from_edges(n, edges).expect("offsets in range give a simple graph")
}

/// Toroidal embedding of a 3-offset circulant whose offsets satisfy
/// `c ≡ ±a ± b`. The rotation at `v` is `v+a, v+c, v+b, v-a, v-c, v-b`
/// for a choice of signs with `c = a + b`.
pub fn circulant_embedding(spec: &CirculantSpec) -> Option<RotationSystem> {
    let (a, b, c) = triangle_generators(spec)?;
    let n = spec.n as i64;
    let at = |v: usize, d: i64| (v as i64 + d).rem_euclid(n) as usize;
    let rotation = (0..spec.n).map(|v| vec![at(v, a), at(v, c), at(v, b), at(v, -a), at(v, -c), at(v, -b)]).collect();
    RotationSystem::new(gen_circulant(spec), rotation).ok()
}

/// Signed generators `(a, b, a + b)` covering the three offsets.
pub(crate) fn triangle_generators(spec: &CirculantSpec) -> Option<(i64, i64, i64)> {
    if spec.offsets.len() != 3 || spec.has_half_offset() {
        return None;
    }
    let n = spec.n as i64;
    let s: Vec<i64> = spec.offsets.iter().map(|&x| x as i64).collect();
    for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        for sa in [1, -1] {
            for sb in [1, -1] {
                let (a, b) = (sa * s[i], sb * s[j]);
                if (a + b - s[k]).rem_euclid(n) == 0 {
                    return Some((a, b, s[k]));
                }
            }
        }
    }
    None
}

/// `G[m×n, k]`: the right-diagonal triangular grid with `m` rows and `n`
/// columns whose last column is glued to the first with a shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridSpec {
    pub m: usize,
    pub n: usize,
    pub k: usize,
}

impl GridSpec {
    pub const fn new(m: usize, n: usize, k: usize) -> Self {
        GridSpec { m, n, k }
    }

    pub fn order(&self) -> usize {
        self.m * self.n
    }

    /// Index of the 1-based grid vertex `(i, j)`.
    pub fn index(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.n + (j - 1)
    }

    /// 1-based coordinates of a vertex index.
    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v / self.n + 1, v % self.n + 1)
    }

    fn row(&self, i: i64) -> usize {
        (i - 1).rem_euclid(self.m as i64) as usize + 1
    }

    /// Neighbours in rotation order: east, north-east, north, west,
    /// south-west, south.
    pub fn rotation_at(&self, v: usize) -> [usize; 6] {
        let (i, j) = self.coords(v);
        let (ii, shift) = (i as i64, self.k as i64);
        let (m, n) = (self.m, self.n);
        let east = if j < n { self.index(i, j + 1) } else { self.index(self.row(ii + shift - 1), 1) };
        let north_east = if j < n { self.index(self.row(ii - 1), j + 1) } else { self.index(self.row(ii + shift - 2), 1) };
        let north = self.index(self.row(ii - 1), j);
        let west = if j > 1 { self.index(i, j - 1) } else { self.index(self.row(ii - shift + 1), n) };
        let south_west = if j > 1 { self.index(self.row(ii + 1), j - 1) } else { self.index(self.row(ii - shift + 2), n) };
        let south = self.index(self.row(ii + 1), j);
        debug_assert!(m >= 1);
        [east, north_east, north, west, south_west, south]
    }

    /// Why these parameters do not give a simple 6-regular graph, if they do not.
    pub fn defect(&self) -> Option<String> {
        if self.m == 0 || self.n == 0 {
            return Some("empty grid".into());
        }
        if self.k == 0 || self.k > self.m {
            return Some(format!("shift {} outside 1..={}", self.k, self.m));
        }
        for v in 0..self.order() {
            let nb = self.rotation_at(v);
            if let Some(&w) = nb.iter().find(|&&w| w == v) {
                let (i, j) = self.coords(w);
                return Some(format!("loop at ({i},{j})"));
            }
            for a in 0..6 {
                for b in a + 1..6 {
                    if nb[a] == nb[b] {
                        let (i, j) = self.coords(v);
                        let (p, q) = self.coords(nb[a]);
                        return Some(format!("multiple edge ({i},{j})-({p},{q})"));
                    }
                }
            }
        }
        None
    }

    pub fn is_simple(&self) -> bool {
        self.defect().is_none()
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G[{}x{},{}]", self.m, self.n, self.k)
    }
}

/// The grid with its canonical embedding, in which every face is a
/// triangle.
pub fn gen_grid(spec: &GridSpec) -> Result<RotationSystem> {
    if let Some(reason) = spec.defect() {
        return Err(Error::InvalidGrid { m: spec.m, n: spec.n, k: spec.k, reason });
    }
    let rotation: Vec<Vec<usize>> = (0..spec.order()).map(|v| spec.rotation_at(v).to_vec()).collect();
    RotationSystem::from_rotation(rotation)
}

/// The Hajós sum of two copies of K4. Vertices: 0 is the identified
/// vertex, 1-3 the rest of the first copy, 4-6 of the second; the deleted
/// edges are 0-1 and 0-4 and the new edge is 1-4.
pub fn hajos_h7() -> Graph {
    Graph::from_edges(
        7,
        [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 5), (0, 6), (4, 5), (4, 6), (5, 6), (1, 4)],
    )
    .expect("H7 edges are valid")
}

/// Named graphs with stable lowercase tokens.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    K6,
    K7,
    H7,
    T11,
    C3JoinC5,
    K2JoinH7,
    Cycle(usize),
    Complete(usize),
    Grid(GridSpec),
    Circulant(CirculantSpec),
}

impl NamedGraph {
    /// The six small grids that are not 4-colourable.
    pub fn small_exceptions() -> Vec<NamedGraph> {
        SMALL_EXCEPTION_GRIDS.iter().map(|&g| NamedGraph::Grid(g)).collect()
    }

    pub fn token(&self) -> String {
        match self {
            NamedGraph::K6 => "k6".into(),
            NamedGraph::K7 => "k7".into(),
            NamedGraph::H7 => "h7".into(),
            NamedGraph::T11 => "t11".into(),
            NamedGraph::C3JoinC5 => "c3vc5".into(),
            NamedGraph::K2JoinH7 => "k2vh7".into(),
            NamedGraph::Cycle(n) => format!("c{n}"),
            NamedGraph::Complete(n) => format!("k{n}"),
            NamedGraph::Grid(g) => format!("grid:{}x{},{}", g.m, g.n, g.k),
            NamedGraph::Circulant(c) => {
                let s: Vec<String> = c.offsets().iter().map(ToString::to_string).collect();
                format!("circ:{}:{}", c.n(), s.join(","))
            }
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::Parse { line: 0, msg };
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad(format!("bad number {t:?} in {s:?}")));
        Ok(match s {
            "k6" => NamedGraph::K6,
            "k7" => NamedGraph::K7,
            "h7" => NamedGraph::H7,
            "t11" => NamedGraph::T11,
            "c3vc5" => NamedGraph::C3JoinC5,
            "k2vh7" => NamedGraph::K2JoinH7,
            _ => {
                if let Some(rest) = s.strip_prefix("grid:") {
                    let (dims, k) = rest.split_once(',').ok_or_else(|| bad(format!("expected grid:<m>x<n>,<k>, got {s:?}")))?;
                    let (m, n) = dims.split_once('x').ok_or_else(|| bad(format!("expected grid:<m>x<n>,<k>, got {s:?}")))?;
                    NamedGraph::Grid(GridSpec::new(num(m)?, num(n)?, num(k)?))
                } else if let Some(rest) = s.strip_prefix("circ:") {
                    let (n, offs) = rest.split_once(':').ok_or_else(|| bad(format!("expected circ:<n>:<s1,...>, got {s:?}")))?;
                    let offsets = offs.split(',').map(num).collect::<Result<Vec<_>>>()?;
                    NamedGraph::Circulant(CirculantSpec::new(num(n)?, &offsets)?)
                } else if let Some(n) = s.strip_prefix('c') {
                    let n = num(n)?;
                    if n < 3 {
                        return Err(bad(format!("cycle needs 3+ vertices, got {n}")));
                    }
                    NamedGraph::Cycle(n)
                } else if let Some(n) = s.strip_prefix('k') {
                    NamedGraph::Complete(num(n)?)
                } else {
                    return Err(bad(format!("unknown graph token {s:?}")));
                }
            }
        })
    }
}

/// Builds a named graph, with its canonical toroidal embedding where one
/// is defined (K6, K7, T11, grids and triangle circulants).
pub fn gen_named(name: &NamedGraph) -> Result<(Graph, Option<RotationSystem>)> {
    let with_rot = |r: RotationSystem| (r.graph().clone(), Some(r));
    Ok(match name {
        NamedGraph::K7 => with_rot(gen_grid(&GridSpec::new(7, 1, 4))?),
        NamedGraph::T11 => with_rot(gen_grid(&GridSpec::new(11, 1, 4))?),
        NamedGraph::K6 => with_rot(k6_embedding()),
        NamedGraph::H7 => (hajos_h7(), None),
        NamedGraph::C3JoinC5 => (Graph::cycle(3).join(&Graph::cycle(5)), None),
        NamedGraph::K2JoinH7 => (Graph::complete(2).join(&hajos_h7()), None),
        NamedGraph::Cycle(n) => (Graph::cycle(*n), None),
        NamedGraph::Complete(n) => (Graph::complete(*n), None),
        NamedGraph::Grid(g) => with_rot(gen_grid(g)?),
        NamedGraph::Circulant(c) => match circulant_embedding(c) {
            Some(r) => with_rot(r),
            None => (gen_circulant(c), None),
        },
    })
}

/// K7's triangulation with one vertex removed: eight triangles and one
/// hexagon.
fn k6_embedding() -> RotationSystem {
    let k7 = gen_grid(&GridSpec::new(7, 1, 4)).expect("K7 grid is simple");
    let rotation = (0..6).map(|v| k7.rotation(v).iter().copied().filter(|&w| w != 6).collect()).collect();
    RotationSystem::from_rotation(rotation).expect("vertex deletion keeps a valid rotation")
}
