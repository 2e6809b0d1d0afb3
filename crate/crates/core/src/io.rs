//! Text formats. Vertices are 1-indexed on disk and 0-indexed in memory.
//!
//! ```text
//! p edge 3 3          p rot 3 3            defects 0 1*
//! e 1 2               r 1 2 3              provenance solve
//! e 1 3               r 2 3 1              color 1 1
//! e 2 3               r 3 1 2              color 2 2
//!                                          color 3 2
//!                                          mono 1 2-3
//! ```
//!
//! Lines starting with `#` and blank lines are ignored.

use std::fmt::Write as _;

use crate::coloring::{Coloring, DefectVector};
use crate::constructions::{Certificate, Provenance};
use crate::embedding::RotationSystem;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim();
        (!l.is_empty() && !l.starts_with('#')).then(|| (i + 1, l.split_whitespace().collect()))
    })
}

fn num(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| perr(line, format!("expected a number, found '{tok}'")))
}

fn vertex(line: usize, tok: &str, n: usize) -> Result<usize> {
    let v = num(line, tok)?;
    if v == 0 || v > n {
        return Err(perr(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

fn header(line: usize, toks: &[&str], kind: &str) -> Result<(usize, usize)> {
    match toks {
        ["p", k, n, m] if *k == kind => Ok((num(line, n)?, num(line, m)?)),
        _ => Err(perr(line, format!("expected 'p {kind} <n> <m>'"))),
    }
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to a String");
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut it = lines(text);
    let (hl, htoks) = it.next().ok_or_else(|| perr(0, "empty graph file"))?;
    let (n, m) = header(hl, &htoks, "edge")?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (line, toks) in it {
        let ["e", a, b] = toks[..] else {
            return Err(perr(line, "expected 'e <u> <v>'"));
        };
        let (u, v) = (vertex(line, a, n)?, vertex(line, b, n)?);
        if u >= v {
            return Err(perr(line, format!("edge {} {} must have u < v", u + 1, v + 1)));
        }
        if !seen.insert((u, v)) {
            return Err(perr(line, format!("duplicate edge {} {}", u + 1, v + 1)));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(perr(hl, format!("header says {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges)
}

pub fn write_rotation(rot: &RotationSystem) -> String {
    let g = rot.graph();
    let mut out = format!("p rot {} {}\n", g.n(), g.edge_count());
    for v in 0..g.n() {
        write!(out, "r {}", v + 1).expect("writing to a String");
        for &w in rot.rotation(v) {
            write!(out, " {}", w + 1).expect("writing to a String");
        }
        out.push('\n');
    }
    out
}

pub fn parse_rotation(text: &str) -> Result<RotationSystem> {
    let mut it = lines(text);
    let (hl, htoks) = it.next().ok_or_else(|| perr(0, "empty rotation file"))?;
    let (n, m) = header(hl, &htoks, "rot")?;
    let mut rotation: Vec<Option<Vec<usize>>> = vec![None; n];
    for (line, toks) in it {
        if toks.len() < 2 || toks[0] != "r" {
            return Err(perr(line, "expected 'r <v> <u1> ... <ud>'"));
        }
        let v = vertex(line, toks[1], n)?;
        if rotation[v].is_some() {
            return Err(perr(line, format!("vertex {} listed twice", v + 1)));
        }
        rotation[v] = Some(toks[2..].iter().map(|t| vertex(line, t, n)).collect::<Result<_>>()?);
    }
    let rotation: Vec<Vec<usize>> = rotation
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| perr(hl, format!("vertex {} has no rotation line", v + 1))))
        .collect::<Result<_>>()?;
    let rot = RotationSystem::from_rotation(rotation)?;
    if rot.graph().edge_count() != m {
        return Err(perr(hl, format!("header says {m} edges, found {}", rot.graph().edge_count())));
    }
    Ok(rot)
}

/// A certificate as read from disk, before verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateFile {
    pub defects: DefectVector,
    pub provenance: Option<Provenance>,
    pub coloring: Coloring,
    /// The recorded monochromatic edges, 0-indexed.
    pub monochromatic: Vec<(usize, usize)>,
}

impl CertificateFile {
    /// Re-verifies the colouring on `g`.
    pub fn into_certificate(self, g: &Graph) -> Result<Certificate> {
        if self.coloring.len() != g.n() {
            return Err(Error::ColoringSize { expected: g.n(), got: self.coloring.len() });
        }
        Certificate::issue(g, self.coloring, self.defects, self.provenance.unwrap_or(Provenance::Solver))
    }
}

pub fn write_certificate(cert: &Certificate) -> String {
    let mut out = String::from("defects");
    for b in cert.defects.entries() {
        write!(out, " {b}").expect("writing to a String");
    }
    writeln!(out, "\nprovenance {}", cert.provenance).expect("writing to a String");
    for (v, &c) in cert.coloring.classes().iter().enumerate() {
        writeln!(out, "color {} {c}", v + 1).expect("writing to a String");
    }
    write!(out, "mono {}", cert.monochromatic.len()).expect("writing to a String");
    for &(u, v) in &cert.monochromatic {
        write!(out, " {}-{}", u + 1, v + 1).expect("writing to a String");
    }
    out.push('\n');
    out
}

/// Parses a certificate. Colours must be listed for vertices `1..=n` in
/// order, and each class must lie in `1..=k`.
pub fn parse_certificate(text: &str) -> Result<CertificateFile> {
    let mut defects = None;
    let mut provenance = None;
    let mut classes = Vec::new();
    let mut mono = None;
    for (line, toks) in lines(text) {
        match toks[0] {
            "defects" if defects.is_none() => {
                defects = Some(toks[1..].join(",").parse::<DefectVector>().map_err(|e| perr(line, e.to_string()))?);
            }
            "provenance" if toks.len() == 2 => {
                provenance = Some(toks[1].parse::<Provenance>().map_err(|_| perr(line, format!("unknown provenance '{}'", toks[1])))?);
            }
            "color" if toks.len() == 3 => {
                let v = num(line, toks[1])?;
                if v != classes.len() + 1 {
                    return Err(perr(line, format!("expected colour of vertex {}, found {v}", classes.len() + 1)));
                }
                let k = defects.as_ref().map(DefectVector::k).ok_or_else(|| perr(line, "colour before defects line"))?;
                let c = num(line, toks[2])?;
                if c == 0 || c > k {
                    return Err(Error::ClassOutOfRange { vertex: v - 1, class: c, k });
                }
                classes.push(c);
            }
            "mono" if toks.len() >= 2 && mono.is_none() => {
                let count = num(line, toks[1])?;
                let edges: Vec<(usize, usize)> = toks[2..]
                    .iter()
                    .map(|t| {
                        let (a, b) = t.split_once('-').ok_or_else(|| perr(line, format!("bad edge '{t}'")))?;
                        Ok((num(line, a)?.saturating_sub(1), num(line, b)?.saturating_sub(1)))
                    })
                    .collect::<Result<_>>()?;
                if edges.len() != count {
                    return Err(perr(line, format!("mono count {count} but {} edges listed", edges.len())));
                }
                mono = Some(edges);
            }
            other => return Err(perr(line, format!("unexpected line starting with '{other}'"))),
        }
    }
    Ok(CertificateFile {
        defects: defects.ok_or_else(|| perr(0, "missing defects line"))?,
        provenance,
        coloring: Coloring::new(classes)?,
        monochromatic: mono.unwrap_or_default(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_grid, GridSpec};

    #[test]
    fn graph_round_trip() {
        let g = Graph::from_edges(4, [(2, 3), (0, 1), (1, 3)]).unwrap();
        let text = write_graph(&g);
        assert_eq!(text, "p edge 4 3\ne 1 2\ne 2 4\ne 3 4\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
        assert_eq!(write_graph(&parse_graph(&text).unwrap()), text);
    }

    #[test]
    fn graph_rejects() {
        assert!(parse_graph("p edge 3 1\ne 1 4\n").is_err());
        assert!(parse_graph("p edge 3 2\ne 1 2\ne 1 2\n").is_err());
        assert!(parse_graph("p edge 3 2\ne 1 2\n").is_err());
        assert!(parse_graph("p edge 3 1\ne 2 1\n").is_err());
        assert!(parse_graph("p rot 3 0\n").is_err());
        assert!(parse_graph("# comment\n\np edge 2 1\n# more\ne 1 2\n").is_ok());
    }

    #[test]
    fn rotation_round_trip() {
        let rot = gen_grid(&GridSpec::new(3, 3, 1)).unwrap();
        let text = write_rotation(&rot);
        let back = parse_rotation(&text).unwrap();
        assert_eq!(back.graph(), rot.graph());
        assert_eq!(write_rotation(&back), text);
        assert!(parse_rotation("p rot 3 3\nr 1 2 3\nr 2 3 1\n").is_err());
        assert!(parse_rotation("p rot 3 3\nr 1 2 3\nr 2 3 1\nr 3 1\n").is_err());
    }

    #[test]
    fn certificate_round_trip() {
        let g = Graph::cycle(5);
        let c = Coloring::new(vec![1, 2, 1, 2, 2]).unwrap();
        let cert = Certificate::issue(&g, c, "0,1*".parse().unwrap(), Provenance::Solver).unwrap();
        let text = write_certificate(&cert);
        assert_eq!(text, "defects 0 1*\nprovenance solve\ncolor 1 1\ncolor 2 2\ncolor 3 1\ncolor 4 2\ncolor 5 2\nmono 1 4-5\n");
        let file = parse_certificate(&text).unwrap();
        assert_eq!(file.monochromatic, cert.monochromatic);
        assert_eq!(file.into_certificate(&g).unwrap(), cert);
    }

    #[test]
    fn certificate_rejects_class_above_k() {
        let err = parse_certificate("defects 0 0\ncolor 1 3\n").unwrap_err();
        assert!(matches!(err, Error::ClassOutOfRange { class: 3, k: 2, .. }));
    }
}
