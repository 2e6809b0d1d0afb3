//! Machine checks of the torus row of the table of defect lists.

use std::fmt;

use rayon::prelude::*;

use crate::coloring::DefectVector;
use crate::constructions::{color_0004, color_00002, color_0122, color_600001, Certificate};
use crate::corpus::{random_subgraph_corpus, toroidal_corpus, CorpusEntry};
use crate::error::Result;
use crate::graph::Graph;
use crate::solver::solve;

/// Largest order on which the `(0,1,2,2)` and `(2,2,2)` checks run.
pub const SMALL_ORDER: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Entry {
    /// Number of colours.
    pub k: usize,
    pub claim: String,
    pub method: String,
    pub instances: usize,
    pub passed: bool,
    /// The first failing instance, if any.
    pub failure: Option<String>,
}

impl fmt::Display for Table1Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} k={} {} via {} ({} instances)", self.k, self.claim, self.method, self.instances)?;
        if let Some(why) = &self.failure {
            write!(f, ": {why}")?;
        }
        Ok(())
    }
}

fn run_each<F>(k: usize, claim: &str, method: &str, corpus: &[CorpusEntry], f: F) -> Table1Entry
where
    F: Fn(&CorpusEntry) -> Result<()> + Sync,
{
    let mut failures: Vec<(usize, String)> = corpus
        .par_iter()
        .enumerate()
        .filter_map(|(i, e)| f(e).err().map(|err| (i, format!("{}: {err}", e.name))))
        .collect();
    failures.sort();
    Table1Entry {
        k,
        claim: claim.into(),
        method: method.into(),
        instances: corpus.len(),
        passed: failures.is_empty(),
        failure: failures.into_iter().next().map(|(_, s)| s),
    }
}

fn check_cert(g: &Graph, cert: Result<Certificate>, claim: &DefectVector) -> Result<()> {
    let cert = cert?;
    let report = crate::coloring::verify_coloring(g, &cert.coloring, claim)?;
    if !report.valid {
        return Err(crate::error::Error::CertificateRejected(format!("does not meet {claim}")));
    }
    Ok(())
}

fn by_solver(e: &CorpusEntry, d: &DefectVector) -> Result<()> {
    let c = solve(e.graph(), d).into_coloring()?;
    let cert = Certificate::issue(e.graph(), c, d.clone(), crate::constructions::Provenance::Solver);
    check_cert(e.graph(), cert, d)
}

fn tightness(k: usize, claim: &str, g: &Graph, name: &str, d: DefectVector) -> Table1Entry {
    let status = solve(g, &d).status;
    Table1Entry {
        k,
        claim: claim.into(),
        method: format!("exact search: {name} is not {d}-colourable"),
        instances: 1,
        passed: status.is_unsat(),
        failure: (!status.is_unsat()).then(|| format!("{name} search returned {}", status.label())),
    }
}

/// Runs every check. The corpus is the canonical grids plus `K7` and `T11`,
/// extended by `extra` seeded edge-deleted subgraphs.
pub fn table1_report(seed: u64, extra: usize) -> Result<Vec<Table1Entry>> {
    let mut corpus = toroidal_corpus();
    corpus.extend(random_subgraph_corpus(seed, extra)?);
    let small: Vec<CorpusEntry> = corpus.iter().filter(|e| e.graph().n() <= SMALL_ORDER).cloned().collect();
    let k7 = Graph::complete(7);

    let d7 = DefectVector::proper(7);
    let d6: DefectVector = "0,0,0,0,0,1*".parse()?;
    let d5a = DefectVector::plain(&[0, 0, 0, 0, 2]);
    let d5b: DefectVector = "0,0,0,1*,1*".parse()?;
    let d4a = DefectVector::plain(&[0, 0, 0, 4]);
    let d4b = DefectVector::plain(&[0, 1, 2, 2]);
    let d3 = DefectVector::plain(&[2, 2, 2]);

    Ok(vec![
        run_each(7, "(0,0,0,0,0,0,0)", "exact search", &corpus, |e| by_solver(e, &d7)),
        run_each(6, "(0,0,0,0,0,1*)", "cycle 5/6 construction", &corpus, |e| check_cert(e.graph(), color_600001(&e.rot), &d6)),
        tightness(6, "(0,0,0,0,0,1*) tight", &k7, "K7", DefectVector::proper(6)),
        run_each(5, "(0,0,0,0,2)", "cycle class construction", &corpus, |e| check_cert(e.graph(), color_00002(&e.rot), &d5a)),
        run_each(5, "(0,0,0,1*,1*)", "exact search", &corpus, |e| by_solver(e, &d5b)),
        tightness(5, "(0,0,0,0,2) tight", &k7, "K7", DefectVector::plain(&[0, 0, 0, 0, 1])),
        tightness(5, "(0,0,0,1*,1*) tight", &k7, "K7", "0,0,0,0,1*".parse()?),
        run_each(4, "(0,0,0,4)", "path contraction construction", &corpus, |e| check_cert(e.graph(), color_0004(&e.rot), &d4a)),
        run_each(4, "(0,1,2,2)", "split-class construction", &small, |e| check_cert(e.graph(), color_0122(e.graph()), &d4b)),
        run_each(3, "(2,2,2)", "exact search", &small, |e| by_solver(e, &d3)),
    ])
}
