//! `torcol` command-line tool.
//!
//! Exit codes: 0 success, SAT or valid; 1 UNSAT or invalid; 2 usage or
//! format error; 3 indeterminate.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use torcol::constructions::{
    color_0003_high_min_degree, color_0004, color_00002, color_0122, color_600001, color_6regular_graph, Certificate,
};
use torcol::corpus::DEFAULT_SEED;
use torcol::embedding::{shortest_noncontractible_cycle, RotationSystem};
use torcol::generators::{gen_named, NamedGraph};
use torcol::io::{parse_certificate, parse_graph, parse_rotation, write_certificate, write_graph, write_rotation};
use torcol::iso::find_isomorphism;
use torcol::solver::{solve_with, Precoloring, SolveStatus, SolverConfig};
use torcol::table1::table1_report;
use torcol::{verify_coloring, DefectVector, Error, Graph};

#[derive(Parser)]
#[command(name = "torcol", version, about = "Defective colourings of toroidal graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the graph file, and the rotation file when the family is embedded.
    Gen {
        /// Family token, e.g. t11, grid:5x5,1, circ:13:1,2,3.
        token: String,
        /// Base path; writes <base>.g and <base>.rot. Prints to stdout if absent.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decide whether a graph has a colouring with the given defects.
    Solve {
        graph: PathBuf,
        #[arg(long)]
        defects: String,
        /// Give up after this many search nodes.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a certificate against a graph.
    Verify { graph: PathBuf, certificate: PathBuf },
    /// Run one of the colouring constructions.
    Color {
        /// Rotation file (a graph file is accepted by 0122, 6reg and 0003core).
        input: PathBuf,
        #[arg(long, value_enum)]
        construction: Construction,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Face counts, face degrees and genus of an embedding.
    EmbedInfo {
        rotation: PathBuf,
        /// Print `key=value` lines instead of `key value`.
        #[arg(long)]
        kv: bool,
    },
    /// Shortest non-contractible cycle of a toroidal embedding.
    Sncc { rotation: PathBuf },
    /// Test two graphs for isomorphism.
    Iso { first: PathBuf, second: PathBuf },
    /// Machine checks of the torus row of the defect-list table.
    Table1 {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Number of random edge-deleted subgraphs added to the corpus.
        #[arg(long, default_value_t = 100)]
        extra: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    #[value(name = "600001")]
    Cycle56,
    #[value(name = "00002")]
    CycleClass,
    #[value(name = "0004")]
    PathContraction,
    #[value(name = "0122")]
    SplitClass,
    #[value(name = "6reg")]
    SixRegular,
    #[value(name = "0003core")]
    CoreExtension,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: 2, msg: e.to_string() }
    }
}

type Outcome = std::result::Result<(String, u8), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Loads a graph from either file format.
fn load_graph(path: &Path) -> std::result::Result<(Graph, Option<RotationSystem>), Failure> {
    let text = read(path)?;
    let is_rot = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).is_some_and(|l| l.starts_with("p rot"));
    if is_rot {
        let rot = parse_rotation(&text)?;
        Ok((rot.graph().clone(), Some(rot)))
    } else {
        Ok((parse_graph(&text)?, None))
    }
}

fn load_rotation(path: &Path) -> std::result::Result<RotationSystem, Failure> {
    Ok(parse_rotation(&read(path)?)?)
}

fn emit(cert_text: String, report: String, output: Option<&Path>) -> std::result::Result<String, Failure> {
    match output {
        Some(p) => {
            write(p, &cert_text)?;
            Ok(report)
        }
        None => Ok(cert_text + &report),
    }
}

fn class_lines(g: &Graph, cert: &Certificate) -> String {
    let mut out = String::new();
    for c in 1..=cert.defects.k() {
        writeln!(out, "class {c} bound {} max_degree {}", cert.defects.bound(c), cert.class_degree(g, c)).unwrap();
    }
    out
}

fn cmd_gen(token: &str, output: Option<&Path>) -> Outcome {
    let name: NamedGraph = token.parse()?;
    let (g, rot) = gen_named(&name)?;
    let Some(base) = output else {
        let mut out = write_graph(&g);
        if let Some(rot) = &rot {
            out += &write_rotation(rot);
        }
        return Ok((out, 0));
    };
    let gpath = base.with_extension("g");
    write(&gpath, &write_graph(&g))?;
    let mut report = format!("graph {}\nvertices {}\nedges {}\n", gpath.display(), g.n(), g.edge_count());
    if let Some(rot) = &rot {
        let rpath = base.with_extension("rot");
        write(&rpath, &write_rotation(rot))?;
        writeln!(report, "rotation {}", rpath.display()).unwrap();
    }
    Ok((report, 0))
}

fn cmd_solve(path: &Path, defects: &str, budget: Option<u64>, output: Option<&Path>) -> Outcome {
    let d: DefectVector = defects.parse()?;
    let (g, _) = load_graph(path)?;
    let r = solve_with(&g, &d, &Precoloring::new(), SolverConfig { budget })?;
    let stats = format!("nodes {}\n", r.stats.nodes);
    match r.status {
        SolveStatus::Sat(c) => {
            let cert = Certificate::issue(&g, c, d, torcol::constructions::Provenance::Solver)?;
            let report = format!("status SAT\n{stats}");
            Ok((emit(write_certificate(&cert), report, output)?, 0))
        }
        SolveStatus::Unsat => Ok((format!("status UNSAT\ndefects {defects}\n{stats}"), 1)),
        SolveStatus::Indeterminate => Ok((format!("status INDETERMINATE\n{stats}"), 3)),
    }
}

fn cmd_verify(gpath: &Path, cpath: &Path) -> Outcome {
    let (g, _) = load_graph(gpath)?;
    let file = parse_certificate(&read(cpath)?)?;
    if file.coloring.len() != g.n() {
        return Err(usage(format!("certificate colours {} vertices, graph has {}", file.coloring.len(), g.n())));
    }
    let rep = verify_coloring(&g, &file.coloring, &file.defects)?;
    let mut out = format!("valid {}\n", rep.valid);
    for c in &rep.classes {
        writeln!(out, "class {} bound {} size {} max_degree {}", c.class, c.bound, c.size, c.max_induced_degree).unwrap();
    }
    write!(out, "mono {}", rep.monochromatic_count()).unwrap();
    for (u, v) in rep.monochromatic_edges() {
        write!(out, " {}-{}", u + 1, v + 1).unwrap();
    }
    out.push('\n');
    if let Some(v) = &rep.first_violation {
        writeln!(out, "violation {v}").unwrap();
    }
    Ok((out, if rep.valid { 0 } else { 1 }))
}

fn cmd_color(path: &Path, construction: Construction, output: Option<&Path>) -> Outcome {
    let (g, rot) = load_graph(path)?;
    let need_rot = || rot.as_ref().ok_or_else(|| usage("this construction needs a rotation file"));
    let cert = match construction {
        Construction::Cycle56 => color_600001(need_rot()?),
        Construction::CycleClass => color_00002(need_rot()?),
        Construction::PathContraction => color_0004(need_rot()?),
        Construction::SplitClass => color_0122(&g),
        Construction::SixRegular => color_6regular_graph(&g),
        Construction::CoreExtension => color_0003_high_min_degree(&g),
    };
    let cert = cert.map_err(|e| match e {
        Error::CertificateRejected(_) => Failure { code: 1, msg: e.to_string() },
        e => usage(e.to_string()),
    })?;
    let report = format!(
        "provenance {}\ndefects {}\nmono {}\n{}",
        cert.provenance,
        cert.defects,
        cert.monochromatic.len(),
        class_lines(&g, &cert)
    );
    Ok((emit(write_certificate(&cert), report, output)?, 0))
}

fn cmd_embed_info(path: &Path, kv: bool) -> Outcome {
    let s = load_rotation(path)?.summary();
    let sep = if kv { "=" } else { " " };
    let mut out = String::new();
    for (k, v) in [("vertices", s.vertices), ("edges", s.edges), ("faces", s.faces), ("genus", s.genus)] {
        writeln!(out, "{k}{sep}{v}").unwrap();
    }
    for (deg, count) in &s.face_degrees {
        writeln!(out, "face_degree_{deg}{sep}{count}").unwrap();
    }
    Ok((out, 0))
}

fn cmd_sncc(path: &Path) -> Outcome {
    let rot = load_rotation(path)?;
    let c = shortest_noncontractible_cycle(&rot)?;
    if !c.satisfies_shortest_cycle_properties(rot.graph()) {
        return Err(Failure { code: 1, msg: "shortest cycle has a chord or a vertex with four cycle neighbours".into() });
    }
    let verts: Vec<String> = c.vertices.iter().map(|v| (v + 1).to_string()).collect();
    Ok((format!("length {}\ncycle {}\nsignature {}\ninduced true\n", c.len(), verts.join(" "), c.signature), 0))
}

fn cmd_iso(a: &Path, b: &Path) -> Outcome {
    let (g, _) = load_graph(a)?;
    let (h, _) = load_graph(b)?;
    match find_isomorphism(&g, &h) {
        Some(map) => {
            let m: Vec<String> = map.iter().map(|v| (v + 1).to_string()).collect();
            Ok((format!("isomorphic true\nmap {}\n", m.join(" ")), 0))
        }
        None => Ok(("isomorphic false\n".into(), 1)),
    }
}

fn cmd_table1(seed: u64, extra: usize) -> Outcome {
    let entries = table1_report(seed, extra)?;
    let mut out = format!("seed {seed}\n");
    for e in &entries {
        writeln!(out, "{e}").unwrap();
    }
    let ok = entries.iter().all(|e| e.passed);
    Ok((out, if ok { 0 } else { 1 }))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen { token, output } => cmd_gen(&token, output.as_deref()),
        Command::Solve { graph, defects, budget, output } => cmd_solve(&graph, &defects, budget, output.as_deref()),
        Command::Verify { graph, certificate } => cmd_verify(&graph, &certificate),
        Command::Color { input, construction, output } => cmd_color(&input, construction, output.as_deref()),
        Command::EmbedInfo { rotation, kv } => cmd_embed_info(&rotation, kv),
        Command::Sncc { rotation } => cmd_sncc(&rotation),
        Command::Iso { first, second } => cmd_iso(&first, &second),
        Command::Table1 { seed, extra } => cmd_table1(seed, extra),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // help and version requests are not errors
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
