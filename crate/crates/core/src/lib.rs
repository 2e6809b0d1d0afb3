//! Defective colourings of graphs embedded on the torus.

pub mod coloring;
pub mod embedding;
pub mod error;
pub mod generators;
pub mod graph;
pub mod iso;
pub mod solver;
pub mod constructions;
pub mod corpus;
pub mod io;
pub mod table1;

pub use coloring::{verify_coloring, ClassBound, Coloring, DefectVector, VerificationReport, Violation};
pub use error::{Error, Result};
pub use graph::{shortest_path, Graph};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/coloring.md")]
    mod coloring {}
    #[doc = include_str!("../../../book/src/embedding.md")]
    mod embedding {}
    #[doc = include_str!("../../../book/src/solver.md")]
    mod solver {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/six-regular.md")]
    mod six_regular {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
