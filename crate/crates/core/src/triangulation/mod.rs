//! Ideal-triangulation gluing data and the Δ-groupoid presentations it
//! defines.
//!
//! A diagram lists l.o.t. tetrahedra as slot tuples `(g1, g2, g3, g4)`; each
//! contributes `g2 = g1 g3` and `g4 = g1 * g3`, where `x * y = j(k(x) j(y))`.

mod model;
mod presentation;
mod s3;
mod word;

pub use model::{count_solutions, eval_word, satisfies};
pub use presentation::{
    atom, delta_presentation, parse_diagram, reduce, DeltaPresentation, Diagram, LotTet, Relation,
};
pub use s3::S3;
pub use word::DeltaWord;

use thiserror::Error;

pub const TREFOIL_TRI: &str = include_str!("../../data/trefoil.tri");
pub const FIG8_TRI: &str = include_str!("../../data/fig8.tri");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangulationError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("label `{label}` occurs {count} time(s); a gluing needs exactly 2")]
    LabelCount { label: String, count: usize },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("no relation defines `{0}` by a word free of it")]
    NoDefiningRelation(String),
}

pub fn trefoil() -> Diagram {
    parse_diagram(TREFOIL_TRI, false).expect("bundled diagram")
}

pub fn fig8() -> Diagram {
    parse_diagram(FIG8_TRI, false).expect("bundled diagram")
}
