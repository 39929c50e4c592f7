//! The polytopes on which the vertex-cut formula is checked.

use crate::expr::{parse, Object};
use crate::polytope::SimplePolytope;

/// Expressions for the verification corpus.
pub const CORPUS: &[&str] = &[
    "polygon 3",
    "polygon 4",
    "polygon 5",
    "polygon 6",
    "polygon 7",
    "polygon 8",
    "simplex 2",
    "simplex 3",
    "simplex 4",
    "cube 3",
    "product (simplex 1) (simplex 2)",
    "cut-vertex (polygon 5) 0",
];

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub polytope: SimplePolytope,
}

pub fn corpus() -> Vec<CorpusEntry> {
    CORPUS
        .iter()
        .map(
            |&name| match parse(name).expect("corpus expressions parse") {
                Object::Polytope(polytope) => CorpusEntry { name, polytope },
                Object::Complex(_) => unreachable!("corpus entries are polytopes"),
            },
        )
        .collect()
}
