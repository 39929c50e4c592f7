//! Small expressions naming polytopes and complexes, as used on the command
//! line:
//!
//! ```text
//! expr := "(" expr ")"
//!       | "simplex" N | "polygon" M | "cube" N
//!       | "product" expr expr
//!       | "cut-vertex" expr V
//!       | "boundary" N              (the complex ∂Δⁿ)
//!       | "dual" expr               (the dual complex of a polytope)
//!       | "file" PATH | PATH.json
//! ```
//!
//! JSON files are read as a polytope when they carry `vertex_facets` and as a
//! complex when they carry `maximal_faces`.

use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polytope::SimplePolytope;
use crate::simplicial::SimplicialComplex;

/// A parsed input object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Object {
    Polytope(SimplePolytope),
    Complex(SimplicialComplex),
}

impl Object {
    /// The complex whose moment-angle manifold this object names.
    pub fn complex(&self) -> SimplicialComplex {
        match self {
            Object::Polytope(p) => p.dual_complex(),
            Object::Complex(k) => k.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            Object::Polytope(p) => p.to_json(),
            Object::Complex(k) => k.to_json(),
        }
    }
}

/// Splits arguments into tokens, separating parentheses.
pub fn tokenize<S: AsRef<str>>(args: &[S]) -> Vec<String> {
    let joined = args.iter().map(AsRef::as_ref).collect::<Vec<_>>().join(" ");
    joined
        .replace('(', " ( ")
        .replace(')', " ) ")
        .split_whitespace()
        .map(str::to_owned)
        .collect()
}

struct Parser<'a> {
    tokens: &'a [String],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn next(&mut self) -> Result<&'a str> {
        let t = self
            .tokens
            .get(self.pos)
            .ok_or_else(|| Error::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        Ok(t)
    }

    fn number(&mut self, what: &str) -> Result<usize> {
        let t = self.next()?;
        t.parse().map_err(|_| {
            Error::Parse(format!(
                "expected {what} (a nonnegative integer), got {t:?}"
            ))
        })
    }

    fn polytope(&mut self) -> Result<SimplePolytope> {
        match self.expr()? {
            Object::Polytope(p) => Ok(p),
            Object::Complex(_) => Err(Error::Parse("expected a polytope, got a complex".into())),
        }
    }

    fn expr(&mut self) -> Result<Object> {
        let head = self.next()?;
        let obj = match head {
            "(" => {
                let inner = self.expr()?;
                match self.next()? {
                    ")" => inner,
                    t => return Err(Error::Parse(format!("expected \")\", got {t:?}"))),
                }
            }
            "simplex" => Object::Polytope(SimplePolytope::simplex(self.number("a dimension")?)?),
            "polygon" => Object::Polytope(SimplePolytope::polygon(self.number("an edge count")?)?),
            "cube" => Object::Polytope(SimplePolytope::cube(self.number("a dimension")?)?),
            "product" => {
                let a = self.polytope()?;
                let b = self.polytope()?;
                Object::Polytope(a.product(&b))
            }
            "cut-vertex" => {
                let p = self.polytope()?;
                let v = self.number("a vertex index")?;
                Object::Polytope(p.cut_vertex(v)?)
            }
            "boundary" => Object::Complex(SimplicialComplex::boundary_complex(
                self.number("a dimension")?,
            )?),
            "dual" => Object::Complex(self.polytope()?.dual_complex()),
            "file" => read_object(Path::new(self.next()?))?,
            path if path.ends_with(".json") => read_object(Path::new(path))?,
            other => {
                return Err(Error::Parse(format!(
                    "unknown constructor {other:?}; expected simplex, polygon, cube, product, \
                     cut-vertex, boundary, dual, file, or a .json path"
                )))
            }
        };
        Ok(obj)
    }
}

/// Parses one expression from the front of `tokens`; returns it with the
/// unconsumed remainder.
pub fn parse_prefix(tokens: &[String]) -> Result<(Object, &[String])> {
    let mut p = Parser { tokens, pos: 0 };
    let obj = p.expr()?;
    Ok((obj, &tokens[p.pos..]))
}

/// Parses a whole expression; trailing tokens are an error.
pub fn parse(text: &str) -> Result<Object> {
    let tokens = tokenize(&[text]);
    let (obj, rest) = parse_prefix(&tokens)?;
    if !rest.is_empty() {
        return Err(Error::Parse(format!(
            "unexpected trailing input {:?}",
            rest.join(" ")
        )));
    }
    Ok(obj)
}

/// Reads a polytope or complex from JSON text.
pub fn object_from_json(text: &str) -> Result<Object> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("vertex_facets").is_some() {
        Ok(Object::Polytope(serde_json::from_value(value)?))
    } else if value.get("maximal_faces").is_some() {
        Ok(Object::Complex(serde_json::from_value(value)?))
    } else {
        Err(Error::Json(
            "expected a polytope (\"vertex_facets\") or a complex (\"maximal_faces\")".into(),
        ))
    }
}

fn read_object(path: &Path) -> Result<Object> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    object_from_json(&text)
}
