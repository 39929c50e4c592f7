//! Combinatorial simple polytopes as vertex-facet incidences.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::simplicial::{Simplex, SimplicialComplex};

/// A simple `n`-polytope with `m` facets, recorded by the facets at each vertex.
///
/// Each vertex record is the sorted set of the `n` facets meeting at that
/// vertex. The record list itself is kept sorted, so a vertex index means
/// "position in the sorted record list".
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PolytopeRepr", into = "PolytopeRepr")]
pub struct SimplePolytope {
    dim: usize,
    facet_count: usize,
    vertex_facets: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeRepr {
    dim: usize,
    facets: usize,
    vertex_facets: Vec<Vec<usize>>,
}

impl TryFrom<PolytopeRepr> for SimplePolytope {
    type Error = Error;

    fn try_from(r: PolytopeRepr) -> Result<Self> {
        SimplePolytope::new(r.dim, r.facets, r.vertex_facets)
    }
}

impl From<SimplePolytope> for PolytopeRepr {
    fn from(p: SimplePolytope) -> Self {
        PolytopeRepr {
            dim: p.dim,
            facets: p.facet_count,
            vertex_facets: p.vertex_facets,
        }
    }
}

fn invalid(invariant: &'static str, detail: String) -> Error {
    Error::InvalidPolytope { invariant, detail }
}

impl SimplePolytope {
    /// Validates the incidence data and canonicalizes the vertex order.
    ///
    /// Checked: `n >= 1`, `m >= n + 1`, simplicity, distinct records, facet
    /// range, and that every facet carries at least one vertex. Realizability
    /// as an actual convex polytope is not checked.
    pub fn new(dim: usize, facet_count: usize, vertex_facets: Vec<Vec<usize>>) -> Result<Self> {
        if dim < 1 {
            return Err(invalid(
                "dimension",
                "a simple polytope needs n >= 1".into(),
            ));
        }
        if facet_count < dim + 1 {
            return Err(invalid(
                "facet-count",
                format!("m = {facet_count} facets but n = {dim} needs m >= n + 1"),
            ));
        }
        let mut records = Vec::with_capacity(vertex_facets.len());
        for mut rec in vertex_facets {
            rec.sort_unstable();
            rec.dedup();
            if rec.len() != dim {
                return Err(invalid(
                    "simplicity",
                    format!(
                        "vertex {rec:?} lies on {} distinct facets, expected {dim}",
                        rec.len()
                    ),
                ));
            }
            if let Some(&f) = rec.last() {
                if f >= facet_count {
                    return Err(invalid(
                        "facet-range",
                        format!("facet {f} out of range for m = {facet_count}"),
                    ));
                }
            }
            records.push(rec);
        }
        records.sort();
        if let Some(w) = records.windows(2).find(|w| w[0] == w[1]) {
            return Err(invalid(
                "distinct-vertices",
                format!("vertex record {:?} appears twice", w[0]),
            ));
        }
        let used: BTreeSet<usize> = records.iter().flatten().copied().collect();
        if used.len() != facet_count {
            let missing = (0..facet_count).find(|f| !used.contains(f)).unwrap_or(0);
            return Err(invalid(
                "facet-coverage",
                format!("facet {missing} contains no vertex"),
            ));
        }
        Ok(SimplePolytope {
            dim,
            facet_count,
            vertex_facets: records,
        })
    }

    /// The `n`-simplex; vertex `i` lies on every facet except facet `i`.
    pub fn simplex(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("simplex needs n >= 1".into()));
        }
        let records = (0..=n)
            .map(|i| (0..=n).filter(|&f| f != i).collect())
            .collect();
        SimplePolytope::new(n, n + 1, records)
    }

    /// The `m`-gon: vertex `i` lies on edges `i` and `i + 1 mod m`.
    pub fn polygon(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidArgument(format!(
                "a polygon needs at least 3 edges, got {m}"
            )));
        }
        let records = (0..m).map(|i| vec![i, (i + 1) % m]).collect();
        SimplePolytope::new(2, m, records)
    }

    /// The `n`-cube as the product of `n` segments.
    pub fn cube(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("cube needs n >= 1".into()));
        }
        let segment = SimplePolytope::simplex(1)?;
        let mut p = segment.clone();
        for _ in 1..n {
            p = p.product(&segment);
        }
        Ok(p)
    }

    /// Cartesian product; facets of `other` are numbered after those of `self`.
    pub fn product(&self, other: &SimplePolytope) -> SimplePolytope {
        let shift = self.facet_count;
        let mut records = Vec::with_capacity(self.vertex_facets.len() * other.vertex_facets.len());
        for a in &self.vertex_facets {
            for b in &other.vertex_facets {
                let mut r = a.clone();
                r.extend(b.iter().map(|f| f + shift));
                records.push(r);
            }
        }
        SimplePolytope::new(self.dim + other.dim, shift + other.facet_count, records)
            .expect("product of simple polytopes is simple")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facet_count(&self) -> usize {
        self.facet_count
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_facets.len()
    }

    pub fn vertex_facets(&self) -> &[Vec<usize>] {
        &self.vertex_facets
    }

    /// Facets meeting at vertex `v`, as a simplex of the dual complex.
    pub fn vertex_simplex(&self, v: usize) -> Result<Simplex> {
        self.vertex_facets
            .get(v)
            .map(|r| Simplex::new(r.iter().copied()))
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "vertex {v} out of range; the polytope has {} vertices",
                    self.vertex_facets.len()
                ))
            })
    }

    /// `K_P`: vertices are facets of `P`, maximal faces are vertex records.
    pub fn dual_complex(&self) -> SimplicialComplex {
        SimplicialComplex::new(
            self.facet_count,
            self.vertex_facets
                .iter()
                .map(|r| Simplex::new(r.iter().copied())),
        )
        .expect("vertex records index valid facets")
    }

    /// Cuts off vertex `v`.
    ///
    /// The new facet gets index `m`. Vertex `v` is replaced by `n` new vertices,
    /// one per facet `f` at `v`, each lying on the facets of `v` with `f`
    /// swapped for the new facet.
    pub fn cut_vertex(&self, v: usize) -> Result<SimplePolytope> {
        let cut = self.vertex_simplex(v)?;
        let new_facet = self.facet_count;
        let mut records: Vec<Vec<usize>> = self
            .vertex_facets
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != v)
            .map(|(_, r)| r.clone())
            .collect();
        for f in cut.vertices() {
            let mut r: Vec<usize> = cut.vertices().iter().copied().filter(|g| g != f).collect();
            r.push(new_facet);
            records.push(r);
        }
        SimplePolytope::new(self.dim, self.facet_count + 1, records)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polytope serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplices() {
        let tri = SimplePolytope::simplex(2).unwrap();
        assert_eq!(tri.vertex_facets(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
        let seg = SimplePolytope::simplex(1).unwrap();
        assert_eq!(seg.vertex_facets(), &[vec![0], vec![1]]);
        let tet = SimplePolytope::simplex(3).unwrap();
        assert_eq!((tet.facet_count(), tet.vertex_count()), (4, 4));
        assert!(SimplePolytope::simplex(0).is_err());
    }

    #[test]
    fn polygons() {
        assert_eq!(
            SimplePolytope::polygon(3).unwrap(),
            SimplePolytope::simplex(2).unwrap()
        );
        assert_eq!(SimplePolytope::polygon(4).unwrap().vertex_count(), 4);
        assert_eq!(SimplePolytope::polygon(5).unwrap().vertex_count(), 5);
        assert!(SimplePolytope::polygon(2).is_err());
    }

    #[test]
    fn prism() {
        let seg = SimplePolytope::simplex(1).unwrap();
        let tri = SimplePolytope::simplex(2).unwrap();
        let prism = seg.product(&tri);
        assert_eq!(
            (prism.dim(), prism.facet_count(), prism.vertex_count()),
            (3, 5, 6)
        );
    }

    #[test]
    fn dual_complexes() {
        assert_eq!(
            SimplePolytope::simplex(2).unwrap().dual_complex(),
            SimplicialComplex::boundary_complex(2).unwrap()
        );
        let sq = SimplePolytope::polygon(4).unwrap().dual_complex();
        assert_eq!(
            sq,
            SimplicialComplex::new(4, [[0, 1], [1, 2], [2, 3], [0, 3]]).unwrap()
        );
    }

    #[test]
    fn cut_counts() {
        let tet = SimplePolytope::simplex(3).unwrap();
        let cut = tet.cut_vertex(0).unwrap();
        assert_eq!((cut.facet_count(), cut.vertex_count()), (5, 6));
        assert!(cut.vertex_facets().iter().all(|r| r.len() == 3));
        assert!(tet.cut_vertex(4).is_err());
    }

    #[test]
    fn cut_matches_connected_sum() {
        let p = SimplePolytope::polygon(5).unwrap();
        for v in 0..p.vertex_count() {
            let lhs = p.cut_vertex(v).unwrap().dual_complex();
            let rhs = p
                .dual_complex()
                .connected_sum_at_facet(&p.vertex_simplex(v).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn validation_names_the_invariant() {
        let err = SimplePolytope::new(2, 3, vec![vec![0, 1], vec![0]]).unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidPolytope {
                invariant: "simplicity",
                ..
            }
        ));
        let err = SimplePolytope::new(2, 4, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidPolytope {
                invariant: "facet-coverage",
                ..
            }
        ));
        let err = SimplePolytope::new(2, 2, vec![vec![0, 1]]).unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidPolytope {
                invariant: "facet-count",
                ..
            }
        ));
        let err = SimplePolytope::new(1, 2, vec![vec![0], vec![0], vec![1]]).unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidPolytope {
                invariant: "distinct-vertices",
                ..
            }
        ));
    }

    #[test]
    fn json_form() {
        let p = SimplePolytope::polygon(3).unwrap();
        assert_eq!(
            p.to_json(),
            r#"{"dim":2,"facets":3,"vertex_facets":[[0,1],[0,2],[1,2]]}"#
        );
        assert_eq!(SimplePolytope::from_json(&p.to_json()).unwrap(), p);
    }
}
