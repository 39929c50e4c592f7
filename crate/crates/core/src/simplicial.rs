//! Finite abstract simplicial complexes stored by their maximal faces.
//!
//! Faces are kept sorted and duplicate-free, and the list of maximal faces is
//! sorted lexicographically, so two complexes with the same face set compare
//! equal and serialize to the same bytes.
//!
//! Two degenerate complexes are kept apart: the *empty* complex has no faces at
//! all (not even the empty simplex), while the *(-1)-sphere* has exactly one
//! face, the empty simplex. The homology engine gives both reduced rank 1 in
//! degree -1; that is the convention the moment-angle sum relies on for the
//! empty vertex subset.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simplex given by its sorted, duplicate-free vertex list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    /// Builds a simplex, sorting and deduplicating the vertices.
    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Simplex(v)
    }

    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension `len - 1`; the empty simplex has dimension -1.
    pub fn dimension(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        is_sorted_subset(&self.0, &other.0)
    }

    /// Faces of codimension one, in the order obtained by deleting vertex 0, 1, ...
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.0.len()).map(move |i| {
            let mut v = self.0.clone();
            v.remove(i);
            Simplex(v)
        })
    }
}

impl From<Vec<usize>> for Simplex {
    fn from(v: Vec<usize>) -> Self {
        Simplex::new(v)
    }
}

impl<const N: usize> From<[usize; N]> for Simplex {
    fn from(v: [usize; N]) -> Self {
        Simplex::new(v)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

fn is_sorted_subset(a: &[usize], b: &[usize]) -> bool {
    if a.len() > b.len() {
        return false;
    }
    let mut it = b.iter();
    'outer: for x in a {
        for y in it.by_ref() {
            match y.cmp(x) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => continue 'outer,
                std::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

/// Keeps only the faces not contained in another face, sorted lexicographically.
fn prune_to_maximal(mut faces: Vec<Simplex>) -> Vec<Simplex> {
    faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Simplex> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|k| f.is_subset_of(k)) {
            kept.push(f);
        }
    }
    kept.sort();
    kept
}

/// A simplicial complex on the vertex set `0..vertex_count`.
///
/// Vertices that appear in no face (ghost vertices) are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ComplexRepr", into = "ComplexRepr")]
pub struct SimplicialComplex {
    vertex_count: usize,
    maximal_faces: Vec<Simplex>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexRepr {
    vertices: usize,
    maximal_faces: Vec<Vec<usize>>,
}

impl TryFrom<ComplexRepr> for SimplicialComplex {
    type Error = Error;

    fn try_from(r: ComplexRepr) -> Result<Self> {
        for f in &r.maximal_faces {
            let mut sorted = f.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != f.len() {
                return Err(Error::InvalidComplex(format!(
                    "face {f:?} repeats a vertex"
                )));
            }
        }
        SimplicialComplex::new(r.vertices, r.maximal_faces)
    }
}

impl From<SimplicialComplex> for ComplexRepr {
    fn from(k: SimplicialComplex) -> Self {
        ComplexRepr {
            vertices: k.vertex_count,
            maximal_faces: k.maximal_faces.into_iter().map(|s| s.0).collect(),
        }
    }
}

impl SimplicialComplex {
    /// Builds a complex from generating faces. Non-maximal generators are pruned.
    pub fn new<I, F>(vertex_count: usize, faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: Into<Simplex>,
    {
        let faces: Vec<Simplex> = faces.into_iter().map(Into::into).collect();
        for f in &faces {
            if let Some(&v) = f.vertices().last() {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        index: v,
                        vertex_count,
                    });
                }
            }
        }
        Ok(SimplicialComplex {
            vertex_count,
            maximal_faces: prune_to_maximal(faces),
        })
    }

    /// The complex with no faces at all on `vertex_count` ghost vertices.
    pub fn empty(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            maximal_faces: Vec::new(),
        }
    }

    /// The complex whose only face is the empty simplex.
    pub fn minus_one_sphere(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            maximal_faces: vec![Simplex::empty()],
        }
    }

    /// The full simplex on `n + 1` vertices.
    pub fn full_simplex(n: usize) -> Self {
        SimplicialComplex {
            vertex_count: n + 1,
            maximal_faces: vec![Simplex((0..=n).collect())],
        }
    }

    /// The boundary of the `n`-simplex: all `n`-subsets of `{0..n}`.
    pub fn boundary_complex(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "the boundary of a 0-simplex is empty; boundary_complex needs n >= 1".into(),
            ));
        }
        let full = Simplex((0..=n).collect());
        let mut faces: Vec<Simplex> = full.facets().collect();
        faces.sort();
        Ok(SimplicialComplex {
            vertex_count: n + 1,
            maximal_faces: faces,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn maximal_faces(&self) -> &[Simplex] {
        &self.maximal_faces
    }

    /// True for the complex with no faces at all.
    pub fn is_empty(&self) -> bool {
        self.maximal_faces.is_empty()
    }

    /// Largest face dimension, or `None` for the empty complex.
    pub fn dimension(&self) -> Option<isize> {
        self.maximal_faces.iter().map(Simplex::dimension).max()
    }

    /// True if all maximal faces have the same size.
    pub fn is_pure(&self) -> bool {
        self.maximal_faces
            .windows(2)
            .all(|w| w[0].len() == w[1].len())
    }

    fn check_range(&self, s: &Simplex) -> Result<()> {
        match s.vertices().last() {
            Some(&v) if v >= self.vertex_count => Err(Error::VertexOutOfRange {
                index: v,
                vertex_count: self.vertex_count,
            }),
            _ => Ok(()),
        }
    }

    pub fn is_face(&self, s: &Simplex) -> Result<bool> {
        self.check_range(s)?;
        Ok(self.maximal_faces.iter().any(|f| s.is_subset_of(f)))
    }

    /// All faces with exactly `d + 1` vertices, sorted lexicographically.
    pub fn faces_of_dimension(&self, d: isize) -> Vec<Simplex> {
        if d < -1 {
            return Vec::new();
        }
        if d == -1 {
            return if self.is_empty() {
                Vec::new()
            } else {
                vec![Simplex::empty()]
            };
        }
        let size = (d + 1) as usize;
        let mut out = BTreeSet::new();
        for f in &self.maximal_faces {
            if f.len() >= size {
                for combo in combinations(f.vertices(), size) {
                    out.insert(Simplex(combo));
                }
            }
        }
        out.into_iter().collect()
    }

    /// Face counts `f_{-1}, f_0, f_1, ...` (index `i` holds dimension `i - 1`).
    pub fn f_vector(&self) -> Vec<usize> {
        match self.dimension() {
            None => Vec::new(),
            Some(top) => (-1..=top)
                .map(|d| self.faces_of_dimension(d).len())
                .collect(),
        }
    }

    /// The full subcomplex on `subset`, relabeled `0..|subset|` in increasing order.
    ///
    /// An empty `subset` gives the empty complex.
    pub fn full_subcomplex(&self, subset: &[usize]) -> Result<Self> {
        let mut j: Vec<usize> = subset.to_vec();
        j.sort_unstable();
        j.dedup();
        if let Some(&v) = j.last() {
            if v >= self.vertex_count {
                return Err(Error::VertexOutOfRange {
                    index: v,
                    vertex_count: self.vertex_count,
                });
            }
        }
        if j.is_empty() {
            return Ok(SimplicialComplex::empty(0));
        }
        let mut relabel = vec![usize::MAX; self.vertex_count];
        for (new, &old) in j.iter().enumerate() {
            relabel[old] = new;
        }
        let restricted = self.maximal_faces.iter().map(|f| {
            Simplex(
                f.vertices()
                    .iter()
                    .filter(|&&v| relabel[v] != usize::MAX)
                    .map(|&v| relabel[v])
                    .collect(),
            )
        });
        SimplicialComplex::new(j.len(), restricted)
    }

    /// `K #_s ∂Δⁿ`: replaces the maximal face `s` by the cone of its boundary
    /// over a new vertex `w = vertex_count`.
    ///
    /// This is the dual of cutting the vertex of a simple polytope whose facet
    /// set is `s`.
    pub fn connected_sum_at_facet(&self, s: &Simplex) -> Result<Self> {
        self.check_range(s)?;
        if !self.maximal_faces.contains(s) {
            return Err(Error::NotMaximalFace(s.to_string()));
        }
        if self.maximal_faces.len() < 2 {
            return Err(Error::Precondition(
                "connected sum at a facet needs at least two maximal faces".into(),
            ));
        }
        if s.is_empty() {
            return Err(Error::Precondition(
                "connected sum at the empty face is undefined".into(),
            ));
        }
        let w = self.vertex_count;
        let mut faces: Vec<Simplex> = self
            .maximal_faces
            .iter()
            .filter(|f| *f != s)
            .cloned()
            .collect();
        for face in s.facets() {
            let mut v = face.0;
            v.push(w);
            faces.push(Simplex(v));
        }
        SimplicialComplex::new(w + 1, faces)
    }

    /// The join: vertices of `other` are shifted past those of `self`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<Self> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::Precondition(
                "join needs two nonempty complexes".into(),
            ));
        }
        let shift = self.vertex_count;
        let mut faces = Vec::with_capacity(self.maximal_faces.len() * other.maximal_faces.len());
        for a in &self.maximal_faces {
            for b in &other.maximal_faces {
                let mut v = a.0.clone();
                v.extend(b.vertices().iter().map(|x| x + shift));
                faces.push(Simplex(v));
            }
        }
        SimplicialComplex::new(shift + other.vertex_count, faces)
    }

    /// Applies the vertex permutation `perm` (old index `i` becomes `perm[i]`).
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.vertex_count {
            return Err(Error::InvalidArgument(format!(
                "permutation has length {} but the complex has {} vertices",
                perm.len(),
                self.vertex_count
            )));
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument(format!(
                    "{perm:?} is not a permutation"
                )));
            }
        }
        SimplicialComplex::new(
            self.vertex_count,
            self.maximal_faces
                .iter()
                .map(|f| Simplex::new(f.vertices().iter().map(|&v| perm[v]))),
        )
    }

    /// Canonical compact JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("complex serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// All `k`-element sub-lists of a sorted list, in lexicographic order.
pub(crate) fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let n = items.len();
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
