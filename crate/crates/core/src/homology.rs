//! Exact integral reduced simplicial homology via Smith normal form.
//!
//! The chain complex is augmented: `C_{-1}` is spanned by the empty simplex and
//! `∂_0` sends every vertex to it. Reduced homology in degree `d` is
//! `ker ∂_d / im ∂_{d+1}`; its free rank is `f_d - rank ∂_d - rank ∂_{d+1}`
//! and its torsion is the list of invariant factors of `∂_{d+1}` above 1.
//!
//! Smith normal form is computed first in `i64` with checked arithmetic; on
//! overflow the same elimination is rerun over `BigInt`. Both paths are exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::graded::{AbelianGroup, GradedGroups};
use crate::simplicial::{Simplex, SimplicialComplex};

/// A dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows; panics if the rows are ragged.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "all rows must have the same length"
        );
        IntegerMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().cloned().map(Into::into).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Matrix product; `None` on a dimension mismatch.
    pub fn mul(&self, other: &IntegerMatrix) -> Option<IntegerMatrix> {
        if self.cols != other.rows {
            return None;
        }
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.entries[idx] += a * other.get(k, j);
                }
            }
        }
        Some(out)
    }

    fn to_dense<T>(&self, conv: impl Fn(&BigInt) -> Option<T>) -> Option<Vec<Vec<T>>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| conv(self.get(r, c))).collect())
            .collect()
    }
}

/// Invariant factors `d₁ | d₂ | … | d_r` (all positive) and the rank `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

trait SnfScalar: Clone + Integer + Signed + CheckedMul + CheckedSub {}
impl SnfScalar for i64 {}
impl SnfScalar for BigInt {}

/// Diagonalizes `a` in place by unimodular row and column operations and
/// returns the absolute diagonal. `None` if an operation overflowed.
#[allow(clippy::needless_range_loop)]
fn smith_diagonal<T: SnfScalar>(mut a: Vec<Vec<T>>, cols: usize) -> Option<Vec<T>> {
    let rows = a.len();
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // Smallest nonzero entry of the trailing block; ties go to the first in
        // row-major order.
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        move_to_pivot(&mut a, t, pi, pj);

        loop {
            let mut remainder = false;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    for j in t..cols {
                        let v = a[t][j].checked_mul(&q)?;
                        a[i][j] = a[i][j].checked_sub(&v)?;
                    }
                    remainder |= !a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut().skip(t) {
                        let v = row[t].checked_mul(&q)?;
                        row[j] = row[j].checked_sub(&v)?;
                    }
                    remainder |= !a[t][j].is_zero();
                }
            }
            if remainder {
                // A nonzero remainder is strictly smaller than the pivot.
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                move_to_pivot(&mut a, t, best.0, best.1);
                continue;
            }
            // Row and column are clear; enforce divisibility of the block.
            let pivot = a[t][t].clone();
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] = a[t][j].clone() + v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    Some(diag)
}

fn move_to_pivot<T>(a: &mut [Vec<T>], t: usize, i: usize, j: usize) {
    a.swap(t, i);
    if j != t {
        for row in a.iter_mut() {
            row.swap(t, j);
        }
    }
}

/// Smith normal form of an integer matrix.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let diagonal = m
        .to_dense(ToPrimitive::to_i64)
        .and_then(|a| smith_diagonal(a, m.cols))
        .map(|d| d.into_iter().map(BigInt::from).collect())
        .unwrap_or_else(|| {
            let a = m.to_dense(|x| Some(x.clone())).expect("clone is total");
            smith_diagonal(a, m.cols).expect("BigInt arithmetic does not overflow")
        });
    SmithForm {
        rank: diagonal.len(),
        diagonal,
    }
}

/// Only the overflow-checked `i64` path, for comparing against the `BigInt` one.
#[doc(hidden)]
pub fn smith_normal_form_i64(m: &IntegerMatrix) -> Option<Vec<i64>> {
    smith_diagonal(m.to_dense(ToPrimitive::to_i64)?, m.cols)
}

/// Only the `BigInt` path.
#[doc(hidden)]
pub fn smith_normal_form_bigint(m: &IntegerMatrix) -> Vec<BigInt> {
    smith_diagonal(m.to_dense(|x| Some(x.clone())).expect("total"), m.cols)
        .expect("BigInt arithmetic does not overflow")
}

/// Boundary matrix of `∂_d : C_d → C_{d-1}` with rows and columns in
/// lexicographic face order.
///
/// `∂[v_0..v_d] = ∑ (-1)^i [v_0..v̂_i..v_d]`; for `d = 0` this is the
/// augmentation onto the empty simplex (a single row of ones).
pub fn boundary_matrix(k: &SimplicialComplex, d: usize) -> IntegerMatrix {
    let sources = k.faces_of_dimension(d as isize);
    let targets = k.faces_of_dimension(d as isize - 1);
    let mut m = IntegerMatrix::zeros(targets.len(), sources.len());
    for (c, s) in sources.iter().enumerate() {
        for (i, face) in s.facets().enumerate() {
            let r = targets
                .binary_search(&face)
                .expect("faces of a face are faces");
            m.set(
                r,
                c,
                if i % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                },
            );
        }
    }
    m
}

fn boundary_rows_i64(sources: &[Simplex], targets: &[Simplex]) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; sources.len()]; targets.len()];
    for (c, s) in sources.iter().enumerate() {
        for (i, face) in s.facets().enumerate() {
            let r = targets
                .binary_search(&face)
                .expect("faces of a face are faces");
            a[r][c] = if i % 2 == 0 { 1 } else { -1 };
        }
    }
    a
}

/// Invariant factors of a ±1 boundary matrix given as `i64` rows.
fn boundary_invariants(rows: Vec<Vec<i64>>, cols: usize) -> Vec<BigInt> {
    if rows.is_empty() || cols == 0 {
        return Vec::new();
    }
    let bigint_rows: Vec<Vec<BigInt>> = match smith_diagonal(rows.clone(), cols) {
        Some(d) => return d.into_iter().map(BigInt::from).collect(),
        None => rows
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect(),
    };
    smith_diagonal(bigint_rows, cols).expect("BigInt arithmetic does not overflow")
}

fn torsion_of(factors: &[BigInt]) -> Vec<u64> {
    factors
        .iter()
        .filter(|d| !d.is_one())
        .map(|d| d.to_u64().expect("torsion coefficient exceeds u64"))
        .collect()
}

/// Reduced integral homology in every degree `>= -1`.
///
/// The empty complex gets rank 1 in degree -1, the same as the complex whose
/// only face is the empty simplex.
pub fn reduced_homology(k: &SimplicialComplex) -> GradedGroups {
    let mut out = GradedGroups::new();
    let Some(top) = k.dimension() else {
        out.set(-1, AbelianGroup::free(1));
        return out;
    };
    // faces[i] holds the faces of dimension i - 1.
    let faces: Vec<Vec<Simplex>> = (-1..=top).map(|d| k.faces_of_dimension(d)).collect();
    // invariants[i] holds the invariant factors of ∂_{i-1}; ∂_{-1} = 0.
    let mut invariants: Vec<Vec<BigInt>> = vec![Vec::new()];
    for i in 1..faces.len() {
        let rows = boundary_rows_i64(&faces[i], &faces[i - 1]);
        invariants.push(boundary_invariants(rows, faces[i].len()));
    }
    invariants.push(Vec::new());
    for i in 0..faces.len() {
        let d = i as i32 - 1;
        let rank = faces[i].len() - invariants[i].len() - invariants[i + 1].len();
        out.set(d, AbelianGroup::new(rank, torsion_of(&invariants[i + 1])));
    }
    out
}

/// Reduced integral cohomology, from homology by universal coefficients:
/// free ranks stay in place and torsion moves up one degree.
pub fn reduced_cohomology(k: &SimplicialComplex) -> GradedGroups {
    homology_to_cohomology(&reduced_homology(k))
}

pub fn homology_to_cohomology(h: &GradedGroups) -> GradedGroups {
    let mut out = GradedGroups::new();
    for (d, g) in h.iter() {
        out.add(d, &AbelianGroup::free(g.rank));
        out.add(d + 1, &AbelianGroup::new(0, g.torsion.iter().copied()));
    }
    out
}
