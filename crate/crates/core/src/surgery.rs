//! Predicted cohomology of a vertex cut, and the harness comparing it with a
//! direct computation.
//!
//! For a simple `n`-polytope `P` with `m` facets and `Z = Z(P)` of dimension
//! `d = m + n`, cutting a vertex gives
//!
//! ```text
//! Z_v ≅ ∂[(Z − int D^d) × D²]  #  #_{j=1}^{m−n} C(m−n, j) · S^{j+2} × S^{d−j−1}
//! ```
//!
//! Only the graded abelian groups of both sides are compared here; ring
//! structure and smooth structure are not checked.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::{AbelianGroup, GradedGroups};
use crate::moment_angle::{moment_angle_cohomology_with, MomentAngleOptions};
use crate::polytope::SimplePolytope;

/// Groups of `W = ∂[(Z − int D^d) × D²]` for a closed connected orientable
/// `d`-manifold `Z`.
///
/// `H^k(W) = H^k(Z) ⊕ H^{k-1}(Z)` with one free summand removed in degree 1
/// (the class `1 ⊗ [S¹]`) and one in degree `d` (the class `[Z] ⊗ 1`).
pub fn boundary_product_groups(hz: &GradedGroups, d: i32) -> Result<GradedGroups> {
    if d < 2 {
        return Err(Error::Precondition(format!(
            "manifold dimension {d} must be at least 2"
        )));
    }
    for (deg, what) in [(0, "H^0"), (d, "top cohomology")] {
        if hz.get(deg) != AbelianGroup::free(1) {
            return Err(Error::Precondition(format!(
                "{what} of a closed connected orientable {d}-manifold must be Z, got {}",
                hz.get(deg)
            )));
        }
    }
    if !hz.torsion(1).is_empty() {
        return Err(Error::Precondition("H^1 must be torsion-free".into()));
    }
    if hz.iter().any(|(deg, _)| deg < 0 || deg > d) {
        return Err(Error::Precondition(format!(
            "cohomology is nonzero outside degrees 0..={d}"
        )));
    }
    let mut w = hz.clone().merge(&hz.shifted(1));
    w.remove_free(1, 1)
        .expect("degree 1 holds H^0 of the circle factor");
    w.remove_free(d, 1)
        .expect("degree d holds the fundamental class");
    Ok(w)
}

/// Binomial coefficient, exact for the small arguments used here.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Groups of `#_{j=1}^{m−n} C(m−n, j) · S^{j+2} × S^{m+n−j−1}`, a closed
/// manifold of dimension `m + n + 1`.
pub fn sphere_product_sum_groups(m: usize, n: usize) -> Result<GradedGroups> {
    if n < 1 || m <= n {
        return Err(Error::Precondition(format!(
            "need m > n >= 1, got m = {m}, n = {n}"
        )));
    }
    let top = (m + n + 1) as i32;
    let mut g = GradedGroups::sphere(top);
    let codim = (m - n) as u64;
    for j in 1..=m - n {
        let copies = binomial(codim, j as u64) as usize;
        let (a, b) = ((j + 2) as i32, (m + n - j - 1) as i32);
        g.add(a, &AbelianGroup::free(copies));
        g.add(b, &AbelianGroup::free(copies));
    }
    Ok(g)
}

/// Groups of a connected sum of closed orientable `d`-manifolds.
pub fn connected_sum_groups(parts: &[GradedGroups], d: i32) -> Result<GradedGroups> {
    if parts.is_empty() {
        return Err(Error::Precondition("connected sum of no manifolds".into()));
    }
    if d < 2 {
        return Err(Error::Precondition(format!(
            "dimension {d} must be at least 2"
        )));
    }
    let mut out = GradedGroups::sphere(d);
    for (i, p) in parts.iter().enumerate() {
        if p.max_degree() != Some(d) || p.get(d) != AbelianGroup::free(1) {
            return Err(Error::Precondition(format!(
                "summand {i} is not a closed orientable {d}-manifold (top group {})",
                p.get(d)
            )));
        }
        if p.get(0) != AbelianGroup::free(1) {
            return Err(Error::Precondition(format!("summand {i} is not connected")));
        }
        for (deg, g) in p.iter().filter(|&(deg, _)| deg > 0 && deg < d) {
            out.add(deg, g);
        }
    }
    Ok(out)
}

/// Right-hand side of the vertex-cut formula for `P`.
pub fn predict_cut_betti(p: &SimplePolytope) -> Result<GradedGroups> {
    predict_cut_betti_with(p, &MomentAngleOptions::default())
}

pub fn predict_cut_betti_with(
    p: &SimplePolytope,
    opts: &MomentAngleOptions,
) -> Result<GradedGroups> {
    let (m, n) = (p.facet_count(), p.dim());
    if m <= n {
        return Err(Error::Precondition(format!(
            "need m > n, got m = {m}, n = {n}"
        )));
    }
    let d = (m + n) as i32;
    let hz = moment_angle_cohomology_with(&p.dual_complex(), opts)?;
    let w = boundary_product_groups(&hz, d)?;
    connected_sum_groups(&[w, sphere_product_sum_groups(m, n)?], d + 1)
}

/// Both sides in one degree where they differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeDiff {
    pub lhs: AbelianGroup,
    pub rhs: AbelianGroup,
}

/// Outcome of checking the vertex-cut formula at the level of cohomology groups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    /// Human-readable construction of the polytope, when known.
    pub name: Option<String>,
    pub polytope: SimplePolytope,
    pub vertex: usize,
    pub level: String,
    /// Cohomology of `Z(P_v)`, computed from the cut polytope.
    pub lhs: GradedGroups,
    /// Cohomology predicted from `Z(P)`, `m` and `n` alone.
    pub rhs: GradedGroups,
    #[serde(rename = "match")]
    pub matches: bool,
    pub diff: BTreeMap<i32, DegreeDiff>,
}

impl TheoremReport {
    fn new(
        name: Option<String>,
        polytope: SimplePolytope,
        vertex: usize,
        lhs: GradedGroups,
        rhs: GradedGroups,
    ) -> Self {
        let degrees: std::collections::BTreeSet<i32> =
            lhs.iter().chain(rhs.iter()).map(|(d, _)| d).collect();
        let diff: BTreeMap<i32, DegreeDiff> = degrees
            .into_iter()
            .filter(|&d| lhs.get(d) != rhs.get(d))
            .map(|d| {
                (
                    d,
                    DegreeDiff {
                        lhs: lhs.get(d),
                        rhs: rhs.get(d),
                    },
                )
            })
            .collect();
        TheoremReport {
            name,
            polytope,
            vertex,
            level: "cohomology groups (ranks and torsion)".into(),
            matches: diff.is_empty(),
            lhs,
            rhs,
            diff,
        }
    }
}

pub fn verify_cut_theorem(p: &SimplePolytope, v: usize) -> Result<TheoremReport> {
    verify_cut_theorem_with(p, v, None, &MomentAngleOptions::default())
}

/// Computes `H*(Z(P_v))` from the cut polytope and compares it with the
/// prediction built from `P`.
///
/// The dual of the cut polytope is also checked against `K_P #_σ ∂Δⁿ`; a
/// mismatch there is reported as an error since it means the two
/// constructions of the cut disagree.
pub fn verify_cut_theorem_with(
    p: &SimplePolytope,
    v: usize,
    name: Option<String>,
    opts: &MomentAngleOptions,
) -> Result<TheoremReport> {
    let cut = p.cut_vertex(v)?;
    let k_cut = cut.dual_complex();
    let k_sum = p
        .dual_complex()
        .connected_sum_at_facet(&p.vertex_simplex(v)?)?;
    if k_cut != k_sum {
        return Err(Error::Precondition(format!(
            "dual of the cut polytope {} differs from the connected sum {}",
            k_cut.to_json(),
            k_sum.to_json()
        )));
    }
    let (lhs, rhs) = rayon::join(
        || moment_angle_cohomology_with(&k_cut, opts),
        || predict_cut_betti_with(p, opts),
    );
    Ok(TheoremReport::new(name, p.clone(), v, lhs?, rhs?))
}
