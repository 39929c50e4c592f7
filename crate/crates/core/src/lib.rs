//! Integral cohomology of moment-angle manifolds `Z(P)` of simple polytopes,
//! the vertex-cut surgery on polytopes and their dual complexes, and a
//! cohomology-level check of the formula
//!
//! ```text
//! Z(P_v) ≅ ∂[(Z(P) − int D^{m+n}) × D²]  #  #_{j=1}^{m−n} C(m−n, j) · S^{j+2} × S^{m+n−j−1}
//! ```
//!
//! Both sides are computed independently: the left from the cut polytope by
//! summing reduced cohomology of full subcomplexes, the right from `Z(P)`,
//! `m` and `n`. The [`isotopy`] module evaluates the explicit torus
//! embeddings and deformations behind the construction numerically.
//!
//! ```
//! use macut::{verify_cut_theorem, SimplePolytope};
//!
//! let square = SimplePolytope::polygon(4).unwrap();
//! let report = verify_cut_theorem(&square, 0).unwrap();
//! assert!(report.matches);
//! assert_eq!(report.lhs.betti().to_string(), "1 + 5t^3 + 5t^4 + t^7");
//! ```

pub mod cli;
pub mod corpus;
pub mod error;
pub mod expr;
pub mod graded;
pub mod homology;
pub mod isotopy;
pub mod moment_angle;
pub mod polytope;
pub mod simplicial;
pub mod surgery;

pub use error::{Error, Result};
pub use graded::{betti, AbelianGroup, GradedGroups, PoincarePolynomial};
pub use homology::{
    boundary_matrix, reduced_cohomology, reduced_homology, smith_normal_form, IntegerMatrix,
    SmithForm,
};
pub use moment_angle::{
    bigraded_table, moment_angle_cohomology, moment_angle_cohomology_with, MomentAngleOptions,
};
pub use polytope::SimplePolytope;
pub use simplicial::{Simplex, SimplicialComplex};
pub use surgery::{
    boundary_product_groups, connected_sum_groups, predict_cut_betti, sphere_product_sum_groups,
    verify_cut_theorem, verify_cut_theorem_with, TheoremReport,
};
