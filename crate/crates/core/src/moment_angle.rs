//! Cohomology of moment-angle manifolds from full subcomplexes.
//!
//! For a complex `K` on `m` vertices,
//!
//! ```text
//! H^p(Z_K) ≅ ⊕_{J ⊆ [m]} H̃^{p-|J|-1}(K_J)
//! ```
//!
//! Every vertex subset is visited as a bitmask; each contributes an
//! independent piece, and the pieces are combined by degree-wise direct sum.
//! That sum is commutative and exact, so the result does not depend on the
//! visiting order or on the number of worker threads. The empty subset gives
//! the single class in degree 0 through `H̃^{-1}(∅) = Z`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graded::GradedGroups;
use crate::homology::reduced_cohomology;
use crate::simplicial::SimplicialComplex;

/// Default cap on the vertex count, i.e. at most `2^22` subsets.
pub const DEFAULT_MAX_VERTICES: usize = 22;

/// Knobs for the subset enumeration. None of them change the result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MomentAngleOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
    /// Refuse complexes with more vertices than this.
    pub max_vertices: usize,
}

impl Default for MomentAngleOptions {
    fn default() -> Self {
        MomentAngleOptions {
            workers: None,
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

impl MomentAngleOptions {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers);
        self
    }

    pub fn with_max_vertices(mut self, max_vertices: usize) -> Self {
        self.max_vertices = max_vertices;
        self
    }
}

/// Runs `job` on a pool of `workers` threads, or on the global pool.
pub(crate) fn in_pool<T: Send>(
    workers: Option<usize>,
    job: impl FnOnce() -> T + Send,
) -> Result<T> {
    match workers {
        None => Ok(job()),
        Some(0) => Err(Error::InvalidArgument(
            "worker count must be at least 1".into(),
        )),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::InvalidArgument(format!("cannot start {n} workers: {e}")))?;
            Ok(pool.install(job))
        }
    }
}

fn subset_vertices(mask: u64, m: usize) -> Vec<usize> {
    (0..m).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Contributions to `H*(Z_K)` grouped by subset size: entry `s` is the sum
/// over all `|J| = s` of `H̃^{*-s-1}(K_J)`, already shifted.
fn contributions_by_size(
    k: &SimplicialComplex,
    opts: &MomentAngleOptions,
) -> Result<Vec<GradedGroups>> {
    let m = k.vertex_count();
    if k.is_empty() {
        return Err(Error::Precondition(
            "the moment-angle complex of the empty complex is not defined here".into(),
        ));
    }
    if m > opts.max_vertices || m >= 64 {
        return Err(Error::SubsetLimit {
            vertices: m,
            limit: opts.max_vertices.min(63),
        });
    }
    let total: u64 = 1 << m;
    in_pool(opts.workers, || {
        (0..total)
            .into_par_iter()
            .fold(
                || vec![GradedGroups::new(); m + 1],
                |mut acc, mask| {
                    let j = subset_vertices(mask, m);
                    let kj = k.full_subcomplex(&j).expect("subset vertices are in range");
                    let size = j.len();
                    let piece = reduced_cohomology(&kj).shifted(size as i32 + 1);
                    acc[size] = std::mem::take(&mut acc[size]).merge(&piece);
                    acc
                },
            )
            .reduce(
                || vec![GradedGroups::new(); m + 1],
                |a, b| a.into_iter().zip(&b).map(|(x, y)| x.merge(y)).collect(),
            )
    })
}

/// `H*(Z_K)` with default options.
pub fn moment_angle_cohomology(k: &SimplicialComplex) -> Result<GradedGroups> {
    moment_angle_cohomology_with(k, &MomentAngleOptions::default())
}

pub fn moment_angle_cohomology_with(
    k: &SimplicialComplex,
    opts: &MomentAngleOptions,
) -> Result<GradedGroups> {
    Ok(contributions_by_size(k, opts)?
        .into_iter()
        .fold(GradedGroups::new(), |acc, g| acc.merge(&g)))
}

/// Free ranks of the same sum, keyed by `(|J|, p)`. Zero entries are omitted.
pub fn bigraded_table(k: &SimplicialComplex) -> Result<BTreeMap<(usize, i32), usize>> {
    bigraded_table_with(k, &MomentAngleOptions::default())
}

pub fn bigraded_table_with(
    k: &SimplicialComplex,
    opts: &MomentAngleOptions,
) -> Result<BTreeMap<(usize, i32), usize>> {
    let mut table = BTreeMap::new();
    for (size, g) in contributions_by_size(k, opts)?.iter().enumerate() {
        for (p, group) in g.iter() {
            if group.rank > 0 {
                table.insert((size, p), group.rank);
            }
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{AbelianGroup, PoincarePolynomial};

    fn cycle(m: usize) -> SimplicialComplex {
        SimplicialComplex::new(m, (0..m).map(|i| vec![i, (i + 1) % m])).unwrap()
    }

    #[test]
    fn triangle_is_five_sphere() {
        let h = moment_angle_cohomology(&cycle(3)).unwrap();
        assert_eq!(h, GradedGroups::sphere(5));
    }

    #[test]
    fn square_is_product_of_three_spheres() {
        let h = moment_angle_cohomology(&cycle(4)).unwrap();
        assert_eq!(
            h.betti(),
            PoincarePolynomial::from_coefficients(&[1, 0, 0, 2, 0, 0, 1])
        );
    }

    #[test]
    fn pentagon() {
        let h = moment_angle_cohomology(&cycle(5)).unwrap();
        assert_eq!(
            h.betti(),
            PoincarePolynomial::from_pairs([(0, 1), (3, 5), (4, 5), (7, 1)])
        );
    }

    #[test]
    fn bigraded_rows() {
        let t = bigraded_table(&cycle(3)).unwrap();
        assert_eq!(t, BTreeMap::from([((0, 0), 1), ((3, 5), 1)]));
        // Both degree-3 classes of the square come from the two diagonals.
        let t = bigraded_table(&cycle(4)).unwrap();
        assert_eq!(t, BTreeMap::from([((0, 0), 1), ((2, 3), 2), ((4, 6), 1)]));
    }

    #[test]
    fn ghost_vertex_adds_circle_factor() {
        let k = SimplicialComplex::new(4, [[0, 1], [0, 2], [1, 2]]).unwrap();
        let h = moment_angle_cohomology(&k).unwrap();
        // Z = S^5 x S^1
        assert_eq!(
            h.betti(),
            PoincarePolynomial::from_pairs([(0, 1), (1, 1), (5, 1), (6, 1)])
        );
    }

    #[test]
    fn torsion_is_carried_through() {
        // Minimal RP^2: H̃^2 = Z/2 at |J| = 6, so Z/2 lands in degree 2 + 6 + 1.
        let rp2 = SimplicialComplex::new(
            6,
            [
                [0, 1, 2],
                [0, 2, 3],
                [0, 3, 4],
                [0, 4, 5],
                [0, 1, 5],
                [1, 2, 4],
                [2, 3, 5],
                [1, 3, 4],
                [2, 4, 5],
                [1, 3, 5],
            ],
        )
        .unwrap();
        let h = moment_angle_cohomology(&rp2).unwrap();
        assert_eq!(h.get(9), AbelianGroup::new(0, [2]));
    }

    #[test]
    fn limits_and_preconditions() {
        let big = SimplicialComplex::boundary_complex(5).unwrap();
        let opts = MomentAngleOptions::default().with_max_vertices(4);
        assert_eq!(
            moment_angle_cohomology_with(&big, &opts),
            Err(Error::SubsetLimit {
                vertices: 6,
                limit: 4
            })
        );
        assert!(moment_angle_cohomology(&SimplicialComplex::empty(2)).is_err());
        let zero = MomentAngleOptions::default().with_workers(0);
        assert!(moment_angle_cohomology_with(&cycle(3), &zero).is_err());
    }

    #[test]
    fn worker_count_does_not_change_result() {
        let k = cycle(6);
        let one = moment_angle_cohomology_with(&k, &MomentAngleOptions::default().with_workers(1))
            .unwrap();
        for w in [2, 3, 8] {
            let h =
                moment_angle_cohomology_with(&k, &MomentAngleOptions::default().with_workers(w))
                    .unwrap();
            assert_eq!(h, one);
        }
    }
}
