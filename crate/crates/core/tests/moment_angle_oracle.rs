//! Full-subcomplex cohomology of Z_K against a direct cellular chain complex.

mod common;

use common::{cellular_betti, dense};
use macut::expr::parse;
use macut::moment_angle::bigraded_table;
use macut::{moment_angle_cohomology, PoincarePolynomial, SimplePolytope, SimplicialComplex};
use proptest::prelude::*;

fn betti_of(k: &SimplicialComplex) -> Vec<usize> {
    dense(&moment_angle_cohomology(k).unwrap().betti())
}

// Frozen from `cellular_betti`.
const FROZEN: &[(&str, &[usize])] = &[
    ("polygon 3", &[1, 0, 0, 0, 0, 1]),
    ("polygon 4", &[1, 0, 0, 2, 0, 0, 1]),
    ("polygon 5", &[1, 0, 0, 5, 5, 0, 0, 1]),
    ("polygon 6", &[1, 0, 0, 9, 16, 9, 0, 0, 1]),
    ("simplex 3", &[1, 0, 0, 0, 0, 0, 0, 1]),
    ("cut-vertex (simplex 3) 0", &[1, 0, 0, 1, 0, 1, 0, 0, 1]),
    (
        "product (simplex 1) (simplex 2)",
        &[1, 0, 0, 1, 0, 1, 0, 0, 1],
    ),
    ("cube 3", &[1, 0, 0, 3, 0, 0, 3, 0, 0, 1]),
];

#[test]
fn frozen_values_match_both_routes() {
    for &(expr, expected) in FROZEN {
        let k = parse(expr).unwrap().complex();
        assert_eq!(cellular_betti(&k), expected, "oracle drifted on {expr}");
        assert_eq!(betti_of(&k), expected, "{expr}");
    }
}

#[test]
fn simplex_boundaries_give_odd_spheres() {
    for m in 2..=5 {
        let k = SimplicialComplex::boundary_complex(m - 1).unwrap();
        let mut expect = vec![0; 2 * m];
        expect[0] = 1;
        expect[2 * m - 1] = 1;
        assert_eq!(betti_of(&k), expect, "boundary of the {}-simplex", m - 1);
    }
}

#[test]
fn corpus_manifolds_satisfy_duality_and_vanishing_euler_characteristic() {
    for e in macut::corpus::corpus() {
        let p = &e.polytope;
        let d = p.facet_count() + p.dim();
        let b = moment_angle_cohomology(&p.dual_complex()).unwrap().betti();
        assert_eq!(b.coefficient(0), 1, "{}", e.name);
        assert_eq!(b.coefficient(d), 1, "{}", e.name);
        assert!(b.is_symmetric(d), "{}: {b}", e.name);
        assert_eq!(b.euler_characteristic(), 0, "{}", e.name);
    }
}

#[test]
fn products_multiply_poincare_polynomials() {
    let seg = SimplePolytope::simplex(1).unwrap();
    let tri = SimplePolytope::simplex(2).unwrap();
    let pz = |p: &SimplePolytope| moment_angle_cohomology(&p.dual_complex()).unwrap().betti();
    for (a, b) in [(&seg, &seg), (&seg, &tri)] {
        assert_eq!(pz(&a.product(b)), pz(a).multiply(&pz(b)));
    }
    let expect = PoincarePolynomial::from_pairs([(0, 1), (3, 1)])
        .multiply(&PoincarePolynomial::from_pairs([(0, 1), (5, 1)]));
    assert_eq!(pz(&seg.product(&tri)), expect);
}

#[test]
fn bigraded_rows_sum_to_betti() {
    for expr in ["polygon 4", "polygon 6", "cube 3", "simplex 4"] {
        let k = parse(expr).unwrap().complex();
        let table = bigraded_table(&k).unwrap();
        let summed =
            PoincarePolynomial::from_pairs(table.iter().map(|(&(_, p), &r)| (p as usize, r)));
        assert_eq!(
            summed,
            moment_angle_cohomology(&k).unwrap().betti(),
            "{expr}"
        );
        assert_eq!(table.get(&(0, 0)), Some(&1));
        assert_eq!(table.keys().filter(|(s, _)| *s == 0).count(), 1);
    }
}

fn small_complex() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=5).prop_flat_map(|m| {
        prop::collection::vec(prop::collection::btree_set(0..m, 1..=m), 1..6).prop_map(
            move |faces| {
                SimplicialComplex::new(
                    m,
                    faces.into_iter().map(|f| f.into_iter().collect::<Vec<_>>()),
                )
                .unwrap()
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_complexes_agree_with_cellular_model(k in small_complex()) {
        prop_assert_eq!(betti_of(&k), cellular_betti(&k));
    }

    #[test]
    fn result_is_independent_of_worker_count(k in small_complex(), w in 1usize..5) {
        let opts = macut::MomentAngleOptions::default().with_workers(w);
        prop_assert_eq!(
            macut::moment_angle_cohomology_with(&k, &opts).unwrap(),
            moment_angle_cohomology(&k).unwrap()
        );
    }
}
