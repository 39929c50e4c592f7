//! Structural invariants of complexes, polytopes and the homology engine.

mod common;

use common::{complexes_isomorphic, is_cycle, polytopes_isomorphic};
use macut::homology::boundary_matrix;
use macut::{reduced_homology, GradedGroups, SimplePolytope, Simplex, SimplicialComplex};
use proptest::prelude::*;

fn corpus_complexes() -> Vec<(String, SimplicialComplex)> {
    let mut out: Vec<(String, SimplicialComplex)> = macut::corpus::corpus()
        .into_iter()
        .flat_map(|e| {
            let cut = e.polytope.cut_vertex(0).unwrap().dual_complex();
            [
                (e.name.to_string(), e.polytope.dual_complex()),
                (format!("cut of {}", e.name), cut),
            ]
        })
        .collect();
    out.push(("rp2".into(), rp2()));
    out
}

fn rp2() -> SimplicialComplex {
    SimplicialComplex::new(
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
    .unwrap()
}

#[test]
fn rp2_has_two_torsion() {
    let h = reduced_homology(&rp2());
    assert_eq!(h.torsion(1), &[2]);
    assert_eq!(h.rank(1), 0);
    assert!(h.iter().all(|(d, g)| d == 1 || g.is_zero()));
}

#[test]
fn boundary_squares_to_zero() {
    for (name, k) in corpus_complexes() {
        let top = k.dimension().unwrap() as usize;
        for d in 1..=top {
            let comp = boundary_matrix(&k, d - 1)
                .mul(&boundary_matrix(&k, d))
                .unwrap();
            assert!(comp.is_zero(), "{name}: d = {d}");
        }
    }
}

#[test]
fn euler_characteristic_from_ranks_matches_face_counts() {
    for (name, k) in corpus_complexes() {
        let f = k.f_vector();
        let from_faces: i64 = f
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 1 { c as i64 } else { -(c as i64) })
            .sum();
        let from_ranks: i64 = reduced_homology(&k)
            .iter()
            .map(|(d, g)| {
                if d.rem_euclid(2) == 0 {
                    g.rank as i64
                } else {
                    -(g.rank as i64)
                }
            })
            .sum();
        assert_eq!(from_faces, from_ranks, "{name}");
    }
}

#[test]
fn polytope_duals_satisfy_the_sphere_euler_relation() {
    for e in macut::corpus::corpus() {
        let n = e.polytope.dim() as i64;
        let k = e.polytope.dual_complex();
        let chi: i64 = k
            .f_vector()
            .iter()
            .skip(1)
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum();
        let expect = 1 + if (n - 1) % 2 == 0 { 1 } else { -1 };
        assert_eq!(chi, expect, "{}", e.name);
        assert_eq!(
            reduced_homology(&k),
            GradedGroups::from_degree_ranks(&[(n as i32 - 1, 1)]),
            "{} dual is a sphere",
            e.name
        );
    }
}

#[test]
fn join_of_zero_spheres_is_a_circle() {
    let s0 = SimplicialComplex::boundary_complex(1).unwrap();
    let j = s0.join(&s0).unwrap();
    assert_eq!(
        reduced_homology(&j),
        GradedGroups::from_degree_ranks(&[(1, 1)])
    );
    let square = SimplePolytope::cube(2).unwrap().dual_complex();
    assert!(complexes_isomorphic(&square, &j));
}

#[test]
fn cutting_polygons_gives_polygons() {
    for m in 3..=8 {
        let p = SimplePolytope::polygon(m).unwrap();
        for v in 0..m {
            let cut = p.cut_vertex(v).unwrap();
            assert!(is_cycle(&cut.dual_complex()), "{m}-gon cut at {v}");
            if m < 7 {
                assert!(polytopes_isomorphic(
                    &cut,
                    &SimplePolytope::polygon(m + 1).unwrap()
                ));
            }
        }
    }
}

#[test]
fn small_isomorphisms() {
    let seg = SimplePolytope::simplex(1).unwrap();
    assert!(polytopes_isomorphic(
        &seg.product(&seg),
        &SimplePolytope::polygon(4).unwrap()
    ));
    let tri = SimplePolytope::simplex(2).unwrap();
    let prism = seg.product(&tri);
    assert_eq!((prism.facet_count(), prism.vertex_count()), (5, 6));
    assert!(polytopes_isomorphic(
        &SimplePolytope::simplex(3).unwrap().cut_vertex(2).unwrap(),
        &prism
    ));
    let c3 = SimplicialComplex::boundary_complex(2).unwrap();
    let square = SimplePolytope::polygon(4).unwrap().dual_complex();
    for edge in c3.maximal_faces() {
        assert!(complexes_isomorphic(
            &c3.connected_sum_at_facet(edge).unwrap(),
            &square
        ));
    }
}

#[test]
fn cut_and_connected_sum_agree_on_the_corpus() {
    for e in macut::corpus::corpus() {
        let p = &e.polytope;
        for v in 0..p.vertex_count() {
            let cut = p.cut_vertex(v).unwrap();
            assert_eq!(cut.vertex_count(), p.vertex_count() + p.dim() - 1);
            assert_eq!(cut.facet_count(), p.facet_count() + 1);
            assert!(cut.vertex_facets().iter().all(|r| r.len() == p.dim()));
            let sum = p
                .dual_complex()
                .connected_sum_at_facet(&p.vertex_simplex(v).unwrap())
                .unwrap();
            assert_eq!(cut.dual_complex(), sum, "{} at {v}", e.name);
        }
    }
}

fn arbitrary_complex() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=7).prop_flat_map(|m| {
        prop::collection::vec(prop::collection::btree_set(0..m, 1..=m.min(4)), 1..8).prop_map(
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

fn is_antichain(k: &SimplicialComplex) -> bool {
    let f = k.maximal_faces();
    f.iter().enumerate().all(|(i, a)| {
        f.iter()
            .enumerate()
            .all(|(j, b)| i == j || !a.is_subset_of(b))
    })
}

proptest! {
    #[test]
    fn constructions_keep_faces_maximal(k in arbitrary_complex(), l in arbitrary_complex()) {
        prop_assert!(is_antichain(&k));
        prop_assert!(is_antichain(&k.join(&l).unwrap()));
        let all: Vec<usize> = (0..k.vertex_count()).collect();
        prop_assert_eq!(k.full_subcomplex(&all).unwrap(), k.clone());
        let half: Vec<usize> = (0..k.vertex_count()).step_by(2).collect();
        prop_assert!(is_antichain(&k.full_subcomplex(&half).unwrap()));
    }

    #[test]
    fn connected_sum_face_counts(m in 4usize..9, pick in 0usize..100) {
        let p = SimplePolytope::polygon(m).unwrap().product(&SimplePolytope::simplex(1).unwrap());
        let k = p.dual_complex();
        let s: Simplex = k.maximal_faces()[pick % k.maximal_faces().len()].clone();
        let out = k.connected_sum_at_facet(&s).unwrap();
        prop_assert_eq!(out.maximal_faces().len(), k.maximal_faces().len() - 1 + s.len());
        prop_assert!(out.maximal_faces().iter().all(|f| f.len() == s.len()));
        prop_assert!(!out.is_face(&s).unwrap());
        prop_assert!(is_antichain(&out));
    }

    #[test]
    fn homology_is_invariant_under_relabeling(
        k in arbitrary_complex(),
        keys in prop::collection::vec(any::<u32>(), 7)
    ) {
        let n = k.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by_key(|&i| (keys[i], i));
        let relabeled = k.relabeled(&perm).unwrap();
        prop_assert_eq!(reduced_homology(&relabeled), reduced_homology(&k));
    }

    #[test]
    fn json_round_trip_is_byte_stable(k in arbitrary_complex()) {
        let s = k.to_json();
        let back = SimplicialComplex::from_json(&s).unwrap();
        prop_assert_eq!(back.to_json(), s);
        prop_assert_eq!(back, k);
    }
}
