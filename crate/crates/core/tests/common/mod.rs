//! Test-only oracles, independent of the library's homology path.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use macut::{SimplePolytope, SimplicialComplex};

const P: u64 = 2_147_483_647;

/// Face test straight from the maximal faces, without library helpers.
fn in_complex(k: &SimplicialComplex, mask: u32) -> bool {
    k.maximal_faces().iter().any(|f| {
        let fm: u32 = f.vertices().iter().map(|&v| 1u32 << v).sum();
        mask & !fm == 0
    })
}

#[allow(clippy::needless_range_loop)]
fn rank_mod_p(mut rows: Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][c], P - 2);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % P;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c];
                for j in c..cols {
                    rows[r][j] = (rows[r][j] + P - f * rows[rank][j] % P) % P;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

/// Rational Betti numbers of `Z_K` from its cellular chain complex.
///
/// A cell is a word in `{1, T, D}^m` whose `D`-positions form a face of `K`;
/// its dimension is `#T + 2·#D`. `∂D = T`, `∂T = ∂1 = 0`, with the Koszul sign
/// `(-1)^{dims of earlier letters}`. Only practical for `m <= 6`.
pub fn cellular_betti(k: &SimplicialComplex) -> Vec<usize> {
    let m = k.vertex_count();
    assert!(m <= 7, "cellular oracle is exponential in 3^m");
    // letters: 0 = point, 1 = T, 2 = D
    let mut cells: Vec<Vec<u8>> = Vec::new();
    let total = 3usize.pow(m as u32);
    for code in 0..total {
        let mut w = Vec::with_capacity(m);
        let mut c = code;
        for _ in 0..m {
            w.push((c % 3) as u8);
            c /= 3;
        }
        let dmask: u32 = w
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == 2)
            .map(|(i, _)| 1u32 << i)
            .sum();
        if in_complex(k, dmask) {
            cells.push(w);
        }
    }
    let dim = |w: &[u8]| w.iter().map(|&l| l as usize).sum::<usize>();
    let top = 2 * m;
    let mut by_dim: Vec<Vec<Vec<u8>>> = vec![Vec::new(); top + 1];
    for w in cells {
        by_dim[dim(&w)].push(w);
    }
    let index: Vec<HashMap<Vec<u8>, usize>> = by_dim
        .iter()
        .map(|cs| {
            cs.iter()
                .cloned()
                .enumerate()
                .map(|(i, w)| (w, i))
                .collect()
        })
        .collect();
    // rank of ∂_d : C_d -> C_{d-1}
    let mut ranks = vec![0usize; top + 2];
    for d in 1..=top {
        if by_dim[d].is_empty() || by_dim[d - 1].is_empty() {
            continue;
        }
        let mut rows = vec![vec![0u64; by_dim[d].len()]; by_dim[d - 1].len()];
        for (c, w) in by_dim[d].iter().enumerate() {
            let mut before = 0usize;
            for i in 0..m {
                if w[i] == 2 {
                    let mut t = w.clone();
                    t[i] = 1;
                    let r = index[d - 1][&t];
                    rows[r][c] = if before.is_multiple_of(2) { 1 } else { P - 1 };
                }
                before += w[i] as usize;
            }
        }
        ranks[d] = rank_mod_p(rows);
    }
    let mut betti: Vec<usize> = (0..=top)
        .map(|d| by_dim[d].len() - ranks[d] - ranks[d + 1])
        .collect();
    while betti.last() == Some(&0) {
        betti.pop();
    }
    betti
}

/// Dense Betti vector `b_0..` of a library result, for comparison.
pub fn dense(p: &macut::PoincarePolynomial) -> Vec<usize> {
    p.to_vec()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn face_set(faces: impl Iterator<Item = Vec<usize>>) -> BTreeSet<Vec<usize>> {
    faces
        .map(|mut f| {
            f.sort_unstable();
            f
        })
        .collect()
}

/// Brute-force isomorphism of complexes by vertex permutation.
pub fn complexes_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.maximal_faces().len() != b.maximal_faces().len() {
        return false;
    }
    assert!(n <= 8, "brute-force isomorphism is factorial");
    let target = face_set(b.maximal_faces().iter().map(|f| f.vertices().to_vec()));
    permutations(n).into_iter().any(|perm| {
        face_set(
            a.maximal_faces()
                .iter()
                .map(|f| f.vertices().iter().map(|&v| perm[v]).collect()),
        ) == target
    })
}

/// Brute-force isomorphism of polytopes by facet permutation.
pub fn polytopes_isomorphic(a: &SimplePolytope, b: &SimplePolytope) -> bool {
    a.dim() == b.dim() && complexes_isomorphic(&a.dual_complex(), &b.dual_complex())
}

/// Checks that the dual complex of a polygon is a single cycle of length `m`.
pub fn is_cycle(k: &SimplicialComplex) -> bool {
    let m = k.vertex_count();
    if k.maximal_faces().len() != m || k.maximal_faces().iter().any(|f| f.len() != 2) {
        return false;
    }
    let mut adj = vec![Vec::new(); m];
    for f in k.maximal_faces() {
        let v = f.vertices();
        adj[v[0]].push(v[1]);
        adj[v[1]].push(v[0]);
    }
    if adj.iter().any(|a| a.len() != 2) {
        return false;
    }
    let (mut prev, mut cur, mut steps) = (0usize, adj[0][0], 1usize);
    while cur != 0 {
        let next = if adj[cur][0] == prev {
            adj[cur][1]
        } else {
            adj[cur][0]
        };
        prev = cur;
        cur = next;
        steps += 1;
    }
    steps == m
}
