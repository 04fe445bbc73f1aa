//! Brute-force reference computations used by the integration tests.
//!
//! These work on plain integers mod 3 and the raw face cycles, never on the reduced system.
#![allow(dead_code)]

use std::collections::BTreeSet;

use heawood_core::{EmbeddedCubicGraph, Gf3Matrix, HeawoodVector, VertexId};

/// Every vector in {0,1,2}^(2n) checked against all n+2 face equations; keeps the
/// everywhere-nonzero ones.
pub fn full_kernel_scan(g: &EmbeddedCubicGraph) -> BTreeSet<HeawoodVector> {
    let nv = g.n_vertices();
    assert!(nv <= 12, "3^(2n) scan only for 2n <= 12");
    let faces: Vec<Vec<VertexId>> = g.trace_faces().unwrap().into_iter().map(|f| f.vertices).collect();
    let mut x = vec![0u8; nv];
    let mut out = BTreeSet::new();
    loop {
        let proper = faces
            .iter()
            .all(|f| f.iter().map(|&v| x[v] as u32).sum::<u32>() % 3 == 0);
        if proper && x.iter().all(|&s| s != 0) {
            let signs: Vec<i8> = x.iter().map(|&s| if s == 1 { 1 } else { -1 }).collect();
            out.insert(HeawoodVector::from_signs(&signs).unwrap());
        }
        // odometer increment
        let mut i = 0;
        while i < nv && x[i] == 2 {
            x[i] = 0;
            i += 1;
        }
        if i == nv {
            break;
        }
        x[i] += 1;
    }
    out
}

/// All vectors `x` with `m x = 0`, by exhaustive scan.
pub fn kernel_brute(m: &Gf3Matrix) -> Vec<Vec<u8>> {
    let cols = m.cols();
    assert!(cols <= 12);
    let rows: Vec<Vec<u32>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.value() as u32).collect())
        .collect();
    let mut out = Vec::new();
    for code in 0..3u32.pow(cols as u32) {
        let mut c = code;
        let x: Vec<u8> = (0..cols)
            .map(|_| {
                let d = (c % 3) as u8;
                c /= 3;
                d
            })
            .collect();
        if rows
            .iter()
            .all(|r| r.iter().zip(&x).map(|(&a, &b)| a * b as u32).sum::<u32>() % 3 == 0)
        {
            out.push(x);
        }
    }
    out
}

/// Rank over GF(3) as log_3 of the kernel size.
pub fn rank_brute(m: &Gf3Matrix) -> usize {
    let k = kernel_brute(m).len();
    let mut dim = 0;
    let mut p = 1;
    while p < k {
        p *= 3;
        dim += 1;
    }
    assert_eq!(p, k);
    m.cols() - dim
}

/// Linear-defining by definition: no nonzero kernel vector vanishes on `s`.
pub fn linear_defining_brute(kernel: &[Vec<u8>], s: &BTreeSet<VertexId>) -> bool {
    kernel
        .iter()
        .filter(|x| x.iter().any(|&v| v != 0))
        .all(|x| s.iter().any(|&v| x[v] != 0))
}

/// Sign sequences of length `n` with sum 0 mod 3, by enumerating all 2^n of them.
pub fn zero_sum_sequences_direct(n: u32) -> u128 {
    (0u64..1 << n)
        .filter(|mask| {
            let minus = mask.count_ones() as i64;
            let plus = n as i64 - minus;
            (plus - minus).rem_euclid(3) == 0
        })
        .count() as u128
}

/// Replaces vertex `v` by a triangle; undone by contracting that triangle.
/// Returns the new graph and the ids of the triangle.
pub fn truncate_vertex(g: &EmbeddedCubicGraph, v: VertexId) -> (EmbeddedCubicGraph, [VertexId; 3]) {
    let nv = g.n_vertices();
    let [a, b, c] = g.rotations()[v];
    // triangle p -> q -> r with p next to a, q next to c, r next to b
    let (p, q, r) = (v, nv, nv + 1);
    let mut rot = g.rotations().to_vec();
    rot[v] = [r, q, a];
    rot.push([p, r, c]);
    rot.push([q, p, b]);
    for (nb, repl) in [(a, p), (b, r), (c, q)] {
        for w in rot[nb].iter_mut() {
            if *w == v {
                *w = repl;
            }
        }
    }
    (EmbeddedCubicGraph::new(rot), [p, q, r])
}

pub fn set(xs: &[VertexId]) -> BTreeSet<VertexId> {
    xs.iter().copied().collect()
}

/// All subsets of `0..n` as sorted sets.
pub fn all_subsets(n: usize) -> Vec<BTreeSet<VertexId>> {
    (0u32..1 << n)
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect()
}
