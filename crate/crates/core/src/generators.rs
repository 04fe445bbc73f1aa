//! Named graph families and the closed-form counts that go with them.
//!
//! Ladders use `v_i -> i - 1` and `w_i -> n + i - 1` (1-based `i`), so the rungs are
//! `(i, n + i)` in 0-based ids.

use crate::graph::{EmbeddedCubicGraph, VertexId};
use crate::oracle::CubicGraph;
use crate::{Error, Result};

/// The prism `C_n x P_2`, embedded with the `v` cycle outside and the `w` cycle inside.
///
/// Faces: the quadrilaterals `(v_i, w_i, w_{i+1}, v_{i+1})` and the two `n`-gons.
pub fn circular_ladder(n: usize) -> Result<EmbeddedCubicGraph> {
    if n < 3 {
        return Err(Error::ParameterTooSmall { n, min: 3 });
    }
    let v = |i: usize| i % n;
    let w = |i: usize| n + i % n;
    let mut rotations = Vec::with_capacity(2 * n);
    for i in 0..n {
        rotations.push([v(i + 1), w(i), v(i + n - 1)]);
    }
    for i in 0..n {
        rotations.push([v(i), w(i + 1), w(i + n - 1)]);
    }
    Ok(EmbeddedCubicGraph::new(rotations))
}

/// `CL_n` with the closing rungs `v_n v_1`, `w_n w_1` replaced by `w_n v_1`, `v_n w_1`.
pub fn mobius_ladder(n: usize) -> Result<CubicGraph> {
    if n < 3 {
        return Err(Error::ParameterTooSmall { n, min: 3 });
    }
    let v = |i: usize| i;
    let w = |i: usize| n + i;
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::with_capacity(3); 2 * n];
    let mut link = |a: usize, b: usize| {
        adj[a].push(b);
        adj[b].push(a);
    };
    for i in 0..n - 1 {
        link(v(i), v(i + 1));
        link(w(i), w(i + 1));
    }
    for i in 0..n {
        link(v(i), w(i));
    }
    link(w(n - 1), v(0));
    link(v(n - 1), w(0));
    CubicGraph::new(adj.into_iter().map(|a| [a[0], a[1], a[2]]).collect())
}

/// Tetrahedron: vertex 0 in the middle of triangle 1, 2, 3.
pub fn k4() -> EmbeddedCubicGraph {
    EmbeddedCubicGraph::new(vec![[1, 2, 3], [2, 0, 3], [3, 0, 1], [1, 0, 2]])
}

pub fn petersen() -> CubicGraph {
    let adj = (0..10)
        .map(|i| {
            if i < 5 {
                [(i + 1) % 5, (i + 4) % 5, i + 5]
            } else {
                let j = i - 5;
                [i - 5, 5 + (j + 2) % 5, 5 + (j + 3) % 5]
            }
        })
        .collect();
    CubicGraph::new(adj).expect("petersen graph is cubic")
}

#[derive(Clone, Debug)]
pub enum CatalogGraph {
    Planar(EmbeddedCubicGraph),
    /// No embedding; only the brute-force oracle applies.
    Abstract(CubicGraph),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub graph: CatalogGraph,
}

impl CatalogEntry {
    pub fn embedded(&self) -> Option<&EmbeddedCubicGraph> {
        match &self.graph {
            CatalogGraph::Planar(g) => Some(g),
            CatalogGraph::Abstract(_) => None,
        }
    }

    pub fn cubic(&self) -> CubicGraph {
        match &self.graph {
            CatalogGraph::Planar(g) => CubicGraph::from_embedded(g).expect("catalog graphs are cubic"),
            CatalogGraph::Abstract(g) => g.clone(),
        }
    }

    pub fn n_vertices(&self) -> usize {
        match &self.graph {
            CatalogGraph::Planar(g) => g.n_vertices(),
            CatalogGraph::Abstract(g) => g.n_vertices(),
        }
    }
}

/// `k4`, `cl_3..cl_10`, `mobius_3..mobius_8`, `petersen`.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut out = vec![CatalogEntry {
        name: "k4".into(),
        graph: CatalogGraph::Planar(k4()),
    }];
    for n in 3..=10 {
        out.push(CatalogEntry {
            name: format!("cl_{n}"),
            graph: CatalogGraph::Planar(circular_ladder(n).expect("n >= 3")),
        });
    }
    for n in 3..=8 {
        out.push(CatalogEntry {
            name: format!("mobius_{n}"),
            graph: CatalogGraph::Abstract(mobius_ladder(n).expect("n >= 3")),
        });
    }
    out.push(CatalogEntry {
        name: "petersen".into(),
        graph: CatalogGraph::Abstract(petersen()),
    });
    out
}

/// Number of `(x_1..x_n)` with `x_i` in `{+1, -1}` whose sum is `residue` mod 3.
pub fn count_sequences_with_sum(n: u32, residue: u8) -> u128 {
    assert!(n < 127, "2^n must fit in u128");
    let p = 1u128 << n;
    match (residue % 3 == 0, n % 2 == 0) {
        (true, true) => (p + 2) / 3,
        (true, false) => (p - 2) / 3,
        (false, true) => (p - 1) / 3,
        (false, false) => (p + 1) / 3,
    }
}

/// Sign sequences of length `n` summing to 0 mod 3.
pub fn count_zero_sum_sequences(n: u32) -> u128 {
    count_sequences_with_sum(n, 0)
}

/// Closed form for the number of Tait colorings of `CL_n`.
pub fn cln_formula(n: usize) -> Result<u128> {
    if n < 3 {
        return Err(Error::ParameterTooSmall { n, min: 3 });
    }
    let p = 1u128 << n;
    Ok(if n % 2 == 0 { p + 8 } else { p - 2 })
}

/// The quoted closed form `2^n + 4` for Tait colorings of the Möbius ladder on `2n` vertices.
///
/// Exhaustive counting agrees for odd `n` only; even `n` gives `2^n + 2`.
pub fn mobius_formula(n: usize) -> Result<u128> {
    if n < 3 {
        return Err(Error::ParameterTooSmall { n, min: 3 });
    }
    Ok((1u128 << n) + 4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladders_reject_small_n() {
        assert!(circular_ladder(2).is_err());
        assert!(mobius_ladder(2).is_err());
        assert!(cln_formula(2).is_err());
    }

    #[test]
    fn cl3_matches_figure_labels() {
        // 1..6 -> v1 v2 v3 w2 w3 w1
        let g = circular_ladder(3).unwrap();
        let map = [0, 1, 2, 4, 5, 3];
        let fig_edges = [(1, 2), (1, 3), (1, 6), (2, 3), (2, 4), (3, 5), (4, 5), (4, 6), (5, 6)];
        let mut mapped: Vec<_> = fig_edges
            .iter()
            .map(|&(a, b)| crate::graph::Edge::new(map[a - 1], map[b - 1]))
            .collect();
        mapped.sort();
        assert_eq!(g.edges(), mapped);
    }

    #[test]
    fn ladder_structure() {
        for n in 3..=10 {
            let g = circular_ladder(n).unwrap();
            let report = g.validate();
            assert!(report.is_valid(), "cl_{n}: {:?}", report.issues);
            assert_eq!(g.is_bipartite().is_some(), n % 2 == 0);
            let faces = g.trace_faces().unwrap();
            assert_eq!(faces.iter().filter(|f| f.len() == 4).count(), if n == 4 { 6 } else { n });
            for i in 0..n {
                let quad = [i, n + i, n + (i + 1) % n, (i + 1) % n];
                assert!(faces.iter().any(|f| f.matches_cycle(&quad)), "cl_{n} missing {quad:?}");
            }
            let rim_v: Vec<_> = (0..n).collect();
            let rim_w: Vec<_> = (n..2 * n).collect();
            assert!(faces.iter().any(|f| f.matches_cycle(&rim_v)));
            assert!(faces.iter().any(|f| f.matches_cycle(&rim_w)));
        }
    }

    #[test]
    fn mobius_structure() {
        for n in 3..=8 {
            let m = mobius_ladder(n).unwrap();
            assert_eq!(m.n_vertices(), 2 * n);
            assert_eq!(m.edges().len(), 3 * n);
            assert_eq!(m.is_bipartite().is_some(), n % 2 == 1, "mobius_{n}");
        }
    }

    #[test]
    fn mobius_3_is_k33() {
        let m = mobius_ladder(3).unwrap();
        let parts = m.is_bipartite().expect("K33 is bipartite");
        let a = parts.part_a();
        let b = parts.part_b();
        assert_eq!((a.len(), b.len()), (3, 3));
        for &x in &a {
            for &y in &b {
                assert!(m.adjacency()[x].contains(&y));
            }
        }
    }

    #[test]
    fn catalog_entries_are_well_formed() {
        let cat = catalog();
        assert_eq!(cat.len(), 1 + 8 + 6 + 1);
        for e in &cat {
            if let Some(g) = e.embedded() {
                assert!(g.validate().is_valid(), "{}", e.name);
            }
            assert_eq!(e.cubic().n_vertices(), e.n_vertices());
        }
        assert_eq!(cat[1].embedded(), Some(&circular_ladder(3).unwrap()));
        assert_eq!(cat.last().unwrap().n_vertices(), 10);
    }

    #[test]
    fn sequence_counts() {
        assert_eq!(count_zero_sum_sequences(2), 2);
        assert_eq!(count_zero_sum_sequences(3), 2);
        assert_eq!(count_zero_sum_sequences(4), 6);
        assert_eq!(count_zero_sum_sequences(1), 0);
        for n in 1..40 {
            let total = count_zero_sum_sequences(n) + 2 * count_sequences_with_sum(n, 1);
            assert_eq!(total, 1u128 << n);
        }
    }

    #[test]
    fn cln_values() {
        assert_eq!(cln_formula(3).unwrap(), 6);
        assert_eq!(cln_formula(4).unwrap(), 24);
        assert_eq!(cln_formula(6).unwrap(), 72);
        assert_eq!(mobius_formula(3).unwrap(), 12);
    }
}
