//! Brute-force Tait colorings of arbitrary simple cubic graphs.
//!
//! Nothing here reads faces, spins or GF(3) systems, so agreement with the Heawood counts is
//! an independent check rather than a restatement.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{bipartition, Bipartition, Edge, EmbeddedCubicGraph, TaitColoring, VertexId};
use crate::{Error, Result};

/// Simple connected cubic graph without an embedding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicGraph {
    adjacency: Vec<[VertexId; 3]>,
}

impl CubicGraph {
    pub fn new(adjacency: Vec<[VertexId; 3]>) -> Result<Self> {
        let nv = adjacency.len();
        let bad = |msg: String| Err(Error::NotCubic(msg));
        if nv == 0 || nv % 2 == 1 {
            return bad(format!("{nv} vertices cannot form a cubic graph"));
        }
        for (v, nb) in adjacency.iter().enumerate() {
            for (k, &w) in nb.iter().enumerate() {
                if w >= nv {
                    return Err(Error::UnknownVertex(w));
                }
                if w == v || nb[..k].contains(&w) {
                    return bad(format!("vertex {v} is not simple"));
                }
                if !adjacency[w].contains(&v) {
                    return bad(format!("adjacency {v}-{w} is not symmetric"));
                }
            }
        }
        let mut seen = vec![false; nv];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &adjacency[v] {
                if !std::mem::replace(&mut seen[w], true) {
                    queue.push_back(w);
                }
            }
        }
        if seen.contains(&false) {
            return bad("not connected".into());
        }
        Ok(CubicGraph { adjacency })
    }

    /// Forgets the rotation order.
    pub fn from_embedded(g: &EmbeddedCubicGraph) -> Result<Self> {
        CubicGraph::new(g.rotations().to_vec())
    }

    pub fn n_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn adjacency(&self) -> &[[VertexId; 3]] {
        &self.adjacency
    }

    /// Sorted edge list, the index order used by [`TaitColoring`].
    pub fn edges(&self) -> Vec<Edge> {
        let mut edges = Vec::with_capacity(3 * self.adjacency.len() / 2);
        for (v, nb) in self.adjacency.iter().enumerate() {
            for &w in nb {
                if v < w {
                    edges.push(Edge::new(v, w));
                }
            }
        }
        edges.sort();
        edges
    }

    pub fn is_bipartite(&self) -> Option<Bipartition> {
        bipartition(self.adjacency.len(), |v| self.adjacency[v])
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<CubicGraph> {
        if perm.len() != self.adjacency.len() {
            return Err(Error::DimensionMismatch {
                expected: self.adjacency.len(),
                got: perm.len(),
            });
        }
        let mut adjacency = vec![[0; 3]; perm.len()];
        for (v, nb) in self.adjacency.iter().enumerate() {
            let slot = adjacency.get_mut(perm[v]).ok_or(Error::UnknownVertex(perm[v]))?;
            *slot = nb.map(|w| perm[w]);
        }
        CubicGraph::new(adjacency)
    }

    /// True if every vertex sees three distinct colors from `{0, 1, 2}`.
    pub fn is_proper(&self, coloring: &TaitColoring) -> bool {
        let edges = self.edges();
        if coloring.colors.len() != edges.len() || coloring.colors.iter().any(|&c| c > 2) {
            return false;
        }
        let mut mask = vec![0u8; self.adjacency.len()];
        for (e, &c) in edges.iter().zip(&coloring.colors) {
            for x in [e.u, e.v] {
                if mask[x] & (1 << c) != 0 {
                    return false;
                }
                mask[x] |= 1 << c;
            }
        }
        true
    }
}

/// Edge order for backtracking: breadth-first from vertex 0, each edge when first reached.
fn bfs_edge_order(g: &CubicGraph) -> Vec<Edge> {
    let nv = g.n_vertices();
    let mut seen = vec![false; nv];
    let mut order = Vec::with_capacity(3 * nv / 2);
    let mut listed = std::collections::HashSet::new();
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        let mut nb = g.adjacency[v];
        nb.sort_unstable();
        for w in nb {
            let e = Edge::new(v, w);
            if listed.insert(e) {
                order.push(e);
            }
            if !std::mem::replace(&mut seen[w], true) {
                queue.push_back(w);
            }
        }
    }
    order
}

struct Search<'a> {
    order: &'a [Edge],
    used: Vec<u8>,
    colors: Vec<u8>,
}

impl Search<'_> {
    fn count(&mut self, k: usize) -> u64 {
        if k == self.order.len() {
            return 1;
        }
        let e = self.order[k];
        let free = !(self.used[e.u] | self.used[e.v]) & 0b111;
        let mut total = 0;
        for c in 0..3u8 {
            if free & (1 << c) == 0 {
                continue;
            }
            self.used[e.u] |= 1 << c;
            self.used[e.v] |= 1 << c;
            total += self.count(k + 1);
            self.used[e.u] &= !(1 << c);
            self.used[e.v] &= !(1 << c);
        }
        total
    }

    fn collect(&mut self, k: usize, out: &mut Vec<Vec<u8>>, limit: usize) -> Result<()> {
        if k == self.order.len() {
            if out.len() == limit {
                return Err(Error::LimitExceeded {
                    what: "coloring",
                    limit,
                });
            }
            out.push(self.colors.clone());
            return Ok(());
        }
        let e = self.order[k];
        let free = !(self.used[e.u] | self.used[e.v]) & 0b111;
        for c in 0..3u8 {
            if free & (1 << c) == 0 {
                continue;
            }
            self.used[e.u] |= 1 << c;
            self.used[e.v] |= 1 << c;
            self.colors[k] = c;
            let r = self.collect(k + 1, out, limit);
            self.used[e.u] &= !(1 << c);
            self.used[e.v] &= !(1 << c);
            r?;
        }
        Ok(())
    }
}

/// Exact number of proper 3-edge-colorings.
pub fn count_tait_oracle(g: &CubicGraph) -> u64 {
    let order = bfs_edge_order(g);
    let first = order[0];
    (0..3u8)
        .into_par_iter()
        .map(|c| {
            let mut s = Search {
                order: &order,
                used: vec![0; g.n_vertices()],
                colors: vec![0; order.len()],
            };
            s.used[first.u] |= 1 << c;
            s.used[first.v] |= 1 << c;
            s.count(1)
        })
        .sum()
}

/// All proper 3-edge-colorings, sorted by their color sequence over the sorted edge list.
/// Refuses with [`Error::LimitExceeded`] instead of truncating.
pub fn enumerate_tait_oracle(g: &CubicGraph, limit: usize) -> Result<Vec<TaitColoring>> {
    let order = bfs_edge_order(g);
    let edges = g.edges();
    let position: Vec<usize> = edges
        .iter()
        .map(|e| order.iter().position(|o| o == e).expect("bfs reaches every edge"))
        .collect();
    let mut s = Search {
        order: &order,
        used: vec![0; g.n_vertices()],
        colors: vec![0; order.len()],
    };
    let mut raw = Vec::new();
    s.collect(0, &mut raw, limit)?;
    let mut out: Vec<TaitColoring> = raw
        .into_iter()
        .map(|c| TaitColoring {
            colors: position.iter().map(|&p| c[p]).collect(),
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Colors a perfect matching 0 and alternates 1, 2 along the remaining even cycles.
pub fn bipartite_tait_construct(g: &CubicGraph, parts: &Bipartition) -> Result<TaitColoring> {
    let nv = g.n_vertices();
    if parts.in_b.len() != nv {
        return Err(Error::DimensionMismatch {
            expected: nv,
            got: parts.in_b.len(),
        });
    }
    for (v, nb) in g.adjacency.iter().enumerate() {
        if nb.iter().any(|&w| parts.in_b[w] == parts.in_b[v]) {
            return Err(Error::NotBipartite);
        }
    }
    let mut mate = vec![usize::MAX; nv];
    if !match_from(g, &mut mate, 0) {
        return Err(Error::NoPerfectMatching);
    }
    let edges = g.edges();
    let index = |a: usize, b: usize| edges.binary_search(&Edge::new(a, b)).expect("edge exists");
    let mut colors = vec![u8::MAX; edges.len()];
    for v in 0..nv {
        colors[index(v, mate[v])] = 0;
    }
    for start in 0..nv {
        let Some(&first) = g.adjacency[start].iter().find(|&&w| colors[index(start, w)] == u8::MAX) else {
            continue;
        };
        let (mut prev, mut cur) = (start, first);
        let mut c = 1;
        colors[index(prev, cur)] = c;
        while cur != start {
            let next = *g.adjacency[cur]
                .iter()
                .find(|&&w| w != prev && w != mate[cur])
                .expect("2-factor vertex has two cycle edges");
            c = 3 - c;
            colors[index(cur, next)] = c;
            prev = cur;
            cur = next;
        }
    }
    let coloring = TaitColoring { colors };
    debug_assert!(g.is_proper(&coloring));
    Ok(coloring)
}

fn match_from(g: &CubicGraph, mate: &mut [usize], from: usize) -> bool {
    let Some(v) = (from..mate.len()).find(|&v| mate[v] == usize::MAX) else {
        return true;
    };
    for &w in &g.adjacency[v] {
        if mate[w] != usize::MAX {
            continue;
        }
        mate[v] = w;
        mate[w] = v;
        if match_from(g, mate, v + 1) {
            return true;
        }
        mate[v] = usize::MAX;
        mate[w] = usize::MAX;
    }
    false
}
