//! Planar cubic graphs given by a rotation system.
//!
//! Each vertex stores its three neighbors in counterclockwise order. Faces are traced from the
//! rotations alone: arriving at `w` along the edge from `u`, the walk leaves `w` towards the
//! neighbor that follows `u` in the rotation of `w`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub type VertexId = usize;
pub type FaceId = usize;

/// A cubic graph with a fixed combinatorial embedding.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EmbeddedCubicGraph {
    rotations: Vec<[VertexId; 3]>,
    outer_face_hint: Option<Vec<VertexId>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Dart {
    pub from: VertexId,
    pub to: VertexId,
}

/// An undirected edge with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Self {
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A face boundary, rotated so that its smallest vertex comes first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Face {
    pub id: FaceId,
    pub vertices: Vec<VertexId>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    /// Same vertex cycle up to rotation and direction.
    pub fn matches_cycle(&self, cycle: &[VertexId]) -> bool {
        if cycle.len() != self.vertices.len() {
            return false;
        }
        let a = canonical_cycle(&self.vertices);
        let b = canonical_cycle(cycle);
        let mut rev: Vec<_> = b.iter().rev().copied().collect();
        rev.rotate_right(1);
        a == b || a == rev
    }
}

/// Two-coloring of the vertices. `in_b[v]` is false for vertices in the first part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub in_b: Vec<bool>,
}

impl Bipartition {
    pub fn part_a(&self) -> Vec<VertexId> {
        (0..self.in_b.len()).filter(|&v| !self.in_b[v]).collect()
    }

    pub fn part_b(&self) -> Vec<VertexId> {
        (0..self.in_b.len()).filter(|&v| self.in_b[v]).collect()
    }
}

/// Per-edge colors in `{0, 1, 2}`, indexed like the graph's sorted edge list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TaitColoring {
    pub colors: Vec<u8>,
}

/// Structural problems found by [`EmbeddedCubicGraph::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Issue {
    Empty,
    OddVertexCount { n_vertices: usize },
    NeighborOutOfRange { vertex: VertexId, neighbor: VertexId },
    SelfLoop { vertex: VertexId },
    RepeatedNeighbor { vertex: VertexId, neighbor: VertexId },
    Asymmetric { vertex: VertexId, neighbor: VertexId },
    Disconnected,
    CutVertex { vertex: VertexId },
    FaceCount { expected: usize, found: usize },
    OuterHintNotAFace,
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::Empty => write!(f, "graph has no vertices"),
            Issue::OddVertexCount { n_vertices } => {
                write!(f, "odd vertex count {n_vertices}")
            }
            Issue::NeighborOutOfRange { vertex, neighbor } => {
                write!(f, "vertex {vertex} lists unknown neighbor {neighbor}")
            }
            Issue::SelfLoop { vertex } => write!(f, "not simple: self-loop at {vertex}"),
            Issue::RepeatedNeighbor { vertex, neighbor } => {
                write!(f, "not simple: vertex {vertex} lists {neighbor} twice")
            }
            Issue::Asymmetric { vertex, neighbor } => write!(
                f,
                "asymmetric rotations: {vertex} lists {neighbor} but not conversely"
            ),
            Issue::Disconnected => write!(f, "not connected"),
            Issue::CutVertex { vertex } => write!(f, "not biconnected: cut vertex {vertex}"),
            Issue::FaceCount { expected, found } => {
                write!(f, "embedding not planar: {found} faces, expected {expected}")
            }
            Issue::OuterHintNotAFace => write!(f, "outer face hint is not a face"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub n_vertices: usize,
    pub n_edges: usize,
    pub n_faces: Option<usize>,
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl EmbeddedCubicGraph {
    /// Wraps a rotation system without checking it; see [`validate`](Self::validate).
    pub fn new(rotations: Vec<[VertexId; 3]>) -> Self {
        EmbeddedCubicGraph {
            rotations,
            outer_face_hint: None,
        }
    }

    pub fn with_outer_face_hint(mut self, cycle: Vec<VertexId>) -> Self {
        self.outer_face_hint = Some(cycle);
        self
    }

    pub fn outer_face_hint(&self) -> Option<&[VertexId]> {
        self.outer_face_hint.as_deref()
    }

    pub fn n_vertices(&self) -> usize {
        self.rotations.len()
    }

    /// Half the number of vertices.
    pub fn n(&self) -> usize {
        self.rotations.len() / 2
    }

    pub fn rotations(&self) -> &[[VertexId; 3]] {
        &self.rotations
    }

    pub fn rotation(&self, v: VertexId) -> Result<&[VertexId; 3]> {
        self.rotations.get(v).ok_or(Error::UnknownVertex(v))
    }

    /// Reports every violated structural invariant; an empty issue list means valid.
    pub fn validate(&self) -> ValidationReport {
        let nv = self.rotations.len();
        let mut issues = Vec::new();
        if nv == 0 {
            issues.push(Issue::Empty);
        }
        if nv % 2 == 1 {
            issues.push(Issue::OddVertexCount { n_vertices: nv });
        }
        let mut local_ok = true;
        for (v, rot) in self.rotations.iter().enumerate() {
            for (k, &w) in rot.iter().enumerate() {
                if w >= nv {
                    issues.push(Issue::NeighborOutOfRange {
                        vertex: v,
                        neighbor: w,
                    });
                    local_ok = false;
                } else if w == v {
                    issues.push(Issue::SelfLoop { vertex: v });
                    local_ok = false;
                } else if rot[..k].contains(&w) {
                    issues.push(Issue::RepeatedNeighbor {
                        vertex: v,
                        neighbor: w,
                    });
                    local_ok = false;
                }
            }
        }
        if local_ok {
            for (v, rot) in self.rotations.iter().enumerate() {
                for &w in rot {
                    if !self.rotations[w].contains(&v) {
                        issues.push(Issue::Asymmetric {
                            vertex: v,
                            neighbor: w,
                        });
                        local_ok = false;
                    }
                }
            }
        }
        let mut n_faces = None;
        if local_ok && nv > 0 {
            let cut = cut_vertices(&self.rotations);
            match cut {
                None => issues.push(Issue::Disconnected),
                Some(cut) => issues.extend(cut.into_iter().map(|vertex| Issue::CutVertex { vertex })),
            }
            if let Ok(faces) = self.trace_faces_raw() {
                n_faces = Some(faces.len());
                let expected = nv / 2 + 2;
                if faces.len() != expected {
                    issues.push(Issue::FaceCount {
                        expected,
                        found: faces.len(),
                    });
                }
                if let Some(hint) = &self.outer_face_hint {
                    if !faces.iter().any(|f| f.matches_cycle(hint)) {
                        issues.push(Issue::OuterHintNotAFace);
                    }
                }
            }
        }
        ValidationReport {
            n_vertices: nv,
            n_edges: if local_ok { 3 * nv / 2 } else { 0 },
            n_faces,
            issues,
        }
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidGraph(report.issues))
        }
    }

    /// Dart that follows `d` along its face.
    pub fn next_dart(&self, d: Dart) -> Dart {
        let rot = &self.rotations[d.to];
        let k = rot.iter().position(|&x| x == d.from).expect("symmetric rotations");
        Dart {
            from: d.to,
            to: rot[(k + 1) % 3],
        }
    }

    /// All faces, each rotated to start at its smallest vertex and sorted lexicographically;
    /// `Face::id` is the position in that order.
    pub fn trace_faces(&self) -> Result<Vec<Face>> {
        self.ensure_valid()?;
        self.trace_faces_raw()
    }

    fn trace_faces_raw(&self) -> Result<Vec<Face>> {
        let nv = self.rotations.len();
        let total_darts = 3 * nv;
        let mut seen = vec![[false; 3]; nv];
        let mut cycles = Vec::new();
        for v in 0..nv {
            for k in 0..3 {
                if seen[v][k] {
                    continue;
                }
                let start = Dart {
                    from: v,
                    to: self.rotations[v][k],
                };
                let mut cycle = Vec::new();
                let mut d = start;
                loop {
                    let slot = self.rotations[d.from]
                        .iter()
                        .position(|&x| x == d.to)
                        .ok_or(Error::FaceTracing { steps: cycle.len() })?;
                    if seen[d.from][slot] {
                        return Err(Error::FaceTracing { steps: cycle.len() });
                    }
                    seen[d.from][slot] = true;
                    cycle.push(d.from);
                    if cycle.len() > total_darts {
                        return Err(Error::FaceTracing { steps: cycle.len() });
                    }
                    if !self.rotations[d.to].contains(&d.from) {
                        return Err(Error::FaceTracing { steps: cycle.len() });
                    }
                    d = self.next_dart(d);
                    if d == start {
                        break;
                    }
                }
                cycles.push(canonical_rotation(&cycle));
            }
        }
        cycles.sort();
        Ok(cycles
            .into_iter()
            .enumerate()
            .map(|(id, vertices)| Face { id, vertices })
            .collect())
    }

    /// Face id named by the outer-face hint, if any.
    pub fn outer_face(&self, faces: &[Face]) -> Option<FaceId> {
        let hint = self.outer_face_hint.as_ref()?;
        faces.iter().find(|f| f.matches_cycle(hint)).map(|f| f.id)
    }

    /// Sorted list of edges; an edge's position is its index everywhere in this crate.
    pub fn edges(&self) -> Vec<Edge> {
        let mut edges: Vec<Edge> = self
            .rotations
            .iter()
            .enumerate()
            .flat_map(|(v, rot)| rot.iter().filter(move |&&w| v < w).map(move |&w| Edge::new(v, w)))
            .collect();
        edges.sort();
        edges
    }

    pub fn edge_index(&self, edges: &[Edge], a: VertexId, b: VertexId) -> Result<usize> {
        edges
            .binary_search(&Edge::new(a, b))
            .map_err(|_| Error::UnknownEdge(a, b))
    }

    /// Indices of the edges at `v`, in counterclockwise rotation order.
    pub fn incident_edges_ccw(&self, v: VertexId) -> Result<[usize; 3]> {
        let rot = self.rotation(v)?;
        let edges = self.edges();
        let mut out = [0; 3];
        for (slot, &w) in out.iter_mut().zip(rot) {
            *slot = self.edge_index(&edges, v, w)?;
        }
        Ok(out)
    }

    /// Two-coloring with vertex 0 in the first part, or `None` if the graph has an odd cycle.
    pub fn is_bipartite(&self) -> Option<Bipartition> {
        bipartition(self.rotations.len(), |v| self.rotations[v])
    }

    /// Graph with vertex `v` renamed to `perm[v]`; rotations keep their cyclic order.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<EmbeddedCubicGraph> {
        let nv = self.rotations.len();
        if perm.len() != nv {
            return Err(Error::DimensionMismatch {
                expected: nv,
                got: perm.len(),
            });
        }
        let mut seen = vec![false; nv];
        for &p in perm {
            if p >= nv || std::mem::replace(&mut seen[p], true) {
                return Err(Error::UnknownVertex(p));
            }
        }
        let mut rotations = vec![[0; 3]; nv];
        for (v, rot) in self.rotations.iter().enumerate() {
            rotations[perm[v]] = rot.map(|w| perm[w]);
        }
        Ok(EmbeddedCubicGraph {
            rotations,
            outer_face_hint: self
                .outer_face_hint
                .as_ref()
                .map(|h| h.iter().map(|&v| perm[v]).collect()),
        })
    }
}

fn canonical_rotation(cycle: &[VertexId]) -> Vec<VertexId> {
    let k = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| *v)
        .map_or(0, |(i, _)| i);
    let mut c = cycle.to_vec();
    c.rotate_left(k);
    c
}

fn canonical_cycle(cycle: &[VertexId]) -> Vec<VertexId> {
    canonical_rotation(cycle)
}

pub(crate) fn bipartition(nv: usize, neighbors: impl Fn(VertexId) -> [VertexId; 3]) -> Option<Bipartition> {
    let mut side: Vec<Option<bool>> = vec![None; nv];
    for root in 0..nv {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let s = side[v].expect("queued vertices are colored");
            for w in neighbors(v) {
                match side[w] {
                    None => {
                        side[w] = Some(!s);
                        queue.push_back(w);
                    }
                    Some(t) if t == s => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(Bipartition {
        in_b: side.into_iter().map(|s| s.unwrap_or(false)).collect(),
    })
}

/// Articulation points via lowpoint DFS. `None` if the graph is disconnected.
fn cut_vertices(rotations: &[[VertexId; 3]]) -> Option<Vec<VertexId>> {
    let nv = rotations.len();
    let mut disc = vec![usize::MAX; nv];
    let mut low = vec![0; nv];
    let mut is_cut = vec![false; nv];
    let mut timer = 0;
    // frame: (vertex, parent, next neighbor slot)
    let mut stack: Vec<(VertexId, Option<VertexId>, usize)> = vec![(0, None, 0)];
    disc[0] = 0;
    low[0] = 0;
    timer += 1;
    let mut root_children = 0;
    while let Some(&mut (v, parent, ref mut slot)) = stack.last_mut() {
        if *slot < 3 {
            let w = rotations[v][*slot];
            *slot += 1;
            if Some(w) == parent {
                continue;
            }
            if disc[w] == usize::MAX {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                if v == 0 {
                    root_children += 1;
                }
                stack.push((w, Some(v), 0));
            } else {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(p) = parent {
                low[p] = low[p].min(low[v]);
                if p != 0 && low[v] >= disc[p] {
                    is_cut[p] = true;
                }
            }
        }
    }
    if disc.contains(&usize::MAX) {
        return None;
    }
    if root_children > 1 {
        is_cut[0] = true;
    }
    Some((0..nv).filter(|&v| is_cut[v]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{circular_ladder, k4};

    fn cl3_fig1() -> EmbeddedCubicGraph {
        // figure labels 1..6 shifted to 0..5
        circular_ladder(3)
            .unwrap()
            .relabel(&[0, 1, 2, 5, 3, 4])
            .unwrap()
    }

    #[test]
    fn cl3_validates() {
        let r = cl3_fig1().validate();
        assert!(r.is_valid(), "{:?}", r.issues);
        assert_eq!((r.n_vertices, r.n_edges, r.n_faces), (6, 9, Some(5)));
    }

    #[test]
    fn k4_validates() {
        let r = k4().validate();
        assert!(r.is_valid(), "{:?}", r.issues);
        assert_eq!((r.n_vertices, r.n_edges, r.n_faces), (4, 6, Some(4)));
    }

    #[test]
    fn repeated_neighbor_is_not_simple() {
        let mut rot = cl3_fig1().rotations().to_vec();
        rot[0][2] = rot[0][1];
        let r = EmbeddedCubicGraph::new(rot).validate();
        assert!(!r.is_valid());
        assert!(r
            .issues
            .iter()
            .any(|i| matches!(i, Issue::RepeatedNeighbor { vertex: 0, .. })));
    }

    #[test]
    fn asymmetric_and_out_of_range_are_reported() {
        let r = EmbeddedCubicGraph::new(vec![[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 7]]).validate();
        assert!(r.issues.contains(&Issue::NeighborOutOfRange {
            vertex: 3,
            neighbor: 7
        }));
        let r = EmbeddedCubicGraph::new(vec![[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 1]]).validate();
        assert!(!r.is_valid());
        let r = EmbeddedCubicGraph::new(vec![]).validate();
        assert_eq!(r.issues, vec![Issue::Empty]);
    }

    #[test]
    fn bridged_gadgets_have_cut_vertices() {
        // two K4-minus-an-edge gadgets, each with a degree-2 vertex, joined by the bridge 4-9
        let rot = vec![
            [1, 2, 4],
            [0, 2, 3],
            [0, 1, 3],
            [1, 2, 4],
            [0, 3, 9],
            [6, 7, 9],
            [5, 7, 8],
            [5, 6, 8],
            [6, 7, 9],
            [5, 8, 4],
        ];
        let r = EmbeddedCubicGraph::new(rot).validate();
        assert!(r.issues.contains(&Issue::CutVertex { vertex: 4 }), "{:?}", r.issues);
        assert!(r.issues.contains(&Issue::CutVertex { vertex: 9 }));
    }

    #[test]
    fn disconnected_is_reported() {
        let k = k4().rotations().to_vec();
        let mut rot = k.clone();
        rot.extend(k.iter().map(|r| r.map(|w| w + 4)));
        let r = EmbeddedCubicGraph::new(rot).validate();
        assert!(r.issues.contains(&Issue::Disconnected));
    }

    #[test]
    fn nonplanar_rotation_has_wrong_face_count() {
        // K4 with one vertex's rotation reversed embeds on the torus
        let mut rot = k4().rotations().to_vec();
        rot[0].swap(1, 2);
        let r = EmbeddedCubicGraph::new(rot).validate();
        assert!(matches!(r.issues[..], [Issue::FaceCount { expected: 4, .. }]));
    }

    #[test]
    fn cl3_faces_match_figure() {
        let faces = cl3_fig1().trace_faces().unwrap();
        let expected: [&[usize]; 5] = [&[0, 1, 2], &[1, 3, 4, 2], &[3, 5, 4], &[0, 2, 4, 5], &[0, 1, 3, 5]];
        assert_eq!(faces.len(), 5);
        for cyc in expected {
            assert!(faces.iter().any(|f| f.matches_cycle(cyc)), "missing face {cyc:?}");
        }
    }

    #[test]
    fn face_lengths_cover_all_darts() {
        for n in 3..8 {
            let g = circular_ladder(n).unwrap();
            let faces = g.trace_faces().unwrap();
            assert_eq!(faces.len(), n + 2);
            assert_eq!(faces.iter().map(Face::len).sum::<usize>(), 6 * n);
        }
        let faces = k4().trace_faces().unwrap();
        assert!(faces.iter().all(|f| f.len() == 3));
    }

    #[test]
    fn bipartiteness() {
        assert!(circular_ladder(4).unwrap().is_bipartite().is_some());
        assert!(circular_ladder(3).unwrap().is_bipartite().is_none());
        assert!(k4().is_bipartite().is_none());
        let b = circular_ladder(4).unwrap().is_bipartite().unwrap();
        assert!(!b.in_b[0]);
        assert_eq!(b.part_a().len(), 4);
    }

    #[test]
    fn edge_indexing() {
        let g = cl3_fig1();
        let edges = g.edges();
        assert_eq!(edges.len(), 9);
        assert_eq!(k4().edges().len(), 6);
        let inc = g.incident_edges_ccw(0).unwrap();
        for (k, &e) in inc.iter().enumerate() {
            assert_eq!(edges[e], Edge::new(0, g.rotations()[0][k]));
        }
        assert!(matches!(g.incident_edges_ccw(6), Err(Error::UnknownVertex(6))));
    }

    #[test]
    fn outer_hint_must_be_a_face() {
        let g = cl3_fig1().with_outer_face_hint(vec![0, 1, 4]);
        assert!(g.validate().issues.contains(&Issue::OuterHintNotAFace));
        let g = cl3_fig1().with_outer_face_hint(vec![5, 3, 1, 0]);
        let faces = g.trace_faces().unwrap();
        let outer = g.outer_face(&faces).unwrap();
        assert!(faces[outer].matches_cycle(&[0, 1, 3, 5]));
    }
}
