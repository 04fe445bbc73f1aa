//! Face-propriety systems over GF(3) and the correspondence between spin vectors and Tait
//! colorings.
//!
//! Every vertex carries a spin in `{+1, -1}`. A spin vector is a Heawood vector when the spins
//! around every face sum to 0 mod 3. Given one, a Tait coloring is recovered by requiring the
//! colors at `v`, read in counterclockwise rotation order, to advance by `σ(v)`. Fixing the
//! color of one edge makes the coloring unique, so colorings come in classes of three that
//! differ by a cyclic shift of colors.

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{Edge, EmbeddedCubicGraph, Face, FaceId, TaitColoring, VertexId};
use crate::linalg::{Gf3, Gf3Matrix, ParametricSolution, RrefResult};
use crate::{Error, Result};

/// Free-variable counts above this are refused by the enumerator.
pub const MAX_FREE_VARIABLES: usize = 30;

/// A nonzero element of GF(3). `Plus < Minus`, which fixes the canonical vector order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Spin {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Spin {
    pub fn to_gf3(self) -> Gf3 {
        match self {
            Spin::Plus => Gf3::ONE,
            Spin::Minus => Gf3::MINUS_ONE,
        }
    }

    pub fn from_gf3(x: Gf3) -> Option<Spin> {
        match x.value() {
            1 => Some(Spin::Plus),
            2 => Some(Spin::Minus),
            _ => None,
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Spin::Plus => 1,
            Spin::Minus => -1,
        }
    }
}

impl std::ops::Neg for Spin {
    type Output = Spin;
    fn neg(self) -> Spin {
        match self {
            Spin::Plus => Spin::Minus,
            Spin::Minus => Spin::Plus,
        }
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Spin::Plus => "+",
            Spin::Minus => "-",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HeawoodVector {
    pub spins: Vec<Spin>,
}

impl HeawoodVector {
    /// Takes GF(3) values; fails on a zero entry.
    pub fn from_gf3(values: &[Gf3]) -> Result<Self> {
        let spins = values
            .iter()
            .enumerate()
            .map(|(v, &x)| Spin::from_gf3(x).ok_or_else(|| Error::NotHeawood(format!("zero spin at vertex {v}"))))
            .collect::<Result<_>>()?;
        Ok(HeawoodVector { spins })
    }

    /// Takes `+1` / `-1` integers.
    pub fn from_signs(signs: &[i8]) -> Result<Self> {
        let spins = signs
            .iter()
            .enumerate()
            .map(|(v, &s)| match s {
                1 => Ok(Spin::Plus),
                -1 => Ok(Spin::Minus),
                _ => Err(Error::NotHeawood(format!("spin {s} at vertex {v} is not ±1"))),
            })
            .collect::<Result<_>>()?;
        Ok(HeawoodVector { spins })
    }

    pub fn to_gf3(&self) -> Vec<Gf3> {
        self.spins.iter().map(|s| s.to_gf3()).collect()
    }

    pub fn to_signs(&self) -> Vec<i8> {
        self.spins.iter().map(|s| s.to_i8()).collect()
    }

    pub fn negated(&self) -> HeawoodVector {
        HeawoodVector {
            spins: self.spins.iter().map(|&s| -s).collect(),
        }
    }

    /// True if the spins around every face sum to zero.
    pub fn is_proper_for(&self, faces: &[Face]) -> bool {
        faces.iter().all(|f| {
            f.vertices.iter().all(|&v| v < self.spins.len())
                && f.vertices
                    .iter()
                    .map(|&v| self.spins[v].to_gf3())
                    .sum::<Gf3>()
                    .is_zero()
        })
    }
}

impl fmt::Display for HeawoodVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.spins {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// The face equations with one face left out. Column `j` is vertex `j`.
#[derive(Clone, Debug)]
pub struct HeawoodSystem {
    pub matrix: Gf3Matrix,
    pub faces: Vec<Face>,
    pub dropped_face: FaceId,
    /// Face of each matrix row.
    pub row_faces: Vec<FaceId>,
    /// Matrix row of each face; `None` for the dropped face.
    pub face_rows: Vec<Option<usize>>,
}

impl HeawoodSystem {
    /// Drops the hinted outer face, or face 0 (the lexicographically smallest) without a hint.
    pub fn build(g: &EmbeddedCubicGraph) -> Result<Self> {
        let faces = g.trace_faces()?;
        let dropped = g.outer_face(&faces).unwrap_or(0);
        Self::from_faces(g.n_vertices(), faces, dropped)
    }

    pub fn build_dropping(g: &EmbeddedCubicGraph, dropped_face: FaceId) -> Result<Self> {
        let faces = g.trace_faces()?;
        if dropped_face >= faces.len() {
            return Err(Error::UnknownFace(dropped_face));
        }
        Self::from_faces(g.n_vertices(), faces, dropped_face)
    }

    fn from_faces(n_vertices: usize, faces: Vec<Face>, dropped_face: FaceId) -> Result<Self> {
        let mut matrix = Gf3Matrix::zeros(faces.len() - 1, n_vertices);
        let mut row_faces = Vec::with_capacity(faces.len() - 1);
        let mut face_rows = vec![None; faces.len()];
        for f in faces.iter().filter(|f| f.id != dropped_face) {
            let r = row_faces.len();
            for &v in &f.vertices {
                matrix[(r, v)] = Gf3::ONE;
            }
            face_rows[f.id] = Some(r);
            row_faces.push(f.id);
        }
        Ok(HeawoodSystem {
            matrix,
            faces,
            dropped_face,
            row_faces,
            face_rows,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.matrix.cols()
    }

    /// Incidence row of any face, including the dropped one.
    pub fn face_row(&self, face: FaceId) -> Result<Vec<Gf3>> {
        let f = self.faces.get(face).ok_or(Error::UnknownFace(face))?;
        let mut row = vec![Gf3::ZERO; self.n_vertices()];
        for &v in &f.vertices {
            row[v] = Gf3::ONE;
        }
        Ok(row)
    }

    pub fn rref(&self) -> RrefResult {
        self.matrix.rref()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn parametric(&self) -> ParametricSolution {
        self.matrix.solve_parametric()
    }
}

pub fn build_main_sle(g: &EmbeddedCubicGraph) -> Result<HeawoodSystem> {
    HeawoodSystem::build(g)
}

pub fn sle_rank(g: &EmbeddedCubicGraph) -> Result<usize> {
    Ok(HeawoodSystem::build(g)?.rank())
}

/// All Heawood vectors in canonical order.
///
/// Each `±1` pattern on the free columns of the reduced system is extended by
/// back-substitution; patterns that force a zero spin are skipped.
pub fn enumerate_heawood_vectors(g: &EmbeddedCubicGraph) -> Result<Vec<HeawoodVector>> {
    let sys = HeawoodSystem::build(g)?;
    enumerate_from_system(&sys)
}

pub fn enumerate_from_system(sys: &HeawoodSystem) -> Result<Vec<HeawoodVector>> {
    let param = sys.parametric();
    let n_free = param.free_cols.len();
    if n_free > MAX_FREE_VARIABLES {
        return Err(Error::LimitExceeded {
            what: "free variable",
            limit: MAX_FREE_VARIABLES,
        });
    }
    let mut out: Vec<HeawoodVector> = (0u64..1 << n_free)
        .into_par_iter()
        .filter_map(|pattern| {
            let free: Vec<Gf3> = (0..n_free)
                .map(|j| if pattern >> j & 1 == 0 { Gf3::ONE } else { Gf3::MINUS_ONE })
                .collect();
            param
                .evaluate_nonzero(&free)
                .map(|x| HeawoodVector::from_gf3(&x).expect("evaluate_nonzero yields no zeros"))
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Three times the number of Heawood vectors.
pub fn count_tait_colorings_heawood(g: &EmbeddedCubicGraph) -> Result<u64> {
    Ok(3 * enumerate_heawood_vectors(g)?.len() as u64)
}

/// Builds the Tait coloring with `seed_edge` colored `seed_color` in which the colors at each
/// vertex advance by its spin in counterclockwise order.
///
/// Fails with [`Error::NotHeawood`] if propagation runs into a contradiction.
pub fn heawood_to_tait(
    g: &EmbeddedCubicGraph,
    h: &HeawoodVector,
    seed_edge: Edge,
    seed_color: u8,
) -> Result<TaitColoring> {
    g.ensure_valid()?;
    let nv = g.n_vertices();
    if h.spins.len() != nv {
        return Err(Error::DimensionMismatch {
            expected: nv,
            got: h.spins.len(),
        });
    }
    let seed_color = Gf3::try_from(seed_color)?;
    let edges = g.edges();
    let seed = g.edge_index(&edges, seed_edge.u, seed_edge.v)?;
    let mut colors: Vec<Option<Gf3>> = vec![None; edges.len()];
    colors[seed] = Some(seed_color);
    let mut queue = VecDeque::from([seed]);
    while let Some(e) = queue.pop_front() {
        let c = colors[e].expect("queued edges are colored");
        let Edge { u, v } = edges[e];
        for (p, q) in [(u, v), (v, u)] {
            let rot = g.rotations()[p];
            let k = rot.iter().position(|&x| x == q).expect("symmetric rotations");
            let step = h.spins[p].to_gf3();
            let mut expected = c;
            for j in 1..3 {
                expected += step;
                let f = g.edge_index(&edges, p, rot[(k + j) % 3])?;
                match colors[f] {
                    None => {
                        colors[f] = Some(expected);
                        queue.push_back(f);
                    }
                    Some(existing) if existing != expected => {
                        return Err(Error::NotHeawood(format!(
                            "conflicting colors on edge {} at vertex {p}",
                            edges[f]
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(TaitColoring {
        colors: colors
            .into_iter()
            .map(|c| c.expect("connected graph: every edge reached").value())
            .collect(),
    })
}

/// Reads off each vertex's counterclockwise color step.
pub fn tait_to_heawood(g: &EmbeddedCubicGraph, t: &TaitColoring) -> Result<HeawoodVector> {
    g.ensure_valid()?;
    let edges = g.edges();
    if t.colors.len() != edges.len() {
        return Err(Error::DimensionMismatch {
            expected: edges.len(),
            got: t.colors.len(),
        });
    }
    let colors = t
        .colors
        .iter()
        .map(|&c| Gf3::try_from(c))
        .collect::<Result<Vec<_>>>()?;
    let mut spins = Vec::with_capacity(g.n_vertices());
    for (v, rot) in g.rotations().iter().enumerate() {
        let mut c = [Gf3::ZERO; 3];
        for (slot, &w) in c.iter_mut().zip(rot) {
            *slot = colors[g.edge_index(&edges, v, w)?];
        }
        if c[0] == c[1] || c[1] == c[2] || c[0] == c[2] {
            return Err(Error::ImproperColoring { vertex: v });
        }
        let step = c[1] - c[0];
        if c[2] - c[1] != step || c[0] - c[2] != step {
            return Err(Error::NonConstantStep { vertex: v });
        }
        spins.push(Spin::from_gf3(step).expect("distinct colors give a nonzero step"));
    }
    Ok(HeawoodVector { spins })
}

/// `+1` on the part containing vertex 0, `-1` on the other.
pub fn bipartite_heawood_vector(g: &EmbeddedCubicGraph) -> Result<HeawoodVector> {
    g.ensure_valid()?;
    let parts = g.is_bipartite().ok_or(Error::NotBipartite)?;
    Ok(HeawoodVector {
        spins: parts
            .in_b
            .iter()
            .map(|&b| if b { Spin::Minus } else { Spin::Plus })
            .collect(),
    })
}

/// Result of shrinking a triangular face to a single vertex.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: EmbeddedCubicGraph,
    /// New id of every old vertex; the three triangle vertices all map to `new_vertex`.
    pub vertex_map: Vec<VertexId>,
    pub new_vertex: VertexId,
    pub triangle: [VertexId; 3],
}

impl Contraction {
    /// Image of a Heawood vector of the original graph: the triangle's common spin is
    /// replaced by its negation on the new vertex.
    pub fn map_vector(&self, h: &HeawoodVector) -> Result<HeawoodVector> {
        let [a, b, c] = self.triangle;
        if h.spins[a] != h.spins[b] || h.spins[b] != h.spins[c] {
            return Err(Error::NotHeawood("triangle spins differ".into()));
        }
        let mut spins = vec![Spin::Plus; self.graph.n_vertices()];
        for (old, &s) in h.spins.iter().enumerate() {
            spins[self.vertex_map[old]] = s;
        }
        spins[self.new_vertex] = -h.spins[a];
        Ok(HeawoodVector { spins })
    }
}

pub fn contract_triangle(g: &EmbeddedCubicGraph, face: FaceId) -> Result<Contraction> {
    let faces = g.trace_faces()?;
    let f = faces.get(face).ok_or(Error::UnknownFace(face))?;
    let [a, b, c]: [VertexId; 3] = f
        .vertices
        .as_slice()
        .try_into()
        .map_err(|_| Error::NotTriangular { face, len: f.len() })?;
    let rot = g.rotations();
    let outside = |x: VertexId, p: VertexId, q: VertexId| {
        *rot[x].iter().find(|&&y| y != p && y != q).expect("cubic")
    };
    let (oa, ob, oc) = (outside(a, b, c), outside(b, a, c), outside(c, a, b));
    if oa == ob || ob == oc || oa == oc {
        return Err(Error::ContractionNotSimple(format!(
            "triangle {a},{b},{c} has a repeated outside neighbor"
        )));
    }

    let mut sorted = [a, b, c];
    sorted.sort_unstable();
    let x_old = sorted[0];
    let mut vertex_map = vec![usize::MAX; g.n_vertices()];
    let mut next = 0;
    for v in 0..g.n_vertices() {
        if v == sorted[1] || v == sorted[2] {
            continue;
        }
        vertex_map[v] = next;
        next += 1;
    }
    let x = vertex_map[x_old];
    vertex_map[sorted[1]] = x;
    vertex_map[sorted[2]] = x;

    let mut rotations = vec![[0; 3]; next];
    for v in 0..g.n_vertices() {
        if v == a || v == b || v == c {
            continue;
        }
        rotations[vertex_map[v]] = rot[v].map(|w| vertex_map[w]);
    }
    // the face is traced a -> b -> c, so around the new vertex the outside neighbors
    // appear as a', c', b'
    rotations[x] = [vertex_map[oa], vertex_map[oc], vertex_map[ob]];

    let hint = g.outer_face_hint().and_then(|h| {
        let mapped: Vec<VertexId> = h.iter().map(|&v| vertex_map[v]).collect();
        let mut dedup = mapped.clone();
        dedup.dedup();
        (dedup.len() == mapped.len()).then_some(mapped)
    });
    let mut graph = EmbeddedCubicGraph::new(rotations);
    if let Some(h) = hint {
        graph = graph.with_outer_face_hint(h);
    }
    let report = graph.validate();
    if !report.is_valid() {
        let issues: Vec<String> = report.issues.iter().map(|i| i.to_string()).collect();
        return Err(Error::ContractionNotSimple(issues.join("; ")));
    }
    Ok(Contraction {
        graph,
        vertex_map,
        new_vertex: x,
        triangle: [a, b, c],
    })
}
