//! Line-oriented text format for rotation systems.
//!
//! ```text
//! # comment
//! vertices 4
//! 0: 1 2 3
//! 1: 2 0 3
//! 2: 3 0 1
//! 3: 1 0 2
//! outer: 0 1 3
//! ```
//!
//! Neighbors are listed counterclockwise; ids are 0-based decimals.

use crate::graph::{EmbeddedCubicGraph, VertexId};
use crate::{Error, Result};

pub fn parse_graph(text: &str) -> Result<EmbeddedCubicGraph> {
    let mut n_vertices: Option<usize> = None;
    let mut rotations: Vec<Option<[VertexId; 3]>> = Vec::new();
    let mut outer: Option<Vec<VertexId>> = None;

    let err = |line: usize, message: String| Error::Parse { line, message };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vertices") {
            if n_vertices.is_some() {
                return Err(err(line_no, "duplicate `vertices` line".into()));
            }
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| err(line_no, format!("bad vertex count `{}`", rest.trim())))?;
            n_vertices = Some(n);
            rotations = vec![None; n];
            continue;
        }
        let Some(n) = n_vertices else {
            return Err(err(line_no, "expected `vertices <count>` first".into()));
        };
        let (head, tail) = line
            .split_once(':')
            .ok_or_else(|| err(line_no, format!("expected `<id>: a b c`, got `{line}`")))?;
        let ids = tail
            .split_whitespace()
            .map(|t| t.parse::<VertexId>().map_err(|_| err(line_no, format!("bad vertex id `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        let head = head.trim();
        if head == "outer" {
            if outer.is_some() {
                return Err(err(line_no, "duplicate `outer` line".into()));
            }
            outer = Some(ids);
            continue;
        }
        let v: VertexId = head
            .parse()
            .map_err(|_| err(line_no, format!("bad vertex id `{head}`")))?;
        if v >= n {
            return Err(err(line_no, format!("vertex {v} out of range (vertices {n})")));
        }
        let rot: [VertexId; 3] = ids
            .as_slice()
            .try_into()
            .map_err(|_| err(line_no, format!("vertex {v} has {} neighbors, expected 3", ids.len())))?;
        if rotations[v].replace(rot).is_some() {
            return Err(err(line_no, format!("vertex {v} listed twice")));
        }
    }

    if n_vertices.is_none() {
        return Err(err(0, "missing `vertices <count>` line".into()));
    }
    let rotations = rotations
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| err(0, format!("no rotation given for vertex {v}"))))
        .collect::<Result<Vec<_>>>()?;
    let g = EmbeddedCubicGraph::new(rotations);
    Ok(match outer {
        Some(cycle) => g.with_outer_face_hint(cycle),
        None => g,
    })
}

pub fn write_graph(g: &EmbeddedCubicGraph) -> String {
    let mut out = format!("vertices {}\n", g.n_vertices());
    for (v, [a, b, c]) in g.rotations().iter().enumerate() {
        out.push_str(&format!("{v}: {a} {b} {c}\n"));
    }
    if let Some(hint) = g.outer_face_hint() {
        let ids: Vec<String> = hint.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("outer: {}\n", ids.join(" ")));
    }
    out
}
