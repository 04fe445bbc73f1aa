//! JSON documents written by `--json`. Field names and shapes are part of the interface.

use std::fmt::Write as _;

use heawood_core::{DefiningMode, Issue, Spin};
use serde::{Deserialize, Serialize};

/// Reports render as text or as a single JSON document.
pub trait Render: Serialize {
    fn text(&self) -> String;

    /// `false` turns a completed run into exit status 1.
    fn success(&self) -> bool {
        true
    }
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidateReport {
    pub valid: bool,
    pub n_vertices: usize,
    pub n_edges: usize,
    pub n_faces: Option<usize>,
    pub bipartite: Option<bool>,
    pub issues: Vec<Issue>,
}

impl Render for ValidateReport {
    fn text(&self) -> String {
        if self.valid {
            let kind = if self.bipartite == Some(true) { "bipartite" } else { "non-bipartite" };
            format!(
                "valid: {} vertices, {} edges, {} faces, {kind}\n",
                self.n_vertices,
                self.n_edges,
                self.n_faces.unwrap_or(0)
            )
        } else {
            let mut out = format!("invalid: {} issue(s)\n", self.issues.len());
            for issue in &self.issues {
                let _ = writeln!(out, "  {issue}");
            }
            out
        }
    }

    fn success(&self) -> bool {
        self.valid
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceEntry {
    pub id: usize,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacesReport {
    pub dropped_face: usize,
    pub faces: Vec<FaceEntry>,
}

impl Render for FacesReport {
    fn text(&self) -> String {
        let mut out = String::new();
        for f in &self.faces {
            let mark = if f.id == self.dropped_face { "  (dropped)" } else { "" };
            let _ = writeln!(out, "face {:>3}  len {:>2}:  {}{mark}", f.id, f.vertices.len(), join(&f.vertices, " "));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankReport {
    pub rank: usize,
    pub rows: usize,
    pub cols: usize,
    pub dropped_face: usize,
    pub bipartite: bool,
    pub pivot_columns: Vec<usize>,
    pub free_columns: Vec<usize>,
}

impl Render for RankReport {
    fn text(&self) -> String {
        format!(
            "rank {} ({} x {} system, dropped face {}, {})\npivot columns: {}\nfree columns: {}\n",
            self.rank,
            self.rows,
            self.cols,
            self.dropped_face,
            if self.bipartite { "bipartite" } else { "non-bipartite" },
            join(&self.pivot_columns, " "),
            join(&self.free_columns, " "),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub heawood: Option<u64>,
    pub oracle: Option<u64>,
    /// Present when both methods ran.
    pub agree: Option<bool>,
}

impl Render for CountReport {
    fn text(&self) -> String {
        let mut out = String::new();
        if let Some(h) = self.heawood {
            let _ = writeln!(out, "heawood={h}");
        }
        if let Some(o) = self.oracle {
            let _ = writeln!(out, "oracle={o}");
        }
        match self.agree {
            Some(true) => out.push_str("agree\n"),
            Some(false) => out.push_str("DISAGREE\n"),
            None => {}
        }
        out
    }

    fn success(&self) -> bool {
        self.agree != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeawoodListReport {
    pub count: usize,
    pub vectors: Vec<Vec<Spin>>,
}

impl Render for HeawoodListReport {
    fn text(&self) -> String {
        let mut out = String::new();
        for v in &self.vectors {
            let _ = writeln!(out, "{}", join(v, " "));
        }
        let _ = writeln!(out, "{} vector(s)", self.count);
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaitListReport {
    pub count: usize,
    /// Column order of each coloring.
    pub edges: Vec<[usize; 2]>,
    pub colorings: Vec<Vec<u8>>,
}

impl Render for TaitListReport {
    fn text(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> = self.edges.iter().map(|[u, v]| format!("{u}-{v}")).collect();
        let _ = writeln!(out, "# {}", header.join(" "));
        for c in &self.colorings {
            let _ = writeln!(out, "{}", join(c, ""));
        }
        let _ = writeln!(out, "{} coloring(s)", self.count);
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefiningReport {
    pub mode: DefiningMode,
    pub max_size: usize,
    pub bipartite: bool,
    pub free_variables: Vec<usize>,
    pub free_variables_defining: bool,
    pub minimal_sets: Vec<Vec<usize>>,
}

impl Render for DefiningReport {
    fn text(&self) -> String {
        let mut out = format!(
            "free variables: {{{}}} (defining: {}{})\n",
            join(&self.free_variables, ", "),
            yes_no(self.free_variables_defining),
            if self.bipartite { ", bipartite" } else { "" }
        );
        let mode = match self.mode {
            DefiningMode::Linear => "linear",
            DefiningMode::Heawood => "heawood",
        };
        let _ = writeln!(out, "minimal {mode}-defining sets of size <= {}: {}", self.max_size, self.minimal_sets.len());
        for s in &self.minimal_sets {
            let _ = writeln!(out, "  {{{}}}", join(s, ", "));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceCoefficient {
    pub face: usize,
    /// Signed representative in `{-1, 1}`.
    pub coefficient: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub support: Vec<usize>,
    pub combination: Vec<FaceCoefficient>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZebraReport {
    pub set: Vec<usize>,
    pub witness: Option<Witness>,
}

impl Render for ZebraReport {
    fn text(&self) -> String {
        match &self.witness {
            None => format!("no witness inside {{{}}}\n", join(&self.set, ", ")),
            Some(w) => {
                let terms: Vec<String> = w
                    .combination
                    .iter()
                    .map(|c| format!("{}f{}", if c.coefficient < 0 { "-" } else { "+" }, c.face))
                    .collect();
                format!("witness: support {{{}}}\ncombination: {}\n", join(&w.support, ", "), terms.join(" "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenReport {
    pub family: String,
    pub planar: bool,
    /// Graph in the text format, always 0-based.
    pub graph: String,
}

impl Render for GenReport {
    fn text(&self) -> String {
        let kind = if self.planar { "rotation system" } else { "adjacency only, rotation order arbitrary" };
        format!("# {} ({kind})\n{}", self.family, self.graph)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderRow {
    pub n: usize,
    pub formula: u128,
    pub heawood: Option<u64>,
    pub oracle: Option<u64>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub family: String,
    pub rows: Vec<LadderRow>,
    pub all_match: bool,
}

impl Render for VerifyReport {
    fn text(&self) -> String {
        let opt = |x: Option<u64>| x.map_or("-".to_string(), |v| v.to_string());
        let mut out = format!("{:>4} {:>12} {:>12} {:>12}  match\n", "n", "formula", "heawood", "oracle");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:>4} {:>12} {:>12} {:>12}  {}",
                r.n,
                r.formula,
                opt(r.heawood),
                opt(r.oracle),
                yes_no(r.matches)
            );
        }
        let _ = writeln!(out, "{}: {}", self.family, if self.all_match { "all match" } else { "MISMATCH" });
        out
    }

    fn success(&self) -> bool {
        self.all_match
    }
}
