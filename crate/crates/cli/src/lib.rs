//! Command-line front end for `heawood-core`.

pub mod report;

use std::collections::BTreeSet;
use std::io::Read;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use heawood_core::{
    circular_ladder, cln_formula, count_tait_colorings_heawood, count_tait_oracle, enumerate_heawood_vectors,
    enumerate_tait_oracle, k4, mobius_formula, mobius_ladder, parse_graph, petersen, write_graph, CubicGraph,
    DefiningAnalyzer, DefiningMode, EmbeddedCubicGraph, HeawoodSystem, Issue, VertexSet,
};

use report::*;

#[derive(Debug, Parser)]
#[command(name = "heawood", version, about = "Tait colorings of cubic graphs through face spin equations over GF(3)")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Read and print vertex and face ids starting at 1.
    #[arg(long, global = true)]
    pub one_based: bool,
    /// Worker threads for parallel enumeration (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a file describes a simple biconnected planar cubic embedding.
    Validate { file: PathBuf },
    /// List the faces of the embedding.
    Faces { file: PathBuf },
    /// Rank of the face system.
    Rank {
        file: PathBuf,
        /// Face left out of the system (default: the outer face, else face 0).
        #[arg(long, value_name = "ID")]
        drop_face: Option<usize>,
    },
    /// Count Tait colorings.
    Count {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Heawood vectors.
    Heawood {
        #[command(subcommand)]
        action: ListAction,
    },
    /// Tait colorings by exhaustive search.
    Tait {
        #[command(subcommand)]
        action: TaitAction,
    },
    /// Free-variable defining set and minimal defining sets.
    Defining {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Linear)]
        mode: Mode,
        /// Largest set size searched (default: all sizes).
        #[arg(long, value_name = "K")]
        max_size: Option<usize>,
    },
    /// Find a nonzero face combination supported inside a vertex set.
    Zebra {
        file: PathBuf,
        /// Comma-separated vertex ids.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        set: Vec<usize>,
    },
    /// Print a generated graph in the text format.
    Gen {
        #[arg(value_enum)]
        family: Family,
        /// Ladder size; ignored for k4 and petersen.
        n: Option<usize>,
    },
    /// Compare circular ladder counts with the closed form.
    VerifyCln {
        #[arg(long, default_value_t = 3)]
        from: usize,
        #[arg(long, default_value_t = 10)]
        to: usize,
    },
    /// Compare Möbius ladder oracle counts with the closed form.
    VerifyMobius {
        #[arg(long, default_value_t = 3)]
        from: usize,
        #[arg(long, default_value_t = 6)]
        to: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum ListAction {
    List { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum TaitAction {
    List {
        file: PathBuf,
        /// Refuse graphs with more colorings than this.
        #[arg(long, default_value_t = 100_000)]
        limit: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Heawood,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Linear,
    Heawood,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Cl,
    Mobius,
    K4,
    Petersen,
}

/// Largest oracle run inside `verify-cln`.
const VERIFY_ORACLE_MAX_N: usize = 6;

/// A failure together with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

impl Failure {
    fn usage(error: anyhow::Error) -> Self {
        Failure { code: 2, error }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        Failure { code: 1, error }
    }
}

impl From<heawood_core::Error> for Failure {
    fn from(error: heawood_core::Error) -> Self {
        Failure { code: 1, error: error.into() }
    }
}

/// Text or JSON output and whether the run counts as a success.
pub struct Output {
    pub stdout: String,
    pub success: bool,
}

fn emit<R: Render>(report: &R, json: bool) -> Result<Output, Failure> {
    let stdout = if json {
        let mut s = serde_json::to_string_pretty(report).context("serializing report")?;
        s.push('\n');
        s
    } else {
        report.text()
    };
    Ok(Output {
        stdout,
        success: report.success(),
    })
}

struct Ids {
    offset: usize,
}

impl Ids {
    fn show(&self, v: usize) -> usize {
        v + self.offset
    }

    fn show_all<'a>(&self, vs: impl IntoIterator<Item = &'a usize>) -> Vec<usize> {
        vs.into_iter().map(|&v| self.show(v)).collect()
    }

    fn read(&self, v: usize) -> Result<usize, Failure> {
        v.checked_sub(self.offset)
            .ok_or_else(|| Failure::usage(anyhow!("id {v} is below the first id {}", self.offset)))
    }

    fn issue(&self, issue: &Issue) -> Issue {
        let s = |v: &usize| self.show(*v);
        match issue {
            Issue::NeighborOutOfRange { vertex, neighbor } => Issue::NeighborOutOfRange {
                vertex: s(vertex),
                neighbor: s(neighbor),
            },
            Issue::SelfLoop { vertex } => Issue::SelfLoop { vertex: s(vertex) },
            Issue::RepeatedNeighbor { vertex, neighbor } => Issue::RepeatedNeighbor {
                vertex: s(vertex),
                neighbor: s(neighbor),
            },
            Issue::Asymmetric { vertex, neighbor } => Issue::Asymmetric {
                vertex: s(vertex),
                neighbor: s(neighbor),
            },
            Issue::CutVertex { vertex } => Issue::CutVertex { vertex: s(vertex) },
            other => other.clone(),
        }
    }
}

fn read_graph(path: &Path) -> Result<EmbeddedCubicGraph, Failure> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::usage(anyhow::Error::new(e).context("reading standard input")))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(anyhow::Error::new(e).context(format!("reading {}", path.display()))))?
    };
    let g = parse_graph(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(g)
}

fn read_planar(path: &Path) -> Result<EmbeddedCubicGraph, Failure> {
    planar(read_graph(path)?, path)
}

fn planar(g: EmbeddedCubicGraph, path: &Path) -> Result<EmbeddedCubicGraph, Failure> {
    g.ensure_valid().with_context(|| format!("{} is not a valid planar cubic embedding", path.display()))?;
    Ok(g)
}

fn read_cubic(path: &Path) -> Result<CubicGraph, Failure> {
    cubic(&read_graph(path)?, path)
}

fn cubic(g: &EmbeddedCubicGraph, path: &Path) -> Result<CubicGraph, Failure> {
    Ok(CubicGraph::new(g.rotations().to_vec()).with_context(|| format!("{} is not a simple cubic graph", path.display()))?)
}

pub fn run(cli: &Cli) -> Result<Output, Failure> {
    if let Some(threads) = cli.global.threads {
        if threads == 0 {
            return Err(Failure::usage(anyhow!("--threads must be positive")));
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .context("building thread pool")?;
        return pool.install(|| dispatch(cli));
    }
    dispatch(cli)
}

fn dispatch(cli: &Cli) -> Result<Output, Failure> {
    let json = cli.global.json;
    let ids = Ids {
        offset: usize::from(cli.global.one_based),
    };
    match &cli.command {
        Command::Validate { file } => emit(&validate(&read_graph(file)?, &ids), json),
        Command::Faces { file } => emit(&faces(&read_planar(file)?, &ids)?, json),
        Command::Rank { file, drop_face } => {
            let drop_face = drop_face.map(|f| ids.read(f)).transpose()?;
            emit(&rank(&read_planar(file)?, drop_face, &ids)?, json)
        }
        Command::Count { file, method } => emit(&count(file, *method)?, json),
        Command::Heawood {
            action: ListAction::List { file },
        } => {
            let vectors = enumerate_heawood_vectors(&read_planar(file)?)?;
            emit(
                &HeawoodListReport {
                    count: vectors.len(),
                    vectors: vectors.into_iter().map(|h| h.spins).collect(),
                },
                json,
            )
        }
        Command::Tait {
            action: TaitAction::List { file, limit },
        } => {
            let g = read_cubic(file)?;
            let colorings = enumerate_tait_oracle(&g, *limit)?;
            emit(
                &TaitListReport {
                    count: colorings.len(),
                    edges: g.edges().iter().map(|e| [ids.show(e.u), ids.show(e.v)]).collect(),
                    colorings: colorings.into_iter().map(|t| t.colors).collect(),
                },
                json,
            )
        }
        Command::Defining { file, mode, max_size } => {
            emit(&defining(&read_planar(file)?, *mode, *max_size, &ids)?, json)
        }
        Command::Zebra { file, set } => {
            let set = set.iter().map(|&v| ids.read(v)).collect::<Result<VertexSet, _>>()?;
            emit(&zebra(&read_planar(file)?, &set, &ids)?, json)
        }
        Command::Gen { family, n } => emit(&generate(*family, *n)?, json),
        Command::VerifyCln { from, to } => emit(&verify_cln(*from, *to)?, json),
        Command::VerifyMobius { from, to } => emit(&verify_mobius(*from, *to)?, json),
    }
}

fn validate(g: &EmbeddedCubicGraph, ids: &Ids) -> ValidateReport {
    let r = g.validate();
    let valid = r.is_valid();
    ValidateReport {
        valid,
        n_vertices: r.n_vertices,
        n_edges: r.n_edges,
        n_faces: r.n_faces,
        bipartite: valid.then(|| g.is_bipartite().is_some()),
        issues: r.issues.iter().map(|i| ids.issue(i)).collect(),
    }
}

fn faces(g: &EmbeddedCubicGraph, ids: &Ids) -> Result<FacesReport, Failure> {
    let sys = HeawoodSystem::build(g)?;
    Ok(FacesReport {
        dropped_face: ids.show(sys.dropped_face),
        faces: sys
            .faces
            .iter()
            .map(|f| FaceEntry {
                id: ids.show(f.id),
                vertices: ids.show_all(&f.vertices),
            })
            .collect(),
    })
}

fn rank(g: &EmbeddedCubicGraph, drop_face: Option<usize>, ids: &Ids) -> Result<RankReport, Failure> {
    let sys = match drop_face {
        Some(f) => HeawoodSystem::build_dropping(g, f)?,
        None => HeawoodSystem::build(g)?,
    };
    let r = sys.rref();
    Ok(RankReport {
        rank: r.rank,
        rows: sys.matrix.rows(),
        cols: sys.matrix.cols(),
        dropped_face: ids.show(sys.dropped_face),
        bipartite: g.is_bipartite().is_some(),
        pivot_columns: ids.show_all(&r.pivot_cols),
        free_columns: ids.show_all(&r.free_cols()),
    })
}

fn count(file: &Path, method: Method) -> Result<CountReport, Failure> {
    let g = read_graph(file)?;
    let heawood = match method {
        Method::Heawood | Method::Both => Some(count_tait_colorings_heawood(&planar(g.clone(), file)?)?),
        Method::Oracle => None,
    };
    let oracle = match method {
        Method::Oracle | Method::Both => Some(count_tait_oracle(&cubic(&g, file)?)),
        Method::Heawood => None,
    };
    let agree = heawood.zip(oracle).map(|(h, o)| h == o);
    Ok(CountReport { heawood, oracle, agree })
}

fn defining(
    g: &EmbeddedCubicGraph,
    mode: Mode,
    max_size: Option<usize>,
    ids: &Ids,
) -> Result<DefiningReport, Failure> {
    let a = DefiningAnalyzer::new(g)?;
    let mode = match mode {
        Mode::Linear => DefiningMode::Linear,
        Mode::Heawood => DefiningMode::Heawood,
    };
    let max_size = max_size.unwrap_or(g.n_vertices()).min(g.n_vertices());
    let free = a.free_variable_defining_set();
    let minimal = a.minimal_defining_sets(mode, max_size)?;
    Ok(DefiningReport {
        mode,
        max_size,
        bipartite: free.bipartite,
        free_variables_defining: a.is_defining(&free.vertices, mode)?,
        free_variables: ids.show_all(&free.vertices),
        minimal_sets: minimal.iter().map(|s| ids.show_all(s)).collect(),
    })
}

fn zebra(g: &EmbeddedCubicGraph, set: &BTreeSet<usize>, ids: &Ids) -> Result<ZebraReport, Failure> {
    let a = DefiningAnalyzer::new(g)?;
    let witness = a.zebra_witness(set)?.map(|w| Witness {
        support: ids.show_all(&w.support),
        combination: w
            .row_coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(row, c)| FaceCoefficient {
                face: ids.show(a.system().row_faces[row]),
                coefficient: c.to_signed(),
            })
            .collect(),
    });
    Ok(ZebraReport {
        set: ids.show_all(set),
        witness,
    })
}

fn generate(family: Family, n: Option<usize>) -> Result<GenReport, Failure> {
    let need_n = || n.ok_or_else(|| Failure::usage(anyhow!("this family needs a size argument")));
    let (family, planar, graph) = match family {
        Family::Cl => {
            let n = need_n()?;
            (format!("cl_{n}"), true, circular_ladder(n)?)
        }
        Family::K4 => ("k4".to_string(), true, k4()),
        Family::Mobius => {
            let n = need_n()?;
            let g = mobius_ladder(n)?;
            (format!("mobius_{n}"), false, EmbeddedCubicGraph::new(g.adjacency().to_vec()))
        }
        Family::Petersen => ("petersen".to_string(), false, EmbeddedCubicGraph::new(petersen().adjacency().to_vec())),
    };
    Ok(GenReport {
        family,
        planar,
        graph: write_graph(&graph),
    })
}

fn check_range(from: usize, to: usize) -> Result<(), Failure> {
    if from > to {
        return Err(Failure::usage(anyhow!("--from {from} exceeds --to {to}")));
    }
    Ok(())
}

fn verify_cln(from: usize, to: usize) -> Result<VerifyReport, Failure> {
    check_range(from, to)?;
    let rows = (from..=to)
        .map(|n| -> Result<LadderRow, Failure> {
            let g = circular_ladder(n)?;
            let formula = cln_formula(n)?;
            let heawood = count_tait_colorings_heawood(&g)?;
            let oracle = if n <= VERIFY_ORACLE_MAX_N {
                Some(count_tait_oracle(&CubicGraph::from_embedded(&g)?))
            } else {
                None
            };
            let matches = heawood as u128 == formula && oracle.is_none_or(|o| o == heawood);
            Ok(LadderRow {
                n,
                formula,
                heawood: Some(heawood),
                oracle,
                matches,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VerifyReport {
        family: "circular ladder".into(),
        all_match: rows.iter().all(|r| r.matches),
        rows,
    })
}

fn verify_mobius(from: usize, to: usize) -> Result<VerifyReport, Failure> {
    check_range(from, to)?;
    if to > 16 {
        return Err(Failure::usage(anyhow!("--to {to} is above 16; the exhaustive count grows as 2^n")));
    }
    let rows = (from..=to)
        .map(|n| -> Result<LadderRow, Failure> {
            let formula = mobius_formula(n)?;
            let oracle = count_tait_oracle(&mobius_ladder(n)?);
            Ok(LadderRow {
                n,
                formula,
                heawood: None,
                oracle: Some(oracle),
                matches: oracle as u128 == formula,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VerifyReport {
        family: "mobius ladder".into(),
        all_match: rows.iter().all(|r| r.matches),
        rows,
    })
}
