//! Defining sets of vertices and zebra (dependence) witnesses.
//!
//! A vertex set `S` is *linear-defining* when the values on `S` determine a solution of the
//! face system, i.e. the columns of the complement are independent. It is
//! *Heawood-defining* when the restriction of Heawood vectors to `S` is injective. A zebra
//! witness for `T` is a nonzero combination of face rows whose support lies inside `T`.

use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{EmbeddedCubicGraph, VertexId};
use crate::heawood::{enumerate_from_system, HeawoodSystem, HeawoodVector};
use crate::linalg::Gf3;
use crate::{Error, Result};

pub type VertexSet = BTreeSet<VertexId>;

/// Subset searches refuse graphs with more vertices than this.
pub const MAX_SUBSET_SEARCH_VERTICES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZebraWitness {
    /// One coefficient per matrix row of the system.
    pub row_coefficients: Vec<Gf3>,
    pub support: VertexSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DefiningMode {
    Linear,
    Heawood,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeVariableSet {
    pub vertices: VertexSet,
    /// Bipartite graphs have one more free variable than the non-bipartite count `n - 1`.
    pub bipartite: bool,
}

/// Vertices whose column in `coeffsᵀ · matrix` is nonzero.
pub fn combination_support(sys: &HeawoodSystem, coeffs: &[Gf3]) -> Result<VertexSet> {
    let row = sys.matrix.combine_rows(coeffs)?;
    Ok(row
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(v, _)| v)
        .collect())
}

/// Face system of one graph plus its lazily enumerated Heawood vectors.
pub struct DefiningAnalyzer {
    system: HeawoodSystem,
    bipartite: bool,
    vectors: OnceLock<Vec<HeawoodVector>>,
}

impl DefiningAnalyzer {
    pub fn new(g: &EmbeddedCubicGraph) -> Result<Self> {
        Ok(DefiningAnalyzer {
            system: HeawoodSystem::build(g)?,
            bipartite: g.is_bipartite().is_some(),
            vectors: OnceLock::new(),
        })
    }

    pub fn system(&self) -> &HeawoodSystem {
        &self.system
    }

    pub fn n_vertices(&self) -> usize {
        self.system.n_vertices()
    }

    pub fn vectors(&self) -> &[HeawoodVector] {
        self.vectors
            .get_or_init(|| enumerate_from_system(&self.system).expect("subset-search sizes enumerate"))
    }

    fn check_members(&self, set: &VertexSet) -> Result<()> {
        match set.iter().find(|&&v| v >= self.n_vertices()) {
            Some(&v) => Err(Error::UnknownVertex(v)),
            None => Ok(()),
        }
    }

    fn complement(&self, set: &VertexSet) -> Vec<VertexId> {
        (0..self.n_vertices()).filter(|v| !set.contains(v)).collect()
    }

    /// Some nonzero row combination whose support lies in `t`, preferring one with nonempty
    /// support. Minimality of the support is not attempted.
    pub fn zebra_witness(&self, t: &VertexSet) -> Result<Option<ZebraWitness>> {
        self.check_members(t)?;
        let outside = self.system.matrix.select_columns(&self.complement(t))?;
        let basis = outside.transpose().nullspace_basis();
        let mut best: Option<ZebraWitness> = None;
        for y in basis {
            let support = combination_support(&self.system, &y)?;
            let nonempty = !support.is_empty();
            if best.is_none() || nonempty {
                best = Some(ZebraWitness {
                    row_coefficients: y,
                    support,
                });
            }
            if nonempty {
                break;
            }
        }
        Ok(best)
    }

    pub fn is_linear_defining(&self, s: &VertexSet) -> Result<bool> {
        self.check_members(s)?;
        let rest = self.complement(s);
        Ok(self.system.matrix.column_submatrix_rank(&rest)? == rest.len())
    }

    pub fn is_heawood_defining(&self, s: &VertexSet) -> Result<bool> {
        self.check_members(s)?;
        let vectors = self.vectors();
        let restricted: HashSet<Vec<_>> = vectors
            .iter()
            .map(|h| s.iter().map(|&v| h.spins[v]).collect())
            .collect();
        Ok(restricted.len() == vectors.len())
    }

    pub fn is_defining(&self, s: &VertexSet, mode: DefiningMode) -> Result<bool> {
        match mode {
            DefiningMode::Linear => self.is_linear_defining(s),
            DefiningMode::Heawood => self.is_heawood_defining(s),
        }
    }

    /// Non-pivot columns of the reduced system.
    pub fn free_variable_defining_set(&self) -> FreeVariableSet {
        FreeVariableSet {
            vertices: self.system.rref().free_cols().into_iter().collect(),
            bipartite: self.bipartite,
        }
    }

    /// Every inclusion-minimal defining set with at most `max_size` vertices, ordered by size
    /// and then lexicographically.
    pub fn minimal_defining_sets(&self, mode: DefiningMode, max_size: usize) -> Result<Vec<VertexSet>> {
        let nv = self.n_vertices();
        if nv > MAX_SUBSET_SEARCH_VERTICES {
            return Err(Error::LimitExceeded {
                what: "subset-search vertex",
                limit: MAX_SUBSET_SEARCH_VERTICES,
            });
        }
        if mode == DefiningMode::Heawood {
            self.vectors();
        }
        let max_size = max_size.min(nv);
        let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); nv + 1];
        for mask in 0u32..1 << nv {
            let k = mask.count_ones() as usize;
            if k <= max_size {
                by_size[k].push(mask);
            }
        }
        let mut found: Vec<u32> = Vec::new();
        let mut out = Vec::new();
        for level in by_size.into_iter().take(max_size + 1) {
            // supersets of a smaller minimal set are defining but not minimal; any other
            // defining set at this level has no defining proper subset
            let candidates: Vec<u32> = level
                .into_iter()
                .filter(|&m| !found.iter().any(|&f| m & f == f))
                .collect();
            let hits: Vec<u32> = candidates
                .into_par_iter()
                .map(|m| self.is_defining(&mask_to_set(m), mode).map(|d| (m, d)))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .filter_map(|(m, d)| d.then_some(m))
                .collect();
            let mut sets: Vec<VertexSet> = hits.iter().map(|&m| mask_to_set(m)).collect();
            sets.sort();
            found.extend(hits);
            out.extend(sets);
        }
        Ok(out)
    }
}

fn mask_to_set(mask: u32) -> VertexSet {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}
