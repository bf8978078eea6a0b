//! Splitting off an independent set that meets every longest path.
//!
//! List the longest paths `L_1, …, L_t` in canonical order and start with
//! `U = {first vertex of L_1}`. While some `L_i` avoids `U`, add the first
//! vertex of the least such `L_i`. A start vertex added this way has no
//! neighbor in `U`: a neighbor `u ∈ U` would extend `L_i` past its first
//! vertex into a longer path unless `u` were already on `L_i`, and `L_i`
//! avoids `U`. So `U` stays independent, and removing it breaks every
//! longest path.

use crate::paths::{longest_path_length, longest_paths};
use crate::{Error, Graph, Result, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpPartition {
    /// Vertices kept; the complement of `v2`.
    pub v1: VertexSet,
    /// The independent set of chosen start vertices.
    pub v2: VertexSet,
    /// Longest path length (edges) of the whole graph.
    pub l_before: usize,
    /// Longest path length of the graph induced on `v1`.
    pub l_after: usize,
    /// Number of longest paths of the whole graph.
    pub paths: usize,
}

/// Runs the greedy above. `g` needs an edge and at most `path_cap`
/// vertices. The result is checked: `v2` independent, every longest path
/// meets `v2`, and `l_after < l_before`.
pub fn lp_partition(g: &Graph, path_cap: usize) -> Result<LpPartition> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let lp = longest_paths(g, path_cap)?;
    let mut v2 = VertexSet::new(g.n());
    while let Some(path) = lp.paths.iter().find(|p| !p.iter().any(|&v| v2.contains(v))) {
        v2.insert(path[0]);
    }
    if !g.is_independent(&v2) {
        return Err(Error::Invariant("chosen start vertices are not independent".into()));
    }
    let v1 = v2.complement();
    let (rest, _) = g.induced_subgraph(&v1)?;
    let l_after = longest_path_length(&rest, path_cap)?;
    if l_after >= lp.length {
        return Err(Error::Invariant("longest path did not get shorter".into()));
    }
    Ok(LpPartition {
        v1,
        v2,
        l_before: lp.length,
        l_after,
        paths: lp.paths.len(),
    })
}
