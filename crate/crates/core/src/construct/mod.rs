//! The recursive graphs `G^(m)` whose clique number survives every
//! `k`-partition of the vertex set.
//!
//! `G^(1)` is a single vertex. For `m >= 2` take a triangle-free skeleton `K`
//! with chromatic number `k + 1`, orient it from vertex 0
//! ([`orient_from_root`]), and give every skeleton vertex `i` a block `H_i`:
//! `H_0` is the lone vertex `x_0`, and `H_i` (for `i >= 1`) is
//! `h_i = ∏_{i' ∈ A_i} |V(H_{i'})|` disjoint copies of `G^(m-1)`. Each tuple
//! `(w_1, …, w_s)` of one vertex from every in-neighbor block selects one
//! copy of `H_i` through a mixed-radix index, and every `w_r` is joined to
//! the whole of that copy.
//!
//! Vertex layout of the flat graph: blocks in skeleton-index order, copies
//! in ascending order inside a block, child vertices in ascending order
//! inside a copy. `x_0` is vertex 0.

mod check;
mod witness;

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::clique::clique_number;
use crate::coloring::chromatic_number;
use crate::graph::triangle_free_chromatic;
use crate::orientation::{orient_from_root, validate_layers, RootedDag};
use crate::{Error, Graph, Limits, Result};

pub use check::{
    check_robustness, check_zhang_inequality, partition_attains, sampled_assignment, CheckMode,
    Counterexample, Verdict,
};
pub use witness::Witness;

/// Position of a vertex of `G^(m)`: skeleton block, copy inside the block
/// (1-based), and vertex index inside that copy of `G^(m-1)`.
///
/// `x_0` (and the single vertex of `G^(1)`) is `host = 0, copy = 1,
/// inner = None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexLabel {
    pub host: usize,
    pub copy: usize,
    pub inner: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredGraph {
    m: usize,
    k: usize,
    skeleton: RootedDag,
    graph: Graph,
    labels: Vec<VertexLabel>,
    offsets: Vec<usize>,
    copies: Vec<usize>,
    child: Option<Box<LayeredGraph>>,
}

/// Builds `G^(m)` for `k`-partitions on the iterated-Mycielskian skeleton
/// with chromatic number `k + 1`, oriented from vertex 0.
pub fn build(m: usize, k: usize, limits: &Limits) -> Result<LayeredGraph> {
    check_orders(m, k)?;
    let skeleton = default_skeleton(k)?;
    build_on(m, k, skeleton, limits)
}

/// Builds on a caller-supplied skeleton. The skeleton's base graph must be
/// triangle-free with chromatic number exactly `k + 1`, and its layers must
/// validate.
pub fn build_with_skeleton(
    m: usize,
    k: usize,
    skeleton: RootedDag,
    limits: &Limits,
) -> Result<LayeredGraph> {
    check_orders(m, k)?;
    check_skeleton(k, &skeleton, limits)?;
    build_on(m, k, skeleton, limits)
}

fn check_orders(m: usize, k: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    if k < 2 {
        return Err(Error::Precondition("k must be at least 2".into()));
    }
    Ok(())
}

/// The skeleton `build` uses for arity `k`.
pub fn default_skeleton(k: usize) -> Result<RootedDag> {
    let base = triangle_free_chromatic(k + 1)?;
    orient_from_root(&base, 0)
}

pub(crate) fn check_skeleton(k: usize, skeleton: &RootedDag, limits: &Limits) -> Result<()> {
    if let Err(v) = validate_layers(skeleton) {
        return Err(Error::InvalidOrientation(format!("{v}")));
    }
    if skeleton.root() != 0 {
        return Err(Error::Precondition("skeleton must be rooted at vertex 0".into()));
    }
    let base = skeleton.base();
    if clique_number(base).0 > 2 {
        return Err(Error::Precondition("skeleton contains a triangle".into()));
    }
    let chi = chromatic_number(base, limits.chromatic_cap)?;
    if chi != k + 1 {
        return Err(Error::Precondition(format!(
            "skeleton has chromatic number {chi}, expected {}",
            k + 1
        )));
    }
    Ok(())
}

/// Block sizes `|V(H_i)|` for a given child size, in skeleton-index order.
fn block_sizes(skeleton: &RootedDag, child: &BigUint) -> Vec<BigUint> {
    let mut size = vec![BigUint::from(0u8); skeleton.n()];
    size[skeleton.root()] = BigUint::one();
    for layer in &skeleton.layers()[1..] {
        for &i in layer {
            let h: BigUint = skeleton.in_set(i).iter().map(|&p| &size[p]).product();
            size[i] = h * child;
        }
    }
    size
}

/// `|V(G^(1))|, …, |V(G^(m))|` for the given skeleton, without building.
pub fn planned_sizes(skeleton: &RootedDag, m: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(m);
    let mut size = BigUint::one();
    out.push(size.clone());
    for _ in 2..=m {
        size = block_sizes(skeleton, &size).into_iter().sum();
        out.push(size.clone());
    }
    out
}

pub(crate) fn build_on(
    m: usize,
    k: usize,
    skeleton: RootedDag,
    limits: &Limits,
) -> Result<LayeredGraph> {
    let planned = planned_sizes(&skeleton, m);
    let total = &planned[m - 1];
    if *total > BigUint::from(limits.build_budget) {
        return Err(Error::cap("G^(m) vertex count", total, limits.build_budget));
    }
    let mut current = LayeredGraph::single_vertex(k, skeleton.clone());
    for level in 2..=m {
        current = LayeredGraph::extend(level, k, skeleton.clone(), current);
    }
    Ok(current)
}

impl LayeredGraph {
    fn single_vertex(k: usize, skeleton: RootedDag) -> Self {
        let n = skeleton.n();
        let mut copies = vec![0; n];
        copies[0] = 1;
        LayeredGraph {
            m: 1,
            k,
            skeleton,
            graph: Graph::new(1),
            labels: vec![VertexLabel {
                host: 0,
                copy: 1,
                inner: None,
            }],
            offsets: vec![0; n],
            copies,
            child: None,
        }
    }

    fn extend(m: usize, k: usize, skeleton: RootedDag, child: LayeredGraph) -> Self {
        let c = child.graph.n();
        let n_k = skeleton.n();
        let sizes: Vec<usize> = block_sizes(&skeleton, &BigUint::from(c))
            .iter()
            .map(|s| s.to_usize().expect("size checked against budget"))
            .collect();
        let mut copies = vec![1; n_k];
        let mut offsets = vec![0; n_k];
        let mut next = 0;
        for i in 0..n_k {
            offsets[i] = next;
            next += sizes[i];
            if i != skeleton.root() {
                copies[i] = sizes[i] / c;
            }
        }
        let total = next;

        let mut labels = Vec::with_capacity(total);
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); total];
        for i in 0..n_k {
            if i == skeleton.root() {
                labels.push(VertexLabel {
                    host: i,
                    copy: 1,
                    inner: None,
                });
                continue;
            }
            for g in 0..copies[i] {
                let base = offsets[i] + g * c;
                for a in 0..c {
                    labels.push(VertexLabel {
                        host: i,
                        copy: g + 1,
                        inner: Some(a),
                    });
                    adj[base + a].extend(child.graph.neighbors(a).iter().map(|&b| base + b));
                }
            }
            // join every predecessor tuple to the copy it indexes
            let preds = skeleton.in_set(i);
            let radices: Vec<usize> = preds.iter().map(|&p| sizes[p]).collect();
            let mut tuple = vec![0usize; preds.len()];
            for g in 0..copies[i] {
                let base = offsets[i] + g * c;
                for (r, &p) in preds.iter().enumerate() {
                    let w = offsets[p] + tuple[r];
                    for a in 0..c {
                        adj[w].push(base + a);
                        adj[base + a].push(w);
                    }
                }
                // mixed-radix increment, last coordinate fastest
                for r in (0..tuple.len()).rev() {
                    tuple[r] += 1;
                    if tuple[r] < radices[r] {
                        break;
                    }
                    tuple[r] = 0;
                }
            }
        }
        for l in adj.iter_mut() {
            l.sort_unstable();
        }
        LayeredGraph {
            m,
            k,
            skeleton,
            graph: Graph::from_adjacency_unchecked(adj),
            labels,
            offsets,
            copies,
            child: Some(Box::new(child)),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn skeleton(&self) -> &RootedDag {
        &self.skeleton
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// `G^(m-1)`; `None` when `m = 1`.
    pub fn child(&self) -> Option<&LayeredGraph> {
        self.child.as_deref()
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> VertexLabel {
        self.labels[v]
    }

    /// Inverse of [`label`](Self::label).
    pub fn vertex_of(&self, label: &VertexLabel) -> Option<usize> {
        let i = label.host;
        if i >= self.copies.len() || label.copy == 0 || label.copy > self.copies[i] {
            return None;
        }
        match (label.inner, &self.child) {
            (None, _) if i == self.skeleton.root() && label.copy == 1 => Some(self.offsets[i]),
            (Some(a), Some(child)) if i != self.skeleton.root() && a < child.graph.n() => {
                Some(self.offsets[i] + (label.copy - 1) * child.graph.n() + a)
            }
            _ => None,
        }
    }

    /// `h_i`, the number of copies of `G^(m-1)` in block `i` (1 for the root).
    pub fn copies(&self, host: usize) -> usize {
        self.copies[host]
    }

    /// Vertex range of block `H_i` in the flat graph.
    pub fn block_range(&self, host: usize) -> core::ops::Range<usize> {
        let size = if host == self.skeleton.root() {
            1
        } else {
            self.copies[host] * self.child_size()
        };
        self.offsets[host]..self.offsets[host] + size
    }

    /// Vertex range of copy `copy` (1-based) of `G^(m-1)` inside block `host`.
    pub fn copy_range(&self, host: usize, copy: usize) -> core::ops::Range<usize> {
        assert!(host != self.skeleton.root() && copy >= 1 && copy <= self.copies[host]);
        let c = self.child_size();
        let start = self.offsets[host] + (copy - 1) * c;
        start..start + c
    }

    fn child_size(&self) -> usize {
        self.child.as_ref().map_or(1, |c| c.graph.n())
    }

    /// The copy of block `host` selected by one vertex from each in-neighbor
    /// block. `tuple[r]` is a vertex position inside block `A_host[r]`
    /// (ascending order of `A_host`); the result is 1-based.
    pub fn psi(&self, host: usize, tuple: &[usize]) -> Option<usize> {
        let preds = self.skeleton.in_set(host);
        if self.m == 1 || host == self.skeleton.root() || tuple.len() != preds.len() {
            return None;
        }
        let mut index = 0usize;
        for (&w, &p) in tuple.iter().zip(preds) {
            let radix = self.block_range(p).len();
            if w >= radix {
                return None;
            }
            index = index * radix + w;
        }
        Some(index + 1)
    }

    /// Checks `|V| = 1 + Σ_{i>=1} h_i·|V(G^(m-1))|` with `h_i` recomputed
    /// from the in-sets.
    pub fn size_identity_holds(&self) -> bool {
        if self.m == 1 {
            return self.graph.n() == 1;
        }
        let c = self.child_size();
        let mut block = vec![0usize; self.skeleton.n()];
        block[self.skeleton.root()] = 1;
        let mut total = 1;
        for layer in &self.skeleton.layers()[1..] {
            for &i in layer {
                let h: usize = self.skeleton.in_set(i).iter().map(|&p| block[p]).product();
                if h != self.copies[i] {
                    return false;
                }
                block[i] = h * c;
                total += h * c;
            }
        }
        total == self.graph.n()
    }
}
