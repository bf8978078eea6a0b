//! Rooted acyclic orientations and their layer structure.
//!
//! [`orient_from_root`] directs every edge of a connected graph from the
//! endpoint a depth-first search discovers first to the one it discovers
//! later. Discovery order is a topological order, so the result is acyclic,
//! and the DFS tree arcs make every vertex reachable from the root.
//!
//! For each vertex `i` the dag records `l_i`, the length of the *longest*
//! directed path from the root; the layers `D_j = {i : l_i = j}`; and the
//! in-set `A_i` of tails of arcs into `i`.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Graph, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedDag {
    base: Graph,
    root: usize,
    out: Vec<Vec<usize>>,
    in_sets: Vec<Vec<usize>>,
    level: Vec<usize>,
    layers: Vec<Vec<usize>>,
}

/// DFS orientation from `root`, neighbors visited in ascending order.
pub fn orient_from_root(g: &Graph, root: usize) -> Result<RootedDag> {
    let n = g.n();
    if root >= n {
        return Err(Error::VertexOutOfRange { vertex: root, n });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut disc = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![(root, 0usize)];
    disc[root] = 0;
    order.push(root);
    while let Some((v, next)) = stack.last_mut() {
        let nbrs = g.neighbors(*v);
        match nbrs[*next..].iter().position(|&u| disc[u] == usize::MAX) {
            Some(off) => {
                let u = nbrs[*next + off];
                *next += off + 1;
                disc[u] = order.len();
                order.push(u);
                stack.push((u, 0));
            }
            None => {
                stack.pop();
            }
        }
    }
    let arcs: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| if disc[u] < disc[v] { (u, v) } else { (v, u) })
        .collect();
    let (out, in_sets) = split_arcs(n, &arcs);
    let mut level = vec![0; n];
    for &v in &order[1..] {
        level[v] = 1 + in_sets[v].iter().map(|&p| level[p]).max().expect("non-root has a tail");
    }
    Ok(RootedDag::assemble(g.clone(), root, out, in_sets, level))
}

fn split_arcs(n: usize, arcs: &[(usize, usize)]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut out = vec![Vec::new(); n];
    let mut ins = vec![Vec::new(); n];
    for &(u, v) in arcs {
        out[u].push(v);
        ins[v].push(u);
    }
    for l in out.iter_mut().chain(ins.iter_mut()) {
        l.sort_unstable();
    }
    (out, ins)
}

fn check_arcs(base: &Graph, arcs: &[(usize, usize)]) -> Result<()> {
    let n = base.n();
    let mut seen = alloc::collections::BTreeSet::new();
    for &(u, v) in arcs {
        if u >= n || v >= n {
            return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
        }
        if !base.has_edge(u, v) {
            return Err(Error::InvalidOrientation(format!("arc {u}->{v} is not a base edge")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::InvalidOrientation(format!("edge ({u}, {v}) oriented twice")));
        }
    }
    if seen.len() != base.edge_count() {
        return Err(Error::InvalidOrientation(format!(
            "{} of {} edges oriented",
            seen.len(),
            base.edge_count()
        )));
    }
    Ok(())
}

impl RootedDag {
    fn assemble(
        base: Graph,
        root: usize,
        out: Vec<Vec<usize>>,
        in_sets: Vec<Vec<usize>>,
        level: Vec<usize>,
    ) -> Self {
        let top = level.iter().copied().max().unwrap_or(0);
        let mut layers = vec![Vec::new(); top + 1];
        for (v, &l) in level.iter().enumerate() {
            layers[l].push(v);
        }
        RootedDag {
            base,
            root,
            out,
            in_sets,
            level,
            layers,
        }
    }

    /// Builds a dag from an explicit orientation of `base`. Each base edge
    /// must appear exactly once; the arcs must be acyclic and reach every
    /// vertex from `root`. Levels are computed, not supplied.
    pub fn from_arcs(base: Graph, root: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let n = base.n();
        if root >= n {
            return Err(Error::VertexOutOfRange { vertex: root, n });
        }
        check_arcs(&base, arcs)?;
        let (out, in_sets) = split_arcs(n, arcs);
        let topo = topological_order(&out, &in_sets)
            .ok_or_else(|| Error::InvalidOrientation("arcs contain a directed cycle".into()))?;
        let mut level: Vec<Option<usize>> = vec![None; n];
        level[root] = Some(0);
        for &v in &topo {
            if v == root {
                if !in_sets[v].is_empty() {
                    return Err(Error::InvalidOrientation("root has an incoming arc".into()));
                }
                continue;
            }
            let mut best = None;
            for &p in &in_sets[v] {
                match level[p] {
                    Some(l) => best = Some(best.map_or(l, |b: usize| b.max(l))),
                    None => {
                        return Err(Error::InvalidOrientation(format!(
                            "vertex {p} is not reachable from the root"
                        )))
                    }
                }
            }
            match best {
                Some(b) => level[v] = Some(b + 1),
                None => {
                    return Err(Error::InvalidOrientation(format!(
                        "vertex {v} is not reachable from the root"
                    )))
                }
            }
        }
        let level = level.into_iter().map(|l| l.expect("every vertex visited")).collect();
        Ok(Self::assemble(base, root, out, in_sets, level))
    }

    /// Builds a dag with caller-supplied levels and no consistency checks
    /// beyond the arcs orienting `base`. Meant for feeding
    /// [`validate_layers`] objects that may be corrupted.
    pub fn with_levels_unchecked(
        base: Graph,
        root: usize,
        arcs: &[(usize, usize)],
        level: Vec<usize>,
    ) -> Result<Self> {
        let n = base.n();
        if root >= n {
            return Err(Error::VertexOutOfRange { vertex: root, n });
        }
        if level.len() != n {
            return Err(Error::InvalidOrientation(format!(
                "{} levels for {n} vertices",
                level.len()
            )));
        }
        check_arcs(&base, arcs)?;
        let (out, in_sets) = split_arcs(n, arcs);
        Ok(Self::assemble(base, root, out, in_sets, level))
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    /// `l_v`: longest directed path length from the root to `v`.
    pub fn level(&self, v: usize) -> usize {
        self.level[v]
    }

    pub fn levels(&self) -> &[usize] {
        &self.level
    }

    /// `l = max_i l_i`.
    pub fn depth(&self) -> usize {
        self.layers.len() - 1
    }

    /// `D_0, …, D_l`, each sorted.
    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    /// `A_v`: tails of arcs into `v`, ascending.
    pub fn in_set(&self, v: usize) -> &[usize] {
        &self.in_sets[v]
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// Arcs `(tail, head)` sorted by tail, then head.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().map(move |&v| (u, v)))
    }
}

fn topological_order(out: &[Vec<usize>], ins: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = out.len();
    let mut indeg: Vec<usize> = ins.iter().map(Vec::len).collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &u in &out[v] {
            indeg[u] -= 1;
            if indeg[u] == 0 {
                queue.push_back(u);
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// The first structural property a dag fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LayerViolation {
    /// `pred ∈ A_vertex` but `pred` is not in an earlier layer.
    InSetNotEarlier { vertex: usize, pred: usize },
    /// Layer 0 is not exactly `{root}`.
    RootLayer,
    /// `D_layer` is empty for some `1 <= layer <= l`.
    EmptyLayer { layer: usize },
    Cycle,
    Unreachable { vertex: usize },
}

impl fmt::Display for LayerViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LayerViolation::InSetNotEarlier { vertex, pred } => {
                write!(f, "in-set of {vertex} contains {pred}, which is not in an earlier layer")
            }
            LayerViolation::RootLayer => f.write_str("layer 0 is not exactly the root"),
            LayerViolation::EmptyLayer { layer } => write!(f, "layer {layer} is empty"),
            LayerViolation::Cycle => f.write_str("arcs contain a directed cycle"),
            LayerViolation::Unreachable { vertex } => {
                write!(f, "vertex {vertex} is not reachable from the root")
            }
        }
    }
}

/// Checks, in order: (a) every in-set lies in strictly earlier layers,
/// (b) layer 0 is the root and no layer up to `l` is empty,
/// (c) acyclicity, (d) reachability from the root.
pub fn validate_layers(d: &RootedDag) -> core::result::Result<(), LayerViolation> {
    for v in 0..d.n() {
        if d.level[v] >= 1 {
            if let Some(&p) = d.in_sets[v].iter().find(|&&p| d.level[p] >= d.level[v]) {
                return Err(LayerViolation::InSetNotEarlier { vertex: v, pred: p });
            }
        }
    }
    if d.layers[0] != [d.root] {
        return Err(LayerViolation::RootLayer);
    }
    if let Some(j) = (1..d.layers.len()).find(|&j| d.layers[j].is_empty()) {
        return Err(LayerViolation::EmptyLayer { layer: j });
    }
    if topological_order(&d.out, &d.in_sets).is_none() {
        return Err(LayerViolation::Cycle);
    }
    let mut seen = vec![false; d.n()];
    let mut stack = vec![d.root];
    seen[d.root] = true;
    while let Some(v) = stack.pop() {
        for &u in &d.out[v] {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(LayerViolation::Unreachable { vertex: v });
    }
    Ok(())
}
