//! Finite simple undirected graphs on dense vertex indices `0..n`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result, VertexSet};

/// A finite simple graph. Vertices are `0..n`; adjacency lists are sorted
/// and free of loops and duplicates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: usize,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: 0,
        }
    }

    /// Builds a graph from an edge list. Loops, duplicates (in either
    /// orientation) and out-of-range endpoints are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut count = 0;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            count += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj, edges: count })
    }

    /// Adjacency lists that are already symmetric, sorted and simple.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<Vec<usize>>) -> Self {
        let twice: usize = adj.iter().map(Vec::len).sum();
        debug_assert!(adj.iter().enumerate().all(|(u, l)| {
            l.windows(2).all(|w| w[0] < w[1]) && l.iter().all(|&v| v != u && adj[v].binary_search(&u).is_ok())
        }));
        Graph {
            adj,
            edges: twice / 2,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect();
        Self::from_adjacency_unchecked(adj)
    }

    /// The cycle `0-1-…-(n-1)-0`; `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are simple")
    }

    /// The path `0-1-…-(n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are simple")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Neighborhood of `v` as a bitset.
    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        let mut s = VertexSet::new(self.n());
        for &u in &self.adj[v] {
            s.insert(u);
        }
        s
    }

    fn check_members(&self, s: &VertexSet) -> Result<()> {
        match s.iter().find(|&v| v >= self.n()) {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n() }),
            None => Ok(()),
        }
    }

    /// The subgraph induced by `s`, relabeled `0..|s|` by ascending original
    /// index, together with the map from new to original indices.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_members(s)?;
        let back: Vec<usize> = s.iter().collect();
        let mut fwd = vec![usize::MAX; self.n()];
        for (i, &v) in back.iter().enumerate() {
            fwd[v] = i;
        }
        let adj = back
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&u| fwd[u] != usize::MAX)
                    .map(|&u| fwd[u])
                    .collect()
            })
            .collect();
        Ok((Self::from_adjacency_unchecked(adj), back))
    }

    /// True iff no edge has both endpoints in `s`.
    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter()
            .filter(|&v| v < self.n())
            .all(|v| self.adj[v].iter().all(|&u| !s.contains(u)))
    }

    /// True iff the listed vertices are distinct and pairwise adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            u < self.n() && vertices[i + 1..].iter().all(|&v| self.has_edge(u, v))
        })
    }

    /// True for the empty graph and for every graph with one component.
    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.n()
    }

    /// The Mycielskian: originals `0..n`, shadows `n..2n` (shadow `n+i` is
    /// joined to the neighbors of `i`), apex `2n` joined to every shadow.
    pub fn mycielskian(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![Vec::new(); 2 * n + 1];
        for v in 0..n {
            for &u in &self.adj[v] {
                adj[v].push(u);
                adj[v].push(n + u);
                adj[n + v].push(u);
            }
            adj[n + v].push(2 * n);
            adj[2 * n].push(n + v);
        }
        for l in adj.iter_mut() {
            l.sort_unstable();
        }
        Self::from_adjacency_unchecked(adj)
    }
}

/// The `(k-2)`-fold Mycielskian of `K2`: triangle-free with chromatic number `k`.
pub fn triangle_free_chromatic(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::Precondition(format!("chromatic number {k} < 2")));
    }
    let mut g = Graph::complete(2);
    for _ in 2..k {
        g = g.mycielskian();
    }
    Ok(g)
}
