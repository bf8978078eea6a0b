//! Exact maximum clique.
//!
//! Vertices are processed in a degeneracy order; for each vertex `v` the
//! search runs on the neighbors of `v` that come later in the order, which
//! keeps every local problem no larger than the degeneracy. The local search
//! is branch-and-bound with a greedy-coloring bound (Tomita's MCQ).

use alloc::vec;
use alloc::vec::Vec;

use crate::{Graph, VertexSet};

/// Clique number of `g` and one maximum clique (sorted). The empty graph has
/// clique number 0 and an empty witness.
pub fn clique_number(g: &Graph) -> (usize, Vec<usize>) {
    search(g, None, usize::MAX)
}

/// Clique number of the subgraph induced by `s`, with a witness in the
/// original vertex indices. Members of `s` outside the graph are ignored.
pub fn clique_number_within(g: &Graph, s: &VertexSet) -> (usize, Vec<usize>) {
    search(g, Some(s), usize::MAX)
}

/// True iff the subgraph induced by `s` (or all of `g`) has a clique on
/// `size` vertices. Stops as soon as one is found.
pub fn has_clique_of_size(g: &Graph, s: Option<&VertexSet>, size: usize) -> bool {
    size == 0 || search(g, s, size).0 >= size
}

fn search(g: &Graph, s: Option<&VertexSet>, target: usize) -> (usize, Vec<usize>) {
    let active: Vec<bool> = (0..g.n()).map(|v| s.map_or(true, |s| s.contains(v))).collect();
    let order = degeneracy_order(g, &active);
    if order.is_empty() {
        return (0, Vec::new());
    }
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }

    let mut best = 1;
    let mut best_clique = vec![order[0]];
    let mut local_index = vec![usize::MAX; g.n()];

    for (i, &v) in order.iter().enumerate() {
        if best >= target {
            break;
        }
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| active[u] && pos[u] > i)
            .collect();
        if later.len() < best {
            continue;
        }
        for (j, &u) in later.iter().enumerate() {
            local_index[u] = j;
        }
        let words = later.len().div_ceil(64);
        let mut adj = vec![0u64; later.len() * words];
        for (j, &u) in later.iter().enumerate() {
            for &x in g.neighbors(u) {
                let k = local_index[x];
                if k != usize::MAX && later.get(k) == Some(&x) {
                    adj[j * words + k / 64] |= 1 << (k % 64);
                }
            }
        }
        let mut local = Local {
            words,
            adj: &adj,
            current: Vec::new(),
            best: best - 1,
            best_clique: None,
            target: target.saturating_sub(1),
        };
        let mut cand = vec![0u64; words];
        for k in 0..later.len() {
            cand[k / 64] |= 1 << (k % 64);
        }
        local.expand(cand);
        if let Some(found) = local.best_clique {
            best = found.len() + 1;
            best_clique = found.iter().map(|&k| later[k]).collect();
            best_clique.push(v);
        }
        for &u in &later {
            local_index[u] = usize::MAX;
        }
    }
    best_clique.sort_unstable();
    (best, best_clique)
}

/// Smallest-last ordering of the active vertices (ties broken by index).
fn degeneracy_order(g: &Graph, active: &[bool]) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n)
        .map(|v| {
            if active[v] {
                g.neighbors(v).iter().filter(|&&u| active[u]).count()
            } else {
                0
            }
        })
        .collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); max_deg + 1];
    for v in (0..n).rev() {
        if active[v] {
            buckets[deg[v]].push(v);
        }
    }
    let mut removed = vec![false; n];
    let total = active.iter().filter(|&&a| a).count();
    let mut order = Vec::with_capacity(total);
    let mut low = 0;
    while order.len() < total {
        low = low.min(max_deg);
        while buckets[low].is_empty() {
            low += 1;
        }
        let v = buckets[low].pop().expect("nonempty bucket");
        if removed[v] || deg[v] != low {
            continue;
        }
        removed[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if active[u] && !removed[u] {
                deg[u] -= 1;
                buckets[deg[u]].push(u);
                low = low.min(deg[u]);
            }
        }
    }
    order
}

struct Local<'a> {
    words: usize,
    adj: &'a [u64],
    current: Vec<usize>,
    best: usize,
    best_clique: Option<Vec<usize>>,
    target: usize,
}

impl Local<'_> {
    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    fn expand(&mut self, mut cand: Vec<u64>) {
        let (order, colors) = self.color_sort(&cand);
        for idx in (0..order.len()).rev() {
            if self.current.len() + colors[idx] <= self.best || self.best >= self.target {
                return;
            }
            let u = order[idx];
            self.current.push(u);
            let next: Vec<u64> = cand.iter().zip(self.row(u)).map(|(a, b)| a & b).collect();
            if next.iter().all(|&w| w == 0) {
                if self.current.len() > self.best {
                    self.best = self.current.len();
                    self.best_clique = Some(self.current.clone());
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            cand[u / 64] &= !(1 << (u % 64));
        }
    }

    /// Greedy sequential coloring; returns vertices ordered by color class
    /// and the (1-based) color of each.
    fn color_sort(&self, cand: &[u64]) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = cand.to_vec();
        let mut order = Vec::new();
        let mut colors = Vec::new();
        let mut color = 0;
        while uncolored.iter().any(|&w| w != 0) {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(u) = first_bit(&q) {
                q[u / 64] &= !(1 << (u % 64));
                uncolored[u / 64] &= !(1 << (u % 64));
                for (a, b) in q.iter_mut().zip(self.row(u)) {
                    *a &= !b;
                }
                order.push(u);
                colors.push(color);
            }
        }
        (order, colors)
    }
}

fn first_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(clique_number(&Graph::new(0)), (0, vec![]));
        assert_eq!(clique_number(&Graph::new(3)).0, 1);
        assert_eq!(clique_number(&Graph::complete(3)), (3, vec![0, 1, 2]));
        assert_eq!(clique_number(&Graph::cycle(5)).0, 2);
        assert_eq!(clique_number(&Graph::cycle(5).mycielskian()).0, 2);
    }

    #[test]
    fn witness_is_a_clique() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5), (2, 4)])
            .unwrap();
        let (w, c) = clique_number(&g);
        assert_eq!(w, 3);
        assert_eq!(c.len(), 3);
        assert!(g.is_clique(&c));
    }

    #[test]
    fn restricted_search() {
        let k4 = Graph::complete(4);
        let s = VertexSet::from_vertices(4, [1, 3]).unwrap();
        assert_eq!(clique_number_within(&k4, &s), (2, vec![1, 3]));
        assert_eq!(clique_number_within(&k4, &VertexSet::new(4)), (0, vec![]));
        assert!(has_clique_of_size(&k4, Some(&s), 2));
        assert!(!has_clique_of_size(&k4, Some(&s), 3));
        assert!(has_clique_of_size(&k4, None, 4));
    }
}
