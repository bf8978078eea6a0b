//! Constructive side of robustness: given any `k`-partition of `G^(m)`,
//! find a part and an `m`-clique inside it.
//!
//! Layer by layer, each skeleton vertex `i` gets a copy `g_i` of `G^(m-1)`
//! (selected by the representatives already chosen for `A_i`), the least
//! part `t_i` whose share of that copy still has clique number `m - 1`, and
//! a representative `w_i` from a maximum clique of that share. Coloring the
//! skeleton by `t_i` uses only `k` colors on a `(k+1)`-chromatic graph, so
//! some skeleton edge `i' → i` is monochromatic; `w_{i'}` is joined to all
//! of copy `g_i`, which completes the `(m-1)`-clique there to an `m`-clique
//! in part `t_i`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::LayeredGraph;
use crate::clique::clique_number_within;
use crate::{Error, Result, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Part index, `0..k`.
    pub part: usize,
    /// `m` vertices, ascending, pairwise adjacent, all in `part`.
    pub clique: Vec<usize>,
}

impl LayeredGraph {
    /// Witness for a partition given as `k` vertex sets.
    pub fn extract_witness(&self, parts: &[VertexSet]) -> Result<Witness> {
        let n = self.graph.n();
        if parts.len() != self.k {
            return Err(Error::InvalidPartition(format!(
                "expected {} parts, got {}",
                self.k,
                parts.len()
            )));
        }
        let mut assignment = vec![usize::MAX; n];
        for (t, part) in parts.iter().enumerate() {
            for v in part {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
                }
                if assignment[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("vertex {v} in two parts")));
                }
                assignment[v] = t;
            }
        }
        if let Some(v) = assignment.iter().position(|&t| t == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} in no part")));
        }
        self.witness_for(&assignment)
    }

    /// Witness for a partition given as the part (`0..k`) of every vertex.
    pub fn extract_witness_assignment(&self, assignment: &[usize]) -> Result<Witness> {
        if assignment.len() != self.graph.n() {
            return Err(Error::InvalidPartition(format!(
                "assignment has {} entries for {} vertices",
                assignment.len(),
                self.graph.n()
            )));
        }
        if let Some(v) = assignment.iter().position(|&t| t >= self.k) {
            return Err(Error::InvalidPartition(format!(
                "vertex {v} assigned to part {} >= k = {}",
                assignment[v], self.k
            )));
        }
        self.witness_for(assignment)
    }

    fn witness_for(&self, assignment: &[usize]) -> Result<Witness> {
        let root = self.skeleton.root();
        let x0 = self.offsets[root];
        let Some(child) = self.child.as_deref() else {
            return Ok(Witness {
                part: assignment[x0],
                clique: vec![x0],
            });
        };
        let c = child.graph.n();
        let target = self.m - 1;
        let n_k = self.skeleton.n();

        let mut color = vec![usize::MAX; n_k];
        let mut rep = vec![usize::MAX; n_k];
        let mut share_clique: Vec<Vec<usize>> = vec![Vec::new(); n_k];
        color[root] = assignment[x0];
        rep[root] = x0;

        for layer in &self.skeleton.layers()[1..] {
            for &i in layer {
                let tuple: Vec<usize> = self
                    .skeleton
                    .in_set(i)
                    .iter()
                    .map(|&p| rep[p] - self.offsets[p])
                    .collect();
                let copy = self.psi(i, &tuple).expect("representatives lie in their blocks");
                let base = self.copy_range(i, copy).start;
                let mut chosen = None;
                for t in 0..self.k {
                    let share = VertexSet::from_vertices(
                        c,
                        (0..c).filter(|&a| assignment[base + a] == t),
                    )
                    .expect("indices below child size");
                    let (size, clique) = clique_number_within(&child.graph, &share);
                    if size == target {
                        chosen = Some((t, clique));
                        break;
                    }
                }
                let Some((t, clique)) = chosen else {
                    return Err(Error::Invariant(format!(
                        "no part keeps clique number {target} on copy {copy} of block {i}"
                    )));
                };
                color[i] = t;
                share_clique[i] = clique.iter().map(|&a| base + a).collect();
                rep[i] = share_clique[i][0];
            }
        }

        let base = self.skeleton.base();
        let Some((u, v)) = base.edges().find(|&(u, v)| color[u] == color[v]) else {
            return Err(Error::Invariant(
                "skeleton properly colored with k colors".into(),
            ));
        };
        let (head, tail) = if self.skeleton.in_set(v).contains(&u) {
            (v, u)
        } else {
            (u, v)
        };
        let mut clique = share_clique[head].clone();
        clique.push(rep[tail]);
        clique.sort_unstable();
        let part = color[head];

        if clique.len() != self.m
            || !self.graph.is_clique(&clique)
            || clique.iter().any(|&x| assignment[x] != part)
        {
            return Err(Error::Invariant(format!(
                "assembled set {clique:?} is not an {}-clique in part {part}",
                self.m
            )));
        }
        Ok(Witness { part, clique })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build;
    use crate::Limits;

    #[test]
    fn m1_returns_x0() {
        let lg = build(1, 3, &Limits::default()).unwrap();
        let w = lg.extract_witness_assignment(&[2]).unwrap();
        assert_eq!(w, Witness { part: 2, clique: vec![0] });
    }

    #[test]
    fn whole_graph_in_first_part() {
        let lg = build(2, 2, &Limits::default()).unwrap();
        let parts = [VertexSet::full(5), VertexSet::new(5)];
        let w = lg.extract_witness(&parts).unwrap();
        assert_eq!(w.part, 0);
        assert_eq!(w.clique.len(), 2);
        assert!(lg.graph().is_clique(&w.clique));
    }

    #[test]
    fn invalid_partitions_are_rejected() {
        let lg = build(2, 2, &Limits::default()).unwrap();
        let all = VertexSet::full(5);
        assert!(lg.extract_witness(std::slice::from_ref(&all)).is_err());
        assert!(lg.extract_witness(&[all.clone(), all.clone()]).is_err());
        assert!(lg
            .extract_witness(&[VertexSet::new(5), VertexSet::new(5)])
            .is_err());
        assert!(lg.extract_witness_assignment(&[0, 1, 2, 0, 0]).is_err());
        assert!(lg.extract_witness_assignment(&[0, 1]).is_err());
    }
}
