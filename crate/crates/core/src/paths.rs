//! Longest simple paths by exhaustive enumeration.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Graph, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LongestPaths {
    /// Number of edges on a longest simple path.
    pub length: usize,
    /// Every longest path exactly once, oriented so the first vertex is
    /// smaller than the last, sorted lexicographically.
    pub paths: Vec<Vec<usize>>,
}

/// Enumerates all maximum-length simple paths. A path and its reversal are
/// one path. Exponential; graphs above `cap` vertices are refused.
pub fn longest_paths(g: &Graph, cap: usize) -> Result<LongestPaths> {
    if g.n() > cap {
        return Err(Error::cap("longest-path vertex count", g.n(), cap));
    }
    let mut walk = Walk {
        g,
        on_path: vec![false; g.n()],
        path: Vec::with_capacity(g.n()),
        best: 0,
        found: Vec::new(),
    };
    for s in 0..g.n() {
        walk.on_path[s] = true;
        walk.path.push(s);
        walk.extend();
        walk.path.pop();
        walk.on_path[s] = false;
    }
    let mut paths = walk.found;
    paths.sort_unstable();
    Ok(LongestPaths {
        length: walk.best,
        paths,
    })
}

/// Length only; same enumeration and cap.
pub fn longest_path_length(g: &Graph, cap: usize) -> Result<usize> {
    longest_paths(g, cap).map(|lp| lp.length)
}

struct Walk<'a> {
    g: &'a Graph,
    on_path: Vec<bool>,
    path: Vec<usize>,
    best: usize,
    found: Vec<Vec<usize>>,
}

impl Walk<'_> {
    fn extend(&mut self) {
        let len = self.path.len() - 1;
        if len > self.best {
            self.best = len;
            self.found.clear();
        }
        // each path of length >= 1 is seen from both ends; keep the canonical one
        if len == self.best && (len == 0 || self.path[0] < self.path[len]) {
            self.found.push(self.path.clone());
        }
        let tail = self.path[len];
        for &v in self.g.neighbors(tail) {
            if !self.on_path[v] {
                self.on_path[v] = true;
                self.path.push(v);
                self.extend();
                self.path.pop();
                self.on_path[v] = false;
            }
        }
    }
}
