//! Exact chromatic number by DSATUR-ordered backtracking.

use alloc::vec;
use alloc::vec::Vec;

use crate::clique::clique_number;
use crate::{Error, Graph, Result};

/// Exact chromatic number. Graphs with more than `cap` vertices are refused.
pub fn chromatic_number(g: &Graph, cap: usize) -> Result<usize> {
    if g.n() > cap {
        return Err(Error::cap("chromatic number vertex count", g.n(), cap));
    }
    if g.n() == 0 {
        return Ok(0);
    }
    let lower = clique_number(g).0;
    let mut k = lower.max(1);
    loop {
        if color_with(g, k).is_some() {
            return Ok(k);
        }
        k += 1;
    }
}

/// A proper coloring with colors `0..k`, if one exists.
pub fn color_with(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let mut state = Dsatur {
        g,
        k,
        color: vec![usize::MAX; n],
        // neighbor_colors[v][c] = number of colored neighbors of v with color c
        neighbor_colors: vec![vec![0u32; k]; n],
        saturation: vec![0; n],
    };
    state.solve(0).then_some(state.color)
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    neighbor_colors: Vec<Vec<u32>>,
    saturation: Vec<usize>,
}

impl Dsatur<'_> {
    fn pick(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.color[v] == usize::MAX)
            .max_by_key(|&v| (self.saturation[v], self.g.degree(v), usize::MAX - v))
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for &u in self.g.neighbors(v) {
            if self.neighbor_colors[u][c] == 0 {
                self.saturation[u] += 1;
            }
            self.neighbor_colors[u][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = usize::MAX;
        for &u in self.g.neighbors(v) {
            self.neighbor_colors[u][c] -= 1;
            if self.neighbor_colors[u][c] == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    /// `used` is the number of distinct colors in use; a fresh color is only
    /// ever the next unused one, which removes color-permutation symmetry.
    fn solve(&mut self, used: usize) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.neighbor_colors[v][c] != 0 {
                continue;
            }
            self.assign(v, c);
            if self.solve(used.max(c + 1)) {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }
}
