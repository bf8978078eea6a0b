//! Realizing a graph as the intersection graph of a residue-class system.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::arith::{crt, crt_pair, next_prime_after};
use super::{CoveringSystem, ResidueClass};
use crate::{Error, Graph, Limits, Result};

/// Inductive prime-tower realization.
///
/// Vertices are added in index order. Starting from `{0(1)}` (one vertex) or
/// `{0(2), 0(2)}` / `{0(2), 1(2)}` (two vertices, with or without the edge),
/// adding vertex `v` picks the `v` smallest primes `p_0 < … < p_{v-1}` above
/// every current modulus, refines class `t` to `n_t·p_t` with residue 1 mod
/// `p_t`, and gives `v` the modulus `p_0⋯p_{v-1}` with residue 1 mod `p_t`
/// when `t ~ v` and 0 otherwise.
pub fn realize(g: &Graph) -> Result<CoveringSystem> {
    let s = g.n();
    if s == 0 {
        return Err(Error::Precondition("cannot realize the empty graph".into()));
    }
    let two = BigUint::from(2u8);
    let mut classes: Vec<(BigUint, BigUint)> = if s == 1 {
        vec![(BigUint::zero(), BigUint::one())]
    } else {
        let second = if g.has_edge(0, 1) { 0u8 } else { 1 };
        vec![
            (BigUint::zero(), two.clone()),
            (BigUint::from(second), two),
        ]
    };
    let one = BigUint::one();
    for v in 2..s {
        let mut p = classes.iter().map(|(_, n)| n).max().expect("nonempty").clone();
        let primes: Vec<BigUint> = (0..v)
            .map(|_| {
                p = next_prime_after(&p);
                p.clone()
            })
            .collect();
        for ((a, n), prime) in classes.iter_mut().zip(&primes) {
            let (a2, n2) = crt_pair(a, n, &one, prime).expect("prime exceeds and so is coprime to n");
            *a = a2;
            *n = n2;
        }
        let targets: Vec<BigUint> = (0..v)
            .map(|t| if g.has_edge(t, v) { one.clone() } else { BigUint::zero() })
            .collect();
        let (a, n) = crt(targets.iter().zip(&primes)).expect("distinct primes are coprime");
        classes.push((a, n));
    }
    let sys = CoveringSystem::new(
        classes
            .into_iter()
            .map(|(a, n)| ResidueClass::new(BigInt::from(a), n).expect("modulus positive"))
            .collect(),
    );
    if sys.intersection_graph() != *g {
        return Err(Error::Invariant("realized system has the wrong intersection graph".into()));
    }
    Ok(sys)
}

/// Parameters of [`search_small_realization`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SmallSearch {
    /// Moduli are the divisors greater than 1 of this number.
    pub smooth: u64,
    /// Maximum number of class placements tried before giving up.
    pub node_budget: u64,
}

impl Default for SmallSearch {
    fn default() -> Self {
        SmallSearch {
            smooth: 2 * 2 * 2 * 3 * 3 * 5 * 7,
            node_budget: 10_000_000,
        }
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut d: Vec<u64> = (1..).take_while(|i| i * i <= n).filter(|i| n % i == 0).collect();
    let upper: Vec<u64> = d.iter().rev().map(|i| n / i).filter(|&j| j * j != n).collect();
    d.extend(upper);
    d
}

fn meets(a1: u64, n1: u64, a2: u64, n2: u64) -> bool {
    (a1.abs_diff(a2)) % n1.gcd(&n2) == 0
}

/// Backtracking search for a realization with small moduli.
///
/// Candidate periods `L` are tried in ascending order over the divisors of
/// `params.smooth`; for each, every vertex gets a class `a(n)` with
/// `1 < n | L`, tried in ascending `(n, a)` order, pruning as soon as a
/// placed pair disagrees with the graph. Vertex 0 is pinned to residue 0
/// (translating every class preserves intersections). The first hit
/// therefore has the least period among all such realizations. Returns
/// `None` when no period works or the node budget runs out.
pub fn search_small_realization(
    g: &Graph,
    params: SmallSearch,
    limits: &Limits,
) -> Result<Option<CoveringSystem>> {
    if g.n() == 0 {
        return Err(Error::Precondition("cannot realize the empty graph".into()));
    }
    if g.n() > limits.search_vertex_cap {
        return Err(Error::cap("small-realization vertex count", g.n(), limits.search_vertex_cap));
    }
    if params.smooth < 2 {
        return Err(Error::Precondition(format!("smooth number {} has no divisor > 1", params.smooth)));
    }
    let mut search = Search {
        g,
        moduli: Vec::new(),
        placed: Vec::with_capacity(g.n()),
        nodes: 0,
        budget: params.node_budget,
    };
    for period in divisors(params.smooth).into_iter().filter(|&d| d > 1) {
        search.moduli = divisors(period).into_iter().filter(|&d| d > 1).collect();
        search.placed.clear();
        match search.place(0) {
            Some(true) => {
                let sys = CoveringSystem::new(
                    search
                        .placed
                        .iter()
                        .map(|&(a, n)| ResidueClass::from_u64(a, n).expect("n > 1"))
                        .collect(),
                );
                debug_assert_eq!(sys.intersection_graph(), *g);
                return Ok(Some(sys));
            }
            Some(false) => {}
            None => return Ok(None),
        }
    }
    Ok(None)
}

struct Search<'a> {
    g: &'a Graph,
    moduli: Vec<u64>,
    placed: Vec<(u64, u64)>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// `Some(found)`, or `None` once the budget is spent.
    fn place(&mut self, v: usize) -> Option<bool> {
        if v == self.g.n() {
            return Some(true);
        }
        for mi in 0..self.moduli.len() {
            let n = self.moduli[mi];
            let residues = if v == 0 { 1 } else { n };
            for a in 0..residues {
                self.nodes += 1;
                if self.nodes > self.budget {
                    return None;
                }
                let fits = self
                    .placed
                    .iter()
                    .enumerate()
                    .all(|(u, &(b, m))| meets(a, n, b, m) == self.g.has_edge(u, v));
                if !fits {
                    continue;
                }
                self.placed.push((a, n));
                if self.place(v + 1)? {
                    return Some(true);
                }
                self.placed.pop();
            }
        }
        Some(false)
    }
}
