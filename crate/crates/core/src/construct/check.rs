use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::LayeredGraph;
use crate::clique::{clique_number, clique_number_within, has_clique_of_size};
use crate::{Error, Graph, Limits, Result, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    /// Every ordered partition, enumerated as base-`k` counters with vertex 0
    /// as the least significant digit.
    Exhaustive,
    /// `trials` partitions; trial `t` is [`sampled_assignment`]`(seed, t, …)`.
    Sampled { seed: u64, trials: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    /// Partitions actually tested.
    pub checked: u64,
    /// The first failing partition in enumeration (or trial) order.
    pub counterexample: Option<Counterexample>,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// Enumeration index (exhaustive) or trial number (sampled).
    pub index: u64,
    /// Part of each vertex, `0..k`.
    pub assignment: Vec<usize>,
    /// Clique number of each part.
    pub part_omegas: Vec<usize>,
}

/// Part assignment used by sampled checks: a ChaCha8 stream keyed by `seed`
/// with stream id `trial`, one uniform draw from `0..k` per vertex.
pub fn sampled_assignment(seed: u64, trial: u64, n: usize, k: usize) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    (0..n).map(|_| rng.gen_range(0..k)).collect()
}

fn parts_of(n: usize, k: usize, assignment: &[usize]) -> Vec<VertexSet> {
    let mut parts = vec![VertexSet::new(n); k];
    for (v, &t) in assignment.iter().enumerate() {
        parts[t].insert(v);
    }
    parts
}

fn part_omegas(g: &Graph, k: usize, assignment: &[usize]) -> Vec<usize> {
    parts_of(g.n(), k, assignment)
        .iter()
        .map(|p| clique_number_within(g, p).0)
        .collect()
}

/// True iff some part of the assignment contains a clique on `target`
/// vertices.
pub fn partition_attains(g: &Graph, target: usize, k: usize, assignment: &[usize]) -> bool {
    parts_of(g.n(), k, assignment)
        .iter()
        .any(|p| has_clique_of_size(g, Some(p), target))
}

fn exhaustive_count(k: usize, n: usize, cap: u64) -> Result<u64> {
    let mut total: u64 = 1;
    for _ in 0..n {
        total = match total.checked_mul(k as u64) {
            Some(t) if t <= cap => t,
            _ => {
                let big = num_bigint::BigUint::from(k).pow(n as u32);
                return Err(Error::cap("exhaustive partition count", big, cap));
            }
        };
    }
    Ok(total)
}

/// Drives `test` over the partitions selected by `mode`. `test` returns
/// `None` to skip a partition, `Some(true)` if it passes.
fn drive<F>(n: usize, k: usize, mode: CheckMode, limits: &Limits, mut test: F) -> Result<Verdict>
where
    F: FnMut(&[usize]) -> Option<bool>,
{
    let mut checked = 0;
    match mode {
        CheckMode::Exhaustive => {
            let total = exhaustive_count(k, n, limits.exhaustive_cap)?;
            let mut digits = vec![0usize; n];
            for index in 0..total {
                match test(&digits) {
                    Some(true) => checked += 1,
                    Some(false) => {
                        return Ok(Verdict {
                            checked: checked + 1,
                            counterexample: Some(Counterexample {
                                index,
                                assignment: digits,
                                part_omegas: Vec::new(),
                            }),
                        })
                    }
                    None => {}
                }
                for d in digits.iter_mut() {
                    *d += 1;
                    if *d < k {
                        break;
                    }
                    *d = 0;
                }
            }
        }
        CheckMode::Sampled { seed, trials } => {
            for trial in 0..trials {
                let assignment = sampled_assignment(seed, trial, n, k);
                match test(&assignment) {
                    Some(true) => checked += 1,
                    Some(false) => {
                        return Ok(Verdict {
                            checked: checked + 1,
                            counterexample: Some(Counterexample {
                                index: trial,
                                assignment,
                                part_omegas: Vec::new(),
                            }),
                        })
                    }
                    None => {}
                }
            }
        }
    }
    Ok(Verdict {
        checked,
        counterexample: None,
    })
}

/// Verifies that every ordered `k`-partition (empty parts allowed) of `g`
/// has a part whose clique number reaches `target`.
pub fn check_robustness(
    g: &Graph,
    target: usize,
    k: usize,
    mode: CheckMode,
    limits: &Limits,
) -> Result<Verdict> {
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    let mut verdict = drive(g.n(), k, mode, limits, |a| {
        Some(partition_attains(g, target, k, a))
    })?;
    if let Some(ce) = verdict.counterexample.as_mut() {
        ce.part_omegas = part_omegas(g, k, &ce.assignment);
    }
    Ok(verdict)
}

/// Verifies `ω(G[V_1]) + ω(G[V_2]) > ω(G)` for ordered 2-partitions into
/// nonempty parts. Partitions with an empty part are skipped and not
/// counted.
pub fn check_zhang_inequality(g: &Graph, mode: CheckMode, limits: &Limits) -> Result<Verdict> {
    let omega = clique_number(g).0;
    let mut verdict = drive(g.n(), 2, mode, limits, |a| {
        let parts = parts_of(g.n(), 2, a);
        if parts.iter().any(VertexSet::is_empty) {
            return None;
        }
        let sum: usize = parts.iter().map(|p| clique_number_within(g, p).0).sum();
        Some(sum > omega)
    })?;
    if let Some(ce) = verdict.counterexample.as_mut() {
        ce.part_omegas = part_omegas(g, 2, &ce.assignment);
    }
    Ok(verdict)
}

impl LayeredGraph {
    /// [`check_robustness`] with target `m` and arity `k`.
    pub fn check_robustness(&self, mode: CheckMode, limits: &Limits) -> Result<Verdict> {
        check_robustness(&self.graph, self.m, self.k, mode, limits)
    }
}
