//! Searching for decompositions of a system into two covers.
//!
//! Splits are unordered pairs `{B_1, B_2}` of nonempty index sets with class
//! 0 in `B_1`. They are visited in a fixed canonical order: class 0 is
//! pinned to `B_1`, and the side of classes `1, 2, …, s-1` runs through
//! `B_1`-first lexicographic order (class 1 is the most significant choice).
//! Both engines return the first qualifying split in that order.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::profile::{binomial, coverage_profile, intersection_masks, small_period};
use super::{CoveringSystem, Engine};
use crate::{Error, Limits, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    /// Class indices of `B_1`, ascending; always contains 0.
    pub first: Vec<usize>,
    /// Class indices of `B_2`, ascending; never empty.
    pub second: Vec<usize>,
}

impl Split {
    fn from_sides(side: &[bool]) -> Self {
        let (mut first, mut second) = (Vec::new(), Vec::new());
        for (t, &s) in side.iter().enumerate() {
            if s {
                second.push(t);
            } else {
                first.push(t);
            }
        }
        Split { first, second }
    }

    fn from_mask(s: usize, second: u64) -> Self {
        let side: Vec<bool> = (0..s).map(|t| second >> t & 1 == 1).collect();
        Self::from_sides(&side)
    }
}

/// `B_1` is an exact `n`-cover and `B_2` an exact `(m - n)`-cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSplit {
    pub n: usize,
    pub split: Split,
}

/// What a split search is looking for.
#[derive(Clone, Copy)]
enum Goal {
    /// Both sides cover every `x` at least once.
    OneCovers,
    /// Side 1 covers every `x` exactly `n` times (side 2 then covers it
    /// `m - n` times, since the whole system is exact).
    Exact { n: usize, m: usize },
}

fn split_engine(engine: Engine, sys: &CoveringSystem, limits: &Limits) -> Result<Engine> {
    let period = sys.period();
    let s = sys.len();
    let direct_ok = small_period(&period, limits).is_some();
    let ie_ok = s <= limits.split_ie_cap.min(63);
    let direct_err = || Error::cap("period for direct split search", &period, limits.period_cap);
    let ie_err = || Error::cap("class count for inclusion-exclusion split search", s, limits.split_ie_cap.min(63));
    match engine {
        Engine::Direct if direct_ok => Ok(Engine::Direct),
        Engine::Direct => Err(direct_err()),
        Engine::InclusionExclusion if ie_ok => Ok(Engine::InclusionExclusion),
        Engine::InclusionExclusion => Err(ie_err()),
        Engine::Auto if direct_ok => Ok(Engine::Direct),
        Engine::Auto if ie_ok => Ok(Engine::InclusionExclusion),
        Engine::Auto => Err(direct_err()),
    }
}

/// First split (in canonical order) whose two sides are both 1-covers, or
/// `None` after exhausting all `2^(s-1) - 1` splits.
pub fn union_of_two_1covers(sys: &CoveringSystem, engine: Engine, limits: &Limits) -> Result<Option<Split>> {
    if sys.is_empty() {
        return Err(Error::EmptySystem);
    }
    match split_engine(engine, sys, limits)? {
        Engine::Direct => direct_search(sys, Goal::OneCovers, limits),
        _ => Ok(ie_one_covers(sys)),
    }
}

/// Searches every `1 <= n < m` (ascending) and every split for an exact
/// `n`-cover plus an exact `(m - n)`-cover. The system itself must be an
/// exact `m`-cover.
pub fn split_into_exact_covers(
    sys: &CoveringSystem,
    m: usize,
    engine: Engine,
    limits: &Limits,
) -> Result<Option<ExactSplit>> {
    if sys.is_empty() {
        return Err(Error::EmptySystem);
    }
    let chosen = split_engine(engine, sys, limits)?;
    let profile = coverage_profile(sys, chosen, limits)?;
    if !profile.is_exact(m) {
        return Err(Error::Precondition(alloc::format!(
            "not an exact {m}-cover (w ranges over {}..={})",
            profile.min_w, profile.max_w
        )));
    }
    for n in 1..m {
        let found = match chosen {
            Engine::Direct => direct_search(sys, Goal::Exact { n, m }, limits)?,
            _ => ie_exact(sys, n),
        };
        if let Some(split) = found {
            return Ok(Some(ExactSplit { n, split }));
        }
    }
    Ok(None)
}

/// Tests `trials` random splits (trial `t` draws one fair side per class
/// from a ChaCha8 stream keyed by `seed` with stream id `t`; class 0 is
/// forced into `B_1`, draws with an empty `B_2` are skipped). Returns the
/// first trial whose split is a union of two 1-covers.
pub fn sample_two_1cover_splits(
    sys: &CoveringSystem,
    seed: u64,
    trials: u64,
    engine: Engine,
    limits: &Limits,
) -> Result<Option<(u64, Split)>> {
    if sys.is_empty() {
        return Err(Error::EmptySystem);
    }
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        let mut side: Vec<bool> = (0..sys.len()).map(|_| rng.gen_bool(0.5)).collect();
        side[0] = false;
        if !side.contains(&true) {
            continue;
        }
        let split = Split::from_sides(&side);
        let covers = |idx: &[usize]| -> Result<bool> {
            Ok(coverage_profile(&sys.subsystem(idx), engine, limits)?.min_w >= 1)
        };
        if covers(&split.first)? && covers(&split.second)? {
            return Ok(Some((trial, split)));
        }
    }
    Ok(None)
}

// Direct engine: depth-first over class sides with per-point counters.

struct Direct<'a> {
    sys: &'a CoveringSystem,
    goal: Goal,
    n: usize,
    points: Vec<Vec<usize>>,
    cnt: [Vec<u32>; 2],
    rem: Vec<u32>,
    side: Vec<bool>,
    nodes: u64,
    budget: u64,
}

/// Pruned depth-first search; the budget counts class placements.
fn direct_search(sys: &CoveringSystem, goal: Goal, limits: &Limits) -> Result<Option<Split>> {
    let n = small_period(&sys.period(), limits).expect("engine resolved to direct");
    let points: Vec<Vec<usize>> = sys
        .classes()
        .iter()
        .map(|c| {
            let step = c.modulus().to_usize().expect("modulus divides period");
            let a = c.residue().to_usize().expect("residue below modulus");
            (a..n).step_by(step).collect()
        })
        .collect();
    let mut rem = vec![0u32; n];
    for p in &points {
        for &x in p {
            rem[x] += 1;
        }
    }
    let mut d = Direct {
        sys,
        goal,
        n,
        points,
        cnt: [vec![0; n], vec![0; n]],
        rem,
        side: vec![false; sys.len()],
        nodes: 0,
        budget: limits.split_node_budget,
    };
    if !d.assign(0, 0) {
        return Ok(None);
    }
    match d.descend(1) {
        Some(found) => Ok(found.then(|| Split::from_sides(&d.side))),
        None => Err(Error::cap("class placements for direct split search", alloc::format!("over {}", limits.split_node_budget), limits.split_node_budget)),
    }
}

impl Direct<'_> {
    /// Puts class `t` on `side`; false if that already rules out the goal.
    /// The counters are updated either way and must be undone by
    /// [`Self::unassign`].
    fn assign(&mut self, t: usize, side: usize) -> bool {
        self.side[t] = side == 1;
        let mut ok = true;
        for &x in &self.points[t] {
            self.cnt[side][x] += 1;
            self.rem[x] -= 1;
            ok &= match self.goal {
                Goal::OneCovers => {
                    self.rem[x] > 0 || (self.cnt[0][x] > 0 && self.cnt[1][x] > 0)
                }
                Goal::Exact { n, m } => {
                    self.cnt[0][x] as usize <= n && self.cnt[1][x] as usize <= m - n
                }
            };
        }
        ok
    }

    fn unassign(&mut self, t: usize, side: usize) {
        for &x in &self.points[t] {
            self.cnt[side][x] -= 1;
            self.rem[x] += 1;
        }
    }

    /// `Some(found)`, or `None` once the budget is spent.
    fn descend(&mut self, t: usize) -> Option<bool> {
        if t == self.sys.len() {
            return Some(self.complete());
        }
        for side in 0..2 {
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            let ok = self.assign(t, side);
            if ok && self.descend(t + 1)? {
                return Some(true);
            }
            self.unassign(t, side);
        }
        Some(false)
    }

    fn complete(&self) -> bool {
        if !self.side.contains(&true) {
            return false;
        }
        (0..self.n).all(|x| match self.goal {
            Goal::OneCovers => self.cnt[0][x] > 0 && self.cnt[1][x] > 0,
            Goal::Exact { n, .. } => self.cnt[0][x] as usize == n,
        })
    }
}

// Inclusion–exclusion engine: a table over all subsets of at most 63
// classes, summed over submasks by a zeta transform.

/// `N / lcm(S)` for consistent `S`, `None` otherwise; indexed by mask.
fn consistent_table(sys: &CoveringSystem) -> (BigUint, Vec<Option<BigUint>>) {
    let s = sys.len();
    let period = sys.period();
    let adj = intersection_masks(sys);
    let mut lcm: Vec<Option<BigUint>> = vec![None; 1 << s];
    lcm[0] = Some(BigUint::one());
    for mask in 1usize..1 << s {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        if rest as u64 & !adj[low] != 0 {
            continue;
        }
        lcm[mask] = lcm[rest].as_ref().map(|l| l.lcm(sys.classes()[low].modulus()));
    }
    let weights = lcm.into_iter().map(|l| l.map(|l| &period / l)).collect();
    (period, weights)
}

fn zeta(f: &mut [BigInt], s: usize) {
    for bit in 0..s {
        for mask in 0..f.len() {
            if mask >> bit & 1 == 1 {
                let below = f[mask ^ (1 << bit)].clone();
                f[mask] += below;
            }
        }
    }
}

/// Canonical split order as masks of `B_2`.
fn canonical_masks(s: usize) -> impl Iterator<Item = u64> {
    (1u64..1 << (s - 1)).map(move |code| {
        (1..s).fold(0u64, |acc, t| acc | (code >> (s - 1 - t) & 1) << t)
    })
}

fn ie_one_covers(sys: &CoveringSystem) -> Option<Split> {
    let s = sys.len();
    if s < 2 {
        return None;
    }
    let (_, table) = consistent_table(sys);
    // F(P) = number of x in [0, N) missed by every class of P.
    let mut uncovered: Vec<BigInt> = table
        .iter()
        .enumerate()
        .map(|(mask, w)| match w {
            Some(w) if mask.count_ones() % 2 == 0 => BigInt::from(w.clone()),
            Some(w) => -BigInt::from(w.clone()),
            None => BigInt::zero(),
        })
        .collect();
    zeta(&mut uncovered, s);
    let full = (1u64 << s) - 1;
    canonical_masks(s)
        .find(|&second| uncovered[second as usize].is_zero() && uncovered[(full ^ second) as usize].is_zero())
        .map(|second| Split::from_mask(s, second))
}

fn ie_exact(sys: &CoveringSystem, n: usize) -> Option<Split> {
    let s = sys.len();
    if s < 2 {
        return None;
    }
    let (period, table) = consistent_table(sys);
    // c_n(P) = number of x in [0, N) covered exactly n times by P.
    let mut exact: Vec<BigInt> = table
        .iter()
        .enumerate()
        .map(|(mask, w)| {
            let size = mask.count_ones() as usize;
            match w {
                Some(w) if size >= n => {
                    let term = BigInt::from(binomial(size, n) * w);
                    if (size - n) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                }
                _ => BigInt::zero(),
            }
        })
        .collect();
    zeta(&mut exact, s);
    let period = BigInt::from(period);
    let full = (1u64 << s) - 1;
    canonical_masks(s)
        .find(|&second| exact[(full ^ second) as usize] == period)
        .map(|second| Split::from_mask(s, second))
}
