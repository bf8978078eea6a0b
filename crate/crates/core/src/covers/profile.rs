//! Coverage profiles: how many `x` in one period are covered exactly `j`
//! times.
//!
//! Two independent engines compute the same profile:
//!
//! * **direct** evaluates `w(x)` for every `x` in `[0, N)`;
//! * **inclusion–exclusion** sums over the consistent subsets `S` of classes
//!   (those with a common element, i.e. pairwise intersecting):
//!   `c_j = Σ_{|S| >= j} (-1)^{|S|-j} C(|S|, j) · N / lcm(S)`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::CoveringSystem;
use crate::clique::clique_number;
use crate::{Error, Limits, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    Direct,
    InclusionExclusion,
    /// Direct when `N` is within the period cap, otherwise
    /// inclusion–exclusion when the class count is within the subset cap.
    #[default]
    Auto,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageProfile {
    /// `N`, the lcm of the moduli.
    pub period: BigUint,
    /// `counts[j] = #{x in [0, N) : w(x) = j}` for `j = 0..=s`.
    pub counts: Vec<BigUint>,
    pub min_w: usize,
    pub max_w: usize,
}

impl CoverageProfile {
    /// `Some(m)` iff the system is an exact `m`-cover.
    pub fn exact_multiplicity(&self) -> Option<usize> {
        (self.min_w == self.max_w).then_some(self.min_w)
    }

    pub fn is_exact(&self, m: usize) -> bool {
        self.min_w == m && self.max_w == m
    }

    pub fn is_m_cover(&self, m: usize) -> bool {
        self.min_w >= m
    }

    fn from_counts(period: BigUint, counts: Vec<BigUint>) -> Self {
        let min_w = counts.iter().position(|c| !c.is_zero()).unwrap_or(0);
        let max_w = counts.iter().rposition(|c| !c.is_zero()).unwrap_or(0);
        CoverageProfile {
            period,
            counts,
            min_w,
            max_w,
        }
    }
}

pub(crate) fn small_period(period: &BigUint, limits: &Limits) -> Option<usize> {
    period
        .to_u64()
        .filter(|&n| n <= limits.period_cap)
        .and_then(|n| n.to_usize())
}

/// `w(x)` for every `x` in `[0, period)`.
pub(crate) fn covering_values(sys: &CoveringSystem, period: usize) -> Vec<u32> {
    let mut w = vec![0u32; period];
    for c in sys.classes() {
        let n = c.modulus().to_usize().expect("modulus divides period");
        let mut x = c.residue().to_usize().expect("residue below modulus");
        while x < period {
            w[x] += 1;
            x += n;
        }
    }
    w
}

fn direct(sys: &CoveringSystem, period: BigUint, n: usize) -> CoverageProfile {
    let mut counts = vec![0u64; sys.len() + 1];
    for w in covering_values(sys, n) {
        counts[w as usize] += 1;
    }
    CoverageProfile::from_counts(period, counts.into_iter().map(BigUint::from).collect())
}

/// Pairwise-intersection masks; bit `j` of `adj[i]` is set iff classes `i`
/// and `j` meet. Requires `s <= 64`.
pub(crate) fn intersection_masks(sys: &CoveringSystem) -> Vec<u64> {
    let s = sys.len();
    assert!(s <= 64);
    let mut adj = vec![0u64; s];
    for i in 0..s {
        for j in i + 1..s {
            if sys.classes()[i].intersects(&sys.classes()[j]) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

/// `T_k = Σ_{consistent S, |S| = k} N / lcm(S)` for `k = 0..=s`.
fn consistent_subset_sums(sys: &CoveringSystem, period: &BigUint) -> Vec<BigUint> {
    let s = sys.len();
    let adj = intersection_masks(sys);
    let mut sums = vec![BigUint::zero(); s + 1];
    sums[0] = period.clone();
    let all = if s == 64 { u64::MAX } else { (1u64 << s) - 1 };
    walk_cliques(sys, period, &adj, all, &BigUint::one(), 0, &mut sums);
    sums
}

fn walk_cliques(
    sys: &CoveringSystem,
    period: &BigUint,
    adj: &[u64],
    mut cand: u64,
    lcm: &BigUint,
    size: usize,
    sums: &mut [BigUint],
) {
    while cand != 0 {
        let i = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        let next = lcm.lcm(sys.classes()[i].modulus());
        sums[size + 1] += period / &next;
        let deeper = cand & adj[i];
        if deeper != 0 {
            walk_cliques(sys, period, adj, deeper, &next, size + 1, sums);
        }
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn inclusion_exclusion(sys: &CoveringSystem, period: BigUint) -> CoverageProfile {
    let s = sys.len();
    let sums = consistent_subset_sums(sys, &period);
    let counts = (0..=s)
        .map(|j| {
            let mut c = BigInt::zero();
            for (k, t) in sums.iter().enumerate().skip(j) {
                let term = BigInt::from(binomial(k, j) * t);
                if (k - j) % 2 == 0 {
                    c += term;
                } else {
                    c -= term;
                }
            }
            debug_assert!(c.sign() != Sign::Minus);
            c.into_parts().1
        })
        .collect();
    CoverageProfile::from_counts(period, counts)
}

/// Which engine a request resolves to, or the cap it violates.
pub(crate) fn resolve(
    engine: Engine,
    sys: &CoveringSystem,
    period: &BigUint,
    limits: &Limits,
) -> Result<Engine> {
    let direct_ok = small_period(period, limits).is_some();
    let ie_ok = sys.len() <= limits.subset_cap.min(64);
    let period_err = || Error::cap("period for direct enumeration", period, limits.period_cap);
    let subset_err = || Error::cap("class count for inclusion-exclusion", sys.len(), limits.subset_cap.min(64));
    match engine {
        Engine::Direct if direct_ok => Ok(Engine::Direct),
        Engine::Direct => Err(period_err()),
        Engine::InclusionExclusion if ie_ok => Ok(Engine::InclusionExclusion),
        Engine::InclusionExclusion => Err(subset_err()),
        Engine::Auto if direct_ok => Ok(Engine::Direct),
        Engine::Auto if ie_ok => Ok(Engine::InclusionExclusion),
        Engine::Auto => Err(period_err()),
    }
}

/// Coverage profile of a nonempty system with the requested engine.
pub fn coverage_profile(sys: &CoveringSystem, engine: Engine, limits: &Limits) -> Result<CoverageProfile> {
    if sys.is_empty() {
        return Err(Error::EmptySystem);
    }
    let period = sys.period();
    match resolve(engine, sys, &period, limits)? {
        Engine::Direct => {
            let n = small_period(&period, limits).expect("resolved to direct");
            Ok(direct(sys, period, n))
        }
        _ => Ok(inclusion_exclusion(sys, period)),
    }
}

/// `w(x) = m` for all `x`.
pub fn is_exact_m_cover(sys: &CoveringSystem, m: usize, engine: Engine, limits: &Limits) -> Result<bool> {
    Ok(coverage_profile(sys, engine, limits)?.is_exact(m))
}

/// `w(x) >= m` for all `x`.
pub fn is_m_cover(sys: &CoveringSystem, m: usize, engine: Engine, limits: &Limits) -> Result<bool> {
    Ok(coverage_profile(sys, engine, limits)?.is_m_cover(m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OmegaCheck {
    /// Clique number of the intersection graph.
    pub clique_number: usize,
    /// Maximum of the covering function.
    pub max_w: usize,
}

impl OmegaCheck {
    pub fn consistent(&self) -> bool {
        self.clique_number == self.max_w
    }
}

/// Compares the clique number of the intersection graph with `max w(x)`.
/// The two agree for every system; disagreement means a bug.
pub fn omega_consistency(sys: &CoveringSystem, engine: Engine, limits: &Limits) -> Result<OmegaCheck> {
    let profile = coverage_profile(sys, engine, limits)?;
    Ok(OmegaCheck {
        clique_number: clique_number(&sys.intersection_graph()).0,
        max_w: profile.max_w,
    })
}
