//! End-to-end construction of an exact `m`-cover that is not the union of
//! two 1-covers.
//!
//! Realize the 2-partition-robust graph `G^(m)` as the intersection graph of
//! a system `A`; then `max w_A = ω(G^(m)) = m`. Completing `A` with classes
//! modulo its period gives an exact `m`-cover `B`. For any split of `B`, the
//! classes of `A` on one side contain an `m`-clique of `G^(m)`; a common
//! point `x` of those `m` classes has `w_A(x) = m`, so no other class of `B`
//! contains `x` and the other side misses `x` entirely.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::profile::small_period;
use super::{
    complete_to_exact, completion_count, coverage_profile, realize, sample_two_1cover_splits,
    search_small_realization, union_of_two_1covers, CoveringSystem, Engine, SmallSearch, Split,
};
use crate::clique::clique_number;
use crate::construct::{build, CheckMode, LayeredGraph, Verdict};
use crate::{Error, Limits, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RealizationMode {
    /// Small-modulus search, falling back to the prime tower when the graph
    /// is too large for the search or the search comes up empty.
    #[default]
    Search,
    /// Prime tower only.
    Tower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealizationKind {
    SmallModulus,
    Tower,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineOptions {
    pub m: usize,
    pub realization: RealizationMode,
    pub search: SmallSearch,
    pub engine: Engine,
    /// Seed for any sampled stage.
    pub seed: u64,
    /// Sample count for any sampled stage.
    pub trials: u64,
}

impl PipelineOptions {
    pub fn new(m: usize) -> Self {
        PipelineOptions {
            m,
            realization: RealizationMode::default(),
            search: SmallSearch::default(),
            engine: Engine::Auto,
            seed: 0,
            trials: 1000,
        }
    }
}

/// How "no split of `B` into two 1-covers" was established on the
/// materialized completion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitCertificate {
    /// Every one of the `splits` unordered splits was examined.
    Exhaustive { splits: BigUint },
    /// Only `trials` seeded random splits were examined; `reason` says why
    /// exhaustive search was not run.
    Sampled { seed: u64, trials: u64, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineReport {
    pub m: usize,
    pub graph: LayeredGraph,
    pub realization: RealizationKind,
    /// The realized system `A`; its intersection graph is `graph`.
    pub system: CoveringSystem,
    /// `N`, the period of `A` (and of `B`).
    pub period: BigUint,
    /// Clique number of the intersection graph of `A`.
    pub omega: usize,
    /// `max w_A`, from the coverage profile of `A`.
    pub max_w: usize,
    /// `r = m·N − Σ N/n_t`, the number of classes the completion adds.
    pub added: BigUint,
    /// `B`, when `N` is small enough to materialize it; then it has been
    /// verified to be an exact `m`-cover.
    pub completion: Option<CoveringSystem>,
    /// Search for a split of `B` into two 1-covers; present iff `B` was
    /// materialized. The search found nothing.
    pub split_search: Option<SplitCertificate>,
    /// Every checked 2-partition of the classes of `A` has an `m`-clique of
    /// the intersection graph on one side.
    pub clique_side: Verdict,
    /// Whether `clique_side` covered all partitions.
    pub clique_side_exhaustive: bool,
    /// Stages that ran in a degraded (fallback, symbolic or sampled) mode.
    pub notes: Vec<String>,
}

/// Builds `G^(m)` for 2-partitions, realizes it, completes it and certifies
/// the result. Fails with [`Error::Invariant`] if any certificate that the
/// construction guarantees does not hold.
pub fn irreducible_cover_pipeline(opts: &PipelineOptions, limits: &Limits) -> Result<PipelineReport> {
    let m = opts.m;
    if m < 2 {
        return Err(Error::Precondition(format!("m = {m}; the pipeline needs m >= 2")));
    }
    let lg = build(m, 2, limits)?;
    let g = lg.graph();
    let mut notes = Vec::new();

    let mut found = None;
    if opts.realization == RealizationMode::Search {
        if g.n() > limits.search_vertex_cap {
            notes.push(format!(
                "graph has {} vertices, above the small-modulus search cap {}; used the prime tower",
                g.n(),
                limits.search_vertex_cap
            ));
        } else {
            match search_small_realization(g, opts.search, limits)? {
                Some(sys) => found = Some(sys),
                None => notes.push(format!(
                    "small-modulus search over divisors of {} found nothing within {} nodes; used the prime tower",
                    opts.search.smooth, opts.search.node_budget
                )),
            }
        }
    }
    let (system, realization) = match found {
        Some(sys) => (sys, RealizationKind::SmallModulus),
        None => {
            if g.n() > limits.tower_vertex_cap {
                return Err(Error::cap("vertex count for the prime tower", g.n(), limits.tower_vertex_cap));
            }
            (realize(g)?, RealizationKind::Tower)
        }
    };
    if system.intersection_graph() != *g {
        return Err(Error::Invariant("realization has the wrong intersection graph".into()));
    }

    let period = system.period();
    let profile = coverage_profile(&system, opts.engine, limits)?;
    let omega = clique_number(g).0;
    if omega != m || profile.max_w != m {
        return Err(Error::Invariant(format!(
            "expected clique number and max w equal to {m}, got {omega} and {}",
            profile.max_w
        )));
    }
    let added = completion_count(&system, m)?;

    let (completion, split_search) = if small_period(&period, limits).is_some() {
        let b = complete_to_exact(&system, m, limits)?.system;
        let exact = coverage_profile(&b, Engine::Direct, limits)?;
        if !exact.is_exact(m) {
            return Err(Error::Invariant(format!("completion is not an exact {m}-cover")));
        }
        let cert = match union_of_two_1covers(&b, opts.engine, limits) {
            Ok(None) => SplitCertificate::Exhaustive {
                splits: (BigUint::from(1u8) << (b.len() - 1)) - 1u8,
            },
            Ok(Some(split)) => return Err(refuted(&split)),
            Err(e) if e.is_budget() => {
                let reason = alloc::string::ToString::to_string(&e);
                notes.push(format!("exhaustive split search skipped ({reason}); sampled instead"));
                if let Some((_, split)) =
                    sample_two_1cover_splits(&b, opts.seed, opts.trials, opts.engine, limits)?
                {
                    return Err(refuted(&split));
                }
                SplitCertificate::Sampled {
                    seed: opts.seed,
                    trials: opts.trials,
                    reason,
                }
            }
            Err(e) => return Err(e),
        };
        (Some(b), Some(cert))
    } else {
        notes.push(format!(
            "period {period} exceeds the completion cap {}; completion reported symbolically ({added} classes)",
            limits.period_cap
        ));
        (None, None)
    };

    let (clique_side, clique_side_exhaustive) = match lg.check_robustness(CheckMode::Exhaustive, limits) {
        Ok(v) => (v, true),
        Err(e) if e.is_budget() => {
            notes.push(format!("clique-side check sampled ({e})"));
            let mode = CheckMode::Sampled {
                seed: opts.seed,
                trials: opts.trials,
            };
            (lg.check_robustness(mode, limits)?, false)
        }
        Err(e) => return Err(e),
    };
    if !clique_side.holds() {
        return Err(Error::Invariant("a split of A has no m-clique on either side".into()));
    }

    Ok(PipelineReport {
        m,
        graph: lg,
        realization,
        system,
        period,
        omega,
        max_w: profile.max_w,
        added,
        completion,
        split_search,
        clique_side,
        clique_side_exhaustive,
        notes,
    })
}

fn refuted(split: &Split) -> Error {
    Error::Invariant(format!(
        "completion splits into two 1-covers: {:?} / {:?}",
        split.first, split.second
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_m1() {
        let r = irreducible_cover_pipeline(&PipelineOptions::new(1), &Limits::default());
        assert!(matches!(r, Err(Error::Precondition(_))));
    }

    #[test]
    fn tower_is_symbolic() {
        let opts = PipelineOptions {
            realization: RealizationMode::Tower,
            ..PipelineOptions::new(2)
        };
        let r = irreducible_cover_pipeline(&opts, &Limits::default()).unwrap();
        assert_eq!(r.realization, RealizationKind::Tower);
        assert!(r.completion.is_none());
        assert_eq!((r.omega, r.max_w), (2, 2));
        assert!(r.clique_side_exhaustive && r.clique_side.holds());
        assert_eq!(r.clique_side.checked, 32);
        assert_eq!(r.added, BigUint::from(2u8) * &r.period - r.system.total_multiplicity(&r.period));
    }
}
