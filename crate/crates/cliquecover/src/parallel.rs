//! Rayon-parallel versions of the partition checks.
//!
//! Work is spread over the current rayon pool, but the verdict is the one the
//! sequential checker would give: the first failing partition in
//! enumeration (or trial) order, and the same `checked` count.

use cliquecover_core::clique::clique_number_within;
use cliquecover_core::construct::{
    partition_attains, sampled_assignment, CheckMode, Counterexample, LayeredGraph, Verdict, Witness,
};
use cliquecover_core::{Error, Graph, Limits, Result, VertexSet};
use num_bigint::BigUint;
use rayon::prelude::*;

fn exhaustive_total(n: usize, k: usize, cap: u64) -> Result<u64> {
    match u32::try_from(n).ok().and_then(|n| (k as u64).checked_pow(n)) {
        Some(total) if total <= cap => Ok(total),
        _ => Err(Error::CapExceeded {
            what: "exhaustive partition count",
            required: BigUint::from(k).pow(n as u32).to_string(),
            cap: cap.to_string(),
        }),
    }
}

/// Base-`k` digits of `index`, vertex 0 least significant.
fn decode(mut index: u64, n: usize, k: usize) -> Vec<usize> {
    (0..n)
        .map(|_| {
            let d = (index % k as u64) as usize;
            index /= k as u64;
            d
        })
        .collect()
}

/// Parallel [`check_robustness`](cliquecover_core::construct::check_robustness).
pub fn check_robustness(g: &Graph, target: usize, k: usize, mode: CheckMode, limits: &Limits) -> Result<Verdict> {
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    let n = g.n();
    let (count, assignment): (u64, Box<dyn Fn(u64) -> Vec<usize> + Sync>) = match mode {
        CheckMode::Exhaustive => (
            exhaustive_total(n, k, limits.exhaustive_cap)?,
            Box::new(move |i| decode(i, n, k)),
        ),
        CheckMode::Sampled { seed, trials } => (trials, Box::new(move |t| sampled_assignment(seed, t, n, k))),
    };
    let failure = (0..count)
        .into_par_iter()
        .find_first(|&i| !partition_attains(g, target, k, &assignment(i)));
    Ok(match failure {
        None => Verdict {
            checked: count,
            counterexample: None,
        },
        Some(index) => {
            let assignment = assignment(index);
            let part_omegas = (0..k)
                .map(|t| {
                    let part = VertexSet::from_vertices(n, (0..n).filter(|&v| assignment[v] == t))
                        .expect("vertices in range");
                    clique_number_within(g, &part).0
                })
                .collect();
            Verdict {
                checked: index + 1,
                counterexample: Some(Counterexample {
                    index,
                    assignment,
                    part_omegas,
                }),
            }
        }
    })
}

/// Witnesses for trials `0..trials` of the sampled partitions, in trial
/// order. Stops at the first trial whose extraction fails.
pub fn sampled_witnesses(lg: &LayeredGraph, seed: u64, trials: u64) -> Result<Vec<Witness>> {
    let n = lg.graph().n();
    (0..trials)
        .into_par_iter()
        .map(|t| lg.extract_witness_assignment(&sampled_assignment(seed, t, n, lg.k())))
        .collect()
}
