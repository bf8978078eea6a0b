//! Topping a system up to an exact `m`-cover with classes modulo its period.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

use super::profile::{covering_values, small_period};
use super::{CoveringSystem, ResidueClass};
use crate::{Error, Limits, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completion {
    /// The input classes followed by the added `x(N)` classes.
    pub system: CoveringSystem,
    /// Number of added classes.
    pub added: usize,
}

/// `r = m·N − Σ_t N/n_t`, the number of classes modulo `N` an exact
/// completion adds. Computable without enumerating the period.
pub fn completion_count(sys: &CoveringSystem, m: usize) -> Result<BigUint> {
    let period = sys.period();
    let total = sys.total_multiplicity(&period);
    let want = &period * BigUint::from(m);
    if total > want {
        return Err(Error::Precondition(format!(
            "total multiplicity {total} exceeds m·N = {want}, so some x is covered more than {m} times"
        )));
    }
    Ok(want - total)
}

/// Appends `m − w(x)` copies of `x(N)` for each `x` in `[0, N)`, ascending.
/// The input classes keep their positions; the result is verified to be an
/// exact `m`-cover.
pub fn complete_to_exact(sys: &CoveringSystem, m: usize, limits: &Limits) -> Result<Completion> {
    let period = sys.period();
    let Some(n) = small_period(&period, limits) else {
        return Err(Error::cap("period for completion", period, limits.period_cap));
    };
    let w = covering_values(sys, n);
    if let Some(x) = w.iter().position(|&c| c as usize > m) {
        return Err(Error::Precondition(format!(
            "w({x}) = {} exceeds m = {m}",
            w[x]
        )));
    }
    let mut classes: Vec<ResidueClass> = sys.classes().to_vec();
    for (x, &c) in w.iter().enumerate() {
        for _ in c as usize..m {
            classes.push(ResidueClass::new(BigInt::from(x), period.clone()).expect("period is positive"));
        }
    }
    let added = classes.len() - sys.len();
    let system = CoveringSystem::new(classes);
    if covering_values(&system, n).iter().any(|&c| c as usize != m) {
        return Err(Error::Invariant("completion is not an exact cover".into()));
    }
    debug_assert_eq!(completion_count(sys, m).ok().and_then(|r| r.to_usize()), Some(added));
    Ok(Completion { system, added })
}
