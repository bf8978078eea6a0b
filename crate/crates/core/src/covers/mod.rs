//! Residue classes `a(n) = {x : x ≡ a (mod n)}` and finite systems of them.
//!
//! All arithmetic is arbitrary precision: moduli produced by
//! [`realize`] outgrow 64 bits after a handful of vertices.

pub mod arith;
mod complete;
mod pipeline;
mod profile;
mod realize;
mod split;

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{Error, Graph, Result};

pub use complete::{complete_to_exact, completion_count, Completion};
pub use pipeline::{
    irreducible_cover_pipeline, PipelineOptions, PipelineReport, RealizationKind,
    RealizationMode, SplitCertificate,
};
pub use profile::{coverage_profile, is_exact_m_cover, is_m_cover, omega_consistency, CoverageProfile, Engine, OmegaCheck};
pub use realize::{realize, search_small_realization, SmallSearch};
pub use split::{sample_two_1cover_splits, split_into_exact_covers, union_of_two_1covers, ExactSplit, Split};

/// `a(n)` stored with `0 <= a < n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueClass {
    modulus: BigUint,
    residue: BigUint,
}

impl ResidueClass {
    /// Normalizes `a` into `0..n`. `n = 0` is an error.
    pub fn new(a: BigInt, n: BigUint) -> Result<Self> {
        if n.is_zero() {
            return Err(Error::ZeroModulus);
        }
        let residue = a.mod_floor(&BigInt::from(n.clone())).into_parts().1;
        Ok(ResidueClass {
            modulus: n,
            residue,
        })
    }

    pub fn from_u64(a: u64, n: u64) -> Result<Self> {
        Self::new(BigInt::from(a), BigUint::from(n))
    }

    pub fn residue(&self) -> &BigUint {
        &self.residue
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    pub fn contains(&self, x: &BigInt) -> bool {
        x.mod_floor(&BigInt::from(self.modulus.clone())).into_parts().1 == self.residue
    }

    /// Nonempty intersection, decided by `gcd(n1, n2) | a1 - a2`.
    pub fn intersects(&self, other: &ResidueClass) -> bool {
        let g = self.modulus.gcd(&other.modulus);
        let diff = if self.residue >= other.residue {
            &self.residue - &other.residue
        } else {
            &other.residue - &self.residue
        };
        (diff % g).is_zero()
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.residue, self.modulus)
    }
}

/// [`ResidueClass::intersects`] as a free function.
pub fn classes_intersect(c1: &ResidueClass, c2: &ResidueClass) -> bool {
    c1.intersects(c2)
}

/// An ordered list of residue classes; duplicates allowed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoveringSystem {
    classes: Vec<ResidueClass>,
}

impl CoveringSystem {
    pub fn new(classes: Vec<ResidueClass>) -> Self {
        CoveringSystem { classes }
    }

    /// Convenience constructor from `(a, n)` pairs.
    pub fn from_pairs(pairs: &[(u64, u64)]) -> Result<Self> {
        pairs
            .iter()
            .map(|&(a, n)| ResidueClass::from_u64(a, n))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    pub fn classes(&self) -> &[ResidueClass] {
        &self.classes
    }

    pub fn into_classes(self) -> Vec<ResidueClass> {
        self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn push(&mut self, class: ResidueClass) {
        self.classes.push(class);
    }

    /// `N = lcm(n_1, …, n_s)`; 1 for the empty system.
    pub fn period(&self) -> BigUint {
        self.classes
            .iter()
            .fold(BigUint::one(), |acc, c| acc.lcm(&c.modulus))
    }

    /// The classes at the given indices, in the given order.
    pub fn subsystem(&self, indices: &[usize]) -> CoveringSystem {
        CoveringSystem::new(indices.iter().map(|&i| self.classes[i].clone()).collect())
    }

    /// `w(x)`: number of classes containing `x`.
    pub fn covering_function(&self, x: &BigInt) -> usize {
        self.classes.iter().filter(|c| c.contains(x)).count()
    }

    /// Graph on the class indices with an edge for every intersecting pair.
    pub fn intersection_graph(&self) -> Graph {
        let s = self.len();
        let edges = (0..s).flat_map(|i| {
            (i + 1..s)
                .filter(move |&j| self.classes[i].intersects(&self.classes[j]))
                .map(move |j| (i, j))
        });
        Graph::from_edges(s, edges).expect("pairs are distinct and in range")
    }

    /// `Σ_t N / n_t`, the total multiplicity over one period.
    pub(crate) fn total_multiplicity(&self, period: &BigUint) -> BigUint {
        self.classes.iter().map(|c| period / &c.modulus).sum()
    }
}

/// Free-function form of [`CoveringSystem::covering_function`].
pub fn covering_function(sys: &CoveringSystem, x: &BigInt) -> usize {
    sys.covering_function(x)
}

/// Free-function form of [`CoveringSystem::intersection_graph`].
pub fn intersection_graph(sys: &CoveringSystem) -> Graph {
    sys.intersection_graph()
}
