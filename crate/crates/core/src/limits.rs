//! Size caps for the exact (exponential) solvers.
//!
//! Every exact routine refuses inputs above its cap with
//! [`Error::CapExceeded`](crate::Error::CapExceeded) instead of silently
//! switching to a heuristic.

/// Caps shared by all modules. `Default` gives the stock values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Largest vertex count accepted by the exact chromatic-number solver.
    pub chromatic_cap: usize,
    /// Largest vertex count accepted by longest-path enumeration.
    pub path_cap: usize,
    /// Largest number of ordered partitions (`k^|V|`) an exhaustive
    /// robustness check may visit.
    pub exhaustive_cap: u64,
    /// Largest vertex count `build` may produce.
    pub build_budget: u64,
    /// Largest class count for inclusion–exclusion subset enumeration.
    pub subset_cap: usize,
    /// Largest period `N` for direct enumeration over `[0, N)`.
    pub period_cap: u64,
    /// Largest number of class placements a direct (pruned depth-first)
    /// split search may make before giving up.
    pub split_node_budget: u64,
    /// Largest class count for split searches using inclusion–exclusion.
    pub split_ie_cap: usize,
    /// Largest vertex count for the small-modulus realization search.
    pub search_vertex_cap: usize,
    /// Largest vertex count the cover pipeline hands to the prime-tower
    /// realization (its moduli grow like a primorial per vertex).
    pub tower_vertex_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            chromatic_cap: 64,
            path_cap: 16,
            exhaustive_cap: 1 << 20,
            build_budget: 50_000,
            subset_cap: 24,
            period_cap: 10_000_000,
            split_node_budget: 1 << 26,
            split_ie_cap: 15,
            search_vertex_cap: 8,
            tower_vertex_cap: 64,
        }
    }
}
