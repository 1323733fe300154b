//! Size limits and the flag-trust switch shared by all algorithms.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    /// Vertex limit for partition enumeration, subset scans and validation.
    pub max_vertices: usize,
    /// Vertex limit for the component decomposition.
    pub max_component_vertices: usize,
    /// Largest number of partitions a single enumeration may visit.
    pub max_partitions: u64,
    /// Edge limit for searches over edge subsets.
    pub max_edges: usize,
    /// Edge limit for exhaustive orientation search.
    pub max_orientation_edges: usize,
    /// Cap on states explored by closure searches.
    pub max_states: usize,
    /// Run the exhaustive packing oracle when `(m+1)^|E|` is at most this.
    pub certify_assignments: u64,
    /// Trust declared set-function flags instead of validating them.
    pub trust_flags: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_vertices: 12,
            max_component_vertices: 10,
            max_partitions: 4_213_597,
            max_edges: 24,
            max_orientation_edges: 20,
            max_states: 200_000,
            certify_assignments: 20_000,
            trust_flags: false,
        }
    }
}

impl Config {
    pub fn trusting() -> Self {
        Config { trust_flags: true, ..Config::default() }
    }

    pub(crate) fn check(&self, what: &'static str, size: usize, limit: usize) -> Result<()> {
        if size > limit {
            Err(Error::LimitExceeded { what, size: size as u64, limit: limit as u64 })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_vertices(&self, n: usize) -> Result<()> {
        self.check("vertex count", n, self.max_vertices)
    }

    pub(crate) fn check_edges(&self, m: usize) -> Result<()> {
        self.check("edge count", m, self.max_edges)
    }
}
