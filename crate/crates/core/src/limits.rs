use serde::{Deserialize, Serialize};

/// Resource limits and the seed shared by every exhaustive or sampled scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Rings above this many elements are rejected when built.
    pub max_ring_size: usize,
    /// Largest number of candidate tuples an absorbing check scans exhaustively.
    pub max_scan_tuples: u64,
    /// Largest number of vectors a projective-zero check scans exhaustively.
    pub max_vector_scan: u64,
    /// Draws per sampled scan.
    pub sample_count: u64,
    pub seed: u64,
    /// Whether absorbing checks over the tuple cap fall back to sampling
    /// instead of failing. Vector scans always fall back.
    pub allow_sampling: bool,
    /// Largest n tried by the ω search.
    pub omega_cap: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_ring_size: crate::ring::DEFAULT_MAX_RING_SIZE,
            max_scan_tuples: 50_000_000,
            max_vector_scan: 1_000_000,
            sample_count: 4096,
            seed: 0,
            allow_sampling: false,
            omega_cap: 4,
        }
    }
}
