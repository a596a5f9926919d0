//! Shared error type for the enumeration, solving, and bound operations.

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComputeError {
    #[error("perfect matching enumeration exceeded cap {cap}")]
    PmCapExceeded { cap: usize },
    #[error("nice cycle enumeration exceeded cap {cap}")]
    CycleCapExceeded { cap: usize },
    #[error("automorphism enumeration exceeded cap {cap}")]
    AutCapExceeded { cap: usize },
    #[error("instance has {n} vertices, exhaustive search guarded at {limit}")]
    GuardExceeded { n: usize, limit: usize },
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is empty")]
    EmptyGraph,
    #[error("edge set is not a perfect matching")]
    NotAPerfectMatching,
    #[error("matchings belong to different graphs or universes")]
    UniverseMismatch,
    #[error("set is not a subset of the matching")]
    NotASubsetOfMatching,
    #[error("vertex sequence is not a simple cycle of the graph: {0}")]
    NotACycle(String),
    #[error("power iteration did not converge within {iterations} iterations")]
    NonConvergence { iterations: usize },
    #[error("edge multiplicity {found} in the matching family exceeds declared k = {k}")]
    MultiplicityExceedsK { found: usize, k: usize },
    #[error("graph is not edge-transitive")]
    NotEdgeTransitive,
    #[error("parameter out of domain: {0}")]
    Domain(String),
}

impl ComputeError {
    /// True for cap and guard saturations, which callers may treat as
    /// "fall back to bounds" rather than hard failures.
    pub fn is_saturation(&self) -> bool {
        matches!(
            self,
            ComputeError::PmCapExceeded { .. }
                | ComputeError::CycleCapExceeded { .. }
                | ComputeError::AutCapExceeded { .. }
                | ComputeError::GuardExceeded { .. }
                | ComputeError::NonConvergence { .. }
        )
    }
}
