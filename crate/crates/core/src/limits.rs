/// Run-level resource caps.
///
/// Every cap is checked where the work happens; exceeding one is reported as
/// [`crate::Error::ResourceLimit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of S-pairs processed by one Buchberger run.
    pub max_pairs: usize,
    /// Maximum number of terms in any intermediate polynomial.
    pub max_terms: usize,
    /// Maximum number of search nodes in one Hilbert function evaluation.
    pub max_hilbert_nodes: usize,
    /// Maximum number of faces enumerated for one restricted complex.
    pub max_faces: usize,
    /// Largest vertex count accepted by the exhaustive cut set scan.
    pub max_cutset_vertices: usize,
    /// Largest vertex count for the iterated-intersection decomposition check.
    pub max_decomposition_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_pairs: 2_000_000,
            max_terms: 200_000,
            max_hilbert_nodes: 200_000_000,
            max_faces: 5_000_000,
            max_cutset_vertices: 20,
            max_decomposition_vertices: 6,
        }
    }
}
