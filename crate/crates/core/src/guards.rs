/// Size limits for the exponential computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Edge limit for the edge-subset expansion.
    pub max_edges: usize,
    /// Edge limit for chromatic polynomial deletion-contraction.
    pub max_chrom_edges: usize,
    /// Vertex limit for full connected-partition scans.
    pub max_vertices: usize,
    /// Vertex limit for the vertex-block expansion.
    pub max_block_vertices: usize,
    /// Degree limit for transition matrices.
    pub max_degree: usize,
    /// Graphs with at most this many edges are checked with the edge-subset
    /// expansion; larger ones fall back to the vertex-block expansion.
    pub oracle_edges: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_edges: 26,
            max_chrom_edges: 40,
            max_vertices: 14,
            max_block_vertices: 16,
            max_degree: crate::symfunc::DEFAULT_MAX_DEGREE,
            oracle_edges: 20,
        }
    }
}
