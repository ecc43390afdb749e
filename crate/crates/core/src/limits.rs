//! Size caps shared by the enumeration-heavy operations.

/// Configurable caps. Every operation that can blow up checks one of these
/// and returns [`crate::Error::CapExceeded`] instead of running away.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum group order for explicit element enumeration.
    pub max_elements: u64,
    /// Maximum number of cells `n^k` in a tuple-orbit table.
    pub max_tuple_cells: u64,
    /// Maximum degree for the backtracking closure search.
    pub max_search_degree: usize,
    /// Maximum degree for the naive `Sym(n)` filter.
    pub max_naive_degree: usize,
    /// Maximum degree for the exact base-number search.
    pub max_base_degree: usize,
    /// Maximum order for Cayley tables.
    pub max_table_order: usize,
    /// Maximum order for subgroup-lattice and representation enumeration.
    pub max_lattice_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: 100_000,
            max_tuple_cells: 10_000_000,
            max_search_degree: 12,
            max_naive_degree: 8,
            max_base_degree: 16,
            max_table_order: 128,
            max_lattice_order: 64,
        }
    }
}

impl Limits {
    pub fn with_search_degree(mut self, degree: usize) -> Self {
        self.max_search_degree = degree;
        self
    }
}
