use crate::dp::ParetoColumn;
use crate::model::{Evaluation, Selection};

/// Result of a solver run.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub selection: Selection,
    /// Recomputed from `selection` with [`crate::Instance::benefit`].
    pub evaluation: Evaluation,
    pub stats: SolveStats,
}

/// Bookkeeping collected while building DP columns.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SolveStats {
    /// Best value in the final column, in the solver's own objective space
    /// (`B` for the exact DP, `B'` for the FPTAS).
    pub value: f64,
    /// Largest column size seen.
    pub peak_entries: usize,
    /// Largest number of entries with non-negative value in one column.
    pub peak_nonnegative_entries: usize,
    /// Sum of all column sizes.
    pub stored_entries: usize,
}

impl SolveStats {
    pub(crate) fn record(&mut self, column: &ParetoColumn) {
        let nonnegative = column.entries().iter().filter(|e| e.benefit >= 0.0).count();
        self.peak_entries = self.peak_entries.max(column.len());
        self.peak_nonnegative_entries = self.peak_nonnegative_entries.max(nonnegative);
        self.stored_entries += column.len();
    }
}
