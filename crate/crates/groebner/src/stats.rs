//! Run counters reported by every engine.

use serde::Serialize;

/// Counters describing one engine run. Engines that have no concept of a
/// particular counter (e.g. criterion rejections in the Buchberger oracle)
/// leave it at zero.
#[derive(Debug, Default, Clone, PartialEq, Eq, Serialize)]
pub struct RunStats {
    /// Critical pairs ever enqueued.
    pub pairs_created: u64,
    /// Pairs discarded by the syzygy criterion.
    pub rejected_syzygy: u64,
    /// Pairs discarded by the rewritten criterion.
    pub rejected_rewritten: u64,
    /// Pairs discarded because both sides multiply to the same signature.
    pub rejected_sig_tie: u64,
    /// Individual top-reduction steps performed.
    pub reduction_steps: u64,
    /// S-polynomials that reduced all the way to zero.
    pub zero_reductions: u64,
    /// Nonzero polynomials in the final basis.
    pub basis_size: u64,
    /// Wall-clock time of the run.
    pub elapsed_ms: u64,
}
