use crate::engines::InspectionCounter;

/// Outcome of one search, shared by both pipelines.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchReport {
    /// Start positions of valid occurrences, strictly increasing.
    pub positions: Vec<usize>,
    pub counters: InspectionCounter,
    /// The filter could not be built and every window was verified.
    pub used_fallback: bool,
    /// Whether the weight ratio admits expected sublinear search.
    pub gate_satisfied: bool,
    /// Distinct window starts that were handed to verification, increasing.
    pub candidates: Vec<usize>,
}

impl SearchReport {
    pub(crate) fn absorb(
        &mut self,
        positions: Vec<usize>,
        candidates: Vec<usize>,
        ctr: InspectionCounter,
    ) {
        self.positions.extend(positions);
        self.candidates.extend(candidates);
        self.counters.merge(&ctr);
    }

    pub(crate) fn normalize(&mut self) {
        self.positions.sort_unstable();
        self.positions.dedup();
        self.candidates.sort_unstable();
        self.candidates.dedup();
    }
}

/// Splits window starts `0..windows` into at most `threads` contiguous ranges.
pub(crate) fn chunk_ranges(windows: usize, threads: usize) -> Vec<std::ops::Range<usize>> {
    let threads = threads.clamp(1, windows.max(1));
    let size = windows.div_ceil(threads);
    (0..threads)
        .map(|k| k * size..((k + 1) * size).min(windows))
        .filter(|r| !r.is_empty())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunks_cover_everything() {
        assert_eq!(chunk_ranges(10, 3), vec![0..4, 4..8, 8..10]);
        assert_eq!(chunk_ranges(2, 8), vec![0..1, 1..2]);
        assert_eq!(chunk_ranges(5, 0), vec![0..5]);
    }
}
