use crate::alphabet::Letter;
use crate::bounds::partition_fragments;
use crate::colour::{heavy_projection, longest_clean_run, Colouring};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlanMode {
    /// One filter: the heavy projection of the longest black-free run.
    SingleFactor,
    /// `ell + 1` contiguous fragments covering the whole pattern.
    Fragments,
}

/// A plain filter string and where it sits inside the pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filter {
    pub offset: usize,
    pub letters: Vec<Letter>,
}

/// Filter strings extracted from a pattern before the text is scanned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchPlan {
    pub mode: PlanMode,
    pub filters: Vec<Filter>,
}

impl SearchPlan {
    pub fn single_factor(c: &Colouring) -> Result<Self> {
        let (start, len) = longest_clean_run(c)?;
        let letters = heavy_projection(c, start..start + len)?;
        Ok(SearchPlan {
            mode: PlanMode::SingleFactor,
            filters: vec![Filter {
                offset: start,
                letters,
            }],
        })
    }

    pub fn fragments(pattern: &[Letter], ell: usize) -> Result<Self> {
        let filters = partition_fragments(pattern.len(), ell)?
            .into_iter()
            .map(|(offset, len)| Filter {
                offset,
                letters: pattern[offset..offset + len].to_vec(),
            })
            .collect();
        Ok(SearchPlan {
            mode: PlanMode::Fragments,
            filters,
        })
    }
}
