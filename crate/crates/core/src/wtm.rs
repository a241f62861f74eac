//! Plain pattern, weighted text.
//!
//! The pattern is cut into `ell + 1` fragments, where `ell` bounds the black
//! positions of any valid window; a valid occurrence therefore leaves at
//! least one fragment on black-free text, where the text reads as its heavy
//! letters. The fragments are searched over that classified view, which is
//! computed lazily, one position at a time, and never materialized.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU8, AtomicUsize, Ordering};
use std::thread;

use crate::alphabet::{Alphabet, Letter};
use crate::bounds::{black_bound, weight_ratio_ok};
use crate::colour::classify;
use crate::engines::{InspectionCounter, MultiSearcher, TextAccess, TextWindow};
use crate::error::{Error, Result};
use crate::plan::SearchPlan;
use crate::report::{chunk_ranges, SearchReport};
use crate::weighted::{PlainString, Threshold, WeightedString};

const UNSET: u8 = u8::MAX;

/// The classified view of a weighted text: the heavy letter at grey and
/// white positions, the sentinel at black ones.
///
/// Each position is classified on first access and memoized; concurrent
/// readers may race on a first write, which stores the same value.
#[derive(Debug)]
pub struct LazyClassifiedText<'a> {
    y: &'a WeightedString,
    t: Threshold,
    memo: Vec<AtomicU8>,
    classified: AtomicUsize,
}

impl<'a> LazyClassifiedText<'a> {
    pub fn new(y: &'a WeightedString, t: Threshold) -> Self {
        LazyClassifiedText {
            y,
            t,
            memo: (0..y.len()).map(|_| AtomicU8::new(UNSET)).collect(),
            classified: AtomicUsize::new(0),
        }
    }

    pub fn sentinel(&self) -> Letter {
        self.y.alphabet().sentinel()
    }

    /// Number of positions classified so far.
    pub fn classified(&self) -> usize {
        self.classified.load(Ordering::Relaxed)
    }

    pub fn classify_text_position(&self, i: usize) -> Letter {
        let v = self.memo[i].load(Ordering::Relaxed);
        if v != UNSET {
            return v;
        }
        let v = classify(self.y.position(i), self.t)
            .1
            .unwrap_or_else(|| self.sentinel());
        if self.memo[i]
            .compare_exchange(UNSET, v, Ordering::Relaxed, Ordering::Relaxed)
            .is_ok()
        {
            self.classified.fetch_add(1, Ordering::Relaxed);
        }
        v
    }
}

impl TextAccess for LazyClassifiedText<'_> {
    fn len(&self) -> usize {
        self.memo.len()
    }

    #[inline]
    fn letter_at(&self, i: usize) -> Letter {
        self.classify_text_position(i)
    }
}

/// Preprocessed plain pattern, reusable across texts.
#[derive(Debug)]
pub struct WtmQuery {
    pattern: Vec<Letter>,
    alphabet: Alphabet,
    t: Threshold,
    ell: usize,
    filter: Option<(SearchPlan, MultiSearcher)>,
}

impl WtmQuery {
    pub fn new(x: &PlainString, t: Threshold) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::EmptyPattern);
        }
        let ell = black_bound(t);
        let sigma = x.alphabet().size();
        let filter = if ell < x.len() {
            let plan = SearchPlan::fragments(x.letters(), ell)?;
            let fragments: Vec<_> = plan
                .filters
                .iter()
                .enumerate()
                .map(|(k, f)| (k, f.letters.clone()))
                .collect();
            let searcher = MultiSearcher::new(&fragments, sigma)?;
            Some((plan, searcher))
        } else {
            None
        };
        Ok(WtmQuery {
            pattern: x.letters().to_vec(),
            alphabet: x.alphabet().clone(),
            t,
            ell,
            filter,
        })
    }

    /// Black-position bound used to size the fragment set.
    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn plan(&self) -> Option<&SearchPlan> {
        self.filter.as_ref().map(|(p, _)| p)
    }

    pub fn uses_fallback(&self) -> bool {
        self.filter.is_none()
    }

    pub fn search(&self, y: &WeightedString) -> Result<SearchReport> {
        self.search_parallel(y, 1)
    }

    pub fn search_parallel(&self, y: &WeightedString, threads: usize) -> Result<SearchReport> {
        let classified = LazyClassifiedText::new(y, self.t);
        self.search_classified(y, &classified, threads)
    }

    /// Searches with a caller-owned classified view, so its memo can be inspected.
    pub fn search_classified(
        &self,
        y: &WeightedString,
        classified: &LazyClassifiedText<'_>,
        threads: usize,
    ) -> Result<SearchReport> {
        let (m, n) = (self.pattern.len(), y.len());
        if y.alphabet() != &self.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        if m >= n {
            return Err(Error::PatternLongerThanText { m, n });
        }
        let mut report = SearchReport {
            used_fallback: self.uses_fallback(),
            gate_satisfied: weight_ratio_ok(self.t.z(), m, self.alphabet.size()),
            ..Default::default()
        };
        let ranges = chunk_ranges(n - m + 1, threads);
        if ranges.len() == 1 {
            let (p, c, ctr) = self.scan(y, classified, 0, n - m + 1);
            report.absorb(p, c, ctr);
        } else {
            thread::scope(|s| {
                let handles: Vec<_> = ranges
                    .iter()
                    .map(|r| {
                        let r = r.clone();
                        s.spawn(move || self.scan(y, classified, r.start, r.end))
                    })
                    .collect();
                for h in handles {
                    let (p, c, ctr) = h.join().expect("search thread panicked");
                    report.absorb(p, c, ctr);
                }
            });
        }
        report.normalize();
        Ok(report)
    }

    /// Windows starting in `first..last`.
    fn scan(
        &self,
        y: &WeightedString,
        classified: &LazyClassifiedText<'_>,
        first: usize,
        last: usize,
    ) -> (Vec<usize>, Vec<usize>, InspectionCounter) {
        let m = self.pattern.len();
        let mut ctr = InspectionCounter::default();
        let starts: BTreeSet<usize> = match &self.filter {
            None => (first..last).collect(),
            Some((plan, searcher)) => {
                let view = TextWindow::new(classified, first, last - 1 + m - first);
                searcher
                    .find_all(&view, &mut ctr)
                    .into_iter()
                    .filter_map(|(p, k)| p.checked_sub(plan.filters[k].offset))
                    .filter(|&s| s + first < last)
                    .map(|s| s + first)
                    .collect()
            }
        };
        let mut positions = Vec::new();
        for &i in &starts {
            ctr.candidates += 1;
            if verify_wtm_candidate(&self.pattern, y, i, self.t, &mut ctr) {
                positions.push(i);
            }
        }
        (positions, starts.into_iter().collect(), ctr)
    }
}

/// All positions of `y` where a valid factor equal to `x` occurs.
pub fn wtm_search(x: &PlainString, y: &WeightedString, t: Threshold) -> Result<SearchReport> {
    WtmQuery::new(x, t)?.search(y)
}

/// One pass over `y[i..i + m]` accumulating the log-probability of `x`.
pub fn verify_wtm_candidate(
    x: &[Letter],
    y: &WeightedString,
    i: usize,
    t: Threshold,
    ctr: &mut InspectionCounter,
) -> bool {
    ctr.full_verifications += 1;
    let mut acc = 0.0;
    for (j, &letter) in x.iter().enumerate() {
        ctr.chars_inspected += 1;
        let p = y.prob(i + j, letter);
        if p <= 0.0 {
            return false;
        }
        if p < 1.0 {
            acc += p.log2();
        }
    }
    t.accepts(acc)
}

/// Verifies every window of `y`.
pub fn naive_wtm(x: &[Letter], y: &WeightedString, t: Threshold) -> Vec<usize> {
    let m = x.len();
    if m == 0 || m > y.len() {
        return Vec::new();
    }
    let mut ctr = InspectionCounter::default();
    (0..=y.len() - m)
        .filter(|&i| verify_wtm_candidate(x, y, i, t, &mut ctr))
        .collect()
}
