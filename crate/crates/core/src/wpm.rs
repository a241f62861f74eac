//! Weighted pattern, plain text.
//!
//! The pattern is coloured once. Its longest black-free run, projected onto
//! heavy letters, is searched with [`SkipSearcher`]; each hit is extended
//! to a full window and checked first letter-by-letter against the heavy
//! letters and the black-position matrix, then by its exact probability.
//! When every position is black the search degrades to checking every window.

use std::thread;

use crate::alphabet::Letter;
use crate::bounds::weight_ratio_ok;
use crate::colour::{build_black_matrix, colour_positions, BlackMatrix, Colour, Colouring};
use crate::engines::{InspectionCounter, SkipSearcher};
use crate::error::{Error, Result};
use crate::plan::SearchPlan;
use crate::report::{chunk_ranges, SearchReport};
use crate::weighted::{window_log_probability, PlainString, Threshold, WeightedString};

/// Preprocessed weighted pattern, reusable across texts.
#[derive(Debug)]
pub struct WpmQuery<'a> {
    x: &'a WeightedString,
    t: Threshold,
    colouring: Colouring,
    matrix: BlackMatrix,
    filter: Option<(SearchPlan, SkipSearcher)>,
}

impl<'a> WpmQuery<'a> {
    pub fn new(x: &'a WeightedString, t: Threshold) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::EmptyPattern);
        }
        let colouring = colour_positions(x, t);
        let matrix = build_black_matrix(x, &colouring);
        let filter = if colouring.black_count() < x.len() {
            let plan = SearchPlan::single_factor(&colouring)?;
            let searcher = SkipSearcher::new(&plan.filters[0].letters, x.sigma())?;
            Some((plan, searcher))
        } else {
            None
        };
        Ok(WpmQuery {
            x,
            t,
            colouring,
            matrix,
            filter,
        })
    }

    pub fn colouring(&self) -> &Colouring {
        &self.colouring
    }

    pub fn matrix(&self) -> &BlackMatrix {
        &self.matrix
    }

    pub fn plan(&self) -> Option<&SearchPlan> {
        self.filter.as_ref().map(|(p, _)| p)
    }

    pub fn uses_fallback(&self) -> bool {
        self.filter.is_none()
    }

    pub fn search(&self, y: &PlainString) -> Result<SearchReport> {
        self.search_parallel(y, 1)
    }

    /// Searches disjoint ranges of window starts on up to `threads` threads.
    pub fn search_parallel(&self, y: &PlainString, threads: usize) -> Result<SearchReport> {
        let (m, n) = (self.x.len(), y.len());
        if y.alphabet() != self.x.alphabet() {
            return Err(Error::AlphabetMismatch);
        }
        if m >= n {
            return Err(Error::PatternLongerThanText { m, n });
        }
        let text = y.letters();
        let mut report = SearchReport {
            used_fallback: self.uses_fallback(),
            gate_satisfied: weight_ratio_ok(self.t.z(), m, self.x.sigma()),
            ..Default::default()
        };
        let ranges = chunk_ranges(n - m + 1, threads);
        if ranges.len() == 1 {
            let (p, c, ctr) = self.scan(text, 0);
            report.absorb(p, c, ctr);
        } else {
            thread::scope(|s| {
                let handles: Vec<_> = ranges
                    .iter()
                    .map(|r| {
                        let slice = &text[r.start..r.end - 1 + m];
                        let base = r.start;
                        s.spawn(move || self.scan(slice, base))
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

    /// Positions and candidates among the windows of `text`, shifted by `base`.
    fn scan(&self, text: &[Letter], base: usize) -> (Vec<usize>, Vec<usize>, InspectionCounter) {
        let m = self.x.len();
        let mut ctr = InspectionCounter::default();
        let mut positions = Vec::new();
        let mut candidates = Vec::new();
        let Some((plan, searcher)) = &self.filter else {
            for i in 0..=text.len() - m {
                ctr.candidates += 1;
                candidates.push(base + i);
                ctr.chars_inspected += m as u64;
                ctr.full_verifications += 1;
                if self
                    .t
                    .accepts(window_log_probability(self.x, &text[i..i + m], 0))
                {
                    positions.push(base + i);
                }
            }
            return (positions, candidates, ctr);
        };
        let offset = plan.filters[0].offset;
        let mut last = None;
        for hit in searcher.find_all(text, &mut ctr) {
            let Some(start) = hit.checked_sub(offset) else {
                continue;
            };
            if start + m > text.len() || last == Some(start) {
                continue;
            }
            last = Some(start);
            ctr.candidates += 1;
            candidates.push(base + start);
            if verify_wpm_candidate(
                self.x,
                &self.colouring,
                &self.matrix,
                text,
                start,
                self.t,
                &mut ctr,
            ) {
                positions.push(base + start);
            }
        }
        (positions, candidates, ctr)
    }
}

/// All positions of `y` where a valid length-`m` factor of `x` occurs.
pub fn wpm_search(x: &WeightedString, y: &PlainString, t: Threshold) -> Result<SearchReport> {
    WpmQuery::new(x, t)?.search(y)
}

/// Checks the window `y[i..i + m]` against the weighted pattern.
///
/// The cheap stage compares grey and white positions with their heavy letter
/// and looks black positions up in `a`; only windows that survive it get
/// their probability computed.
pub fn verify_wpm_candidate(
    x: &WeightedString,
    c: &Colouring,
    a: &BlackMatrix,
    y: &[Letter],
    i: usize,
    t: Threshold,
    ctr: &mut InspectionCounter,
) -> bool {
    let m = x.len();
    let window = &y[i..i + m];
    for (j, &letter) in window.iter().enumerate() {
        ctr.chars_inspected += 1;
        let ok = match c.colour(j) {
            Colour::Black => a.contains(c.black_rank(j).expect("black rank"), letter),
            Colour::Grey | Colour::White => c.heavy(j) == Some(letter),
        };
        if !ok {
            return false;
        }
    }
    ctr.full_verifications += 1;
    t.accepts(window_log_probability(x, window, 0))
}

/// Checks every window of `y` directly.
pub fn naive_wpm(x: &WeightedString, y: &[Letter], t: Threshold) -> Vec<usize> {
    let m = x.len();
    if m == 0 || m > y.len() {
        return Vec::new();
    }
    (0..=y.len() - m)
        .filter(|&i| t.accepts(window_log_probability(x, &y[i..i + m], 0)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn t(z: f64) -> Threshold {
        Threshold::new(z).unwrap()
    }

    fn text(s: &str) -> PlainString {
        PlainString::from_str(Alphabet::dna(), s).unwrap()
    }

    fn act() -> WeightedString {
        WeightedString::new(
            Alphabet::dna(),
            [vec![(0, 1.0)], vec![(1, 0.6), (2, 0.4)], vec![(3, 1.0)]],
        )
        .unwrap()
    }

    fn maaa() -> WeightedString {
        WeightedString::new(
            Alphabet::dna(),
            [
                vec![(0, 0.5), (1, 0.5)],
                vec![(0, 1.0)],
                vec![(0, 1.0)],
                vec![(0, 1.0)],
            ],
        )
        .unwrap()
    }

    #[test]
    fn gacta() {
        let r = wpm_search(&act(), &text("GACTA"), t(2.0)).unwrap();
        assert_eq!(r.positions, vec![1]);
        assert!(!r.used_fallback);
    }

    #[test]
    fn black_first_position() {
        let x = maaa();
        let q = WpmQuery::new(&x, t(2.0)).unwrap();
        let plan = q.plan().unwrap();
        assert_eq!(plan.filters[0].offset, 1);
        assert_eq!(plan.filters[0].letters, vec![0, 0, 0]);
        let r = q.search(&text("CAAAA")).unwrap();
        assert_eq!(r.positions, vec![0, 1]);
        assert_eq!(r.candidates, vec![0, 1]);
        assert_eq!(r.counters.candidates, 2);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(Threshold::new(1.9).is_err());
        let x = act();
        assert_eq!(
            wpm_search(&x, &text("ACT"), t(2.0)),
            Err(Error::PatternLongerThanText { m: 3, n: 3 })
        );
        let other = PlainString::from_str(Alphabet::new("ACGU".chars()).unwrap(), "ACGUA").unwrap();
        assert_eq!(wpm_search(&x, &other, t(2.0)), Err(Error::AlphabetMismatch));
    }

    #[test]
    fn verification_stages() {
        let x = act();
        let tt = t(2.0);
        let c = colour_positions(&x, tt);
        let a = build_black_matrix(&x, &c);
        let y = Alphabet::dna().encode("ACTAGT").unwrap();
        let mut ctr = InspectionCounter::default();
        assert!(verify_wpm_candidate(&x, &c, &a, &y, 0, tt, &mut ctr));
        assert_eq!(ctr.full_verifications, 1);
        // grey mismatch (G is not heavy) stops before the probability stage
        let y = Alphabet::dna().encode("AGT").unwrap();
        let mut ctr = InspectionCounter::default();
        assert!(!verify_wpm_candidate(&x, &c, &a, &y, 0, tt, &mut ctr));
        assert_eq!(ctr.full_verifications, 0);

        // black position where the letter does not occur
        let x = maaa();
        let c = colour_positions(&x, tt);
        let a = build_black_matrix(&x, &c);
        let y = Alphabet::dna().encode("GAAA").unwrap();
        let mut ctr = InspectionCounter::default();
        assert!(!verify_wpm_candidate(&x, &c, &a, &y, 0, tt, &mut ctr));
        assert_eq!(ctr.full_verifications, 0);

        // passes the letter checks with probability 0.4 < 1/2
        let x = WeightedString::new(
            Alphabet::dna(),
            [vec![(0, 0.4), (1, 0.35), (2, 0.25)], vec![(0, 1.0)]],
        )
        .unwrap();
        let c = colour_positions(&x, tt);
        let a = build_black_matrix(&x, &c);
        let y = Alphabet::dna().encode("AA").unwrap();
        let mut ctr = InspectionCounter::default();
        assert!(!verify_wpm_candidate(&x, &c, &a, &y, 0, tt, &mut ctr));
        assert_eq!(ctr.full_verifications, 1);
    }

    #[test]
    fn all_black_pattern_falls_back() {
        let half = vec![(0, 0.5), (1, 0.5)];
        let x = WeightedString::new(Alphabet::dna(), [half.clone(), half.clone(), half]).unwrap();
        let y = text("ACAGTAACCA");
        let r = wpm_search(&x, &y, t(2.0)).unwrap();
        assert!(r.used_fallback);
        // each window has probability 1/8 < 1/2
        assert!(r.positions.is_empty());
        let r = wpm_search(&x, &y, t(8.0)).unwrap();
        assert_eq!(r.positions, naive_wpm(&x, y.letters(), t(8.0)));
        assert_eq!(r.positions, vec![0, 5, 6, 7]);
    }

    #[test]
    fn short_text_checks_two_windows() {
        let x = act();
        let r = wpm_search(&x, &text("ACTT"), t(2.0)).unwrap();
        assert_eq!(r.positions, vec![0]);
        assert!(r.candidates.len() <= 2);
    }

    #[test]
    fn parallel_matches_sequential() {
        let x = maaa();
        let y = text("CAAAAGCAAATTAAAAC");
        let q = WpmQuery::new(&x, t(2.0)).unwrap();
        let seq = q.search(&y).unwrap();
        for threads in 2..6 {
            assert_eq!(
                q.search_parallel(&y, threads).unwrap().positions,
                seq.positions
            );
        }
    }
}
