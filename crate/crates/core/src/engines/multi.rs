use crate::alphabet::Letter;
use crate::error::{Error, Result};

use super::{gram_length, InspectionCounter, TextAccess};

const MAX_BLOCK: usize = 3;
const MAX_TABLE: usize = 1 << 22;

/// Set-wise backward search (Wu-Manber).
///
/// The scan window has the length `lmin` of the shortest pattern. The block
/// of `b = min(3, lmin)` letters ending the window indexes a shift table;
/// a zero shift hands the window to the patterns whose `lmin`-prefix ends
/// with that block.
#[derive(Debug, Clone)]
pub struct MultiSearcher {
    patterns: Vec<(usize, Vec<Letter>)>,
    lmin: usize,
    radix: usize,
    b: usize,
    shift: Vec<u32>,
    bucket_start: Vec<u32>,
    bucket: Vec<u32>,
}

impl MultiSearcher {
    /// `patterns` are `(id, letters)` pairs; ids are reported back verbatim.
    pub fn new(patterns: &[(usize, Vec<Letter>)], sigma: usize) -> Result<Self> {
        if patterns.is_empty() || patterns.iter().any(|(_, p)| p.is_empty()) {
            return Err(Error::EmptyPattern);
        }
        let lmin = patterns.iter().map(|(_, p)| p.len()).min().unwrap();
        let radix = sigma + 1;
        let b = gram_length(sigma, usize::MAX, MAX_BLOCK.min(lmin), MAX_TABLE);
        let size = radix.pow(b as u32);

        let mut shift = vec![(lmin - b + 1) as u32; size];
        let mut counts = vec![0u32; size + 1];
        for (_, p) in patterns {
            for end in b - 1..lmin {
                let h = hash(&p[end + 1 - b..=end], radix);
                shift[h] = shift[h].min((lmin - 1 - end) as u32);
            }
            counts[hash(&p[lmin - b..lmin], radix) + 1] += 1;
        }
        for h in 0..size {
            counts[h + 1] += counts[h];
        }
        let mut fill = counts.clone();
        let mut bucket = vec![0u32; patterns.len()];
        for (k, (_, p)) in patterns.iter().enumerate() {
            let h = hash(&p[lmin - b..lmin], radix);
            bucket[fill[h] as usize] = k as u32;
            fill[h] += 1;
        }
        Ok(MultiSearcher {
            patterns: patterns.to_vec(),
            lmin,
            radix,
            b,
            shift,
            bucket_start: counts,
            bucket,
        })
    }

    pub fn block_length(&self) -> usize {
        self.b
    }

    pub fn shortest(&self) -> usize {
        self.lmin
    }

    /// Every `(position, id)` at which a pattern occurs, sorted.
    pub fn find_all<T: TextAccess + ?Sized>(
        &self,
        text: &T,
        ctr: &mut InspectionCounter,
    ) -> Vec<(usize, usize)> {
        let n = text.len();
        let (lmin, b) = (self.lmin, self.b);
        let mut out = Vec::new();
        let mut end = lmin - 1;
        while end < n {
            let mut h = 0;
            for k in end + 1 - b..=end {
                h = h * self.radix + ctr.read(text, k) as usize;
            }
            let sh = self.shift[h] as usize;
            if sh > 0 {
                end += sh;
                continue;
            }
            let start = end + 1 - lmin;
            let range = self.bucket_start[h] as usize..self.bucket_start[h + 1] as usize;
            for &k in &self.bucket[range] {
                let (id, p) = &self.patterns[k as usize];
                if start + p.len() > n {
                    continue;
                }
                // The block p[lmin - b..lmin] is already known to match.
                let head = (0..lmin - b).all(|j| ctr.read(text, start + j) == p[j]);
                if head && (lmin..p.len()).all(|j| ctr.read(text, start + j) == p[j]) {
                    out.push((start, *id));
                }
            }
            end += 1;
        }
        out.sort_unstable();
        out
    }
}

fn hash(gram: &[Letter], radix: usize) -> usize {
    gram.iter().fold(0, |h, &c| h * radix + c as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(patterns: &[(usize, Vec<Letter>)], text: &[Letter]) -> Vec<(usize, usize)> {
        MultiSearcher::new(patterns, 4)
            .unwrap()
            .find_all(text, &mut InspectionCounter::default())
    }

    #[test]
    fn examples() {
        // A=0, C=1, lambda=4
        assert_eq!(
            run(&[(0, vec![0]), (1, vec![1])], &[0, 4, 1]),
            vec![(0, 0), (2, 1)]
        );
        // "AB" over an alphabet whose second letter is 1
        assert_eq!(run(&[(0, vec![0, 1])], &[0, 1, 0, 1]), vec![(0, 0), (2, 0)]);
        assert!(run(&[(0, vec![0, 1, 2])], &[0, 1]).is_empty());
    }

    #[test]
    fn mixed_lengths_and_duplicates() {
        let pats = vec![(0, vec![0, 1, 2]), (1, vec![1, 2]), (2, vec![1, 2])];
        assert_eq!(
            run(&pats, &[0, 1, 2, 1, 2, 3]),
            vec![(0, 0), (1, 1), (1, 2), (3, 1), (3, 2)]
        );
        // a longer pattern cannot run past the end of the text
        assert_eq!(run(&pats, &[3, 0, 1]), Vec::<(usize, usize)>::new());
    }

    #[test]
    fn block_length_follows_shortest() {
        let s = MultiSearcher::new(&[(0, vec![0; 10]), (1, vec![1; 2])], 4).unwrap();
        assert_eq!((s.block_length(), s.shortest()), (2, 2));
        let s = MultiSearcher::new(&[(0, vec![0; 10]), (1, vec![1; 7])], 4).unwrap();
        assert_eq!(s.block_length(), 3);
        assert!(MultiSearcher::new(&[(0, vec![])], 4).is_err());
        assert!(MultiSearcher::new(&[], 4).is_err());
    }
}
