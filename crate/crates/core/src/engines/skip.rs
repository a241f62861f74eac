use crate::alphabet::Letter;
use crate::error::{Error, Result};

use super::{gram_length, InspectionCounter, TextAccess};

const MAX_TABLE: usize = 1 << 16;

/// Backward skip search with a last-occurrence shift table over q-grams
/// (Horspool generalized from single letters to q-grams).
///
/// Each window costs about `q` reads and shifts by up to `m - q + 1`, so the
/// expected number of reads per text letter falls as the pattern grows.
#[derive(Debug, Clone)]
pub struct SkipSearcher {
    pattern: Vec<Letter>,
    radix: usize,
    q: usize,
    tail: usize,
    shift: Vec<u32>,
}

impl SkipSearcher {
    /// `sigma` is the alphabet size; the sentinel `sigma` may appear in texts.
    pub fn new(pattern: &[Letter], sigma: usize) -> Result<Self> {
        let m = pattern.len();
        if m == 0 {
            return Err(Error::EmptyPattern);
        }
        let radix = sigma + 1;
        let q = gram_length(sigma, 2 * m, m, MAX_TABLE);
        let mut shift = vec![(m - q + 1) as u32; radix.pow(q as u32)];
        // Grams ending before the last position; later ones overwrite with smaller shifts.
        for end in q - 1..m - 1 {
            let h = hash(&pattern[end + 1 - q..=end], radix);
            shift[h] = (m - 1 - end) as u32;
        }
        Ok(SkipSearcher {
            tail: hash(&pattern[m - q..], radix),
            pattern: pattern.to_vec(),
            radix,
            q,
            shift,
        })
    }

    pub fn pattern(&self) -> &[Letter] {
        &self.pattern
    }

    pub fn gram_length(&self) -> usize {
        self.q
    }

    /// All start positions of the pattern in `text`, increasing.
    pub fn find_all<T: TextAccess + ?Sized>(
        &self,
        text: &T,
        ctr: &mut InspectionCounter,
    ) -> Vec<usize> {
        let m = self.pattern.len();
        let n = text.len();
        let q = self.q;
        let mut out = Vec::new();
        let mut s = 0;
        while s + m <= n {
            let mut h = 0;
            for k in s + m - q..s + m {
                h = h * self.radix + ctr.read(text, k) as usize;
            }
            if h == self.tail
                && (0..m - q)
                    .rev()
                    .all(|j| ctr.read(text, s + j) == self.pattern[j])
            {
                out.push(s);
            }
            s += self.shift[h] as usize;
        }
        out
    }
}

fn hash(gram: &[Letter], radix: usize) -> usize {
    gram.iter().fold(0, |h, &c| h * radix + c as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn find(p: &str, t: &str) -> Vec<usize> {
        let dna = Alphabet::dna();
        let s = SkipSearcher::new(&dna.encode(p).unwrap(), 4).unwrap();
        s.find_all(
            dna.encode(t).unwrap().as_slice(),
            &mut InspectionCounter::default(),
        )
    }

    #[test]
    fn examples() {
        assert_eq!(find("AAA", "CAAAA"), vec![1, 2]);
        assert_eq!(find("ACT", "GACTA"), vec![1]);
        assert_eq!(find("G", "AAAA"), Vec::<usize>::new());
    }

    #[test]
    fn edges() {
        assert_eq!(find("ACGT", "ACGT"), vec![0]);
        assert_eq!(find("ACGTA", "ACGT"), Vec::<usize>::new());
        assert_eq!(find("A", "AAA"), vec![0, 1, 2]);
        assert!(SkipSearcher::new(&[], 4).is_err());
    }

    #[test]
    fn sentinel_never_matches() {
        let s = SkipSearcher::new(&[0, 1], 4).unwrap();
        let text: Vec<Letter> = vec![0, 4, 0, 1, 4];
        assert_eq!(
            s.find_all(text.as_slice(), &mut InspectionCounter::default()),
            vec![2]
        );
    }

    #[test]
    fn long_pattern_skips() {
        let dna = Alphabet::dna();
        let p = dna.encode("ACGTTGCAACGGTACCATGA").unwrap();
        let s = SkipSearcher::new(&p, 4).unwrap();
        let text = vec![3; 10_000];
        let mut ctr = InspectionCounter::default();
        assert!(s.find_all(text.as_slice(), &mut ctr).is_empty());
        assert!(ctr.chars_inspected < 10_000 / 2);
    }
}
