//! Weighted strings, plain strings, and the cumulative weight threshold.

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};

/// Absolute tolerance on the sum of the probabilities at one position.
pub const PROB_SUM_TOLERANCE: f64 = 1e-6;

/// Absolute tolerance, on the log2 scale, of every validity comparison.
pub const LOG_TOLERANCE: f64 = 1e-9;

/// Cumulative weight threshold `1/z`, with `z >= 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Threshold {
    z: f64,
    log_inv_z: f64,
}

impl Threshold {
    pub fn new(z: f64) -> Result<Self> {
        if !z.is_finite() || z < 2.0 {
            return Err(Error::InvalidThreshold(z));
        }
        Ok(Threshold {
            z,
            log_inv_z: -z.log2(),
        })
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    /// `log2(1/z)`.
    pub fn log_inv_z(&self) -> f64 {
        self.log_inv_z
    }

    /// True if a cumulative log2-probability counts as valid.
    pub fn accepts(&self, log_probability: f64) -> bool {
        log_probability >= self.log_inv_z - LOG_TOLERANCE
    }

    /// Probability a letter must exceed to be the heavy letter of a position.
    ///
    /// This is `1 - 1/z` tightened by the validity tolerance: every other
    /// letter at such a position has probability strictly below the smallest
    /// value [`Threshold::accepts`] lets through, so no valid window can use it.
    pub fn heavy_cutoff(&self) -> f64 {
        1.0 - (-LOG_TOLERANCE).exp2() / self.z
    }
}

/// One position of a weighted string: letters in increasing index order
/// paired with their (positive) probabilities.
#[derive(Debug, Clone, Copy)]
pub struct Position<'a> {
    letters: &'a [Letter],
    probs: &'a [f64],
}

impl<'a> Position<'a> {
    pub fn letters(&self) -> &'a [Letter] {
        self.letters
    }

    pub fn probs(&self) -> &'a [f64] {
        self.probs
    }

    pub fn iter(&self) -> impl Iterator<Item = (Letter, f64)> + 'a {
        self.letters.iter().copied().zip(self.probs.iter().copied())
    }

    /// Probability of `letter` here, 0 if it does not occur.
    pub fn prob(&self, letter: Letter) -> f64 {
        self.letters
            .iter()
            .position(|&l| l == letter)
            .map_or(0.0, |k| self.probs[k])
    }

    /// Most probable letter; ties go to the smaller index.
    pub fn most_probable(&self) -> (Letter, f64) {
        let mut best = 0;
        for k in 1..self.probs.len() {
            if self.probs[k] > self.probs[best] {
                best = k;
            }
        }
        (self.letters[best], self.probs[best])
    }

    pub fn is_solid(&self) -> bool {
        self.letters.len() == 1
    }
}

/// A sequence of probability distributions over an alphabet.
///
/// Stored in compressed-row form: position `i` owns the entries
/// `offsets[i]..offsets[i + 1]` of `letters` and `probs`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedString {
    alphabet: Alphabet,
    offsets: Vec<usize>,
    letters: Vec<Letter>,
    probs: Vec<f64>,
}

impl WeightedString {
    /// Builds a weighted string from explicit per-position distributions.
    ///
    /// Zero-probability entries are dropped, sums within
    /// [`PROB_SUM_TOLERANCE`] of 1 are renormalized.
    pub fn new<P>(alphabet: Alphabet, positions: P) -> Result<Self>
    where
        P: IntoIterator,
        P::Item: AsRef<[(Letter, f64)]>,
    {
        let mut b = WeightedStringBuilder::new(alphabet);
        for p in positions {
            b.push(p.as_ref())?;
        }
        Ok(b.finish())
    }

    /// Weighted string in which every position is a single letter with probability 1.
    pub fn from_solid(alphabet: Alphabet, letters: &[Letter]) -> Result<Self> {
        let sigma = alphabet.size();
        if let Some((position, &l)) = letters
            .iter()
            .enumerate()
            .find(|(_, &l)| l as usize >= sigma)
        {
            return Err(Error::LetterOutOfRange {
                position,
                letter: l as usize,
                sigma,
            });
        }
        Ok(WeightedString {
            alphabet,
            offsets: (0..=letters.len()).collect(),
            letters: letters.to_vec(),
            probs: vec![1.0; letters.len()],
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn sigma(&self) -> usize {
        self.alphabet.size()
    }

    pub fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn position(&self, i: usize) -> Position<'_> {
        let r = self.offsets[i]..self.offsets[i + 1];
        Position {
            letters: &self.letters[r.clone()],
            probs: &self.probs[r],
        }
    }

    pub fn positions(&self) -> impl Iterator<Item = Position<'_>> + '_ {
        (0..self.len()).map(move |i| self.position(i))
    }

    /// Probability of `letter` at position `i`.
    pub fn prob(&self, i: usize, letter: Letter) -> f64 {
        self.position(i).prob(letter)
    }
}

/// Incremental constructor for [`WeightedString`], used by parsers and generators.
#[derive(Debug)]
pub struct WeightedStringBuilder {
    inner: WeightedString,
    scratch: Vec<(Letter, f64)>,
}

impl WeightedStringBuilder {
    pub fn new(alphabet: Alphabet) -> Self {
        WeightedStringBuilder {
            inner: WeightedString {
                alphabet,
                offsets: vec![0],
                letters: Vec::new(),
                probs: Vec::new(),
            },
            scratch: Vec::new(),
        }
    }

    pub fn with_capacity(alphabet: Alphabet, positions: usize) -> Self {
        let mut b = Self::new(alphabet);
        b.inner.offsets.reserve(positions);
        b.inner.letters.reserve(positions);
        b.inner.probs.reserve(positions);
        b
    }

    pub fn len(&self) -> usize {
        self.inner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn push_solid(&mut self, letter: Letter) -> Result<()> {
        self.push(&[(letter, 1.0)])
    }

    pub fn push(&mut self, entries: &[(Letter, f64)]) -> Result<()> {
        let position = self.inner.len();
        let sigma = self.inner.alphabet.size();
        self.scratch.clear();
        for &(letter, value) in entries {
            if letter as usize >= sigma {
                return Err(Error::LetterOutOfRange {
                    position,
                    letter: letter as usize,
                    sigma,
                });
            }
            if !value.is_finite() || value < 0.0 {
                return Err(Error::InvalidProbability { position, value });
            }
            if self.scratch.iter().any(|&(l, _)| l == letter) {
                return Err(Error::DuplicateLetter {
                    position,
                    letter: letter as usize,
                });
            }
            self.scratch.push((letter, value));
        }
        self.scratch.retain(|&(_, p)| p > 0.0);
        if self.scratch.is_empty() {
            return Err(Error::EmptyPosition(position));
        }
        let sum: f64 = self.scratch.iter().map(|&(_, p)| p).sum();
        if (sum - 1.0).abs() > PROB_SUM_TOLERANCE {
            return Err(Error::SumOutOfTolerance { position, sum });
        }
        self.scratch.sort_unstable_by_key(|&(l, _)| l);
        for &(l, p) in &self.scratch {
            self.inner.letters.push(l);
            self.inner.probs.push(if self.scratch.len() == 1 {
                1.0
            } else {
                p / sum
            });
        }
        self.inner.offsets.push(self.inner.letters.len());
        Ok(())
    }

    pub fn finish(self) -> WeightedString {
        self.inner
    }
}

/// A plain string over an alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlainString {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl PlainString {
    pub fn new(alphabet: Alphabet, letters: Vec<Letter>) -> Result<Self> {
        let sigma = alphabet.size();
        if let Some((position, &l)) = letters
            .iter()
            .enumerate()
            .find(|(_, &l)| l as usize >= sigma)
        {
            return Err(Error::LetterOutOfRange {
                position,
                letter: l as usize,
                sigma,
            });
        }
        Ok(PlainString { alphabet, letters })
    }

    /// Encodes `s` over `alphabet`; `None` if `s` has a foreign symbol.
    pub fn from_str(alphabet: Alphabet, s: &str) -> Option<Self> {
        let letters = alphabet.encode(s)?;
        Some(PlainString { alphabet, letters })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// `sum_j log2 pi_{i+j}(u[j])`, or `-inf` if some letter of `u` does not occur.
///
/// Solid positions contribute exactly 0.
pub fn window_log_probability(w: &WeightedString, u: &[Letter], i: usize) -> f64 {
    assert!(i + u.len() <= w.len(), "window exceeds the weighted string");
    let mut acc = 0.0;
    for (j, &letter) in u.iter().enumerate() {
        let p = w.prob(i + j, letter);
        if p <= 0.0 {
            return f64::NEG_INFINITY;
        }
        if p < 1.0 {
            acc += p.log2();
        }
    }
    acc
}

/// Whether `u` occurs at `i` in `w` with cumulative probability at least `1/z`.
pub fn is_valid_window(w: &WeightedString, u: &[Letter], i: usize, t: Threshold) -> bool {
    t.accepts(window_log_probability(w, u, i))
}
